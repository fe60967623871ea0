#include "scrollun/report.hpp"

#include <sstream>

namespace scrollun {

std::string rational_to_string(const mpq_class& v) { return v.get_str(); }

json ReportEnvelope::to_json() const {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["status"] = status;
    j["timing_ms"] = timing_ms;
    return j;
}

std::string ReportEnvelope::text_summary() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    os << "status: " << status << "\n";
    os << "results:\n";
    for (auto it = results.begin(); it != results.end(); ++it)
        os << "  " << it.key() << ": " << it.value().dump() << "\n";
    return os.str();
}

json ring_to_json(const Ring& r) {
    json vars = json::array();
    for (std::size_t i = 0; i < r.nvars(); ++i)
        vars.push_back({{"name", r.name(i)}, {"weight", r.weight(i)}});
    return json{{"variables", vars}, {"field", r.field().to_string()}, {"order", r.order().name()}};
}

json presentation_to_json(const IdealPresentation& I) {
    json gens = json::array();
    for (const auto& g : I.gens) gens.push_back(g.to_string());
    return json{{"generators", gens}, {"count", I.gens.size()}};
}

json scroll_to_json(const ScrollData& s) {
    json j;
    j["m"] = s.m;
    j["n"] = s.n;
    j["ring"] = ring_to_json(*s.R);
    j["Q"] = presentation_to_json(s.Q);
    j["I"] = presentation_to_json(s.I);
    return j;
}

json hilbert_to_json(const HilbertTable& t) { return json(t.dims); }

json chain_report_to_json(const ChainReport& rep) {
    json j;
    j["gamma_hat_sq"] = rep.gamma_hat_sq;
    j["chains"] = rep.chains;
    j["singularities"] = rep.singularities;
    return j;
}

json horikawa_to_json(const HorikawaReport& rep) {
    json j;
    j["m"] = rep.m;
    j["n"] = rep.n;
    j["pg"] = rep.pg;
    j["Ksq"] = rep.Ksq;
    j["L_sq"] = rep.L_sq;
    j["L_dot_gamma_hat"] = rep.L_dot_gamma_hat;
    j["gamma_hat_sq"] = rep.gamma_hat_sq;
    j["a1_contraction_consistent"] = rep.a1_contraction_consistent;
    return j;
}

json classification_to_json(const ScrollData& s, const FamilyScanEntry& e) {
    json j;
    j["m"] = s.m;
    j["n"] = s.n;
    j["point"] = {rational_to_string(e.a), rational_to_string(e.b)};
    j["tag"] = e.tag;
    j["abstract"] = "F_" + std::to_string(e.abstract_index);
    j["verified"] = e.verified;
    return j;
}

json elim_comparison_to_json(const ElimComparison& c) {
    json j;
    j["equal"] = c.equal;
    j["result_in_target"] = c.result_in_target;
    j["target_in_result"] = c.target_in_result;
    j["generator_count"] = c.result.gens.size();
    return j;
}

}  // namespace scrollun
