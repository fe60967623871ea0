// Command-line surface for the scroll/unprojection toolkit. Exit codes:
// 0 = all checks pass, 1 = a verification failed, 2 = usage error.

#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "scrollun/verify.hpp"

namespace {

using namespace scrollun;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void emit(const ReportEnvelope& rep, bool as_json) {
    if (as_json)
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.text_summary();
}

int status_code(const ReportEnvelope& rep) { return rep.status == "pass" ? 0 : 1; }

mpq_class parse_rational(const std::string& s) {
    mpq_class v(s);
    v.canonicalize();
    return v;
}

std::vector<DivisorPoint> parse_points(const std::string& text) {
    std::vector<DivisorPoint> points;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        DivisorPoint p;
        auto caret = item.find('^');
        if (caret != std::string::npos) {
            p.mult = std::stoi(item.substr(caret + 1));
            item = item.substr(0, caret);
        }
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("point must be a:b, got '" + item + "'");
        p.a = parse_rational(item.substr(0, colon));
        p.b = parse_rational(item.substr(colon + 1));
        points.push_back(p);
    }
    if (points.empty()) throw std::invalid_argument("no points given");
    return points;
}

int cmd_scroll(int m, int n, const Field& field, bool as_json, int degree_bound) {
    Timer timer;
    ScrollData s = build_scroll(m, n, field);
    ReportEnvelope rep;
    rep.command = "scroll";
    rep.inputs = {{"m", m}, {"n", n}, {"field", field.to_string()}};
    rep.results["presentation"] = scroll_to_json(s);

    int dim = krull_dimension(s.Q);
    rep.results["dimension"] = dim;
    HilbertTable table = hilbert_function(s.Q, degree_bound);
    rep.results["hilbert"] = hilbert_to_json(table);
    bool phi_ok = verify_phi(s);
    rep.results["phi_compatible"] = phi_ok;
    RingMap g = build_g_map(s);
    bool g_ok = verify_g_kernel(s, g);
    rep.results["Q_in_ker_g"] = g_ok;
    rep.set_status(dim == 3 && phi_ok && g_ok);
    rep.timing_ms = timer.ms();
    emit(rep, as_json);
    return status_code(rep);
}

int cmd_unproject(int m, int n, const std::string& f_text, const std::string& points_text,
                  const Field& field, bool as_json, bool with_rees, int degree_bound) {
    Timer timer;
    ScrollData s = build_scroll(m, n, field);
    Polynomial f = Polynomial::zero(s.R);
    if (!f_text.empty())
        f = Polynomial::parse(s.R, f_text);
    else
        f = f_from_divisor(s, parse_points(points_text));

    ReportEnvelope rep;
    rep.command = "unproject";
    rep.inputs = {{"m", m},
                  {"n", n},
                  {"f", f.to_string()},
                  {"field", field.to_string()}};

    UnprojectionRing u = build_unprojection(s, f);  // throws the non-domain diagnosis on f in I
    rep.results["k"] = u.k;
    rep.results["f_used"] = u.f.to_string();
    rep.results["ring"] = ring_to_json(*u.R2);
    rep.results["Q2_minors"] = presentation_to_json(u.Q2_minors);
    rep.results["Q2_def"] = presentation_to_json(u.Q2_def);
    bool eq = ideal_equal(u.Q2_def, u.Q2_minors);
    rep.results["presentations_equal"] = eq;
    int dim = krull_dimension(u.Q2_minors);
    rep.results["dimension"] = dim;
    rep.results["codimension"] = static_cast<int>(u.R2->nvars()) - dim;
    bool loc = localization_witness(s, u);
    rep.results["localization_witness"] = loc;
    rep.results["hilbert"] = hilbert_to_json(hilbert_regression(u, degree_bound));

    bool cls_ok = true;
    if (u.k == 1) {
        mpq_class a = 0, b = 0;
        for (const auto& t : u.f.terms()) {
            if (t.mono[u.R2->index_of(s.R->name(s.x0(s.m)))]) a = t.coeff;
            if (t.mono[u.R2->index_of(s.R->name(s.x1(s.n)))]) b = t.coeff;
        }
        Classification c = classify_elementary(s, a, b);
        FamilyScanEntry entry{a, b, c.tag, c.abstract_index, c.verified};
        rep.results["classification"] = classification_to_json(s, entry);
        cls_ok = c.verified;
    }

    bool rees_ok = true;
    if (with_rees) {
        ReesPresentation r = build_rees(s, f);
        ElimComparison base = eliminate_to_base(r);
        ElimComparison up = eliminate_to_unprojection(r, u);
        rep.results["rees"] = {{"B", presentation_to_json(r.B)},
                               {"eliminate_to_base", elim_comparison_to_json(base)},
                               {"eliminate_to_unprojection", elim_comparison_to_json(up)}};
        rees_ok = base.equal;
    }

    rep.set_status(eq && dim == 3 && loc && cls_ok && rees_ok);
    rep.timing_ms = timer.ms();
    emit(rep, as_json);
    return status_code(rep);
}

int cmd_lattice_chain(int d, const std::vector<int>& mults, bool as_json) {
    Timer timer;
    std::vector<std::pair<int, bool>> D;
    for (int k : mults) D.push_back({k, false});
    ChainReport rep = unprojection_chain(d, D);
    ReportEnvelope env;
    env.command = "lattice chain";
    env.inputs = {{"d", d}, {"D", mults}};
    env.results = chain_report_to_json(rep);
    long k_total = 0;
    for (int k : mults) k_total += k;
    env.set_status(rep.gamma_hat_sq == -k_total);
    env.timing_ms = timer.ms();
    emit(env, as_json);
    return status_code(env);
}

int cmd_lattice_elementary(int d, bool on_delta0, bool as_json) {
    Timer timer;
    int result = elementary_transformation(d, on_delta0);
    ReportEnvelope env;
    env.command = "lattice elementary";
    env.inputs = {{"d", d}, {"on_delta0", on_delta0}};
    env.results = {{"d_after", result}};
    env.set_status(true);
    env.timing_ms = timer.ms();
    emit(env, as_json);
    return status_code(env);
}

int cmd_lattice_horikawa(int m, int n, bool infinitely_near, bool as_json) {
    Timer timer;
    HorikawaReport rep = horikawa_numerology(m, n, infinitely_near);
    ReportEnvelope env;
    env.command = "lattice horikawa";
    env.inputs = {{"m", m}, {"n", n}, {"infinitely_near", infinitely_near}};
    env.results = horikawa_to_json(rep);
    env.set_status(rep.a1_contraction_consistent && rep.Ksq == 2 * rep.pg - 3);
    env.timing_ms = timer.ms();
    emit(env, as_json);
    return status_code(env);
}

int cmd_verify_all(const VerifyOptions& opts, bool as_json) {
    Timer timer;
    std::vector<CriterionResult> results = run_acceptance(opts);
    ReportEnvelope env;
    env.command = "verify-all";
    env.inputs = {{"max_m", opts.max_m},
                  {"max_n", opts.max_n},
                  {"max_k", opts.max_k},
                  {"field", opts.field.to_string()},
                  {"update_golden", opts.update_golden}};
    bool all = true;
    json arr = json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"details", r.details}});
        if (!as_json)
            std::cout << "criterion " << r.id << " [" << (r.pass ? "PASS" : "FAIL") << "] "
                      << r.name << (r.details.empty() ? "" : " --" + r.details) << "\n";
    }
    env.results["criteria"] = arr;
    env.set_status(all);
    env.timing_ms = timer.ms();
    if (as_json)
        emit(env, true);
    else
        std::cout << "overall: " << env.status << " (" << env.timing_ms << " ms)\n";
    return status_code(env);
}

// Parses "m<=2"-style clauses of --grid.
void apply_grid_clause(VerifyOptions& opts, const std::string& clause) {
    auto pos = clause.find("<=");
    if (pos == std::string::npos || pos == 0)
        throw CLI::ValidationError("--grid expects clauses like m<=2, n<=3, k<=2");
    std::string var = clause.substr(0, pos);
    int value = std::stoi(clause.substr(pos + 2));
    if (var == "m")
        opts.max_m = value;
    else if (var == "n")
        opts.max_n = value;
    else if (var == "k")
        opts.max_k = value;
    else
        throw CLI::ValidationError("unknown grid variable '" + var + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for rational normal scrolls and their unprojections"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string field_spec = "q";
    bool as_json = false;
    app.add_option("--field", field_spec, "coefficient field: q or fp:<prime>");
    app.add_flag("--json", as_json, "emit a JSON report instead of text");

    int m = 1, n = 1, d = 0;
    int degree_bound = 5;
    std::string f_text, points_text;
    bool with_rees = false, on_delta0 = false, infinitely_near = false;

    auto* scroll_cmd = app.add_subcommand("scroll", "build F(m,n) and verify its structure");
    scroll_cmd->fallthrough();
    scroll_cmd->add_option("m", m)->required();
    scroll_cmd->add_option("n", n)->required();
    scroll_cmd->add_option("--degree-bound", degree_bound, "Hilbert table bound");

    auto* unproj_cmd = app.add_subcommand("unproject", "build S_un(f) and verify its presentation");
    unproj_cmd->fallthrough();
    unproj_cmd->add_option("m", m)->required();
    unproj_cmd->add_option("n", n)->required();
    unproj_cmd->add_option("--f", f_text, "homogeneous f in the scroll coordinates");
    unproj_cmd->add_option("--points", points_text,
                           "divisor on Gamma: a:b[^mult] entries, comma-separated");
    unproj_cmd->add_flag("--rees", with_rees, "also run the Rees eliminations");
    unproj_cmd->add_option("--degree-bound", degree_bound, "Hilbert table bound");

    auto* lattice_cmd = app.add_subcommand("lattice", "integer intersection-theory checks");
    lattice_cmd->fallthrough();
    lattice_cmd->require_subcommand(1);
    std::vector<int> mults;
    auto* chain_cmd = lattice_cmd->add_subcommand("chain", "blow-up chains over a fibre divisor");
    chain_cmd->fallthrough();
    chain_cmd->add_option("--d", d, "Hirzebruch index")->default_val(1);
    chain_cmd->add_option("--D", mults, "multiplicities of the divisor points")->required();
    auto* elem_cmd = lattice_cmd->add_subcommand("elementary", "elementary transformation");
    elem_cmd->fallthrough();
    elem_cmd->add_option("d", d)->required();
    elem_cmd->add_flag("--on-delta0", on_delta0, "blown-up point lies on the negative section");
    auto* hori_cmd = lattice_cmd->add_subcommand("horikawa", "odd Horikawa numerology");
    hori_cmd->fallthrough();
    hori_cmd->add_option("m", m)->required();
    hori_cmd->add_option("n", n)->required();
    hori_cmd->add_flag("--infinitely-near", infinitely_near, "second point on the first E");

    VerifyOptions opts;
    std::vector<std::string> grid_clauses;
    auto* verify_cmd = app.add_subcommand("verify-all", "run the full acceptance grid");
    verify_cmd->fallthrough();
    verify_cmd->add_option("--grid", grid_clauses, "grid bounds, e.g. --grid m<=2 n<=2 k<=2");
    verify_cmd->add_option("--degree-bound", opts.basis_degree_bound, "basis-claim degree bound");
    verify_cmd->add_option("--golden", opts.golden_path, "golden file path");
    verify_cmd->add_flag("--update-golden", opts.update_golden,
                         "regenerate the golden tables instead of comparing");

    try {
        app.parse(argc, argv);
        Field field = Field::parse(field_spec);
        if (scroll_cmd->parsed()) return cmd_scroll(m, n, field, as_json, degree_bound);
        if (unproj_cmd->parsed()) {
            if (f_text.empty() == points_text.empty())
                throw CLI::ValidationError("unproject needs exactly one of --f or --points");
            return cmd_unproject(m, n, f_text, points_text, field, as_json, with_rees,
                                 degree_bound);
        }
        if (lattice_cmd->parsed()) {
            if (chain_cmd->parsed()) return cmd_lattice_chain(d, mults, as_json);
            if (elem_cmd->parsed()) return cmd_lattice_elementary(d, on_delta0, as_json);
            if (hori_cmd->parsed()) return cmd_lattice_horikawa(m, n, infinitely_near, as_json);
        }
        if (verify_cmd->parsed()) {
            opts.field = field;
            for (const auto& clause : grid_clauses) apply_grid_clause(opts, clause);
            return cmd_verify_all(opts, as_json);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const scrollun::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        // Verification-level failures, e.g. the "not a domain" case.
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
