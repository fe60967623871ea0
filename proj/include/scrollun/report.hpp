#pragma once

#include <string>

#include "json.hpp"
#include "scrollun/lattice.hpp"
#include "scrollun/rees.hpp"
#include "scrollun/unprojection.hpp"

namespace scrollun {

using json = nlohmann::ordered_json;

// Machine-readable result wrapper for every CLI command. `status` is "pass"
// exactly when every asserted comparison in `results` came out true.
struct ReportEnvelope {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    std::string status = "pass";
    double timing_ms = 0.0;

    json to_json() const;
    std::string text_summary() const;
    void set_status(bool all_checks_pass) { status = all_checks_pass ? "pass" : "fail"; }
};

json ring_to_json(const Ring& r);
json presentation_to_json(const IdealPresentation& I);
json scroll_to_json(const ScrollData& s);
json hilbert_to_json(const HilbertTable& t);
json chain_report_to_json(const ChainReport& rep);
json horikawa_to_json(const HorikawaReport& rep);
json classification_to_json(const ScrollData& s, const FamilyScanEntry& e);
json elim_comparison_to_json(const ElimComparison& c);

std::string rational_to_string(const mpq_class& v);

}  // namespace scrollun
