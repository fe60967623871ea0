#pragma once

#include <map>
#include <string>
#include <vector>

#include "scrollun/report.hpp"

namespace scrollun {

// Acceptance grid configuration. Defaults reproduce the full desk-scale
// verification; the golden file is only rewritten when update_golden is set.
struct VerifyOptions {
    Field field = Field::rationals();
    int max_m = 3;
    int max_n = 3;
    int max_k = 3;
    int basis_degree_bound = 4;
    int hilbert_bound = 5;
    std::string golden_path = "golden/hilbert_tables.json";
    bool update_golden = false;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string details;
};

// Runs the nine acceptance criteria and returns one result per criterion.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts);

// One deterministic f grid per (scroll, k): four homogeneous degree-k
// choices on Gamma, the linear ones carrying their [a:b] coefficients.
struct FChoice {
    Polynomial f;
    bool linear = false;
    mpq_class a, b;
};
std::vector<FChoice> f_choices(const ScrollData& s, int k);

}  // namespace scrollun
