#pragma once

#include <stdexcept>
#include <vector>

#include "scrollun/polynomial.hpp"

namespace scrollun {

// Hard resource budget for Buchberger runs. Exceeding it raises
// BudgetExceeded; there is no silent truncation. SCROLLUN_GB_STEPS and
// SCROLLUN_GB_PAIRS override the defaults.
struct GBLimits {
    long max_steps = 8'000'000;  // single reduction steps across the run
    long max_pairs = 200'000;    // S-pairs processed
    static GBLimits defaults();
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Reduced Groebner basis: monic elements, no leading monomial divides
// another, every element fully reduced against the rest. `ring` carries the
// computation order, so each element's first term is its leading term.
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order = MonomialOrder::wgrevlex();
    std::vector<Polynomial> basis;

    const Monomial& lead_monomial(std::size_t i) const { return basis[i].lead().mono; }
    bool is_unit_ideal() const { return basis.size() == 1 && basis[0].lead().mono.is_one(); }
};

GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, MonomialOrder order,
                             GBLimits limits = GBLimits::defaults());

// Remainder of p under full multivariate division by gb; no term of the
// result is divisible by any leading monomial of gb. k-linear in p.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Independent recheck of the Buchberger criterion plus reducedness.
bool is_reduced_groebner(const GroebnerBasis& gb);

}  // namespace scrollun
