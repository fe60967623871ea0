#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scrollun/ring.hpp"

namespace scrollun {

struct Term {
    mpq_class coeff;
    Monomial mono;
};

// Sparse polynomial in canonical form: terms strictly decreasing under the
// ring's order, coefficients nonzero and field-canonical.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const mpq_class& c);
    static Polynomial variable(RingPtr ring, std::size_t i);
    static Polynomial variable(RingPtr ring, const std::string& name);
    static Polynomial term(RingPtr ring, const mpq_class& c, Monomial m);
    // From arbitrary (possibly unsorted, duplicated) terms.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Term& lead() const;  // largest term under the ring's order

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const mpq_class& c) const;
    Polynomial times_term(const mpq_class& c, const Monomial& m) const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    bool is_homogeneous() const;
    // Common weighted degree; nullopt when inhomogeneous; throws on zero.
    std::optional<long> weighted_degree() const;

    // Leading coefficient scaled to 1.
    Polynomial monic() const;

    bool uses_var(std::size_t i) const;

    // Re-canonicalise into a compatible ring (possibly different term order).
    Polynomial with_ring(const RingPtr& r) const;

    std::string to_string() const;
    static Polynomial parse(const RingPtr& ring, const std::string& text);

private:
    RingPtr ring_;
    std::vector<Term> terms_;
    void check_same_ring(const Polynomial& o) const;
};

}  // namespace scrollun
