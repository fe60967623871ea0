#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scrollun {

// Coefficient field: the rationals (p == 0) or a prime field F_p.
// Scalars are mpq_class values; prime-field elements are integers in [0, p).
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(unsigned long p);

    bool is_prime_field() const { return p_ != 0; }
    unsigned long characteristic() const { return p_; }

    // Canonical representative: lowest terms with positive denominator over Q,
    // integer residue in [0, p) over F_p.
    mpq_class canon(const mpq_class& v) const;

    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class sub(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class neg(const mpq_class& a) const;
    mpq_class inv(const mpq_class& a) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

    bool is_zero(const mpq_class& a) const { return sgn(a) == 0; }

    std::string to_string() const { return p_ == 0 ? "q" : "fp:" + std::to_string(p_); }
    static Field parse(const std::string& spec);

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

private:
    explicit Field(unsigned long p) : p_(p) {}
    unsigned long p_;
};

}  // namespace scrollun
