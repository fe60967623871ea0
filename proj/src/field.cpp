#include "scrollun/field.hpp"

namespace scrollun {

Field Field::prime(unsigned long p) {
    if (p < 2) throw std::invalid_argument("field characteristic must be a prime >= 2");
    mpz_class z(static_cast<unsigned long>(p));
    if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
    return Field(p);
}

mpq_class Field::canon(const mpq_class& v) const {
    mpq_class r = v;
    r.canonicalize();
    if (p_ == 0) return r;
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class num = r.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = r.get_den() % p;
    if (den == 0) throw std::domain_error("denominator divisible by field characteristic");
    if (den != 1) {
        mpz_class di;
        if (mpz_invert(di.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::domain_error("non-invertible denominator in prime field");
        num = (num * di) % p;
    }
    return mpq_class(num);
}

mpq_class Field::add(const mpq_class& a, const mpq_class& b) const { return canon(a + b); }
mpq_class Field::sub(const mpq_class& a, const mpq_class& b) const { return canon(a - b); }
mpq_class Field::mul(const mpq_class& a, const mpq_class& b) const { return canon(a * b); }
mpq_class Field::neg(const mpq_class& a) const { return canon(-a); }

mpq_class Field::inv(const mpq_class& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero");
    if (p_ == 0) return 1 / a;
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class num = canon(a).get_num();
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("non-invertible element in prime field");
    return mpq_class(r);
}

Field Field::parse(const std::string& spec) {
    if (spec == "q" || spec == "Q") return rationals();
    if (spec.rfind("fp:", 0) == 0) return prime(std::stoul(spec.substr(3)));
    throw std::invalid_argument("unknown field spec '" + spec + "' (expected q or fp:<p>)");
}

}  // namespace scrollun
