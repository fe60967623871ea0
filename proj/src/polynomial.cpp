#include "scrollun/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace scrollun {

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (!ring_ || !o.ring_) throw std::invalid_argument("polynomial without ring");
    if (ring_ != o.ring_ && !ring_->compatible(*o.ring_))
        throw std::invalid_argument("ring mismatch");
}

Polynomial Polynomial::constant(RingPtr ring, const mpq_class& c) {
    Polynomial p(ring);
    mpq_class cc = ring->field().canon(c);
    if (sgn(cc) != 0) p.terms_.push_back({cc, Monomial(ring->nvars())});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
    if (i >= ring->nvars()) throw std::invalid_argument("variable index out of range");
    Monomial m(ring->nvars());
    m[i] = 1;
    return term(std::move(ring), 1, std::move(m));
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
    std::size_t i = ring->index_of(name);
    return variable(std::move(ring), i);
}

Polynomial Polynomial::term(RingPtr ring, const mpq_class& c, Monomial m) {
    Polynomial p(ring);
    mpq_class cc = ring->field().canon(c);
    if (sgn(cc) != 0) p.terms_.push_back({cc, std::move(m)});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    const Ring& R = *ring;
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return R.cmp(a.mono, b.mono) > 0; });
    Polynomial p(ring);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff = R.field().add(p.terms_.back().coeff, t.coeff);
            if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
        } else {
            mpq_class c = R.field().canon(t.coeff);
            if (sgn(c) != 0) p.terms_.push_back({std::move(c), std::move(t.mono)});
        }
    }
    return p;
}

const Term& Polynomial::lead() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.front();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    const Ring& R = *ring_;
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = R.cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            mpq_class s = R.field().add(terms_[i].coeff, o.terms_[j].coeff);
            if (sgn(s) != 0) r.terms_.push_back({std::move(s), terms_[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_term(const mpq_class& c, const Monomial& m) const {
    Polynomial r(ring_);
    mpq_class cc = ring_->field().canon(c);
    if (sgn(cc) == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({ring_->field().mul(t.coeff, cc), t.mono * m});
    return r;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
    return times_term(c, Monomial(ring_->nvars()));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            prod.push_back({ring_->field().mul(a.coeff, b.coeff), a.mono * b.mono});
    return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(ring_, 1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono)
            return false;
    return true;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = terms_[0].mono.weighted_degree(ring_->weights());
    for (const auto& t : terms_)
        if (t.mono.weighted_degree(ring_->weights()) != d) return false;
    return true;
}

std::optional<long> Polynomial::weighted_degree() const {
    if (terms_.empty()) throw std::domain_error("weighted degree of the zero polynomial");
    long d = terms_[0].mono.weighted_degree(ring_->weights());
    for (const auto& t : terms_)
        if (t.mono.weighted_degree(ring_->weights()) != d) return std::nullopt;
    return d;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(ring_->field().inv(terms_.front().coeff));
}

bool Polynomial::uses_var(std::size_t i) const {
    for (const auto& t : terms_)
        if (t.mono[i]) return true;
    return false;
}

Polynomial Polynomial::with_ring(const RingPtr& r) const {
    if (r == ring_) return *this;
    if (!ring_->compatible(*r)) throw std::invalid_argument("incompatible ring conversion");
    return from_terms(r, terms_);
}

}  // namespace scrollun
