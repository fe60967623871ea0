#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace scrollun {

// Exponent vector, dense, indexed by ring variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {}

    std::size_t nvars() const { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    unsigned& operator[](std::size_t i) { return e_[i]; }
    const std::vector<unsigned>& exponents() const { return e_; }

    bool is_one() const {
        for (unsigned x : e_)
            if (x) return false;
        return true;
    }

    long total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0L); }

    long weighted_degree(const std::vector<int>& weights) const {
        long d = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) d += static_cast<long>(e_[i]) * weights[i];
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // Quotient o / this; caller guarantees divisibility.
    Monomial quotient_of(const Monomial& o) const {
        Monomial r(o);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i)
            if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] && b.e_[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    std::vector<unsigned> e_;
};

// Admissible monomial orders. All graded comparisons use weighted degree so
// that a weight-k variable sorts with degree-k monomials.
class MonomialOrder {
public:
    enum class Kind { WGrevlex, Lex, Block };

    static MonomialOrder wgrevlex() { return MonomialOrder(Kind::WGrevlex, {}); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
    // Elimination order: variables flagged in `front` dominate; wgrevlex within
    // each block. Leading terms free of front variables certify elimination.
    static MonomialOrder block(std::vector<char> front) {
        return MonomialOrder(Kind::Block, std::move(front));
    }
    static MonomialOrder block_front(std::size_t front_size, std::size_t nvars) {
        std::vector<char> f(nvars, 0);
        for (std::size_t i = 0; i < front_size && i < nvars; ++i) f[i] = 1;
        return MonomialOrder(Kind::Block, std::move(f));
    }

    Kind kind() const { return kind_; }
    const std::vector<char>& front_mask() const { return front_; }

    // <0 if a < b, 0 if equal, >0 if a > b.
    int compare(const std::vector<int>& weights, const Monomial& a, const Monomial& b) const;

    bool less(const std::vector<int>& weights, const Monomial& a, const Monomial& b) const {
        return compare(weights, a, b) < 0;
    }

    std::string name() const;
    bool operator==(const MonomialOrder& o) const = default;

private:
    MonomialOrder(Kind k, std::vector<char> f) : kind_(k), front_(std::move(f)) {}
    Kind kind_;
    std::vector<char> front_;
};

}  // namespace scrollun
