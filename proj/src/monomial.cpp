#include "scrollun/monomial.hpp"

#include <string>

namespace scrollun {

namespace {

// Graded reverse lexicographic on a subset of variables (all if mask empty).
int grevlex_cmp(const std::vector<int>& weights, const Monomial& a, const Monomial& b,
                const std::vector<char>* mask, bool in_front) {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (mask && static_cast<bool>((*mask)[i]) != in_front) continue;
        da += static_cast<long>(a[i]) * weights[i];
        db += static_cast<long>(b[i]) * weights[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t j = a.nvars(); j-- > 0;) {
        if (mask && static_cast<bool>((*mask)[j]) != in_front) continue;
        if (a[j] != b[j]) return a[j] > b[j] ? -1 : 1;
    }
    return 0;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

}  // namespace

int MonomialOrder::compare(const std::vector<int>& weights, const Monomial& a,
                           const Monomial& b) const {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial arity mismatch");
    switch (kind_) {
        case Kind::WGrevlex:
            return grevlex_cmp(weights, a, b, nullptr, false);
        case Kind::Lex:
            return lex_cmp(a, b);
        case Kind::Block: {
            int c = grevlex_cmp(weights, a, b, &front_, true);
            if (c != 0) return c;
            return grevlex_cmp(weights, a, b, &front_, false);
        }
    }
    return 0;
}

std::string MonomialOrder::name() const {
    switch (kind_) {
        case Kind::WGrevlex: return "wgrevlex";
        case Kind::Lex: return "lex";
        case Kind::Block: return "block-elimination";
    }
    return "?";
}

}  // namespace scrollun
