#include "scrollun/ideal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace scrollun {

IdealPresentation IdealPresentation::make(RingPtr ring, std::vector<Polynomial> gens) {
    IdealPresentation I;
    I.ring = ring;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.ring() != ring && !g.ring()->compatible(*ring))
            throw std::invalid_argument("generator not in the presentation ring");
        I.gens.push_back(g.with_ring(ring));
    }
    return I;
}

bool IdealPresentation::is_homogeneous() const {
    return std::all_of(gens.begin(), gens.end(),
                       [](const Polynomial& g) { return g.is_homogeneous(); });
}

GroebnerBasis groebner(const IdealPresentation& I, GBLimits limits) {
    return groebner_basis(I.gens, I.ring->order(), limits);
}

GroebnerBasis groebner(const IdealPresentation& I, MonomialOrder order, GBLimits limits) {
    return groebner_basis(I.gens, order, limits);
}

bool contains(const GroebnerBasis& gb, const Polynomial& p) {
    return normal_form(p, gb).is_zero();
}

bool contains(const IdealPresentation& I, const Polynomial& p) {
    if (p.is_zero()) return true;
    return contains(groebner(I), p);
}

bool ideal_contained(const IdealPresentation& I, const GroebnerBasis& gbJ) {
    for (const auto& g : I.gens)
        if (!normal_form(g, gbJ).is_zero()) return false;
    return true;
}

bool ideal_equal(const IdealPresentation& I, const IdealPresentation& J) {
    if (!I.ring->compatible(*J.ring)) throw std::invalid_argument("ideal_equal: ring mismatch");
    GroebnerBasis gbI = groebner(I), gbJ = groebner(J);
    return ideal_contained(I, gbJ) && ideal_contained(J, gbI);
}

IdealPresentation eliminate(const IdealPresentation& I, const std::vector<std::string>& drop,
                            GBLimits limits) {
    std::vector<char> front(I.ring->nvars(), 0);
    std::vector<std::size_t> drop_idx;
    for (const auto& n : drop) {
        std::size_t i = I.ring->index_of(n);
        front[i] = 1;
        drop_idx.push_back(i);
    }
    GroebnerBasis gb = groebner(I, MonomialOrder::block(front), limits);
    std::vector<Polynomial> kept;
    for (const auto& g : gb.basis) {
        bool uses_dropped = false;
        for (auto i : drop_idx)
            if (g.uses_var(i)) {
                uses_dropped = true;
                break;
            }
        if (!uses_dropped) kept.push_back(g.with_ring(I.ring));
    }
    return IdealPresentation::make(I.ring, std::move(kept));
}

namespace {

// Smallest number of variables meeting the support of every monomial.
int min_hitting_set(const std::vector<std::vector<std::size_t>>& supports,
                    std::vector<char>& removed, std::size_t from, int best_so_far, int used) {
    if (used >= best_so_far) return best_so_far;
    std::size_t pick = supports.size();
    for (std::size_t i = from; i < supports.size(); ++i) {
        bool hit = false;
        for (auto v : supports[i])
            if (removed[v]) {
                hit = true;
                break;
            }
        if (!hit) {
            pick = i;
            break;
        }
    }
    if (pick == supports.size()) return used;
    int best = best_so_far;
    for (auto v : supports[pick]) {
        removed[v] = 1;
        best = std::min(best, min_hitting_set(supports, removed, pick + 1, best, used + 1));
        removed[v] = 0;
    }
    return best;
}

}  // namespace

int krull_dimension(const GroebnerBasis& gb) {
    if (gb.is_unit_ideal()) throw std::domain_error("krull dimension of the unit ideal");
    std::vector<std::vector<std::size_t>> supports;
    for (const auto& g : gb.basis) {
        std::vector<std::size_t> s;
        const Monomial& m = g.lead().mono;
        for (std::size_t i = 0; i < m.nvars(); ++i)
            if (m[i]) s.push_back(i);
        supports.push_back(std::move(s));
    }
    std::vector<char> removed(gb.ring->nvars(), 0);
    int hit = min_hitting_set(supports, removed, 0, static_cast<int>(gb.ring->nvars()) + 1, 0);
    return static_cast<int>(gb.ring->nvars()) - hit;
}

int krull_dimension(const IdealPresentation& I) {
    if (I.gens.empty()) return static_cast<int>(I.ring->nvars());
    return krull_dimension(groebner(I));
}

std::vector<Monomial> monomials_of_weighted_degree(const Ring& ring, long d) {
    std::vector<Monomial> out;
    Monomial cur(ring.nvars());
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long rem) {
        if (i == ring.nvars()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        long w = ring.weight(i);
        for (long e = 0; e * w <= rem; ++e) {
            cur[i] = static_cast<unsigned>(e);
            rec(i + 1, rem - e * w);
        }
        cur[i] = 0;
    };
    rec(0, d);
    return out;
}

HilbertTable hilbert_function(const GroebnerBasis& gb, int up_to) {
    std::vector<Monomial> leads;
    for (const auto& g : gb.basis) leads.push_back(g.lead().mono);
    HilbertTable t;
    for (int d = 0; d <= up_to; ++d) {
        long count = 0;
        for (const auto& m : monomials_of_weighted_degree(*gb.ring, d)) {
            bool standard = true;
            for (const auto& l : leads)
                if (l.divides(m)) {
                    standard = false;
                    break;
                }
            if (standard) ++count;
        }
        t.dims.push_back(count);
    }
    return t;
}

HilbertTable hilbert_function(const IdealPresentation& I, int up_to) {
    if (!I.is_homogeneous())
        throw std::invalid_argument("hilbert_function needs homogeneous generators");
    if (I.gens.empty()) {
        HilbertTable t;
        for (int d = 0; d <= up_to; ++d)
            t.dims.push_back(static_cast<long>(monomials_of_weighted_degree(*I.ring, d).size()));
        return t;
    }
    return hilbert_function(groebner(I), up_to);
}

int hilbert_growth_degree(const HilbertTable& t) {
    std::vector<long> v = t.dims;
    if (v.size() < 3) throw std::invalid_argument("hilbert table too short");
    for (int diffs = 0; diffs < static_cast<int>(t.dims.size()); ++diffs) {
        bool tail_zero = true;
        bool tail_const = true;
        for (std::size_t i = v.size() / 2; i < v.size(); ++i) {
            if (v[i] != 0) tail_zero = false;
            if (v[i] != v.back()) tail_const = false;
        }
        if (tail_zero) return diffs - 1;
        if (tail_const && v.back() != 0) return diffs;
        std::vector<long> next;
        for (std::size_t i = 1; i < v.size(); ++i) next.push_back(v[i] - v[i - 1]);
        v = std::move(next);
        if (v.size() < 2) break;
    }
    throw std::domain_error("hilbert table does not stabilise at this bound");
}

}  // namespace scrollun
