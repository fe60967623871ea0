#include "scrollun/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace scrollun {

GBLimits GBLimits::defaults() {
    GBLimits l;
    if (const char* s = std::getenv("SCROLLUN_GB_STEPS")) l.max_steps = std::atol(s);
    if (const char* s = std::getenv("SCROLLUN_GB_PAIRS")) l.max_pairs = std::atol(s);
    return l;
}

namespace {

struct Budget {
    long steps_left;
    long pairs_left;
    void step() {
        if (--steps_left < 0)
            throw BudgetExceeded("groebner reduction budget exceeded; "
                                 "raise SCROLLUN_GB_STEPS to continue");
    }
    void pair() {
        if (--pairs_left < 0)
            throw BudgetExceeded("groebner pair budget exceeded; "
                                 "raise SCROLLUN_GB_PAIRS to continue");
    }
};

// Full division remainder; basis elements are monic and canonical in `ring`.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis, Budget& budget) {
    Polynomial work = p;
    std::vector<Term> remainder;
    while (!work.is_zero()) {
        const Term& lt = work.lead();
        bool reduced = false;
        for (const auto& g : basis) {
            const Monomial& gm = g.lead().mono;
            if (!gm.divides(lt.mono)) continue;
            budget.step();
            work = work - g.times_term(lt.coeff, gm.quotient_of(lt.mono));
            reduced = true;
            break;
        }
        if (!reduced) {
            budget.step();
            remainder.push_back(lt);
            work = work - Polynomial::term(work.ring(), lt.coeff, lt.mono);
        }
    }
    return Polynomial::from_terms(p.ring(), std::move(remainder));
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s-polynomial of zero");
    const Field& F = f.ring()->field();
    Monomial l = Monomial::lcm(f.lead().mono, g.lead().mono);
    Polynomial a = f.times_term(F.inv(f.lead().coeff), f.lead().mono.quotient_of(l));
    Polynomial b = g.times_term(F.inv(g.lead().coeff), g.lead().mono.quotient_of(l));
    return a - b;
}

GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, MonomialOrder order,
                             GBLimits limits) {
    if (gens.empty()) throw std::invalid_argument("groebner basis of empty generator list");
    RingPtr ring = gens.front().ring();
    RingPtr work_ring = ring->order() == order ? ring : with_order(ring, order);

    Budget budget{limits.max_steps, limits.max_pairs};

    std::vector<Polynomial> g;
    for (const auto& p : gens) {
        if (p.is_zero()) continue;
        g.push_back(p.with_ring(work_ring).monic());
    }
    if (g.empty()) throw std::invalid_argument("groebner basis of the zero ideal");

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        long deg;
    };
    auto make_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = Monomial::lcm(g[i].lead().mono, g[j].lead().mono);
        long d = l.weighted_degree(work_ring->weights());
        return Pair{i, j, std::move(l), d};
    };

    std::vector<Pair> pending;
    for (std::size_t j = 1; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pending.push_back(make_pair(i, j));

    std::set<std::pair<std::size_t, std::size_t>> done;

    while (!pending.empty()) {
        // Normal selection: smallest lcm under the computation order.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            if (pending[k].deg < pending[best].deg ||
                (pending[k].deg == pending[best].deg &&
                 work_ring->cmp(pending[k].lcm, pending[best].lcm) < 0))
                best = k;
        }
        Pair pr = std::move(pending[best]);
        pending.erase(pending.begin() + best);
        done.insert({pr.i, pr.j});
        budget.pair();

        // First Buchberger criterion: coprime leading monomials.
        if (Monomial::coprime(g[pr.i].lead().mono, g[pr.j].lead().mono)) continue;

        // Chain criterion: some g[k] divides the lcm and both side pairs done.
        bool skip = false;
        for (std::size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!g[k].lead().mono.divides(pr.lcm)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) skip = true;
        }
        if (skip) continue;

        Polynomial s = s_polynomial(g[pr.i], g[pr.j]);
        Polynomial r = reduce(s, g, budget);
        if (r.is_zero()) continue;
        g.push_back(r.monic());
        std::size_t idx = g.size() - 1;
        for (std::size_t i = 0; i < idx; ++i) pending.push_back(make_pair(i, idx));
    }

    // Minimalise: drop elements whose leading monomial is divisible by another's.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mj = g[j].lead().mono;
            if (mj.divides(g[i].lead().mono) &&
                (g[i].lead().mono != mj || j < i))
                redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }

    // Inter-reduce tails for the unique reduced basis.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = others.empty() ? minimal[i] : reduce(minimal[i], others, budget);
        reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return work_ring->cmp(a.lead().mono, b.lead().mono) < 0;
    });

    return GroebnerBasis{work_ring, order, std::move(reduced)};
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    Budget budget{GBLimits::defaults().max_steps, 0};
    Polynomial q = p.with_ring(gb.ring);
    return reduce(q, gb.basis, budget).with_ring(p.ring());
}

bool is_reduced_groebner(const GroebnerBasis& gb) {
    const auto& b = gb.basis;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i].is_zero() || b[i].lead().coeff != 1) return false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : b[i].terms())
                if (b[j].lead().mono.divides(t.mono)) return false;
        }
    }
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!normal_form(s_polynomial(b[i], b[j]), gb).is_zero()) return false;
    return true;
}

}  // namespace scrollun
