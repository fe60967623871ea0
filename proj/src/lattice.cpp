#include "scrollun/lattice.hpp"

#include <stdexcept>

namespace scrollun {

SurfaceModel hirzebruch(int d) {
    if (d < 0) throw std::invalid_argument("Hirzebruch index must be >= 0");
    return SurfaceModel{d, {}};
}

int blow_up(SurfaceModel& model, int parent) {
    if (parent >= static_cast<int>(model.parents.size()) || parent < -1)
        throw std::invalid_argument("blow-up parent out of range");
    model.parents.push_back(parent);
    return static_cast<int>(model.parents.size()) - 1;
}

DivClass make_class(const SurfaceModel& model, long delta0, long gamma, std::vector<long> e) {
    e.resize(model.num_exceptionals(), 0);
    return DivClass{delta0, gamma, std::move(e)};
}

DivClass exceptional_class(const SurfaceModel& model, int i) {
    DivClass c = make_class(model, 0, 0);
    c.e.at(i) = 1;
    return c;
}

DivClass strict_exceptional(const SurfaceModel& model, int i) {
    DivClass c = exceptional_class(model, i);
    for (std::size_t j = 0; j < model.parents.size(); ++j)
        if (model.parents[j] == i) c.e[j] -= 1;
    return c;
}

DivClass canonical_class(const SurfaceModel& model) {
    DivClass c = make_class(model, -2, -(model.d + 2));
    for (auto& x : c.e) x = 1;
    return c;
}

long intersect(const SurfaceModel& model, const DivClass& a, const DivClass& b) {
    if (a.e.size() != model.num_exceptionals() || b.e.size() != model.num_exceptionals())
        throw std::invalid_argument("divisor class from a different model");
    long v = -static_cast<long>(model.d) * a.delta0 * b.delta0;
    v += a.delta0 * b.gamma + a.gamma * b.delta0;
    for (std::size_t i = 0; i < a.e.size(); ++i) v -= a.e[i] * b.e[i];
    return v;
}

ChainReport unprojection_chain(int d, const std::vector<std::pair<int, bool>>& D) {
    if (D.empty()) throw std::invalid_argument("empty divisor");
    int on_section = 0;
    for (const auto& [k_i, on] : D) {
        if (k_i < 1) throw std::invalid_argument("multiplicities must be >= 1");
        if (on) ++on_section;
    }
    if (on_section > 1)
        throw std::invalid_argument("at most one point of the fibre lies on the section");

    ChainReport rep;
    rep.model = hirzebruch(d);
    std::vector<std::vector<int>> towers;
    for (const auto& [k_i, on] : D) {
        std::vector<int> tower;
        int parent = -1;
        for (int j = 0; j < k_i; ++j) {
            parent = blow_up(rep.model, parent);
            tower.push_back(parent);
        }
        towers.push_back(std::move(tower));
        (void)on;  // position on the section does not change the numbers below
    }

    rep.gamma_hat = make_class(rep.model, 0, 1);
    for (auto& x : rep.gamma_hat.e) x = -1;  // the fibre passes through every centre
    rep.gamma_hat_sq = intersect(rep.model, rep.gamma_hat, rep.gamma_hat);

    long k = 0;
    for (const auto& [k_i, on] : D) k += k_i;
    if (k >= 2)
        rep.singularities.push_back("1/" + std::to_string(k) + "(1,1)");

    for (const auto& tower : towers) {
        std::vector<long> selfints;
        for (int idx : tower) {
            DivClass c = strict_exceptional(rep.model, idx);
            selfints.push_back(intersect(rep.model, c, c));
        }
        rep.chains.push_back(selfints);
        int k_i = static_cast<int>(tower.size());
        if (k_i >= 2) rep.singularities.push_back("A" + std::to_string(k_i - 1));
    }
    return rep;
}

int elementary_transformation(int d, bool on_delta0) {
    if (d < 0) throw std::invalid_argument("Hirzebruch index must be >= 0");
    if (d == 0) return 1;  // both directions land on F_1 by the symmetry of F_0
    return on_delta0 ? d + 1 : d - 1;
}

HorikawaReport horikawa_numerology(int m, int n, bool infinitely_near) {
    if (!(n >= m && m >= 1)) throw std::invalid_argument("need n >= m >= 1");
    HorikawaReport rep;
    rep.m = m;
    rep.n = n;
    rep.pg = m + n + 2;
    rep.Ksq = 2 * rep.pg - 3;

    SurfaceModel model = hirzebruch(n - m);
    int ex = blow_up(model, -1);
    blow_up(model, infinitely_near ? ex : -1);

    DivClass L = make_class(model, 1, n - 4, {-2, -2});
    DivClass gamma_hat = make_class(model, 0, 1, {-1, -1});
    rep.L_sq = intersect(model, L, L);
    rep.L_dot_gamma_hat = intersect(model, L, gamma_hat);
    rep.gamma_hat_sq = intersect(model, gamma_hat, gamma_hat);
    rep.a1_contraction_consistent = rep.gamma_hat_sq == -2;
    return rep;
}

}  // namespace scrollun
