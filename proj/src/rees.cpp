#include "scrollun/rees.hpp"

#include <stdexcept>

namespace scrollun {

namespace {

std::string t_name(int block, int index) {
    return "T" + std::to_string(block) + std::to_string(index);
}

std::vector<std::string> second_row_names(const ReesPresentation& r, bool include_tf) {
    std::vector<std::string> names;
    for (int i = 0; i < r.m; ++i) names.push_back(t_name(0, i));
    for (int j = 0; j < r.n; ++j) names.push_back(t_name(1, j));
    if (include_tf) names.push_back("Tf");
    return names;
}

ElimComparison compare(IdealPresentation result, const IdealPresentation& target) {
    ElimComparison out{std::move(result)};
    GroebnerBasis gb_result = groebner(out.result);
    GroebnerBasis gb_target = groebner(target);
    out.result_in_target = ideal_contained(out.result, gb_target);
    out.target_in_result = ideal_contained(target, gb_result);
    out.equal = out.result_in_target && out.target_in_result;
    return out;
}

}  // namespace

ReesPresentation build_rees(const ScrollData& s, const Polynomial& f) {
    NormalizedF nf = normalize_f(s, f);
    if (nf.in_I)
        throw std::domain_error("f lies in I; the blow-up presentation needs f nonzero on Gamma");
    ReesPresentation r;
    r.m = s.m;
    r.n = s.n;
    r.k = static_cast<int>(*nf.f_reduced.weighted_degree());

    std::vector<Ring::Var> vars;
    for (std::size_t i = 0; i < s.R->nvars(); ++i) vars.push_back({s.R->name(i), 1});
    for (int i = 0; i < s.m; ++i) vars.push_back({t_name(0, i), 1});
    for (int j = 0; j < s.n; ++j) vars.push_back({t_name(1, j), 1});
    vars.push_back({"Tf", r.k});
    r.R3 = Ring::make(std::move(vars), s.R->field());

    RingMap ext = inclusion_map(s.R, r.R3);
    r.f = ext.apply(nf.f_reduced);

    std::vector<std::pair<Polynomial, Polynomial>> cols;
    for (const auto& u : s.I.gens)
        cols.push_back({ext.apply(u), Polynomial::zero(r.R3)});
    std::size_t c = 0;
    for (int i = 0; i < r.m; ++i) cols[c++].second = Polynomial::variable(r.R3, t_name(0, i));
    for (int j = 0; j < r.n; ++j) cols[c++].second = Polynomial::variable(r.R3, t_name(1, j));
    cols.push_back({r.f, Polynomial::variable(r.R3, "Tf")});

    std::vector<Polynomial> b_gens;
    for (std::size_t a = 0; a < cols.size(); ++a)
        for (std::size_t b = a + 1; b < cols.size(); ++b)
            b_gens.push_back(cols[a].first * cols[b].second - cols[a].second * cols[b].first);
    r.B = IdealPresentation::make(r.R3, std::move(b_gens));
    r.Q_ext = IdealPresentation::make(r.R3, ext.apply(s.Q.gens));
    return r;
}

ElimComparison eliminate_to_base(const ReesPresentation& r) {
    std::vector<Polynomial> gens = r.B.gens;
    gens.insert(gens.end(), r.Q_ext.gens.begin(), r.Q_ext.gens.end());
    IdealPresentation total = IdealPresentation::make(r.R3, std::move(gens));
    IdealPresentation elim = eliminate(total, second_row_names(r, true));
    return compare(std::move(elim), r.Q_ext);
}

ElimComparison eliminate_to_unprojection(const ReesPresentation& r, const UnprojectionRing& u) {
    if (u.k != r.k) throw std::invalid_argument("unprojection and Rees data disagree on k");
    std::vector<Polynomial> gens = r.B.gens;
    gens.insert(gens.end(), r.Q_ext.gens.begin(), r.Q_ext.gens.end());
    IdealPresentation total = IdealPresentation::make(r.R3, std::move(gens));
    IdealPresentation elim = eliminate(total, second_row_names(r, false));

    // Rename Tf -> T into R2; eliminated generators are free of the other
    // T variables, which are killed by the map.
    std::vector<std::string> kills = second_row_names(r, false);
    RingMap down = rename_map(r.R3, u.R2, {{"Tf", "T"}}, kills);
    for (const auto& g : elim.gens)
        for (const auto& name : kills)
            if (g.uses_var(r.R3->index_of(name)))
                throw std::logic_error("elimination left a dropped variable behind");
    IdealPresentation renamed = IdealPresentation::make(u.R2, down.apply(elim.gens));
    return compare(std::move(renamed), u.Q2_minors);
}

IdealPresentation strict_transform_ideal(const ReesPresentation& r) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < r.m; ++i) {
        gens.push_back(Polynomial::variable(r.R3, "x0" + std::to_string(i)));
        gens.push_back(Polynomial::variable(r.R3, t_name(0, i)));
    }
    for (int j = 0; j < r.n; ++j) {
        gens.push_back(Polynomial::variable(r.R3, "x1" + std::to_string(j)));
        gens.push_back(Polynomial::variable(r.R3, t_name(1, j)));
    }
    return IdealPresentation::make(r.R3, std::move(gens));
}

bool rees_tautological_check(const ReesPresentation& r, const ScrollData& s) {
    std::vector<Ring::Var> vars;
    for (std::size_t i = 0; i < r.R3->nvars(); ++i) vars.push_back({r.R3->name(i), 1});
    vars.push_back({"l", 1});
    RingPtr R4 = Ring::make(std::move(vars), r.R3->field());
    Polynomial l = Polynomial::variable(R4, "l");
    RingMap ext = inclusion_map(s.R, R4);

    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < r.R3->nvars(); ++i) {
        const std::string& name = r.R3->name(i);
        if (name == "Tf") {
            images.push_back(inclusion_map(r.R3, R4).apply(r.f) * l);
        } else if (name[0] == 'T') {
            int block = name[1] - '0';
            int index = std::stoi(name.substr(2));
            Polynomial v = block == 0 ? ext.apply(s.var0(index)) : ext.apply(s.var1(index));
            images.push_back(v * l);
        } else {
            images.push_back(Polynomial::variable(R4, name));
        }
    }
    RingMap taut(r.R3, R4, std::move(images));
    for (const auto& g : r.B.gens)
        if (!taut.apply(g).is_zero()) return false;
    return true;
}

}  // namespace scrollun
