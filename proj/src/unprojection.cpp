#include "scrollun/unprojection.hpp"

#include <stdexcept>

namespace scrollun {

RingPtr unprojection_ring(const ScrollData& s, int k) {
    if (k < 1) throw std::invalid_argument("unprojection weight k must be >= 1");
    std::vector<Ring::Var> vars;
    for (std::size_t i = 0; i < s.R->nvars(); ++i) vars.push_back({s.R->name(i), 1});
    vars.push_back({"T", k});
    return Ring::make(std::move(vars), s.R->field());
}

Polynomial f_from_divisor(const ScrollData& s, const std::vector<DivisorPoint>& points) {
    if (points.empty()) throw std::invalid_argument("divisor needs at least one point");
    Polynomial x0m = s.var0(s.m), x1n = s.var1(s.n);
    Polynomial f = Polynomial::constant(s.R, 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        if (sgn(p.a) == 0 && sgn(p.b) == 0) throw std::invalid_argument("divisor point [0:0]");
        if (p.mult < 1) throw std::invalid_argument("divisor multiplicity must be >= 1");
        for (std::size_t j = 0; j < i; ++j)
            if (points[j].a * p.b == points[j].b * p.a)
                throw std::invalid_argument("divisor points must be pairwise distinct");
        Polynomial factor = x0m.scaled(p.b) - x1n.scaled(p.a);
        f = f * factor.pow(static_cast<unsigned>(p.mult));
    }
    return f.monic();
}

NormalizedF normalize_f(const ScrollData& s, const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("normalize_f: zero input");
    auto deg = f.weighted_degree();
    if (!deg) throw std::invalid_argument("normalize_f: inhomogeneous f");
    int k = static_cast<int>(*deg);
    if (k < 1) throw std::invalid_argument("normalize_f: degree must be >= 1");

    // Split off every term touching an I variable; the rest lives on Gamma.
    std::vector<Term> reduced;
    for (const auto& t : f.terms()) {
        bool on_gamma = true;
        for (std::size_t v = 0; v < s.R->nvars(); ++v)
            if (s.is_gamma_var(v) && t.mono[v]) {
                on_gamma = false;
                break;
            }
        if (on_gamma) reduced.push_back(t);
    }
    NormalizedF out{Polynomial::from_terms(s.R, std::move(reduced)), Polynomial::zero(s.R),
                    RingMap::identity(s.R), false};
    out.correction = f.with_ring(s.R) - out.f_reduced;
    out.in_I = out.f_reduced.is_zero();

    RingPtr R2 = unprojection_ring(s, k);
    RingMap ext = inclusion_map(s.R, R2);
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < R2->nvars(); ++i) images.push_back(Polynomial::variable(R2, i));
    if (!out.correction.is_zero()) {
        // T -> T + phi(i) turns the relations of S_un(f) into those of
        // S_un(f - i); both sides have degree k.
        images.back() = images.back() + ext.apply(s.phi_of(out.correction));
    }
    out.subst = RingMap(R2, R2, std::move(images));
    return out;
}

IdealPresentation q2_def_ideal(const ScrollData& s, const RingPtr& R2, const Polynomial& f) {
    RingMap ext = inclusion_map(s.R, R2);
    Polynomial f2 = f.ring() == R2 ? f : ext.apply(f);
    Polynomial T = Polynomial::variable(R2, "T");
    std::vector<Polynomial> gens;
    for (const auto& q : s.Q.gens) gens.push_back(ext.apply(q));
    for (const auto& u : s.I.gens)
        gens.push_back(T * ext.apply(u) - f2 * ext.apply(s.phi_of(u)));
    return IdealPresentation::make(R2, std::move(gens));
}

IdealPresentation q2_minor_ideal(const ScrollData& s, const RingPtr& R2, const Polynomial& f) {
    RingMap ext = inclusion_map(s.R, R2);
    Polynomial f2 = f.ring() == R2 ? f : ext.apply(f);
    Polynomial T = Polynomial::variable(R2, "T");
    std::vector<std::pair<Polynomial, Polynomial>> cols;
    for (int i = 0; i < s.m; ++i)
        cols.push_back({Polynomial::variable(R2, s.R->name(s.x0(i))),
                        Polynomial::variable(R2, s.R->name(s.x0(i + 1)))});
    for (int j = 0; j < s.n; ++j)
        cols.push_back({Polynomial::variable(R2, s.R->name(s.x1(j))),
                        Polynomial::variable(R2, s.R->name(s.x1(j + 1)))});
    cols.push_back({f2, T});
    std::vector<Polynomial> gens;
    for (std::size_t a = 0; a < cols.size(); ++a)
        for (std::size_t b = a + 1; b < cols.size(); ++b) {
            Polynomial minor = cols[a].first * cols[b].second - cols[a].second * cols[b].first;
            if (!minor.is_zero()) gens.push_back(minor);
        }
    return IdealPresentation::make(R2, std::move(gens));
}

UnprojectionRing build_unprojection(const ScrollData& s, const Polynomial& f) {
    NormalizedF nf = normalize_f(s, f);
    if (nf.in_I)
        throw std::domain_error("f lies in the unprojection ideal I, so S_un(f) is not a domain; "
                                "choose f with a nonzero part in x0m, x1n");
    UnprojectionRing u;
    u.k = static_cast<int>(*nf.f_reduced.weighted_degree());
    u.R2 = unprojection_ring(s, u.k);
    u.f = inclusion_map(s.R, u.R2).apply(nf.f_reduced);
    u.Q2_def = q2_def_ideal(s, u.R2, u.f);
    u.Q2_minors = q2_minor_ideal(s, u.R2, u.f);
    return u;
}

bool regular_sequence_check(const ScrollData& s, const Polynomial& f) {
    if (f.is_zero()) return false;
    auto deg = f.weighted_degree();
    if (!deg || *deg < 1) return false;
    RingPtr R2 = unprojection_ring(s, static_cast<int>(*deg));
    RingMap ext = inclusion_map(s.R, R2);
    std::vector<Polynomial> seq;
    for (const auto& u : s.I.gens) seq.push_back(ext.apply(u));
    seq.push_back(ext.apply(f) * Polynomial::variable(R2, s.R->name(s.x0(s.m))));
    std::size_t len = seq.size();  // m + n + 1
    int dim = krull_dimension(IdealPresentation::make(R2, std::move(seq)));
    return dim == static_cast<int>(R2->nvars() - len);
}

bool localization_witness(const ScrollData& s, const UnprojectionRing& u) {
    GroebnerBasis gbQ = groebner(s.Q);
    std::size_t t_index = u.R2->index_of("T");
    RingMap drop = rename_map(u.R2, s.R, {}, {"T"});
    Polynomial x00 = s.var0(0), x01 = s.var0(1);
    Polynomial f_in_R = drop.apply(u.f);
    for (const auto& g : u.Q2_minors.gens) {
        // Split g = A*T + B with A, B free of T (generators are linear in T).
        std::vector<Term> a_terms, b_terms;
        for (const auto& t : g.terms()) {
            if (t.mono[t_index] > 1) throw std::logic_error("Q2 generator of T-degree > 1");
            if (t.mono[t_index] == 1) {
                Monomial m = t.mono;
                m[t_index] = 0;
                a_terms.push_back({t.coeff, std::move(m)});
            } else {
                b_terms.push_back(t);
            }
        }
        Polynomial A = drop.apply(Polynomial::from_terms(u.R2, std::move(a_terms)));
        Polynomial B = drop.apply(Polynomial::from_terms(u.R2, std::move(b_terms)));
        Polynomial cleared = A * f_in_R * x01 + x00 * B;
        if (!normal_form(cleared, gbQ).is_zero()) return false;
    }
    return true;
}

Classification classify_elementary(const ScrollData& s, const mpq_class& a, const mpq_class& b) {
    const Field& F = s.R->field();
    mpq_class ca = F.canon(a), cb = F.canon(b);
    if (F.is_zero(ca) && F.is_zero(cb))
        throw std::invalid_argument("classify_elementary needs (a,b) != (0,0)");

    Polynomial f = s.var0(s.m).scaled(ca) + s.var1(s.n).scaled(cb);
    RingPtr R2 = unprojection_ring(s, 1);
    IdealPresentation q2 = q2_minor_ideal(s, R2, inclusion_map(s.R, R2).apply(f));

    ScrollData target;
    std::vector<Polynomial> images;  // one per target variable
    std::string tag;
    int abstract_index = 0;
    Polynomial T2 = Polynomial::variable(R2, "T");

    if (F.is_zero(ca)) {
        // f ~ x1n: the (f,T) column continues the second block.
        target = build_scroll(s.m, s.n + 1, F);
        tag = "F(" + std::to_string(s.m) + "," + std::to_string(s.n + 1) + ")";
        abstract_index = s.n + 1 - s.m;
        for (int i = 0; i <= s.m; ++i)
            images.push_back(Polynomial::variable(R2, s.R->name(s.x0(i))));
        for (int j = 0; j <= s.n; ++j)
            images.push_back(Polynomial::variable(R2, s.R->name(s.x1(j))));
        images.push_back(T2.scaled(F.inv(cb)));
    } else {
        // Rescale to x0m + beta*x1n and absorb the second block into the
        // first: u_j = x0j + beta*x1(n-m+j), closing the chain with T/a.
        mpq_class beta = F.div(cb, ca);
        std::vector<Polynomial> u_chain;
        for (int j = 0; j <= s.m; ++j) {
            Polynomial uj = Polynomial::variable(R2, s.R->name(s.x0(j)));
            if (!F.is_zero(beta))
                uj = uj + Polynomial::variable(R2, s.R->name(s.x1(s.n - s.m + j))).scaled(beta);
            u_chain.push_back(uj);
        }
        u_chain.push_back(T2.scaled(F.inv(ca)));
        tag = "F(" + std::to_string(s.m + 1) + "," + std::to_string(s.n) + ")";
        abstract_index = std::abs(s.n - s.m - 1);
        if (s.m + 1 <= s.n) {
            target = build_scroll(s.m + 1, s.n, F);
            for (auto& uj : u_chain) images.push_back(uj);
            for (int j = 0; j <= s.n; ++j)
                images.push_back(Polynomial::variable(R2, s.R->name(s.x1(j))));
        } else {
            // m == n: canonical shape swaps the blocks.
            target = build_scroll(s.n, s.m + 1, F);
            for (int j = 0; j <= s.n; ++j)
                images.push_back(Polynomial::variable(R2, s.R->name(s.x1(j))));
            for (auto& uj : u_chain) images.push_back(uj);
        }
    }

    Classification out{tag, target.m, target.n, abstract_index,
                       RingMap(target.R, R2, std::move(images)), 0, false};
    out.det = out.change.linear_determinant();
    IdealPresentation mapped = IdealPresentation::make(R2, out.change.apply(target.Q.gens));
    out.verified = sgn(out.det) != 0 && ideal_equal(mapped, q2);
    return out;
}

std::vector<FamilyScanEntry> family_scan(
    const ScrollData& s, const std::vector<std::pair<mpq_class, mpq_class>>& pts) {
    std::vector<FamilyScanEntry> out;
    for (const auto& [a, b] : pts) {
        Classification c = classify_elementary(s, a, b);
        out.push_back({a, b, c.tag, c.abstract_index, c.verified});
    }
    return out;
}

HilbertTable hilbert_regression(const UnprojectionRing& u, int bound) {
    return hilbert_function(u.Q2_minors, bound);
}

}  // namespace scrollun
