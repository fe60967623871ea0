#pragma once

#include "scrollun/scroll.hpp"

namespace scrollun {

// A point [a:b] on Gamma in the (x0m : x1n) coordinates, with multiplicity.
struct DivisorPoint {
    mpq_class a, b;
    int mult = 1;
};

// S_un(f) presented over R2 = k[x.., T] with T of weight k = deg f, in both
// forms: the defining relations T u - f phi(u) together with Q, and the 2x2
// minors of the scroll matrix extended by the column (f, T).
struct UnprojectionRing {
    int k = 0;
    RingPtr R2;
    Polynomial f;  // reduced representative in R2, supported on x0m, x1n
    IdealPresentation Q2_def;
    IdealPresentation Q2_minors;
};

// R2 for a given T-weight.
RingPtr unprojection_ring(const ScrollData& s, int k);

// f = prod (b_i x0m - a_i x1n)^{mult_i}, normalised monic; vanishes on Gamma
// exactly at the given points.
Polynomial f_from_divisor(const ScrollData& s, const std::vector<DivisorPoint>& points);

struct NormalizedF {
    Polynomial f_reduced;   // representative in k[x0m, x1n]
    Polynomial correction;  // i = f - f_reduced, an element of I
    RingMap subst;          // automorphism of R2 carrying Q2_def(f) onto Q2_def(f_reduced)
    bool in_I = false;      // f_reduced == 0: S_un(f) is not a domain
};
NormalizedF normalize_f(const ScrollData& s, const Polynomial& f);

// Raw presentations for a homogeneous f of degree k given in R2; no
// normalisation is applied.
IdealPresentation q2_def_ideal(const ScrollData& s, const RingPtr& R2, const Polynomial& f);
IdealPresentation q2_minor_ideal(const ScrollData& s, const RingPtr& R2, const Polynomial& f);

// Normalises f, rejects f in I with the non-domain diagnosis, builds both
// presentations.
UnprojectionRing build_unprojection(const ScrollData& s, const Polynomial& f);

// The m+n+1 elements x00..x0(m-1), x10..x1(n-1), f*x0m drop the dimension of
// R2 by exactly their count.
bool regular_sequence_check(const ScrollData& s, const Polynomial& f);

// Substituting T -> f*x01/x00 with denominators cleared sends every Q2
// generator into Q: the presentation maps into S localised at x00.
bool localization_witness(const ScrollData& s, const UnprojectionRing& u);

// Classification of Proj S_un(f_{a,b}) for f = a*x0m + b*x1n: F(m,n+1) when
// [a:b] = [0:1], else F(m+1,n) (built as F(n,m+1) when m = n). The change of
// variables is a linear substitution target-ring -> R2 realising column
// operations on the minor matrix.
struct Classification {
    std::string tag;     // "F(m,n+1)" or "F(m+1,n)" with numbers filled in
    int target_m = 0, target_n = 0;  // canonical scroll shape actually built
    int abstract_index = 0;          // Proj is abstractly F_{abstract_index}
    RingMap change;
    mpq_class det;        // determinant of the linear change (nonzero)
    bool verified = false;  // GB-checked ideal equality after substitution
};
Classification classify_elementary(const ScrollData& s, const mpq_class& a, const mpq_class& b);

struct FamilyScanEntry {
    mpq_class a, b;
    std::string tag;
    int abstract_index;
    bool verified;
};
std::vector<FamilyScanEntry> family_scan(const ScrollData& s,
                                         const std::vector<std::pair<mpq_class, mpq_class>>& pts);

// Weighted Hilbert table of R2/Q2.
HilbertTable hilbert_regression(const UnprojectionRing& u, int bound);

}  // namespace scrollun
