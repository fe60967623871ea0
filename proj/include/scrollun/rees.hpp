#pragma once

#include "scrollun/unprojection.hpp"

namespace scrollun {

// Rees-algebra presentation for the blow-up of (I, f): R3 adds one
// second-row variable per first-row entry, and B is the 2x2 minors of
//   ( x00 .. x0(m-1)  x10 .. x1(n-1)  f  )
//   ( T00 .. T0(m-1)  T10 .. T1(n-1)  Tf ).
// Tf carries weight k so every minor is homogeneous.
struct ReesPresentation {
    int m = 0, n = 0, k = 0;
    RingPtr R3;
    Polynomial f;  // in R3
    IdealPresentation B;
    IdealPresentation Q_ext;
};

ReesPresentation build_rees(const ScrollData& s, const Polynomial& f);

// Outcome of an elimination compared against a target ideal. The three
// booleans are reported separately and never merged: at ideal level the
// geometric statements may differ from the exact elimination.
struct ElimComparison {
    IdealPresentation result;
    bool equal = false;
    bool result_in_target = false;
    bool target_in_result = false;
};

// Eliminate every second-row variable from B + Q_ext and compare with Q.
ElimComparison eliminate_to_base(const ReesPresentation& r);

// Eliminate only the T0i and T1j, rename Tf -> T, and compare with Q2.
ElimComparison eliminate_to_unprojection(const ReesPresentation& r, const UnprojectionRing& u);

// The ideal cutting out the strict transform of Gamma: first-row variables
// together with their second-row partners (Tf excluded).
IdealPresentation strict_transform_ideal(const ReesPresentation& r);

// Every generator of B vanishes under T0i -> x0i*l, T1j -> x1j*l, Tf -> f*l.
bool rees_tautological_check(const ReesPresentation& r, const ScrollData& s);

}  // namespace scrollun
