#pragma once

#include "scrollun/ideal.hpp"
#include "scrollun/ring_map.hpp"

namespace scrollun {

// The surface scroll F(m,n) in P^{m+n+1}: coordinate ring R = k[x00..x0m,
// x10..x1n], its determinantal ideal Q (2x2 minors of the two-block matrix
// with rows x0i..,x1j.. over x0(i+1)..,x1(j+1)..), the line Gamma cut out by
// the first row, and the row-shift map phi on I = (first row).
struct ScrollData {
    int m = 0, n = 0;
    RingPtr R;
    IdealPresentation Q;
    IdealPresentation I;

    std::size_t x0(int i) const { return static_cast<std::size_t>(i); }
    std::size_t x1(int j) const { return static_cast<std::size_t>(m + 1 + j); }
    Polynomial var0(int i) const { return Polynomial::variable(R, x0(i)); }
    Polynomial var1(int j) const { return Polynomial::variable(R, x1(j)); }

    bool is_gamma_var(std::size_t v) const;  // one of the I generators?
    std::size_t phi_var(std::size_t v) const;

    // phi extended to elements of I by the fixed first-divisor decomposition;
    // well defined modulo Q. Throws if some term avoids every I variable.
    Polynomial phi_of(const Polynomial& p) const;
};

ScrollData build_scroll(int m, int n, const Field& field = Field::rationals());

// x01*u - x00*phi(u) lies in Q for every generator u of I.
bool verify_phi(const ScrollData& s);

// The homomorphism g: R -> k[z,t,s], x0i -> z t^(m-i) s^i, x1j -> t^(n-j) s^j.
// Q is contained in ker g; checked generator-wise by apply_map.
RingMap build_g_map(const ScrollData& s);
bool verify_g_kernel(const ScrollData& s, const RingMap& g);

// Monomial basis B of R/(Q + (x00,x01)): {1}, the
// families x0i*x0m^a*x1n^b (2<=i<=m-1), x0m^a*x1n^b, x10^a*x1n^b and
// x10^a*x1i*x1n^b (1<=i<=n-1). For m = 1 the pure x0 families collapse since
// x0m = x01 already lies in the quotient.
bool is_basis_monomial(const ScrollData& s, const Monomial& w);

// Rewrite w modulo Q1 = Q + (x00,x01) by the index-spreading rules
// x0i*x0j -> x0(i-1)*x0(j+1), x1i*x1j -> x1(i-1)*x1(j+1),
// x0i*x1j -> x0(i-1)*x1(j+1), killing x00 and x01. Returns the reached
// basis monomial, or nullopt when w falls into Q1 ("zero" marker).
std::optional<Monomial> b_normal_form(const Monomial& w, const ScrollData& s);

IdealPresentation q1_ideal(const ScrollData& s);  // Q + (x00, x01)

// Degree-by-degree check that B is a k-basis of R/Q1 up to degree d: counts
// agree with the standard-monomial dimension and the g-images are pairwise
// distinct monomials.
bool verify_basis_claim(const ScrollData& s, int d);

// Degree-by-degree check that any u with u*x1(n-1) in (x00)+Q lies in Q1,
// computed as an exact kernel against normal forms.
bool verify_second_claim(const ScrollData& s, int d);

// Dimension of {u in R_1 : u*x1(n-1) in (x00)+Q}; the degree-zero part of
// Hom(I,S) in coordinates. Expected 2, spanned by x00 and x01.
int hom_degree_zero_dim(const ScrollData& s);

}  // namespace scrollun
