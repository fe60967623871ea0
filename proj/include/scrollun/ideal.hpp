#pragma once

#include <string>
#include <vector>

#include "scrollun/groebner.hpp"

namespace scrollun {

// An ideal given by a generator list. Generators are kept nonzero.
struct IdealPresentation {
    RingPtr ring;
    std::vector<Polynomial> gens;

    static IdealPresentation make(RingPtr ring, std::vector<Polynomial> gens);
    bool is_homogeneous() const;
};

struct HilbertTable {
    std::vector<long> dims;  // dims[d] = dim_k of the weighted-degree-d part of the quotient
    bool operator==(const HilbertTable& o) const = default;
};

GroebnerBasis groebner(const IdealPresentation& I, GBLimits limits = GBLimits::defaults());
GroebnerBasis groebner(const IdealPresentation& I, MonomialOrder order,
                       GBLimits limits = GBLimits::defaults());

bool contains(const GroebnerBasis& gb, const Polynomial& p);
bool contains(const IdealPresentation& I, const Polynomial& p);

bool ideal_equal(const IdealPresentation& I, const IdealPresentation& J);
bool ideal_contained(const IdealPresentation& I, const GroebnerBasis& gbJ);

// Generators of I intersected with the subring omitting `drop`, via a
// two-block elimination order with the dropped variables in front.
IdealPresentation eliminate(const IdealPresentation& I, const std::vector<std::string>& drop,
                            GBLimits limits = GBLimits::defaults());

// Krull dimension of ring/I: combinatorial dimension of the leading-term
// ideal (largest variable set supporting no leading monomial).
int krull_dimension(const IdealPresentation& I);
int krull_dimension(const GroebnerBasis& gb);

// Exact dimension of each weighted-graded piece of ring/I for degrees
// 0..up_to, counted through standard monomials.
HilbertTable hilbert_function(const IdealPresentation& I, int up_to);
HilbertTable hilbert_function(const GroebnerBasis& gb, int up_to);

// Monomials of the ring with exact weighted degree d, in no particular order.
std::vector<Monomial> monomials_of_weighted_degree(const Ring& ring, long d);

// Degree of polynomial growth of a Hilbert table read off stabilising finite
// differences; -1 when the tail is zero, throws when not yet stabilised.
int hilbert_growth_degree(const HilbertTable& t);

}  // namespace scrollun
