#pragma once

#include <memory>
#include <string>
#include <vector>

#include "scrollun/field.hpp"
#include "scrollun/monomial.hpp"

namespace scrollun {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A weighted-graded polynomial ring: ordered named variables with positive
// integer weights over a coefficient field, plus the order used for canonical
// term sorting.
class Ring {
public:
    struct Var {
        std::string name;
        int weight = 1;
    };

    static RingPtr make(std::vector<Var> vars, Field field,
                        MonomialOrder order = MonomialOrder::wgrevlex());

    std::size_t nvars() const { return vars_.size(); }
    const std::string& name(std::size_t i) const { return vars_[i].name; }
    int weight(std::size_t i) const { return vars_[i].weight; }
    const std::vector<int>& weights() const { return weights_; }
    const Field& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }

    // Index of a variable by name; throws if absent.
    std::size_t index_of(const std::string& name) const;
    bool has_var(const std::string& name) const;

    // Same variables, weights and field; the term order may differ.
    bool compatible(const Ring& o) const;

    int cmp(const Monomial& a, const Monomial& b) const { return order_.compare(weights_, a, b); }

private:
    Ring(std::vector<Var> vars, Field field, MonomialOrder order);
    std::vector<Var> vars_;
    std::vector<int> weights_;
    Field field_;
    MonomialOrder order_;
};

// Convenience: n weight-1 variables with the given names.
RingPtr make_ring(const std::vector<std::string>& names, Field field,
                  MonomialOrder order = MonomialOrder::wgrevlex());

// Same ring with a different term order (values convert via Polynomial::with_ring).
RingPtr with_order(const RingPtr& r, MonomialOrder order);

}  // namespace scrollun
