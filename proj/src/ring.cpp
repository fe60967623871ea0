#include "scrollun/ring.hpp"

#include <set>
#include <stdexcept>

namespace scrollun {

Ring::Ring(std::vector<Var> vars, Field field, MonomialOrder order)
    : vars_(std::move(vars)), field_(field), order_(std::move(order)) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.name.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(v.name).second)
            throw std::invalid_argument("duplicate variable name: " + v.name);
        if (v.weight < 1) throw std::invalid_argument("variable weight must be >= 1: " + v.name);
        weights_.push_back(v.weight);
    }
}

RingPtr Ring::make(std::vector<Var> vars, Field field, MonomialOrder order) {
    return RingPtr(new Ring(std::move(vars), field, std::move(order)));
}

std::size_t Ring::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return i;
    throw std::invalid_argument("no such variable: " + name);
}

bool Ring::has_var(const std::string& name) const {
    for (const auto& v : vars_)
        if (v.name == name) return true;
    return false;
}

bool Ring::compatible(const Ring& o) const {
    if (field_ != o.field_ || vars_.size() != o.vars_.size()) return false;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name != o.vars_[i].name || vars_[i].weight != o.vars_[i].weight) return false;
    return true;
}

RingPtr make_ring(const std::vector<std::string>& names, Field field, MonomialOrder order) {
    std::vector<Ring::Var> vars;
    vars.reserve(names.size());
    for (const auto& n : names) vars.push_back({n, 1});
    return Ring::make(std::move(vars), field, std::move(order));
}

RingPtr with_order(const RingPtr& r, MonomialOrder order) {
    std::vector<Ring::Var> vars;
    for (std::size_t i = 0; i < r->nvars(); ++i) vars.push_back({r->name(i), r->weight(i)});
    return Ring::make(std::move(vars), r->field(), std::move(order));
}

}  // namespace scrollun
