#include "scrollun/ring_map.hpp"

#include <algorithm>
#include <stdexcept>

#include "scrollun/linalg.hpp"

namespace scrollun {

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images, bool graded)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)),
      graded_(graded) {
    if (images_.size() != source_->nvars())
        throw std::invalid_argument("ring map needs one image per source variable");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i].ring() != target_ && !images_[i].ring()->compatible(*target_))
            throw std::invalid_argument("image not in target ring: " + source_->name(i));
        if (graded_ && !images_[i].is_zero()) {
            auto d = images_[i].weighted_degree();
            if (!d || *d != source_->weight(i))
                throw std::invalid_argument("graded map violates weight of " + source_->name(i));
        }
    }
}

RingMap RingMap::identity(const RingPtr& ring) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        images.push_back(Polynomial::variable(ring, i));
    return RingMap(ring, ring, std::move(images), true);
}

Polynomial RingMap::apply(const Polynomial& p) const {
    if (p.ring() != source_ && !p.ring()->compatible(*source_))
        throw std::invalid_argument("ring map applied to polynomial from another ring");
    Polynomial result = Polynomial::zero(target_);
    for (const auto& t : p.terms()) {
        Polynomial prod = Polynomial::constant(target_, t.coeff);
        for (std::size_t i = 0; i < t.mono.nvars(); ++i)
            if (t.mono[i]) prod = prod * images_[i].pow(t.mono[i]);
        result = result + prod;
    }
    return result;
}

std::vector<Polynomial> RingMap::apply(const std::vector<Polynomial>& ps) const {
    std::vector<Polynomial> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(apply(p));
    return out;
}

RingMap inclusion_map(const RingPtr& source, const RingPtr& target) {
    return rename_map(source, target, {});
}

RingMap rename_map(const RingPtr& source, const RingPtr& target,
                   const std::vector<std::pair<std::string, std::string>>& renames,
                   const std::vector<std::string>& kills) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < source->nvars(); ++i) {
        const std::string& name = source->name(i);
        if (std::find(kills.begin(), kills.end(), name) != kills.end()) {
            images.push_back(Polynomial::zero(target));
            continue;
        }
        std::string out = name;
        for (const auto& [from, to] : renames)
            if (from == name) out = to;
        images.push_back(Polynomial::variable(target, out));
    }
    return RingMap(source, target, std::move(images));
}

mpq_class RingMap::linear_determinant() const {
    std::size_t n = source_->nvars();
    if (target_->nvars() != n)
        throw std::invalid_argument("linear determinant needs equal variable counts");
    QMatrix m(n, n, target_->field());
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& t : images_[i].terms()) {
            if (t.mono.total_degree() != 1)
                throw std::invalid_argument("linear determinant of a non-linear map");
            for (std::size_t j = 0; j < n; ++j)
                if (t.mono[j]) m.at(i, j) = t.coeff;
        }
    }
    return m.determinant();
}

}  // namespace scrollun
