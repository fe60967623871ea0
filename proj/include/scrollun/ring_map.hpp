#pragma once

#include "scrollun/polynomial.hpp"

namespace scrollun {

// A k-algebra homomorphism given by one target image per source variable.
// When `graded` is set, each image must be homogeneous of the source
// variable's weight (checked at construction).
class RingMap {
public:
    RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images, bool graded = false);

    static RingMap identity(const RingPtr& ring);

    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }
    const std::vector<Polynomial>& images() const { return images_; }
    bool graded() const { return graded_; }

    Polynomial apply(const Polynomial& p) const;
    std::vector<Polynomial> apply(const std::vector<Polynomial>& ps) const;

    // Determinant of the linear part; meaningful when every image is linear.
    // Used to certify that a linear change of variables is invertible.
    mpq_class linear_determinant() const;

private:
    RingPtr source_, target_;
    std::vector<Polynomial> images_;
    bool graded_;
};

// Maps each source variable to the target variable of the same name.
RingMap inclusion_map(const RingPtr& source, const RingPtr& target);

// Same-name mapping with explicit exceptions: renames (source -> target name)
// and kills (source variables sent to 0).
RingMap rename_map(const RingPtr& source, const RingPtr& target,
                   const std::vector<std::pair<std::string, std::string>>& renames,
                   const std::vector<std::string>& kills = {});

}  // namespace scrollun
