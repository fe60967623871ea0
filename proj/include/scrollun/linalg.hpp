#pragma once

#include <gmpxx.h>

#include <vector>

#include "scrollun/field.hpp"

namespace scrollun {

// Dense exact matrix over the coefficient field. Small sizes only; used for
// kernel computations and determinants in the verification operations.
class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols, Field field)
        : field_(field), cols_(cols), data_(rows, std::vector<mpq_class>(cols, 0)) {}

    std::size_t rows() const { return data_.size(); }
    std::size_t cols() const { return cols_; }
    mpq_class& at(std::size_t r, std::size_t c) { return data_[r][c]; }
    const mpq_class& at(std::size_t r, std::size_t c) const { return data_[r][c]; }

    std::size_t rank() const;
    mpq_class determinant() const;

    // Basis of the right kernel {v : M v = 0}, one vector per column of the
    // returned list.
    std::vector<std::vector<mpq_class>> kernel() const;

private:
    Field field_;
    std::size_t cols_;
    std::vector<std::vector<mpq_class>> data_;
};

}  // namespace scrollun
