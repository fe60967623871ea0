#include "scrollun/linalg.hpp"

#include <stdexcept>

namespace scrollun {

namespace {

// Row echelon form; returns pivot column per pivot row. Operates in place.
std::vector<std::size_t> echelon(std::vector<std::vector<mpq_class>>& m, const Field& F) {
    std::vector<std::size_t> pivots;
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && F.is_zero(m[sel][c])) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        mpq_class inv = F.inv(m[r][c]);
        for (std::size_t j = c; j < cols; ++j) m[r][j] = F.mul(m[r][j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || F.is_zero(m[i][c])) continue;
            mpq_class factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = F.sub(m[i][j], F.mul(factor, m[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t QMatrix::rank() const {
    auto m = data_;
    return echelon(m, field_).size();
}

mpq_class QMatrix::determinant() const {
    if (rows() != cols()) throw std::invalid_argument("determinant of non-square matrix");
    auto m = data_;
    const Field& F = field_;
    mpq_class det = 1;
    std::size_t n = rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && F.is_zero(m[sel][c])) ++sel;
        if (sel == n) return 0;
        if (sel != c) {
            std::swap(m[sel], m[c]);
            det = F.neg(det);
        }
        det = F.mul(det, m[c][c]);
        mpq_class inv = F.inv(m[c][c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (F.is_zero(m[i][c])) continue;
            mpq_class factor = F.mul(m[i][c], inv);
            for (std::size_t j = c; j < n; ++j) m[i][j] = F.sub(m[i][j], F.mul(factor, m[c][j]));
        }
    }
    return det;
}

std::vector<std::vector<mpq_class>> QMatrix::kernel() const {
    std::size_t n = cols();
    auto m = data_;
    auto pivots = echelon(m, field_);
    std::vector<char> is_pivot(n, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t freec = 0; freec < n; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<mpq_class> v(n, 0);
        v[freec] = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = field_.neg(m[pr][freec]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace scrollun
