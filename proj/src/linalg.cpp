#include "weyl/linalg.hpp"

#include <algorithm>

namespace weyl {

std::vector<size_t> rref(Matrix& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(p, c));
        ParamRat inv = m.at(row, col).inv();
        for (size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            ParamRat f = m.at(r, col);
            for (size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t rank(Matrix m) { return rref(m).size(); }

std::vector<std::vector<ParamRat>> nullspace(Matrix m) {
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<ParamRat>> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<ParamRat> v(m.cols());
        v[f] = ParamRat(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, f);
        // scale: first nonzero coordinate becomes 1
        for (auto& e : v) {
            if (e.is_zero()) continue;
            ParamRat inv = e.inv();
            for (auto& x : v) x *= inv;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace weyl
