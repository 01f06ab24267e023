#include "foxbrack/ratmat.hpp"

#include <stdexcept>

namespace foxbrack {

RatMat RatMat::transposed() const {
    RatMat t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
    RatMat out(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.c_; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out;
}

RatVec RatMat::apply(const RatVec& v) const {
    if (v.size() != c_) throw std::invalid_argument("vector length mismatch");
    RatVec out(r_, Rational(0));
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

std::optional<RatMat> RatMat::inverse() const {
    if (r_ != c_) return std::nullopt;
    RatMat a = *this;
    RatMat inv = identity(r_);
    for (std::size_t col = 0; col < c_; ++col) {
        std::size_t pivot = col;
        while (pivot < r_ && a.at(pivot, col) == 0) ++pivot;
        if (pivot == r_) return std::nullopt;
        for (std::size_t j = 0; j < c_; ++j) {
            std::swap(a.at(pivot, j), a.at(col, j));
            std::swap(inv.at(pivot, j), inv.at(col, j));
        }
        Rational p = a.at(col, col);
        for (std::size_t j = 0; j < c_; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t i = 0; i < r_; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            Rational f = a.at(i, col);
            for (std::size_t j = 0; j < c_; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::size_t RatMat::rank() const {
    RatMat a = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < c_ && rank < r_; ++col) {
        std::size_t pivot = rank;
        while (pivot < r_ && a.at(pivot, col) == 0) ++pivot;
        if (pivot == r_) continue;
        for (std::size_t j = 0; j < c_; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
        for (std::size_t i = rank + 1; i < r_; ++i) {
            if (a.at(i, col) == 0) continue;
            Rational f = a.at(i, col) / a.at(rank, col);
            for (std::size_t j = col; j < c_; ++j) a.at(i, j) -= f * a.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::optional<RatVec> solveLinear(RatMat a, RatVec b) {
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m) throw std::invalid_argument("rhs length mismatch");
    std::vector<std::size_t> pivotCol;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t pivot = row;
        while (pivot < m && a.at(pivot, col) == 0) ++pivot;
        if (pivot == m) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(row, j));
        std::swap(b[pivot], b[row]);
        Rational p = a.at(row, col);
        for (std::size_t j = 0; j < n; ++j) a.at(row, j) /= p;
        b[row] /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            Rational f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) -= f * a.at(row, j);
            b[i] -= f * b[row];
        }
        pivotCol.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (b[i] != 0) return std::nullopt;
    RatVec x(n, Rational(0));
    for (std::size_t i = 0; i < pivotCol.size(); ++i) x[pivotCol[i]] = b[i];
    return x;
}

} // namespace foxbrack
