#pragma once

#include "foxbrack/rational.hpp"

#include <optional>
#include <vector>

namespace foxbrack {

using RatVec = std::vector<Rational>;

// Dense rational matrix, just big enough for I/I^2 computations and small
// linear solves. All arithmetic exact.
class RatMat {
public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    RatMat transposed() const;
    static RatMat identity(std::size_t n);
    RatMat operator*(const RatMat& o) const;
    RatVec apply(const RatVec& v) const;

    // Gauss-Jordan; nullopt when singular.
    std::optional<RatMat> inverse() const;
    std::size_t rank() const;

    bool operator==(const RatMat&) const = default;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

Rational dot(const RatVec& a, const RatVec& b);

// Least-structure linear solve A x = b; nullopt when inconsistent. Extra
// degrees of freedom are set to zero.
std::optional<RatVec> solveLinear(RatMat a, RatVec b);

} // namespace foxbrack
