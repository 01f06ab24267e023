#pragma once

#include "foxbrack/lincomb.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace foxbrack {

using Degree = int;

// Sign incurred by moving a block of homogeneous factors (right) past another
// block (left): (-1)^{sum(left) * sum(right)}.
inline int koszulSign(std::span<const Degree> left, std::span<const Degree> right) {
    long l = std::accumulate(left.begin(), left.end(), 0L);
    long r = std::accumulate(right.begin(), right.end(), 0L);
    return ((l * r) % 2 != 0) ? -1 : 1;
}

inline int koszulSign(Degree left, Degree right) {
    return ((static_cast<long>(left) * right) % 2 != 0) ? -1 : 1;
}

// One of the six permutations of (1,2,3) together with a degree shift n.
// Applied to a homogeneous tritensor x1 (x) x2 (x) x3 it yields
// (-1)^t x_{i1} (x) x_{i2} (x) x_{i3} where t sums |x_{ip}|_n |x_{iq}|_n over
// inverted pairs p<q, i_p>i_q (shift 0 gives the unshifted signs).
struct GradedPermutation {
    std::array<int, 3> images; // 1-based: output slot p holds input factor images[p-1]
    int shift = 0;

    static GradedPermutation make(int i1, int i2, int i3, int n = 0) {
        GradedPermutation p{{i1, i2, i3}, n};
        std::array<bool, 3> seen{};
        for (int v : p.images) {
            if (v < 1 || v > 3 || seen[v - 1]) throw std::invalid_argument("not a permutation of (1,2,3)");
            seen[v - 1] = true;
        }
        return p;
    }

    GradedPermutation inverse() const {
        GradedPermutation inv{{0, 0, 0}, shift};
        for (int p = 0; p < 3; ++p) inv.images[images[p] - 1] = p + 1;
        return inv;
    }

    int sign(const std::array<Degree, 3>& degs) const {
        long t = 0;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q)
                if (images[p] > images[q])
                    t += static_cast<long>(degs[images[p] - 1] + shift) *
                         (degs[images[q] - 1] + shift);
        return (t % 2 != 0) ? -1 : 1;
    }
};

// Reorders the factors of every term, multiplying by the graded sign. The
// degree of each tensor factor is supplied by the caller; keys must be
// homogeneous.
template <class K, class Comp>
LinComb<std::array<K, 3>, Comp> gradedPermute(const GradedPermutation& p,
                                              const LinComb<std::array<K, 3>, Comp>& t,
                                              const std::function<Degree(const K&)>& degree) {
    LinComb<std::array<K, 3>, Comp> out;
    for (const auto& [key, c] : t.terms()) {
        std::array<Degree, 3> degs{degree(key[0]), degree(key[1]), degree(key[2])};
        std::array<K, 3> moved{key[p.images[0] - 1], key[p.images[1] - 1], key[p.images[2] - 1]};
        out.add(moved, c * p.sign(degs));
    }
    return out;
}

} // namespace foxbrack
