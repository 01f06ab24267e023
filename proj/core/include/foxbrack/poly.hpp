#pragma once

#include "foxbrack/grading.hpp"
#include "foxbrack/lincomb.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace foxbrack {

// Ordered variable registry. Each variable carries a degree; odd-degree
// variables anticommute and square to zero.
class VarPool {
public:
    int add(std::string name, Degree degree = 0);
    int size() const { return static_cast<int>(vars_.size()); }
    const std::string& name(int v) const { return vars_[static_cast<std::size_t>(v)].name; }
    Degree degree(int v) const { return vars_[static_cast<std::size_t>(v)].degree; }
    bool odd(int v) const { return degree(v) % 2 != 0; }

private:
    struct Var {
        std::string name;
        Degree degree;
    };
    std::vector<Var> vars_;
};

// Graded-commutative monomial in normal form: factors sorted by variable
// index, exponents positive, odd variables with exponent <= 1. The sign
// accumulated while sorting is reported by mul(), not stored.
struct Mono {
    std::vector<std::pair<std::int32_t, std::int32_t>> f; // (var, exp)

    bool isOne() const { return f.empty(); }
    long totalDeg() const;
    Degree gradedDeg(const VarPool& pool) const;
    int exponentOf(int var) const;

    // nullopt when the product vanishes (square of an odd variable);
    // otherwise (sign, normal-form monomial).
    static std::optional<std::pair<int, Mono>> mul(const Mono& a, const Mono& b, const VarPool& pool);

    // Divisibility/quotient in the even commutative sense; also valid when
    // the dividend carries odd factors the divisor lacks.
    bool divisibleBy(const Mono& d) const;
    Mono dividedBy(const Mono& d) const;

    bool operator==(const Mono&) const = default;
    std::string str(const VarPool& pool) const;
};

// Degree-reverse-lexicographic order, descending (leading monomial first).
struct DegRevLexGreater {
    bool operator()(const Mono& a, const Mono& b) const;
};

using Poly = LinComb<Mono, DegRevLexGreater>;

Poly polyVar(int var);
Poly polyConst(const Rational& c);
Poly polyMul(const Poly& a, const Poly& b, const VarPool& pool);
Poly polyMulMono(const Poly& a, const Mono& m, const Rational& c, const VarPool& pool);
Degree polyGradedDeg(const Poly& p, const VarPool& pool); // throws if inhomogeneous
Rational polyEval(const Poly& p, std::span<const Rational> point);
std::string polyStr(const Poly& p, const VarPool& pool);

} // namespace foxbrack
