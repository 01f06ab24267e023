#pragma once

#include "foxbrack/poly.hpp"

#include <stdexcept>
#include <vector>

namespace foxbrack {

struct BuchbergerBudgetExceeded : std::runtime_error {
    explicit BuchbergerBudgetExceeded(long budget)
        : std::runtime_error("Buchberger pair budget exceeded (" + std::to_string(budget) + ")") {}
};

// Generating set with the property that reduction gives a normal form
// (all S-polynomial remainders vanish). Monomial order: degrevlex over the
// pool's fixed variable order.
struct GroebnerBasis {
    std::vector<Poly> polys;
};

// Full normal form of p modulo the basis: every monomial irreducible.
Poly reduce(const Poly& p, const GroebnerBasis& g, const VarPool& pool);

// Exact division p = q * d; returns false (q unspecified) if d does not
// divide p. d must have an invertible (rational) leading coefficient and
// even-degree variables only.
bool tryDivideExact(const Poly& p, const Poly& d, const VarPool& pool, Poly& q);

// Buchberger's algorithm with a hard pair budget; result is the reduced
// basis (monic, pairwise irreducible leads, tails fully reduced).
GroebnerBasis buchberger(std::vector<Poly> generators, const VarPool& pool, long maxPairs = 100000);

// Recomputes every S-polynomial remainder; true iff all reduce to zero.
bool selfCheck(const GroebnerBasis& g, const VarPool& pool);

} // namespace foxbrack
