#pragma once

#include "foxbrack/groebner.hpp"

#include <span>
#include <string>
#include <vector>

namespace foxbrack {

// Graded-commutative polynomial ring over Q, optionally cut by a Groebner
// ideal (even variables only) or localized at a list of pairwise-coprime
// determinant polynomials in disjoint even variables. Elements are kept in a
// canonical form, so equality is a plain comparison. The two quotient
// mechanisms are not combined in one ring.
class QRing {
public:
    VarPool vars;
    std::vector<Poly> invDets; // localized elements (monic leads)
    GroebnerBasis gb;

    // num / prod_i invDets[i]^pows[i]; canonical when num is reduced and not
    // exactly divisible by any det with a positive recorded power.
    struct El {
        Poly num;
        std::vector<int> pows;

        bool isZero() const { return num.isZero(); }
        bool operator==(const El&) const = default;
    };

    void freeze(); // call once vars/invDets/gb are set

    El zero() const { return El{{}, noPows()}; }
    El one() const { return constant(Rational(1)); }
    El constant(const Rational& c) const { return canonical(El{polyConst(c), noPows()}); }
    El fromPoly(Poly p) const { return canonical(El{std::move(p), noPows()}); }
    El variable(int v) const { return fromPoly(polyVar(v)); }
    // 1 / invDets[i]
    El detInverse(int i) const;

    El add(const El& a, const El& b) const;
    El sub(const El& a, const El& b) const;
    El mul(const El& a, const El& b) const;
    El scale(const El& a, const Rational& c) const;
    El canonical(El e) const;

    bool equal(const El& a, const El& b) const { return canonical(a) == canonical(b); }

    // graded degree of a homogeneous element (dets are even); throws if mixed
    Degree degreeOf(const El& e) const;

    // substitute values for all variables; det values must be nonzero when a
    // positive power is recorded
    Rational evalAt(const El& e, std::span<const Rational> point) const;

    std::string str(const El& e) const;

private:
    std::vector<int> noPows() const { return std::vector<int>(invDets.size(), 0); }
    bool frozen_ = false;
};

} // namespace foxbrack
