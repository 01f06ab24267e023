#pragma once

#include "foxbrack/matrix_hopf.hpp"
#include "foxbrack/report.hpp"
#include "foxbrack/words.hpp"

#include <map>
#include <vector>

namespace foxbrack {

// The axiom checker and convolution machinery are written against a small
// "Hopf context" shape. A context exposes a basis key type plus element
// arithmetic with decidable equality; tensor powers are compared through
// tuple expansions so that quotient bases (where monomial tuples are not
// linearly independent) still get exact equality.

struct AContext {
    const AAlgebra* A;
    using Key = Word;
    using El = AElem;
    using Tensor = LinComb<std::vector<Key>>;

    Key unitKey() const { return A->unitWord(); }
    El keyEl(const Key& k, const Rational& c = Rational(1)) const { return El::term(k, c); }
    LinComb<Key> elTerms(const El& e) const { return e; }
    El zero() const { return {}; }
    El add(const El& a, const El& b) const { return a + b; }
    El scale(const El& a, const Rational& c) const { return a * c; }
    El mul(const El& a, const El& b) const { return A->mul(a, b); }
    bool equal(const El& a, const El& b) const { return a == b; }
    Rational counitKey(const Key& k) const { return A->counit(k); }
    Rational counitEl(const El& e) const { return A->counit(e); }
    El antipodeKey(const Key& k) const { return A->antipode(k); }
    Degree degreeKey(const Key& k) const { return A->degree(k); }
    int keySize(const Key& k) const { return static_cast<int>(k.length()); }
    LinComb<std::pair<Key, Key>> comul(const Key& k) const { return A->comul(k); }
    LinComb<std::vector<Key>> sweedler(const Key& k, int m) const { return A->sweedler(k, m); }
    bool tensorEqual(int, const Tensor& a, const Tensor& b) const { return a == b; }
    std::string printKey(const Key& k) const { return A->printWord(k); }
};

struct BContext {
    const BAlgebra* B;
    using Key = BMono;
    using El = QRing::El;
    using Tensor = LinComb<std::vector<Key>>;

    Key unitKey() const { return BMono{}; }
    El keyEl(const Key& k, const Rational& c = Rational(1)) const { return B->toEl(k, c); }
    LinComb<Key> elTerms(const El& e) const {
        LinComb<Key> out;
        for (const auto& [m, c] : e.num.terms()) out.add(BMono{m, e.pows.empty() ? 0 : e.pows[0]}, c);
        return out;
    }
    El zero() const { return B->ring().zero(); }
    El add(const El& a, const El& b) const { return B->add(a, b); }
    El scale(const El& a, const Rational& c) const { return B->scale(a, c); }
    El mul(const El& a, const El& b) const { return B->mul(a, b); }
    bool equal(const El& a, const El& b) const { return B->equal(a, b); }
    Rational counitKey(const Key& k) const { return B->counit(k); }
    Rational counitEl(const El& e) const { return B->counit(e); }
    El antipodeKey(const Key& k) const { return B->antipode(k); }
    Degree degreeKey(const Key&) const { return 0; }
    int keySize(const Key& k) const { return static_cast<int>(k.m.totalDeg()) + k.upow; }
    LinComb<std::pair<Key, Key>> comul(const Key& k) const {
        LinComb<std::pair<Key, Key>> out;
        for (const auto& [tup, c] : B->sweedler(k, 2)) out.add({tup[0], tup[1]}, c);
        return out;
    }
    LinComb<std::vector<Key>> sweedler(const Key& k, int m) const { return B->sweedler(k, m); }
    bool tensorEqual(int k, const Tensor& a, const Tensor& b) const {
        return B->tensorRing(k).equal(B->embedTensor(k, a), B->embedTensor(k, b));
    }
    std::string printKey(const Key& k) const { return B->printKey(k); }
};

namespace detail {

// distribute a tuple of elements into a tuple-key tensor
template <class Ctx>
typename Ctx::Tensor tensorOf(const Ctx& c, const std::vector<typename Ctx::El>& factors,
                              const Rational& coeff) {
    typename Ctx::Tensor out;
    std::vector<std::pair<std::vector<typename Ctx::Key>, Rational>> partial{{{}, coeff}};
    for (const auto& f : factors) {
        std::vector<std::pair<std::vector<typename Ctx::Key>, Rational>> next;
        for (const auto& [tuple, cc] : partial)
            for (const auto& [k, kc] : c.elTerms(f)) {
                auto t = tuple;
                t.push_back(k);
                next.emplace_back(std::move(t), cc * kc);
            }
        partial = std::move(next);
    }
    for (auto& [tuple, cc] : partial) out.add(std::move(tuple), cc);
    return out;
}

} // namespace detail

struct HopfTestFlags {
    bool cocommutative = false;
    bool commutative = false;
};

// Verifies coassociativity, both counit identities, the antipode identity,
// multiplicativity of the comultiplication, counit/antipode compatibility,
// the antipode flip rule, and any declared (co)commutativity, each on the
// supplied keys (pairwise checks run on pairs whose combined size stays
// within the largest key size in the set).
template <class Ctx>
Report checkHopfAxioms(const Ctx& c, const std::vector<typename Ctx::Key>& keys, HopfTestFlags flags) {
    using Tensor = typename Ctx::Tensor;
    ReportBuilder rb("hopf-axioms");
    int maxSize = 0;
    for (const auto& k : keys) maxSize = std::max(maxSize, c.keySize(k));

    for (const auto& x : keys) {
        auto dx = c.comul(x);
        const std::string w = c.printKey(x);

        // coassociativity via the two bracketings
        Tensor left, right;
        for (const auto& [pr, coeff] : dx.terms()) {
            for (const auto& [pq, c2] : c.comul(pr.first))
                left.add({pq.first, pq.second, pr.second}, coeff * c2);
            for (const auto& [pq, c2] : c.comul(pr.second))
                right.add({pr.first, pq.first, pq.second}, coeff * c2);
        }
        rb.note("coassociativity", c.tensorEqual(3, left, right), w);

        // counit identities
        typename Ctx::El lhs = c.zero(), rhs = c.zero();
        for (const auto& [pr, coeff] : dx.terms()) {
            lhs = c.add(lhs, c.keyEl(pr.second, coeff * c.counitKey(pr.first)));
            rhs = c.add(rhs, c.keyEl(pr.first, coeff * c.counitKey(pr.second)));
        }
        rb.note("counit", c.equal(lhs, c.keyEl(x)) && c.equal(rhs, c.keyEl(x)), w);

        // antipode identity
        typename Ctx::El sa = c.zero(), sb = c.zero();
        for (const auto& [pr, coeff] : dx.terms()) {
            sa = c.add(sa, c.scale(c.mul(c.antipodeKey(pr.first), c.keyEl(pr.second)), coeff));
            sb = c.add(sb, c.scale(c.mul(c.keyEl(pr.first), c.antipodeKey(pr.second)), coeff));
        }
        auto eps1 = c.scale(c.keyEl(c.unitKey()), c.counitKey(x));
        rb.note("antipode", c.equal(sa, eps1) && c.equal(sb, eps1), w);

        // counit of antipode
        rb.note("counit-of-antipode", c.counitEl(c.antipodeKey(x)) == c.counitKey(x), w);

        // flip-antipode rule
        Tensor flipLhs, flipRhs;
        for (const auto& [pr, coeff] : c.elTerms(c.antipodeKey(x)))
            for (const auto& [pq, c2] : c.comul(pr)) flipLhs.add({pq.first, pq.second}, coeff * c2);
        for (const auto& [pr, coeff] : dx.terms()) {
            int sign = koszulSign(c.degreeKey(pr.first), c.degreeKey(pr.second));
            flipRhs.add(detail::tensorOf(c, {c.antipodeKey(pr.second), c.antipodeKey(pr.first)},
                                         coeff * sign));
        }
        rb.note("antipode-flip", c.tensorEqual(2, flipLhs, flipRhs), w);

        if (flags.cocommutative) {
            Tensor straight, flipped;
            for (const auto& [pr, coeff] : dx.terms()) {
                straight.add({pr.first, pr.second}, coeff);
                int sign = koszulSign(c.degreeKey(pr.first), c.degreeKey(pr.second));
                flipped.add({pr.second, pr.first}, coeff * sign);
            }
            rb.note("cocommutativity", c.tensorEqual(2, straight, flipped), w);
        }
    }

    for (const auto& x : keys) {
        for (const auto& y : keys) {
            if (c.keySize(x) + c.keySize(y) > maxSize) continue;
            const std::string w = c.printKey(x) + " , " + c.printKey(y);
            auto xy = c.mul(c.keyEl(x), c.keyEl(y));

            // comultiplication is multiplicative
            Tensor lhs;
            for (const auto& [k, coeff] : c.elTerms(xy))
                for (const auto& [pq, c2] : c.comul(k)) lhs.add({pq.first, pq.second}, coeff * c2);
            Tensor rhs;
            for (const auto& [px, cx] : c.comul(x))
                for (const auto& [py, cy] : c.comul(y)) {
                    int sign = koszulSign(c.degreeKey(py.first), c.degreeKey(px.second));
                    rhs.add(detail::tensorOf(
                        c,
                        {c.mul(c.keyEl(px.first), c.keyEl(py.first)),
                         c.mul(c.keyEl(px.second), c.keyEl(py.second))},
                        cx * cy * sign));
                }
            rb.note("comultiplication-multiplicative", c.tensorEqual(2, lhs, rhs), w);

            // antipode reverses products with the graded sign
            auto sxy = c.zero();
            for (const auto& [k, coeff] : c.elTerms(xy))
                sxy = c.add(sxy, c.scale(c.antipodeKey(k), coeff));
            int sign = koszulSign(c.degreeKey(x), c.degreeKey(y));
            auto rev = c.scale(c.mul(c.antipodeKey(y), c.antipodeKey(x)), Rational(sign));
            rb.note("antipode-antihomomorphism", c.equal(sxy, rev), w);

            if (flags.commutative) {
                auto yx = c.scale(c.mul(c.keyEl(y), c.keyEl(x)), Rational(sign));
                rb.note("commutativity", c.equal(xy, yx), w);
            }
        }
    }
    return rb.take();
}

// Iterated comultiplication is independent of the bracketing used: compares
// the canonical m-fold expansion against (Delta (x) id^(m-2)) Delta and
// (id^(m-2) (x) Delta) Delta for m = 3.
template <class Ctx>
bool checkSweedlerBracketings(const Ctx& c, const typename Ctx::Key& x) {
    using Tensor = typename Ctx::Tensor;
    Tensor canon = c.sweedler(x, 3);
    Tensor viaLeft, viaRight;
    for (const auto& [pr, coeff] : c.comul(x)) {
        for (const auto& [pq, c2] : c.comul(pr.first))
            viaLeft.add({pq.first, pq.second, pr.second}, coeff * c2);
        for (const auto& [pq, c2] : c.comul(pr.second))
            viaRight.add({pr.first, pq.first, pq.second}, coeff * c2);
    }
    return c.tensorEqual(3, canon, viaLeft) && c.tensorEqual(3, canon, viaRight);
}

// Convolution algebra H_B(C): linear maps from a coalgebra context to a
// target algebra context, tabulated on a finite working basis.
template <class SrcCtx, class TgtCtx>
struct ConvolutionMap {
    std::map<typename SrcCtx::Key, typename TgtCtx::El> table;

    typename TgtCtx::El apply(const SrcCtx&, const TgtCtx& t, const typename SrcCtx::Key& k) const {
        auto it = table.find(k);
        if (it == table.end()) throw std::out_of_range("key outside the working basis");
        return it->second;
    }
};

template <class SrcCtx, class TgtCtx>
ConvolutionMap<SrcCtx, TgtCtx> convolve(const SrcCtx& s, const TgtCtx& t,
                                        const ConvolutionMap<SrcCtx, TgtCtx>& f,
                                        const ConvolutionMap<SrcCtx, TgtCtx>& g) {
    ConvolutionMap<SrcCtx, TgtCtx> out;
    for (const auto& [key, unused] : f.table) {
        auto acc = t.zero();
        for (const auto& [pr, coeff] : s.comul(key))
            acc = t.add(acc, t.scale(t.mul(f.apply(s, t, pr.first), g.apply(s, t, pr.second)), coeff));
        out.table[key] = acc;
    }
    return out;
}

// unit of the convolution algebra: eps_B * 1_C
template <class SrcCtx, class TgtCtx>
ConvolutionMap<SrcCtx, TgtCtx> convolutionUnit(const SrcCtx& s, const TgtCtx& t,
                                               const std::vector<typename SrcCtx::Key>& basis) {
    ConvolutionMap<SrcCtx, TgtCtx> out;
    for (const auto& k : basis) out.table[k] = t.scale(t.keyEl(t.unitKey()), s.counitKey(k));
    return out;
}

// the ground ring as a target algebra
struct ScalarContext {
    using Key = int;
    using El = Rational;
    Key unitKey() const { return 0; }
    El keyEl(const Key&, const Rational& c = Rational(1)) const { return c; }
    El zero() const { return Rational(0); }
    El add(const El& a, const El& b) const { return a + b; }
    El scale(const El& a, const Rational& c) const { return a * c; }
    El mul(const El& a, const El& b) const { return a * b; }
    bool equal(const El& a, const El& b) const { return a == b; }
};

} // namespace foxbrack
