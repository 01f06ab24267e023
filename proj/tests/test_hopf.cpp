#include <doctest.h>

#include "foxbrack/hopf.hpp"

using namespace foxbrack;

TEST_CASE("free group words") {
    auto A = AAlgebra::freeGroup(2);
    Word a = A.generator(0), b = A.generator(1);
    Word ab = A.mulWords(a, b);
    CHECK(A.printWord(ab) == "a.b");
    CHECK(A.mulWords(ab, A.inverseWord(ab)) == A.unitWord());
    CHECK(A.antipode(ab) == AElem::term(A.mulWords(A.inverseWord(b), A.inverseWord(a))));
    CHECK(A.counit(ab) == 1);
    // group-likes: m-fold expansion is the diagonal
    auto s3 = A.sweedler(ab, 3);
    CHECK(s3.size() == 1);
    CHECK(s3.coeff(std::vector<Word>{ab, ab, ab}) == 1);
}

TEST_CASE("tensor algebra comultiplication and antipode") {
    auto A = AAlgebra::tensorAlgebra({"v", "w"});
    Word v = A.generator(0), w = A.generator(1);
    Word vw = A.mulWords(v, w);

    // primitive generator
    auto dv = A.comul(v);
    CHECK(dv.coeff({v, A.unitWord()}) == 1);
    CHECK(dv.coeff({A.unitWord(), v}) == 1);
    CHECK(dv.size() == 2);

    // product of two odd letters: vw (x) 1 + v (x) w - w (x) v + 1 (x) vw
    auto dvw = A.comul(vw);
    CHECK(dvw.coeff({vw, A.unitWord()}) == 1);
    CHECK(dvw.coeff({v, w}) == 1);
    CHECK(dvw.coeff({w, v}) == -1);
    CHECK(dvw.coeff({A.unitWord(), vw}) == 1);

    // antipode: s(vw) = -wv
    CHECK(A.antipode(vw) == AElem::term(A.mulWords(w, v), Rational(-1)));
    // involutivity on a sample of words
    for (const auto& word : A.wordsUpTo(3)) {
        AElem ss;
        for (const auto& [k, c] : A.antipode(word)) ss.add(A.antipode(k) * c);
        CHECK(ss == AElem::term(word));
    }
}

TEST_CASE("hopf axioms for the free group algebra") {
    auto A = AAlgebra::freeGroup(2);
    AContext ctx{&A};
    auto rep = checkHopfAxioms(ctx, A.wordsUpTo(3), {.cocommutative = true, .commutative = false});
    for (const auto& c : rep.checks) {
        INFO(c.name, " witness: ", c.witness);
        CHECK(c.pass);
    }
    for (const auto& w : A.wordsUpTo(3)) CHECK(checkSweedlerBracketings(ctx, w));
}

TEST_CASE("hopf axioms for the tensor algebra") {
    auto A = AAlgebra::tensorAlgebra({"v", "w"});
    AContext ctx{&A};
    auto rep = checkHopfAxioms(ctx, A.wordsUpTo(3), {.cocommutative = true, .commutative = false});
    for (const auto& c : rep.checks) {
        INFO(c.name, " witness: ", c.witness);
        CHECK(c.pass);
    }
    for (const auto& w : A.wordsUpTo(3)) CHECK(checkSweedlerBracketings(ctx, w));
}

TEST_CASE("matrix coalgebra comultiplication matches the path expansion") {
    BAlgebra B(MatrixKind::GL, 2);
    // Delta(t_{11}) = t_{11} (x) t_{11} + t_{12} (x) t_{21}
    auto d = B.sweedler(BMono{Mono{{{B.tvarIndex(0, 0), 1}}}, 0}, 2);
    CHECK(d.size() == 2);
    CHECK(d.coeff({BMono{Mono{{{B.tvarIndex(0, 0), 1}}}, 0}, BMono{Mono{{{B.tvarIndex(0, 0), 1}}}, 0}}) == 1);
    CHECK(d.coeff({BMono{Mono{{{B.tvarIndex(0, 1), 1}}}, 0}, BMono{Mono{{{B.tvarIndex(1, 0), 1}}}, 0}}) == 1);
}

TEST_CASE("convolution algebra") {
    BAlgebra B(MatrixKind::GL, 2);
    BContext ctx{&B};
    auto basis = B.basisMonomials(2);

    // identity and antipode as tabulated maps
    ConvolutionMap<BContext, BContext> id, s;
    for (const auto& k : basis) {
        id.table[k] = ctx.keyEl(k);
        s.table[k] = B.antipode(k);
    }
    auto unit = convolutionUnit(ctx, ctx, basis);

    // f * unit = f
    auto fu = convolve(ctx, ctx, id, unit);
    for (const auto& k : basis) CHECK(B.equal(fu.table.at(k), id.table.at(k)));

    // id * s = eps . 1
    auto is = convolve(ctx, ctx, id, s);
    for (const auto& k : basis) CHECK(B.equal(is.table.at(k), B.scale(B.one(), B.counit(k))));

    // point evaluations on a group algebra multiply on group-likes
    auto A = AAlgebra::freeGroup(1);
    AContext actx{&A};
    ScalarContext k;
    ConvolutionMap<AContext, ScalarContext> f, g;
    std::vector<Word> words = A.wordsUpTo(2);
    for (const auto& w : words) {
        f.table[w] = Rational(2 + static_cast<int>(w.length()));
        g.table[w] = Rational(1) / Rational(1 + static_cast<int>(w.length()));
    }
    auto fg = convolve(actx, k, f, g);
    for (const auto& w : words) CHECK(fg.table.at(w) == f.table.at(w) * g.table.at(w));
}
