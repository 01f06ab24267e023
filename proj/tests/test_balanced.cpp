#include <doctest.h>

#include "foxbrack/balanced.hpp"

using namespace foxbrack;

TEST_CASE("trace-induced tables match the closed expressions") {
    for (int N : {2, 3}) {
        BAlgebra GL(MatrixKind::GL, N);
        TraceLikeForm fGL(GL, GL.trace());
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k)
                    for (int l = 0; l < N; ++l)
                        CHECK(fGL.bullet(GL.t(i, j), GL.t(k, l)) ==
                              Rational((i == l && j == k) ? 1 : 0));

        BAlgebra SL(MatrixKind::SL, N);
        TraceLikeForm fSL(SL, SL.trace());
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k)
                    for (int l = 0; l < N; ++l)
                        CHECK(fSL.bullet(SL.t(i, j), SL.t(k, l)) ==
                              Rational((i == l && j == k) ? 1 : 0) -
                                  Rational((i == j && k == l) ? 1 : 0) / N);

        BAlgebra O(MatrixKind::O, N);
        TraceLikeForm fO(O, O.trace());
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k)
                    for (int l = 0; l < N; ++l)
                        CHECK(fO.bullet(O.t(i, j), O.t(k, l)) ==
                              (Rational((i == l && j == k) ? 1 : 0) -
                               Rational((i == k && j == l) ? 1 : 0)) /
                                  2);
    }
}

TEST_CASE("specific bullet values") {
    BAlgebra SL(MatrixKind::SL, 2);
    TraceLikeForm fSL(SL, SL.trace());
    CHECK(fSL.bullet(SL.t(0, 0), SL.t(0, 0)) == Rational(1, 2));

    BAlgebra O(MatrixKind::O, 2);
    TraceLikeForm fO(O, O.trace());
    CHECK(fO.bullet(O.t(0, 1), O.t(1, 0)) == Rational(1, 2));

    BAlgebra GL(MatrixKind::GL, 2);
    TraceLikeForm fGL(GL, GL.trace());
    CHECK(fGL.bullet(GL.trace(), GL.trace()) == 2);
    // 1_B annihilates
    CHECK(fGL.bullet(GL.one(), GL.t(0, 1)) == 0);
}

TEST_CASE("bullets identity and antipode stability") {
    for (auto kind : {MatrixKind::GL, MatrixKind::SL, MatrixKind::O}) {
        BAlgebra B(kind, 2);
        TraceLikeForm f(B, B.trace());
        // b . c = (b . t')(c . t'')
        for (const auto& bk : B.basisMonomials(1)) {
            for (const auto& ck : B.basisMonomials(1)) {
                Rational lhs = f.bullet(B.toEl(bk), B.toEl(ck));
                Rational rhs(0);
                for (const auto& [tp, c] : B.sweedler(B.trace(), 2))
                    rhs += c * f.bullet(B.toEl(bk), B.toEl(tp[0])) * f.bullet(B.toEl(ck), B.toEl(tp[1]));
                CHECK(lhs == rhs);
            }
        }
        // the form induced by s(t) is the same
        TraceLikeForm fs(B, B.antipode(B.trace()));
        CHECK(f.form().iqTable() == fs.form().iqTable());
    }
}

TEST_CASE("balanced checks pass for trace forms and fail for corrupted tables") {
    BAlgebra B(MatrixKind::GL, 2);
    TraceLikeForm f(B, B.trace());
    auto keys = B.basisMonomials(1); // 1, t_{ij}, u
    auto rep = checkBalanced(f.form(), keys);
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.witness);
        CHECK(c.pass);
    }

    // zero form is balanced
    Biderivation zero(B, RatMat(4, 4));
    CHECK(checkBalanced(zero, keys).allPass());

    // asymmetric table fails with a witness
    RatMat badTable(4, 4);
    badTable.at(0, 1) = 1;
    Biderivation bad(B, badTable);
    auto repBad = checkBalanced(bad, keys);
    bool symFails = false;
    for (const auto& c : repBad.checks)
        if (c.name == "symmetry" && !c.pass && !c.witness.empty()) symFails = true;
    CHECK(symFails);
}

TEST_CASE("trace-like certification rejects bad elements") {
    BAlgebra B(MatrixKind::GL, 2);
    CHECK_THROWS_WITH_AS(TraceLikeForm(B, B.t(0, 1)), doctest::Contains("cosymmetric"),
                         TraceLikeError);
    CHECK_THROWS_WITH_AS(TraceLikeForm(B, B.one()), doctest::Contains("nonsingular"), TraceLikeError);
}

TEST_CASE("wedge: the two defining expressions agree") {
    for (auto kind : {MatrixKind::GL, MatrixKind::SL, MatrixKind::O}) {
        BAlgebra B(kind, 2);
        TraceLikeForm f(B, B.trace());
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) {
                        auto w1 = wedge(f.form(), B.t(i, j), B.t(k, l));
                        auto w2 = wedgeAlt(f.form(), B.t(i, j), B.t(k, l));
                        CHECK(B.equal(w1, w2));
                    }
        // b v 1 = 0
        CHECK(wedge(f.form(), B.t(0, 0), B.one()).isZero());
    }
}

TEST_CASE("cyclic forms on the matrix coalgebra") {
    BAlgebra B(MatrixKind::GL, 2);
    // flip pairing delta_{il} delta_{jk} is cyclic
    RatMat flip(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) flip.at(static_cast<std::size_t>(i * 2 + j), static_cast<std::size_t>(j * 2 + i)) = 1;
    CHECK(checkCyclic(B, flip));

    // zero form is cyclic
    CHECK(checkCyclic(B, RatMat(4, 4)));

    // the non-flip pairing delta_{ik} delta_{jl} is not
    CHECK(!checkCyclic(B, RatMat::identity(4)));

    // the restriction of the trace form to the t-span is cyclic
    TraceLikeForm f(B, B.trace());
    RatMat restricted(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    restricted.at(static_cast<std::size_t>(i * 2 + j), static_cast<std::size_t>(k * 2 + l)) =
                        f.bullet(B.t(i, j), B.t(k, l));
    CHECK(checkCyclic(B, restricted));
}
