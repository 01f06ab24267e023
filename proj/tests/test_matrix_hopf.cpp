#include <doctest.h>

#include "foxbrack/hopf.hpp"

using namespace foxbrack;

TEST_CASE("antipode values per variant") {
    BAlgebra GL(MatrixKind::GL, 2);
    CHECK(GL.equal(GL.antipode(GL.u()), GL.det()));
    // s(t11) = u * t22
    CHECK(GL.equal(GL.antipodeT(0, 0), GL.mul(GL.u(), GL.t(1, 1))));
    CHECK(GL.equal(GL.antipodeT(0, 1), GL.scale(GL.mul(GL.u(), GL.t(0, 1)), Rational(-1))));

    BAlgebra SL(MatrixKind::SL, 2);
    CHECK(SL.equal(SL.antipodeT(0, 0), SL.t(1, 1)));
    CHECK(SL.equal(SL.antipodeT(0, 1), SL.scale(SL.t(0, 1), Rational(-1))));
    CHECK(SL.equal(SL.antipodeT(1, 0), SL.scale(SL.t(1, 0), Rational(-1))));

    BAlgebra O(MatrixKind::O, 2);
    CHECK(O.equal(O.antipodeT(0, 1), O.t(1, 0)));
    CHECK(O.equal(O.antipodeT(1, 0), O.t(0, 1)));
}

TEST_CASE("trace element") {
    BAlgebra GL2(MatrixKind::GL, 2);
    CHECK(GL2.equal(GL2.trace(), GL2.add(GL2.t(0, 0), GL2.t(1, 1))));
    BAlgebra GL1(MatrixKind::GL, 1);
    CHECK(GL1.equal(GL1.trace(), GL1.t(0, 0)));
    BAlgebra O3(MatrixKind::O, 3);
    CHECK(O3.equal(O3.trace(), O3.add(O3.add(O3.t(0, 0), O3.t(1, 1)), O3.t(2, 2))));
}

TEST_CASE("cosymmetric elements") {
    BAlgebra B(MatrixKind::GL, 2);
    CHECK(B.isCosymmetric(B.trace()));
    CHECK(!B.isCosymmetric(B.t(0, 1)));
    CHECK(B.isCosymmetric(B.one()));
    CHECK(B.isCosymmetric(B.antipode(B.trace()))); // s(t) is cosymmetric too
}

TEST_CASE("SL normal form identifies det with 1") {
    BAlgebra SL(MatrixKind::SL, 2);
    CHECK(SL.equal(SL.det(), SL.one()));
}

TEST_CASE("O transpose relations hold in the quotient") {
    for (int N : {2, 3}) {
        BAlgebra O(MatrixKind::O, N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                auto rel = O.constant(Rational(i == j ? -1 : 0));
                for (int k = 0; k < N; ++k) rel = O.add(rel, O.mul(O.t(k, i), O.t(k, j)));
                CHECK(O.equal(rel, O.ring().zero()));
            }
    }
}

TEST_CASE("psi matrix values") {
    // GL: tau*_{ij} -> tau_{ji}: a permutation matrix
    BAlgebra GL(MatrixKind::GL, 2);
    auto psi = GL.psiMatrix(GL.trace());
    const int n = 2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    CHECK(psi.at(static_cast<std::size_t>(k * n + l), static_cast<std::size_t>(i * n + j)) ==
                          Rational((k == j && l == i) ? 1 : 0));
    CHECK(psi.inverse().has_value());

    // SL_2: tau*_{00} -> tau_{00} + sum_{j<N-1} tau_{jj} = 2 tau_{00} here
    BAlgebra SL(MatrixKind::SL, 2);
    auto psiSL = SL.psiMatrix(SL.trace());
    CHECK(psiSL.inverse().has_value());
    // basis order: (0,1),(1,0),(0,0)
    RatVec mu(3, Rational(0));
    mu[2] = 1; // tau*_{00}
    auto img = psiSL.apply(mu);
    CHECK(img[0] == 0);
    CHECK(img[1] == 0);
    CHECK(img[2] == 2);

    // O_N: tau*_{ij} -> -2 tau_{ij}
    for (int N : {2, 3}) {
        BAlgebra O(MatrixKind::O, N);
        auto psiO = O.psiMatrix(O.trace());
        auto d = static_cast<std::size_t>(O.iqDim());
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) CHECK(psiO.at(a, b) == Rational(a == b ? -2 : 0));
    }
}

TEST_CASE("hopf axioms for small matrix algebras") {
    for (auto kind : {MatrixKind::GL, MatrixKind::SL, MatrixKind::O}) {
        BAlgebra B(kind, 2);
        BContext ctx{&B};
        auto keys = B.basisMonomials(2);
        auto rep = checkHopfAxioms(ctx, keys, {.cocommutative = false, .commutative = true});
        for (const auto& c : rep.checks) {
            INFO(to_string(kind), ": ", c.name, " witness: ", c.witness);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("GL_1 is cocommutative") {
    BAlgebra B(MatrixKind::GL, 1);
    BContext ctx{&B};
    auto rep = checkHopfAxioms(ctx, B.basisMonomials(3), {.cocommutative = true, .commutative = true});
    for (const auto& c : rep.checks) {
        INFO(c.name, " witness: ", c.witness);
        CHECK(c.pass);
    }
}
