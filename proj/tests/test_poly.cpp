#include <doctest.h>

#include "foxbrack/groebner.hpp"
#include "foxbrack/qring.hpp"

using namespace foxbrack;

namespace {

// little helper ring: commuting variables x0..x{n-1}
struct Ring {
    VarPool pool;
    std::vector<int> v;
    explicit Ring(int n, Degree deg = 0) {
        for (int i = 0; i < n; ++i) v.push_back(pool.add("x" + std::to_string(i), deg));
    }
    Poly var(int i) const { return polyVar(v[static_cast<std::size_t>(i)]); }
};

} // namespace

TEST_CASE("monomial multiplication and graded signs") {
    VarPool pool;
    int v = pool.add("v", 1);
    int w = pool.add("w", 1);
    int x = pool.add("x", 0);

    Mono mv{{{v, 1}}}, mw{{{w, 1}}}, mx{{{x, 2}}};
    auto wv = Mono::mul(mw, mv, pool);
    REQUIRE(wv.has_value());
    CHECK(wv->first == -1);
    CHECK(wv->second == Mono{{{v, 1}, {w, 1}}});

    auto vw = Mono::mul(mv, mw, pool);
    CHECK(vw->first == 1);

    CHECK(!Mono::mul(mv, mv, pool).has_value()); // v^2 = 0

    auto xv = Mono::mul(mx, mv, pool);
    CHECK(xv->first == 1);

    // poly level: v*w + w*v = 0
    Poly pv = polyVar(v), pw = polyVar(w);
    CHECK((polyMul(pv, pw, pool) + polyMul(pw, pv, pool)).isZero());
    CHECK(polyMul(pv, pv, pool).isZero());
}

TEST_CASE("degrevlex orders by total degree then reverse lex") {
    DegRevLexGreater gt;
    Mono one;
    Mono x0{{{0, 1}}}, x1{{{1, 1}}};
    Mono x0x0{{{0, 2}}}, x0x1{{{0, 1}, {1, 1}}};
    CHECK(gt(x0, one));
    CHECK(gt(x0, x1));
    CHECK(gt(x0x0, x0x1));
    CHECK(!gt(x0, x0));
}

TEST_CASE("reduction examples") {
    Ring r(4);
    // det - 1 for a 2x2 matrix x0 x1 / x2 x3
    Poly det = polyMul(r.var(0), r.var(3), r.pool) - polyMul(r.var(1), r.var(2), r.pool);
    GroebnerBasis g{{det - polyConst(Rational(1))}};
    CHECK(reduce(det, g, r.pool) == polyConst(Rational(1)));

    // empty basis: identity
    Poly p = r.var(0) + polyConst(Rational(2));
    CHECK(reduce(p, GroebnerBasis{}, r.pool) == p);

    // additivity / multiplicativity of normal forms
    Poly q = polyMul(r.var(1), r.var(2), r.pool) - polyConst(Rational(5));
    CHECK(reduce(p + q, g, r.pool) == reduce(p, g, r.pool) + reduce(q, g, r.pool));
    CHECK(reduce(polyMul(p, q, r.pool), g, r.pool) ==
          reduce(polyMul(reduce(p, g, r.pool), reduce(q, g, r.pool), r.pool), g, r.pool));
}

TEST_CASE("orthogonal relations reduce the transpose relations to zero") {
    Ring r(4); // t11 t12 t21 t22
    auto mul = [&](const Poly& a, const Poly& b) { return polyMul(a, b, r.pool); };
    std::vector<Poly> rels{
        mul(r.var(0), r.var(0)) + mul(r.var(1), r.var(1)) - polyConst(Rational(1)),
        mul(r.var(0), r.var(2)) + mul(r.var(1), r.var(3)),
        mul(r.var(2), r.var(2)) + mul(r.var(3), r.var(3)) - polyConst(Rational(1)),
    };
    auto g = buchberger(rels, r.pool);
    CHECK(selfCheck(g, r.pool));
    // row relations of the transpose
    CHECK(reduce(mul(r.var(0), r.var(0)) + mul(r.var(2), r.var(2)) - polyConst(Rational(1)), g, r.pool).isZero());
    CHECK(reduce(mul(r.var(0), r.var(1)) + mul(r.var(2), r.var(3)), g, r.pool).isZero());
    CHECK(reduce(mul(r.var(1), r.var(1)) + mul(r.var(3), r.var(3)) - polyConst(Rational(1)), g, r.pool).isZero());
    // paper value: t11^2 + t12^2 reduces to 1
    CHECK(reduce(mul(r.var(0), r.var(0)) + mul(r.var(1), r.var(1)), g, r.pool) == polyConst(Rational(1)));
}

TEST_CASE("buchberger basics") {
    Ring r(8);
    auto mul = [&](const Poly& a, const Poly& b) { return polyMul(a, b, r.pool); };
    // single polynomial is its own (monic) basis
    Poly p = mul(r.var(0), r.var(3)) - mul(r.var(1), r.var(2)) - polyConst(Rational(1));
    auto g1 = buchberger({p * Rational(3)}, r.pool);
    CHECK(g1.polys.size() == 1);
    CHECK(g1.polys[0] == p * (Rational(1) / p.begin()->second) * Rational(3) * (Rational(1) / Rational(3)));

    // two dets in disjoint variables: untouched
    Poly d1 = mul(r.var(0), r.var(3)) - mul(r.var(1), r.var(2)) - polyConst(Rational(1));
    Poly d2 = mul(r.var(4), r.var(7)) - mul(r.var(5), r.var(6)) - polyConst(Rational(1));
    auto g2 = buchberger({d1, d2}, r.pool);
    CHECK(g2.polys.size() == 2);
    CHECK(selfCheck(g2, r.pool));

    // budget failure is loud
    Ring s(3);
    auto sm = [&](const Poly& a, const Poly& b) { return polyMul(a, b, s.pool); };
    std::vector<Poly> hard{sm(s.var(0), s.var(1)) - s.var(2), sm(s.var(1), s.var(2)) - s.var(0),
                           sm(s.var(0), s.var(2)) - s.var(1)};
    CHECK_THROWS_AS(buchberger(hard, s.pool, 1), BuchbergerBudgetExceeded);

    // odd variables rejected
    VarPool odd;
    int v = odd.add("v", 1);
    CHECK_THROWS(buchberger({polyVar(v)}, odd));
}

TEST_CASE("localization canonical form") {
    QRing ring;
    int a = ring.vars.add("a", 0), b = ring.vars.add("b", 0), c = ring.vars.add("c", 0), d = ring.vars.add("d", 0);
    Poly det = polyMul(polyVar(a), polyVar(d), ring.vars) - polyMul(polyVar(b), polyVar(c), ring.vars);
    ring.invDets.push_back(det);
    ring.freeze();

    // det * u = 1
    auto e = ring.mul(ring.fromPoly(det), ring.detInverse(0));
    CHECK(e == ring.one());

    // det^2 * u = det (power drops to zero)
    auto e2 = ring.mul(ring.fromPoly(polyMul(det, det, ring.vars)), ring.detInverse(0));
    CHECK(e2 == ring.fromPoly(det));
    CHECK(e2.pows[0] == 0);

    // an uncancellable numerator is untouched
    auto e3 = ring.fromPoly(polyVar(a));
    CHECK(ring.canonical(e3) == e3);

    // canonical form is idempotent and multiplicative
    auto x = ring.mul(ring.add(ring.fromPoly(polyVar(a)), ring.detInverse(0)), ring.detInverse(0));
    CHECK(ring.canonical(x) == x);
    auto y = ring.fromPoly(polyVar(b) + polyVar(d));
    CHECK(ring.mul(ring.canonical(x), ring.canonical(y)) == ring.canonical(ring.mul(x, y)));

    // localized equality: a*u == a*u even after multiplying through by det
    auto lhs = ring.mul(ring.fromPoly(polyVar(a)), ring.detInverse(0));
    auto viaDet = ring.mul(ring.mul(lhs, ring.fromPoly(det)), ring.detInverse(0));
    CHECK(ring.equal(lhs, viaDet));
}
