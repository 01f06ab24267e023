#include <doctest.h>

#include "foxbrack/grading.hpp"
#include "foxbrack/lincomb.hpp"
#include "foxbrack/rational.hpp"

#include <random>

using namespace foxbrack;

TEST_CASE("rational parsing and printing") {
    CHECK(toString(parseRational("3/6")) == "1/2");
    CHECK(toString(parseRational("-4/2")) == "-2");
    CHECK(toString(Rational(0)) == "0");
    CHECK(parseRational("2/3") + parseRational("1/6") == parseRational("5/6"));
    CHECK_THROWS(parseRational("x"));
    CHECK_THROWS(parseRational("1/0"));
}

TEST_CASE("lincomb basics") {
    using L = LinComb<std::string>;
    L a = L::term("k1", Rational(2));
    a.add("k1", Rational(-2));
    CHECK(a.isZero());

    L b = L::term("k1") + L::term("k2");
    CHECK(b.size() == 2);
    CHECK(b.coeff("k1") == 1);

    L c = L::term("k1", parseRational("1/2")) + L::term("k1", parseRational("1/3"));
    CHECK(c.coeff("k1") == parseRational("5/6"));

    CHECK(c.str([](const std::string& k) { return k; }) == "5/6*k1");
    L d = L::term("k1", parseRational("3/2")) - L::term("k0");
    CHECK(d.str([](const std::string& k) { return k; }) == "-1*k0 + 3/2*k1");
}

TEST_CASE("lincomb add is associative/commutative and scaling distributes") {
    using L = LinComb<int>;
    std::mt19937 rng(7);
    auto randomL = [&]() {
        L x;
        std::uniform_int_distribution<int> key(0, 4), num(-3, 3);
        for (int i = 0; i < 5; ++i) x.add(key(rng), Rational(num(rng)));
        return x;
    };
    for (int rep = 0; rep < 200; ++rep) {
        L a = randomL(), b = randomL(), c = randomL();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        Rational s(std::uniform_int_distribution<int>(-4, 4)(rng));
        CHECK((a + b) * s == a * s + b * s);
    }
}

TEST_CASE("koszul signs") {
    std::vector<Degree> l0{0}, l5{5}, l1{1}, l11{1, 1};
    CHECK(koszulSign(l0, l5) == 1);
    CHECK(koszulSign(l1, l1) == -1);
    CHECK(koszulSign(l11, l1) == 1);
}

TEST_CASE("graded permutations") {
    using T3 = LinComb<std::array<int, 3>>;
    std::function<Degree(const int&)> deg = [](const int& k) { return k; }; // key encodes its degree

    auto id = GradedPermutation::make(1, 2, 3);
    T3 t = T3::term({1, 1, 0});
    CHECK(gradedPermute(id, t, deg) == t);

    auto p213 = GradedPermutation::make(2, 1, 3);
    auto r = gradedPermute(p213, t, deg);
    CHECK(r.coeff({1, 1, 0}) == -1);

    // P312 with shift -1 on degree (1,1,1): shifted degrees all 0
    auto p312s = GradedPermutation::make(3, 1, 2, -1);
    auto s = gradedPermute(p312s, T3::term({1, 1, 1}), deg);
    CHECK(s.coeff({1, 1, 1}) == 1);
}

TEST_CASE("permutation round trip and P312 cubes to identity") {
    using T3 = LinComb<std::array<int, 3>>;
    std::function<Degree(const int&)> deg = [](const int& k) { return k; };
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(0, 3);
    std::array<std::array<int, 3>, 6> perms{{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
    for (int rep = 0; rep < 100; ++rep) {
        T3 t = T3::term({d(rng), d(rng), d(rng)}, Rational(1 + d(rng)));
        for (auto pr : perms) {
            for (int n : {0, -1, 2}) {
                auto p = GradedPermutation::make(pr[0], pr[1], pr[2], n);
                CHECK(gradedPermute(p.inverse(), gradedPermute(p, t, deg), deg) == t);
            }
        }
        auto p312 = GradedPermutation::make(3, 1, 2);
        auto once = gradedPermute(p312, t, deg);
        auto thrice = gradedPermute(p312, gradedPermute(p312, once, deg), deg);
        CHECK(thrice == t);
    }
}
