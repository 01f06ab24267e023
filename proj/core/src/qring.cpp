#include "foxbrack/qring.hpp"

#include <stdexcept>

namespace foxbrack {

void QRing::freeze() {
    if (!invDets.empty() && !gb.polys.empty())
        throw std::logic_error("localization and ideal reduction are not combined in one ring");
    for (const auto& d : invDets) {
        if (d.isZero()) throw std::invalid_argument("zero determinant");
        for (const auto& [m, c] : d.terms())
            for (auto [v, e] : m.f)
                if (vars.odd(v)) throw std::invalid_argument("odd variable in localized element");
    }
    frozen_ = true;
}

QRing::El QRing::detInverse(int i) const {
    El e{polyConst(Rational(1)), noPows()};
    e.pows[static_cast<std::size_t>(i)] = 1;
    return e;
}

QRing::El QRing::canonical(El e) const {
    if (!gb.polys.empty()) e.num = reduce(e.num, gb, vars);
    if (e.num.isZero()) return El{{}, noPows()};
    for (std::size_t i = 0; i < invDets.size(); ++i) {
        while (e.pows[i] > 0) {
            Poly q;
            if (!tryDivideExact(e.num, invDets[i], vars, q)) break;
            e.num = std::move(q);
            --e.pows[i];
        }
    }
    return e;
}

QRing::El QRing::add(const El& a, const El& b) const {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    // canonical inputs with matching zero powers stay canonical under +
    if (a.pows == b.pows) {
        bool flat = true;
        for (int p : a.pows)
            if (p != 0) flat = false;
        if (flat) return El{a.num + b.num, a.pows};
    }
    El out;
    out.pows.resize(invDets.size());
    Poly na = a.num, nb = b.num;
    for (std::size_t i = 0; i < invDets.size(); ++i) {
        int p = std::max(a.pows[i], b.pows[i]);
        out.pows[i] = p;
        for (int k = a.pows[i]; k < p; ++k) na = polyMul(na, invDets[i], vars);
        for (int k = b.pows[i]; k < p; ++k) nb = polyMul(nb, invDets[i], vars);
    }
    out.num = na + nb;
    return canonical(std::move(out));
}

QRing::El QRing::sub(const El& a, const El& b) const { return add(a, scale(b, Rational(-1))); }

QRing::El QRing::mul(const El& a, const El& b) const {
    if (a.isZero() || b.isZero()) return zero();
    El out;
    out.num = polyMul(a.num, b.num, vars);
    out.pows.resize(invDets.size());
    for (std::size_t i = 0; i < invDets.size(); ++i) out.pows[i] = a.pows[i] + b.pows[i];
    return canonical(std::move(out));
}

QRing::El QRing::scale(const El& a, const Rational& c) const {
    if (c == 0) return zero();
    El out = a;
    out.num = out.num * c;
    return out;
}

Degree QRing::degreeOf(const El& e) const {
    if (e.isZero()) return 0;
    return polyGradedDeg(e.num, vars); // inverted dets are degree 0
}

Rational QRing::evalAt(const El& e, std::span<const Rational> point) const {
    Rational v = polyEval(e.num, point);
    for (std::size_t i = 0; i < invDets.size(); ++i) {
        if (e.pows[i] == 0) continue;
        Rational d = polyEval(invDets[i], point);
        if (d == 0) throw std::domain_error("inverted determinant vanishes at the point");
        for (int k = 0; k < e.pows[i]; ++k) v /= d;
    }
    return v;
}

std::string QRing::str(const El& e) const {
    std::string out = polyStr(e.num, vars);
    for (std::size_t i = 0; i < invDets.size(); ++i)
        if (e.pows[i] > 0)
            out = "(" + out + ")/(" + polyStr(invDets[i], vars) + ")^" + std::to_string(e.pows[i]);
    return out;
}

} // namespace foxbrack
