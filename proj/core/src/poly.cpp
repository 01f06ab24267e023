#include "foxbrack/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace foxbrack {

int VarPool::add(std::string name, Degree degree) {
    vars_.push_back({std::move(name), degree});
    return static_cast<int>(vars_.size()) - 1;
}

long Mono::totalDeg() const {
    long d = 0;
    for (auto [v, e] : f) d += e;
    return d;
}

Degree Mono::gradedDeg(const VarPool& pool) const {
    Degree d = 0;
    for (auto [v, e] : f) d += pool.degree(v) * e;
    return d;
}

int Mono::exponentOf(int var) const {
    for (auto [v, e] : f)
        if (v == var) return e;
    return 0;
}

std::optional<std::pair<int, Mono>> Mono::mul(const Mono& a, const Mono& b, const VarPool& pool) {
    // Merge the factor lists. When a factor of b is placed before remaining
    // factors of a it crosses them; odd-odd crossings flip the sign.
    Mono out;
    out.f.reserve(a.f.size() + b.f.size());
    std::size_t i = 0, j = 0;
    long sign = 0;
    long oddTailA = 0; // odd letters of a not yet emitted
    for (auto [v, e] : a.f)
        if (pool.odd(v)) oddTailA += e;
    while (i < a.f.size() || j < b.f.size()) {
        bool takeA = j >= b.f.size() || (i < a.f.size() && a.f[i].first <= b.f[j].first);
        if (takeA) {
            auto [v, e] = a.f[i++];
            if (pool.odd(v)) oddTailA -= e;
            if (!out.f.empty() && out.f.back().first == v)
                out.f.back().second += e;
            else
                out.f.emplace_back(v, e);
        } else {
            auto [v, e] = b.f[j++];
            if (pool.odd(v)) sign += e * oddTailA;
            if (!out.f.empty() && out.f.back().first == v)
                out.f.back().second += e;
            else
                out.f.emplace_back(v, e);
        }
    }
    for (auto [v, e] : out.f)
        if (pool.odd(v) && e > 1) return std::nullopt;
    return std::make_pair(sign % 2 ? -1 : 1, std::move(out));
}

bool Mono::divisibleBy(const Mono& d) const {
    std::size_t i = 0;
    for (auto [v, e] : d.f) {
        while (i < f.size() && f[i].first < v) ++i;
        if (i >= f.size() || f[i].first != v || f[i].second < e) return false;
    }
    return true;
}

Mono Mono::dividedBy(const Mono& d) const {
    Mono out;
    std::size_t j = 0;
    for (auto [v, e] : f) {
        int sub = 0;
        while (j < d.f.size() && d.f[j].first < v) ++j;
        if (j < d.f.size() && d.f[j].first == v) sub = d.f[j].second;
        if (e - sub > 0) out.f.emplace_back(v, e - sub);
    }
    return out;
}

std::string Mono::str(const VarPool& pool) const {
    if (f.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += "*";
        out += pool.name(f[i].first);
        if (f[i].second != 1) out += "^" + std::to_string(f[i].second);
    }
    return out;
}

bool DegRevLexGreater::operator()(const Mono& a, const Mono& b) const {
    long da = a.totalDeg(), db = b.totalDeg();
    if (da != db) return da > db;
    // degrevlex: a > b iff the last variable where the exponent vectors
    // differ has a smaller exponent in a.
    auto ia = a.f.rbegin(), ib = b.f.rbegin();
    while (ia != a.f.rend() && ib != b.f.rend()) {
        if (ia->first != ib->first) {
            // the one owning the trailing variable has a positive exponent
            // where the other has zero -> that one is smaller
            return ia->first < ib->first;
        }
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    if (ia != a.f.rend()) return false; // a has extra trailing factor -> smaller
    if (ib != b.f.rend()) return true;
    return false; // equal
}

Poly polyVar(int var) {
    Mono m;
    m.f.emplace_back(var, 1);
    return Poly::term(std::move(m));
}

Poly polyConst(const Rational& c) { return Poly::term(Mono{}, c); }

Poly polyMulMono(const Poly& a, const Mono& m, const Rational& c, const VarPool& pool) {
    Poly out;
    if (c == 0) return out;
    for (const auto& [k, v] : a.terms()) {
        auto r = Mono::mul(k, m, pool);
        if (r) out.add(r->second, v * c * r->first);
    }
    return out;
}

Poly polyMul(const Poly& a, const Poly& b, const VarPool& pool) {
    Poly out;
    for (const auto& [k, v] : b.terms()) out.add(polyMulMono(a, k, v, pool));
    return out;
}

Degree polyGradedDeg(const Poly& p, const VarPool& pool) {
    if (p.isZero()) return 0;
    Degree d = p.begin()->first.gradedDeg(pool);
    for (const auto& [k, c] : p.terms())
        if (k.gradedDeg(pool) != d) throw std::invalid_argument("inhomogeneous polynomial");
    return d;
}

Rational polyEval(const Poly& p, std::span<const Rational> point) {
    Rational out(0);
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (auto [v, e] : m.f) {
            if (static_cast<std::size_t>(v) >= point.size()) throw std::out_of_range("point too short");
            for (int i = 0; i < e; ++i) t *= point[static_cast<std::size_t>(v)];
        }
        out += t;
    }
    return out;
}

std::string polyStr(const Poly& p, const VarPool& pool) {
    return p.str([&pool](const Mono& m) { return m.str(pool); });
}

} // namespace foxbrack
