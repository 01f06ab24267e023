#include "foxbrack/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

namespace foxbrack {

namespace {

Mono lcmMono(const Mono& a, const Mono& b) {
    Mono out;
    std::size_t i = 0, j = 0;
    while (i < a.f.size() || j < b.f.size()) {
        if (j >= b.f.size() || (i < a.f.size() && a.f[i].first < b.f[j].first))
            out.f.push_back(a.f[i++]);
        else if (i >= a.f.size() || b.f[j].first < a.f[i].first)
            out.f.push_back(b.f[j++]);
        else {
            out.f.emplace_back(a.f[i].first, std::max(a.f[i].second, b.f[j].second));
            ++i;
            ++j;
        }
    }
    return out;
}

bool coprime(const Mono& a, const Mono& b) {
    std::size_t i = 0, j = 0;
    while (i < a.f.size() && j < b.f.size()) {
        if (a.f[i].first == b.f[j].first) return false;
        if (a.f[i].first < b.f[j].first) ++i;
        else ++j;
    }
    return true;
}

Poly sPoly(const Poly& f, const Poly& g, const VarPool& pool) {
    const auto& [lmf, lcf] = *f.begin();
    const auto& [lmg, lcg] = *g.begin();
    Mono l = lcmMono(lmf, lmg);
    Poly a = polyMulMono(f, l.dividedBy(lmf), Rational(1) / lcf, pool);
    Poly b = polyMulMono(g, l.dividedBy(lmg), Rational(1) / lcg, pool);
    return a - b;
}

} // namespace

Poly reduce(const Poly& p, const GroebnerBasis& g, const VarPool& pool) {
    if (g.polys.empty()) return p;
    Poly rem;
    Poly work = p;
    while (!work.isZero()) {
        auto [m, c] = work.front();
        bool reduced = false;
        for (const auto& d : g.polys) {
            const auto& [lm, lc] = *d.begin();
            if (m.divisibleBy(lm)) {
                work.add(polyMulMono(d, m.dividedBy(lm), -c / lc, pool));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add(m, c);
            work.eraseFront();
        }
    }
    return rem;
}

bool tryDivideExact(const Poly& p, const Poly& d, const VarPool& pool, Poly& q) {
    q = Poly{};
    Poly work = p;
    const auto& [lm, lc] = *d.begin();
    while (!work.isZero()) {
        const auto& [m, c] = *work.begin();
        if (!m.divisibleBy(lm)) return false;
        Mono quot = m.dividedBy(lm);
        Rational coeff = c / lc;
        q.add(quot, coeff);
        work.add(polyMulMono(d, quot, -coeff, pool));
    }
    return true;
}

GroebnerBasis buchberger(std::vector<Poly> generators, const VarPool& pool, long maxPairs) {
    GroebnerBasis g;
    for (auto& p : generators) {
        if (p.isZero()) continue;
        for (const auto& [m, c] : p.terms())
            for (auto [v, e] : m.f)
                if (pool.odd(v)) throw std::invalid_argument("odd variable in ideal generator");
        Poly r = reduce(p, g, pool);
        if (!r.isZero()) g.polys.push_back(r * (Rational(1) / r.begin()->second));
    }
    // normal selection strategy: smallest lcm first, plus the chain criterion
    auto pairLess = [](const std::tuple<Mono, std::size_t, std::size_t>& a,
                       const std::tuple<Mono, std::size_t, std::size_t>& b) {
        const Mono& ma = std::get<0>(a);
        const Mono& mb = std::get<0>(b);
        if (ma.totalDeg() != mb.totalDeg()) return ma.totalDeg() < mb.totalDeg();
        DegRevLexGreater gt;
        if (gt(ma, mb)) return false;
        if (gt(mb, ma)) return true;
        return std::tie(std::get<1>(a), std::get<2>(a)) < std::tie(std::get<1>(b), std::get<2>(b));
    };
    std::set<std::tuple<Mono, std::size_t, std::size_t>, decltype(pairLess)> queue(pairLess);
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto push = [&](std::size_t i, std::size_t j) {
        queue.insert({lcmMono(g.polys[i].begin()->first, g.polys[j].begin()->first), i, j});
        pending.insert({i, j});
    };
    for (std::size_t i = 0; i < g.polys.size(); ++i)
        for (std::size_t j = i + 1; j < g.polys.size(); ++j) push(i, j);
    long processed = 0;
    while (!queue.empty()) {
        auto [l, i, j] = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({i, j});
        if (++processed > maxPairs) throw BuchbergerBudgetExceeded(maxPairs);
        if (coprime(g.polys[i].begin()->first, g.polys[j].begin()->first)) continue;
        // chain criterion: a third lead dividing the lcm whose pairs with i
        // and j are both settled lets us skip this pair
        bool skip = false;
        for (std::size_t k = 0; k < g.polys.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!l.divisibleBy(g.polys[k].begin()->first)) continue;
            auto pik = std::minmax(i, k), pjk = std::minmax(j, k);
            if (!pending.count({pik.first, pik.second}) && !pending.count({pjk.first, pjk.second}))
                skip = true;
        }
        if (skip) continue;
        Poly r = reduce(sPoly(g.polys[i], g.polys[j], pool), g, pool);
        if (r.isZero()) continue;
        r *= Rational(1) / r.begin()->second;
        g.polys.push_back(r);
        for (std::size_t k = 0; k + 1 < g.polys.size(); ++k) push(k, g.polys.size() - 1);
    }
    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < g.polys.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.polys.size(); ++j) {
            if (i == j) continue;
            if (g.polys[i].begin()->first.divisibleBy(g.polys[j].begin()->first)) {
                // keep the one with the smaller index when leads are equal
                if (g.polys[j].begin()->first.divisibleBy(g.polys[i].begin()->first) && j > i) continue;
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(g.polys[i]);
    }
    // reduce tails against each other
    GroebnerBasis out;
    out.polys = minimal;
    for (std::size_t i = 0; i < out.polys.size(); ++i) {
        GroebnerBasis others;
        for (std::size_t j = 0; j < out.polys.size(); ++j)
            if (j != i) others.polys.push_back(out.polys[j]);
        Poly r = reduce(out.polys[i], others, pool);
        if (!r.isZero()) r *= Rational(1) / r.begin()->second;
        out.polys[i] = r;
    }
    std::erase_if(out.polys, [](const Poly& p) { return p.isZero(); });
    std::sort(out.polys.begin(), out.polys.end(), [](const Poly& a, const Poly& b) {
        return DegRevLexGreater{}(b.begin()->first, a.begin()->first);
    });
    return out;
}

bool selfCheck(const GroebnerBasis& g, const VarPool& pool) {
    for (std::size_t i = 0; i < g.polys.size(); ++i)
        for (std::size_t j = i + 1; j < g.polys.size(); ++j)
            if (!reduce(sPoly(g.polys[i], g.polys[j], pool), g, pool).isZero()) return false;
    return true;
}

} // namespace foxbrack
