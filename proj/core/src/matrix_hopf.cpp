#include "foxbrack/matrix_hopf.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace foxbrack {

std::string to_string(MatrixKind k) {
    switch (k) {
        case MatrixKind::GL: return "GL";
        case MatrixKind::SL: return "SL";
        case MatrixKind::O: return "O";
    }
    return "?";
}

namespace {

// det of the matrix whose (r,c) entry is vars[entry(r,c)], as a Poly
Poly detOf(int n, const std::function<int(int, int)>& entry) {
    Poly out;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        long inv = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inv;
        Mono m;
        for (int r = 0; r < n; ++r) m.f.emplace_back(entry(r, perm[static_cast<std::size_t>(r)]), 1);
        std::sort(m.f.begin(), m.f.end());
        out.add(m, Rational(inv % 2 ? -1 : 1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

BAlgebra::BAlgebra(MatrixKind kind, int N, long buchbergerBudget) : kind_(kind), n_(N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            ring_.vars.add("t[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]", 0);
    detT_ = detOf(N, [this](int r, int c) { return tvarIndex(r, c); });
    switch (kind_) {
        case MatrixKind::GL:
            ring_.invDets.push_back(detT_);
            break;
        case MatrixKind::SL: {
            Poly rel = detT_ - polyConst(Rational(1));
            ring_.gb = buchberger({rel}, ring_.vars, buchbergerBudget);
            break;
        }
        case MatrixKind::O: {
            std::vector<Poly> rels;
            for (int i = 0; i < N; ++i)
                for (int j = i; j < N; ++j) {
                    Poly r;
                    for (int k = 0; k < N; ++k) {
                        auto prod = Mono::mul(Mono{{{tvarIndex(i, k), 1}}}, Mono{{{tvarIndex(j, k), 1}}}, ring_.vars);
                        r.add(prod->second, Rational(prod->first));
                    }
                    if (i == j) r.add(Mono{}, Rational(-1));
                    rels.push_back(r);
                }
            ring_.gb = buchberger(std::move(rels), ring_.vars, buchbergerBudget);
            break;
        }
    }
    ring_.freeze();
    antipodeTCache_.reserve(static_cast<std::size_t>(N) * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            El s;
            switch (kind_) {
                case MatrixKind::GL: {
                    Poly mnr = minor(j, i);
                    int sign = ((i + j) % 2) ? -1 : 1;
                    s = El{mnr * Rational(sign), {1}};
                    break;
                }
                case MatrixKind::SL: {
                    Poly mnr = minor(j, i);
                    int sign = ((i + j) % 2) ? -1 : 1;
                    s = ring_.fromPoly(mnr * Rational(sign));
                    break;
                }
                case MatrixKind::O:
                    s = ring_.variable(tvarIndex(j, i));
                    break;
            }
            antipodeTCache_.push_back(ring_.canonical(s));
        }
}

int BAlgebra::tvarIndex(int i, int j) const { return i * n_ + j; }

BAlgebra::El BAlgebra::t(int i, int j) const { return ring_.variable(tvarIndex(i, j)); }

BAlgebra::El BAlgebra::u() const {
    if (!hasU()) throw std::logic_error("u exists only for GL");
    return ring_.detInverse(0);
}

BAlgebra::El BAlgebra::det() const { return ring_.fromPoly(detT_); }

BAlgebra::El BAlgebra::toEl(const BMono& k, const Rational& c) const {
    El e{Poly::term(k.m, c), std::vector<int>(ring_.invDets.size(), 0)};
    if (k.upow != 0) {
        if (!hasU()) throw std::logic_error("u-power on a ring without u");
        e.pows[0] = k.upow;
    }
    return ring_.canonical(std::move(e));
}

Poly BAlgebra::minor(int row, int col) const {
    if (n_ == 1) return polyConst(Rational(1));
    std::vector<int> rows, cols;
    for (int i = 0; i < n_; ++i) {
        if (i != row) rows.push_back(i);
        if (i != col) cols.push_back(i);
    }
    return detOf(n_ - 1, [&](int r, int c) {
        return tvarIndex(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
    });
}

std::vector<std::pair<int, int>> BAlgebra::monoLetters(const BMono& k) const {
    std::vector<std::pair<int, int>> out;
    for (auto [v, e] : k.m.f)
        for (int c = 0; c < e; ++c) out.emplace_back(v / n_, v % n_);
    for (int c = 0; c < k.upow; ++c) out.emplace_back(-1, -1);
    return out;
}

Rational BAlgebra::counit(const BMono& k) const {
    for (auto [v, e] : k.m.f)
        if (v / n_ != v % n_) return Rational(0);
    return Rational(1);
}

Rational BAlgebra::counit(const El& e) const {
    std::vector<Rational> pt(static_cast<std::size_t>(n_) * n_, Rational(0));
    for (int i = 0; i < n_; ++i) pt[static_cast<std::size_t>(tvarIndex(i, i))] = 1;
    return ring_.evalAt(e, pt);
}

BAlgebra::El BAlgebra::antipodeT(int i, int j) const {
    return antipodeTCache_[static_cast<std::size_t>(tvarIndex(i, j))];
}

BAlgebra::El BAlgebra::antipode(const BMono& k) const {
    El out = ring_.one();
    for (auto [i, j] : monoLetters(k))
        out = ring_.mul(out, (i < 0) ? det() : antipodeT(i, j));
    return out;
}

BAlgebra::El BAlgebra::antipode(const El& e) const {
    El out = ring_.zero();
    for (const auto& [m, c] : e.num.terms()) {
        BMono k{m, e.pows.empty() ? 0 : e.pows[0]};
        out = ring_.add(out, ring_.scale(antipode(k), c));
    }
    return out;
}

BSweedler BAlgebra::sweedler(const BMono& k, int m) const {
    BSweedler out;
    if (m == 0) {
        Rational c = counit(k);
        if (c != 0) out.add(std::vector<BMono>{}, c);
        return out;
    }
    std::vector<std::vector<BMono>> tuples{std::vector<BMono>(static_cast<std::size_t>(m))};
    for (auto [i, j] : monoLetters(k)) {
        std::vector<std::vector<BMono>> next;
        if (i < 0) { // u is group-like
            for (auto& tup : tuples) {
                auto t2 = tup;
                for (auto& comp : t2) comp.upow += 1;
                next.push_back(std::move(t2));
            }
        } else {
            // paths i -> j of length m
            std::vector<int> mid(static_cast<std::size_t>(m - 1), 0);
            while (true) {
                std::vector<int> nodes;
                nodes.push_back(i);
                for (int x : mid) nodes.push_back(x);
                nodes.push_back(j);
                for (const auto& tup : tuples) {
                    auto t2 = tup;
                    for (int p = 0; p < m; ++p) {
                        Mono letter{{{tvarIndex(nodes[static_cast<std::size_t>(p)],
                                                nodes[static_cast<std::size_t>(p + 1)]),
                                      1}}};
                        auto prod = Mono::mul(t2[static_cast<std::size_t>(p)].m, letter, ring_.vars);
                        t2[static_cast<std::size_t>(p)].m = prod->second;
                    }
                    next.push_back(std::move(t2));
                }
                std::size_t pos = 0;
                for (; pos < mid.size(); ++pos) {
                    if (mid[pos] + 1 < n_) { ++mid[pos]; break; }
                    mid[pos] = 0;
                }
                if (pos == mid.size()) break;
            }
        }
        tuples = std::move(next);
        if (tuples.empty()) break;
    }
    for (auto& tup : tuples) out.add(std::move(tup), Rational(1));
    return out;
}

BSweedler BAlgebra::sweedler(const El& e, int m) const {
    BSweedler out;
    for (const auto& [mono, c] : e.num.terms()) {
        BMono k{mono, e.pows.empty() ? 0 : e.pows[0]};
        out.add(sweedler(k, m), c);
    }
    return out;
}

BAlgebra::El BAlgebra::trace() const {
    El out = ring_.zero();
    for (int i = 0; i < n_; ++i) out = ring_.add(out, t(i, i));
    return out;
}

const QRing& BAlgebra::tensorRing(int k) const {
    std::scoped_lock lock(tensorMutex_);
    auto it = tensorRings_.find(k);
    if (it != tensorRings_.end()) return *it->second;
    auto ring = std::make_unique<QRing>();
    const int nsq = n_ * n_;
    for (int copy = 0; copy < k; ++copy)
        for (int v = 0; v < nsq; ++v)
            ring->vars.add("c" + std::to_string(copy + 1) + "." + ring_.vars.name(v), 0);
    auto shift = [&](const Poly& p, int copy) {
        Poly out;
        for (const auto& [m, c] : p.terms()) {
            Mono sm = m;
            for (auto& [v, e] : sm.f) v += copy * nsq;
            out.add(sm, c);
        }
        return out;
    };
    if (kind_ == MatrixKind::GL) {
        for (int copy = 0; copy < k; ++copy) ring->invDets.push_back(shift(detT_, copy));
    } else {
        for (int copy = 0; copy < k; ++copy)
            for (const auto& p : ring_.gb.polys) ring->gb.polys.push_back(shift(p, copy));
    }
    ring->freeze();
    auto& slot = tensorRings_[k];
    slot = std::move(ring);
    return *slot;
}

QRing::El BAlgebra::embedTensor(int k, std::span<const BMono> keys, const Rational& c) const {
    if (static_cast<int>(keys.size()) != k) throw std::invalid_argument("tuple arity mismatch");
    const QRing& tr = tensorRing(k);
    const int nsq = n_ * n_;
    Mono m;
    std::vector<int> pows(tr.invDets.size(), 0);
    for (int copy = 0; copy < k; ++copy) {
        for (auto [v, e] : keys[static_cast<std::size_t>(copy)].m.f)
            m.f.emplace_back(v + copy * nsq, e);
        if (keys[static_cast<std::size_t>(copy)].upow != 0) {
            if (kind_ != MatrixKind::GL) throw std::logic_error("u-power outside GL");
            pows[static_cast<std::size_t>(copy)] = keys[static_cast<std::size_t>(copy)].upow;
        }
    }
    std::sort(m.f.begin(), m.f.end());
    return tr.canonical(QRing::El{Poly::term(m, c), std::move(pows)});
}

QRing::El BAlgebra::embedTensor(int k, const BSweedler& exp) const {
    const QRing& tr = tensorRing(k);
    const int nsq = n_ * n_;
    // group terms by their u-power profile, canonicalize once per group
    std::map<std::vector<int>, Poly> byPows;
    for (const auto& [tuple, c] : exp.terms()) {
        if (static_cast<int>(tuple.size()) != k) throw std::invalid_argument("tuple arity mismatch");
        Mono m;
        std::vector<int> pows(tr.invDets.size(), 0);
        for (int copy = 0; copy < k; ++copy) {
            for (auto [v, e] : tuple[static_cast<std::size_t>(copy)].m.f) m.f.emplace_back(v + copy * nsq, e);
            if (tuple[static_cast<std::size_t>(copy)].upow != 0) {
                if (kind_ != MatrixKind::GL) throw std::logic_error("u-power outside GL");
                pows[static_cast<std::size_t>(copy)] = tuple[static_cast<std::size_t>(copy)].upow;
            }
        }
        std::sort(m.f.begin(), m.f.end());
        byPows[pows].add(m, c);
    }
    QRing::El out = tr.zero();
    for (auto& [pows, num] : byPows)
        out = tr.add(out, tr.canonical(QRing::El{std::move(num), pows}));
    return out;
}

QRing::El BAlgebra::flip2(const QRing::El& e) const {
    const QRing& tr = tensorRing(2);
    const int nsq = n_ * n_;
    QRing::El out;
    out.pows.assign(tr.invDets.size(), 0);
    if (out.pows.size() == 2) {
        out.pows[0] = e.pows[1];
        out.pows[1] = e.pows[0];
    }
    for (const auto& [m, c] : e.num.terms()) {
        Mono f = m;
        for (auto& [v, ex] : f.f) v = (v < nsq) ? v + nsq : v - nsq;
        std::sort(f.f.begin(), f.f.end());
        out.num.add(f, c);
    }
    return tr.canonical(out);
}

bool BAlgebra::isCosymmetric(const El& e) const {
    QRing::El d = embedTensor(2, sweedler(e, 2));
    return tensorRing(2).equal(d, flip2(d));
}

int BAlgebra::iqDim() const {
    switch (kind_) {
        case MatrixKind::GL: return n_ * n_;
        case MatrixKind::SL: return n_ * n_ - 1;
        case MatrixKind::O: return n_ * (n_ - 1) / 2;
    }
    return 0;
}

std::vector<std::string> BAlgebra::iqBasisNames() const {
    std::vector<std::string> out;
    auto tau = [](int i, int j) {
        return "tau[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
    };
    switch (kind_) {
        case MatrixKind::GL:
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) out.push_back(tau(i, j));
            break;
        case MatrixKind::SL:
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j)
                    if (i != j) out.push_back(tau(i, j));
            for (int i = 0; i + 1 < n_; ++i) out.push_back(tau(i, i));
            break;
        case MatrixKind::O:
            for (int i = 0; i < n_; ++i)
                for (int j = i + 1; j < n_; ++j) out.push_back(tau(i, j));
            break;
    }
    return out;
}

RatVec BAlgebra::pClassT(int i, int j) const {
    RatVec v(static_cast<std::size_t>(iqDim()), Rational(0));
    switch (kind_) {
        case MatrixKind::GL:
            v[static_cast<std::size_t>(i * n_ + j)] = 1;
            break;
        case MatrixKind::SL: {
            if (i != j) {
                int idx = 0;
                for (int a = 0; a < n_; ++a)
                    for (int b = 0; b < n_; ++b) {
                        if (a == b) continue;
                        if (a == i && b == j) v[static_cast<std::size_t>(idx)] = 1;
                        ++idx;
                    }
            } else if (i + 1 < n_) {
                v[static_cast<std::size_t>(n_ * n_ - n_ + i)] = 1;
            } else {
                for (int kdiag = 0; kdiag + 1 < n_; ++kdiag)
                    v[static_cast<std::size_t>(n_ * n_ - n_ + kdiag)] = -1;
            }
            break;
        }
        case MatrixKind::O: {
            if (i == j) break;
            int a = std::min(i, j), b = std::max(i, j);
            int idx = 0;
            for (int p = 0; p < n_; ++p)
                for (int q = p + 1; q < n_; ++q) {
                    if (p == a && q == b) v[static_cast<std::size_t>(idx)] = (i < j) ? 1 : -1;
                    ++idx;
                }
            break;
        }
    }
    return v;
}

RatVec BAlgebra::pClassU() const {
    if (!hasU()) throw std::logic_error("u exists only for GL");
    // u*det = 1 and det = 1 + sum tau_ii mod I^2 force u = 1 - sum tau_ii.
    RatVec v(static_cast<std::size_t>(iqDim()), Rational(0));
    for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(i * n_ + i)] = -1;
    return v;
}

RatVec BAlgebra::pClass(const BMono& k) const {
    RatVec out(static_cast<std::size_t>(iqDim()), Rational(0));
    auto letters = monoLetters(k);
    // p(l1...lm) = sum_i (prod_{j != i} eps(l_j)) p(l_i); eps vanishes exactly
    // on off-diagonal t's, so at most one off-diagonal letter contributes.
    int offDiag = 0;
    for (auto [i, j] : letters)
        if (i >= 0 && i != j) ++offDiag;
    if (offDiag >= 2) return out;
    for (std::size_t pos = 0; pos < letters.size(); ++pos) {
        auto [i, j] = letters[pos];
        if (offDiag == 1 && (i < 0 || i == j)) continue;
        RatVec pl = (i < 0) ? pClassU() : pClassT(i, j);
        for (std::size_t q = 0; q < out.size(); ++q) out[q] += pl[q];
    }
    return out;
}

RatVec BAlgebra::pClass(const El& e) const {
    RatVec out(static_cast<std::size_t>(iqDim()), Rational(0));
    for (const auto& [m, c] : e.num.terms()) {
        BMono k{m, e.pows.empty() ? 0 : e.pows[0]};
        RatVec pk = pClass(k);
        for (std::size_t q = 0; q < out.size(); ++q) out[q] += pk[q] * c;
    }
    return out;
}

RatMat BAlgebra::psiMatrix(const El& tt) const {
    const auto d = static_cast<std::size_t>(iqDim());
    RatMat psi(d, d);
    for (const auto& [pair, c] : sweedler(tt, 2)) {
        RatVec p1 = pClass(pair[0]);
        RatVec p2 = pClass(pair[1]);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t col = 0; col < d; ++col) psi.at(r, col) += c * p2[r] * p1[col];
    }
    return psi;
}

std::vector<BMono> BAlgebra::basisMonomials(int maxLetters) const {
    std::vector<Mono> monos{Mono{}};
    std::size_t levelBegin = 0;
    const int nsq = n_ * n_;
    for (int len = 1; len <= maxLetters; ++len) {
        std::size_t levelEnd = monos.size();
        for (std::size_t i = levelBegin; i < levelEnd; ++i) {
            int startVar = monos[i].f.empty() ? 0 : monos[i].f.back().first;
            for (int v = startVar; v < nsq; ++v) {
                Mono m = monos[i];
                if (!m.f.empty() && m.f.back().first == v)
                    m.f.back().second += 1;
                else
                    m.f.emplace_back(v, 1);
                monos.push_back(std::move(m));
            }
        }
        levelBegin = levelEnd;
    }
    std::vector<BMono> out;
    for (const auto& m : monos) {
        bool reducible = false;
        for (const auto& g : ring_.gb.polys)
            if (m.divisibleBy(g.begin()->first)) { reducible = true; break; }
        if (reducible) continue;
        int room = maxLetters - static_cast<int>(m.totalDeg());
        out.push_back(BMono{m, 0});
        if (hasU())
            for (int e = 1; e <= room; ++e) out.push_back(BMono{m, e});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string BAlgebra::printKey(const BMono& k) const {
    std::string out;
    if (!k.m.isOne()) out = k.m.str(ring_.vars);
    if (k.upow > 0) {
        if (!out.empty()) out += "*";
        out += "u";
        if (k.upow > 1) out += "^" + std::to_string(k.upow);
    }
    if (out.empty()) out = "1";
    return out;
}

std::string BAlgebra::print(const El& e) const {
    if (e.isZero()) return "0";
    std::string out = e.num.str([this](const Mono& m) { return m.str(ring_.vars); });
    if (!e.pows.empty() && e.pows[0] > 0) out = "(" + out + ")*u^" + std::to_string(e.pows[0]);
    return out;
}

} // namespace foxbrack
