#include "foxbrack/repalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace foxbrack {

namespace {

Poly detOfEntries(int n, const std::function<Poly(int, int)>& entry, const VarPool& pool) {
    Poly out;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        long inv = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inv;
        Poly term = polyConst(Rational(inv % 2 ? -1 : 1));
        for (int r = 0; r < n; ++r) term = polyMul(term, entry(r, perm[static_cast<std::size_t>(r)]), pool);
        out += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

RepAlgebra::RepAlgebra(const AAlgebra& A, const BAlgebra& B, long buchbergerBudget)
    : a_(&A), b_(&B), n_(B.N()) {
    const int r = A.rank();
    const int nsq = n_ * n_;
    const Degree xdeg = A.graded() ? 1 : 0;
    for (int g = 0; g < r; ++g)
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                ring_.vars.add(A.generatorNames()[static_cast<std::size_t>(g)] + "[" +
                                   std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
                               xdeg);
    for (int g = 0; g < r; ++g)
        genDet_.push_back(detOfEntries(
            n_, [&](int i, int j) { return polyVar(xvarIndex(g, i, j)); }, ring_.vars));
    if (!A.graded()) {
        switch (B.matrixKind()) {
            case MatrixKind::GL:
                for (int g = 0; g < r; ++g) ring_.invDets.push_back(genDet_[static_cast<std::size_t>(g)]);
                break;
            case MatrixKind::SL: {
                std::vector<Poly> rels;
                for (int g = 0; g < r; ++g) rels.push_back(genDet_[static_cast<std::size_t>(g)] - polyConst(Rational(1)));
                ring_.gb = buchberger(std::move(rels), ring_.vars, buchbergerBudget);
                break;
            }
            case MatrixKind::O: {
                std::vector<Poly> rels;
                for (int g = 0; g < r; ++g)
                    for (int i = 0; i < n_; ++i)
                        for (int j = i; j < n_; ++j) {
                            Poly rel;
                            for (int k = 0; k < n_; ++k)
                                rel += polyMul(polyVar(xvarIndex(g, i, k)), polyVar(xvarIndex(g, j, k)), ring_.vars);
                            if (i == j) rel -= polyConst(Rational(1));
                            rels.push_back(rel);
                        }
                ring_.gb = buchberger(std::move(rels), ring_.vars, buchbergerBudget);
                break;
            }
        }
    }
    ring_.freeze();

    genMat_.resize(static_cast<std::size_t>(r));
    for (int g = 0; g < r; ++g) {
        auto& m = genMat_[static_cast<std::size_t>(g)];
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m.push_back(ring_.variable(xvarIndex(g, i, j)));
    }
    if (!A.graded()) {
        genMatInv_.resize(static_cast<std::size_t>(r));
        for (int g = 0; g < r; ++g) {
            auto& m = genMatInv_[static_cast<std::size_t>(g)];
            m.resize(static_cast<std::size_t>(nsq));
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) {
                    Rep entry;
                    if (B.matrixKind() == MatrixKind::O) {
                        entry = ring_.variable(xvarIndex(g, j, i));
                    } else {
                        // adjugate entry: (-1)^{i+j} times the (j,i) minor
                        std::vector<int> rows, cols;
                        for (int x = 0; x < n_; ++x) {
                            if (x != j) rows.push_back(x);
                            if (x != i) cols.push_back(x);
                        }
                        Poly mnr = (n_ == 1) ? polyConst(Rational(1))
                                             : detOfEntries(
                                                   n_ - 1,
                                                   [&](int rr, int cc) {
                                                       return polyVar(xvarIndex(g, rows[static_cast<std::size_t>(rr)],
                                                                                cols[static_cast<std::size_t>(cc)]));
                                                   },
                                                   ring_.vars);
                        mnr = mnr * Rational(((i + j) % 2) ? -1 : 1);
                        entry = ring_.fromPoly(mnr);
                        if (B.matrixKind() == MatrixKind::GL)
                            entry = ring_.mul(entry, ring_.detInverse(g));
                    }
                    m[static_cast<std::size_t>(i * n_ + j)] = ring_.canonical(entry);
                }
        }
    }

    // A_B (x) B: the X variables followed by one copy of the t variables
    const int bShift = r * nsq;
    for (int v = 0; v < bShift; ++v) abRing_.vars.add(ring_.vars.name(v), ring_.vars.degree(v));
    for (int v = 0; v < nsq; ++v) abRing_.vars.add("B." + B.ring().vars.name(v), 0);
    auto shiftB = [&](const Poly& p) {
        Poly out;
        for (const auto& [m, c] : p.terms()) {
            Mono sm = m;
            for (auto& [v, e] : sm.f) v += bShift;
            out.add(sm, c);
        }
        return out;
    };
    for (const auto& d : ring_.invDets) abRing_.invDets.push_back(d);
    if (B.matrixKind() == MatrixKind::GL) abRing_.invDets.push_back(shiftB(B.detPoly()));
    for (const auto& p : ring_.gb.polys) abRing_.gb.polys.push_back(p);
    for (const auto& p : B.ring().gb.polys) abRing_.gb.polys.push_back(shiftB(p));
    abRing_.freeze();

    // coaction on the generators: X_{ij} -> sum_{p,q} X_{pq} (x) s(t_{ip}) t_{qj}
    coactionVar_.resize(static_cast<std::size_t>(r * nsq));
    for (int g = 0; g < r; ++g)
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                QRing::El acc = abRing_.zero();
                for (int p = 0; p < n_; ++p)
                    for (int q = 0; q < n_; ++q) {
                        QRing::El term = abRing_.variable(xvarIndex(g, p, q));
                        term = abRing_.mul(term, embedB(b_->mul(b_->antipodeT(i, p), b_->t(q, j))));
                        acc = abRing_.add(acc, term);
                    }
                coactionVar_[static_cast<std::size_t>(xvarIndex(g, i, j))] = acc;
            }
}

int RepAlgebra::xvarIndex(int gen, int i, int j) const { return gen * n_ * n_ + i * n_ + j; }

RepAlgebra::Rep RepAlgebra::generatorEntry(int gen, int i, int j) const {
    return ring_.variable(xvarIndex(gen, i, j));
}

std::vector<RepAlgebra::Rep> RepAlgebra::wordMatrix(const Word& w) const {
    {
        std::scoped_lock lock(cacheMutex_);
        auto it = wordMatrixCache_.find(w);
        if (it != wordMatrixCache_.end()) return it->second;
    }
    const int nsq = n_ * n_;
    std::vector<Rep> m(static_cast<std::size_t>(nsq));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            m[static_cast<std::size_t>(i * n_ + j)] = (i == j) ? ring_.one() : ring_.zero();
    for (auto l : w.ls) {
        if (l < 0 && genMatInv_.empty()) throw std::logic_error("inverse letter in a graded host algebra");
        const auto& factor = (l > 0) ? genMat_[static_cast<std::size_t>(l - 1)]
                                     : genMatInv_[static_cast<std::size_t>(-l - 1)];
        std::vector<Rep> next(static_cast<std::size_t>(nsq), ring_.zero());
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const Rep& mik = m[static_cast<std::size_t>(i * n_ + k)];
                if (mik.isZero()) continue;
                for (int j = 0; j < n_; ++j) {
                    const Rep& fkj = factor[static_cast<std::size_t>(k * n_ + j)];
                    if (fkj.isZero()) continue;
                    auto& slot = next[static_cast<std::size_t>(i * n_ + j)];
                    slot = ring_.add(slot, ring_.mul(mik, fkj));
                }
            }
        m = std::move(next);
    }
    std::scoped_lock lock(cacheMutex_);
    return wordMatrixCache_.emplace(w, std::move(m)).first->second;
}

RepAlgebra::Rep RepAlgebra::wordEntry(const Word& w, int i, int j) const {
    return wordMatrix(w)[static_cast<std::size_t>(i * n_ + j)];
}

RepAlgebra::Rep RepAlgebra::wordDetInverse(const Word& w) const {
    if (!b_->hasU()) throw std::logic_error("u exists only for GL");
    if (a_->kind() == AKind::FreeGroup) {
        Rep out = ring_.one();
        for (auto l : w.ls) {
            int g = std::abs(l) - 1;
            if (l > 0)
                out = ring_.mul(out, ring_.detInverse(g));
            else
                out = ring_.mul(out, ring_.fromPoly(genDet_[static_cast<std::size_t>(g)]));
        }
        return out;
    }
    // graded host: x_u = (s(x))_{det}
    return evaluate(a_->antipode(w), b_->det());
}

RepAlgebra::Rep RepAlgebra::evalLetter(const Word& w, int i, int j) const {
    if (i < 0) return wordDetInverse(w);
    return wordEntry(w, i, j);
}

RepAlgebra::Rep RepAlgebra::evaluate(const Word& w, const BMono& k) const {
    auto letters = b_->monoLetters(k);
    if (letters.empty()) return ring_.constant(a_->counit(w)); // x_{1_B} = eps(x) 1
    if (a_->kind() == AKind::FreeGroup) {
        Rep out = ring_.one();
        for (auto [i, j] : letters) {
            out = ring_.mul(out, evalLetter(w, i, j));
            if (out.isZero()) break;
        }
        return out;
    }
    const int m = static_cast<int>(letters.size());
    Rep out = ring_.zero();
    for (const auto& [tuple, c] : a_->sweedler(w, m)) {
        Rep term = ring_.constant(c);
        for (int pos = 0; pos < m && !term.isZero(); ++pos)
            term = ring_.mul(term, evalLetter(tuple[static_cast<std::size_t>(pos)],
                                              letters[static_cast<std::size_t>(pos)].first,
                                              letters[static_cast<std::size_t>(pos)].second));
        out = ring_.add(out, term);
    }
    return out;
}

RepAlgebra::Rep RepAlgebra::evaluate(const AElem& x, const BAlgebra::El& b) const {
    Rep out = ring_.zero();
    const int upow = b.pows.empty() ? 0 : b.pows[0];
    for (const auto& [mono, cb] : b.num.terms()) {
        BMono k{mono, upow};
        for (const auto& [w, cx] : x.terms()) out = ring_.add(out, ring_.scale(evaluate(w, k), cb * cx));
    }
    return out;
}

QRing::El RepAlgebra::embedRep(const Rep& e) const {
    QRing::El out;
    out.num = e.num;
    out.pows.assign(abRing_.invDets.size(), 0);
    for (std::size_t i = 0; i < e.pows.size(); ++i) out.pows[i] = e.pows[i];
    return abRing_.canonical(out);
}

QRing::El RepAlgebra::embedB(const BAlgebra::El& b) const {
    const int bShift = a_->rank() * n_ * n_;
    QRing::El out;
    for (const auto& [m, c] : b.num.terms()) {
        Mono sm = m;
        for (auto& [v, e] : sm.f) v += bShift;
        out.num.add(sm, c);
    }
    out.pows.assign(abRing_.invDets.size(), 0);
    if (!b.pows.empty() && b.pows[0] != 0) {
        if (!b_->hasU()) throw std::logic_error("unexpected u-power");
        out.pows.back() = b.pows[0];
    }
    return abRing_.canonical(out);
}

QRing::El RepAlgebra::coaction(const Rep& e) const {
    QRing::El out = abRing_.zero();
    for (const auto& [m, c] : e.num.terms()) {
        QRing::El term = abRing_.constant(c);
        for (auto [v, ex] : m.f)
            for (int k = 0; k < ex; ++k) term = abRing_.mul(term, coactionVar_[static_cast<std::size_t>(v)]);
        out = abRing_.add(out, term);
    }
    // det-inverse factors are coinvariant: (g)_u (x) 1
    if (!e.pows.empty()) {
        QRing::El dets = abRing_.one();
        for (std::size_t g = 0; g < e.pows.size(); ++g)
            for (int k = 0; k < e.pows[g]; ++k)
                dets = abRing_.mul(dets, abRing_.detInverse(static_cast<int>(g)));
        out = abRing_.mul(out, dets);
    }
    return out;
}

bool RepAlgebra::isInvariant(const Rep& e) const { return abRing_.equal(coaction(e), embedRep(e)); }

std::vector<RepAlgebra::ABTerm> RepAlgebra::splitAB(const QRing::El& e) const {
    const int bShift = a_->rank() * n_ * n_;
    const bool glB = b_->hasU();
    const int bUpow = (glB && !e.pows.empty()) ? e.pows.back() : 0;
    std::vector<int> xpows(ring_.invDets.size(), 0);
    for (std::size_t i = 0; i < ring_.invDets.size(); ++i) xpows[i] = e.pows[i];
    std::vector<ABTerm> out;
    for (const auto& [m, c] : e.num.terms()) {
        ABTerm t;
        t.coeff = c;
        t.bPart.upow = bUpow;
        Mono xm;
        for (auto [v, ex] : m.f) {
            if (v < bShift)
                xm.f.emplace_back(v, ex);
            else
                t.bPart.m.f.emplace_back(v - bShift, ex);
        }
        t.repPart = Rep{Poly::term(xm), xpows};
        out.push_back(std::move(t));
    }
    return out;
}

void RepAlgebra::validatePoint(const std::vector<RatMat>& mats) const {
    if (a_->graded()) throw std::domain_error("point evaluation requires an ungraded host algebra");
    if (static_cast<int>(mats.size()) != a_->rank())
        throw std::domain_error("expected one matrix per generator");
    for (int g = 0; g < a_->rank(); ++g) {
        const auto& m = mats[static_cast<std::size_t>(g)];
        const std::string name = a_->generatorNames()[static_cast<std::size_t>(g)];
        if (m.rows() != static_cast<std::size_t>(n_) || m.cols() != static_cast<std::size_t>(n_))
            throw std::domain_error("matrix for generator '" + name + "' has the wrong shape");
        switch (b_->matrixKind()) {
            case MatrixKind::GL:
                if (!m.inverse())
                    throw std::domain_error("matrix for generator '" + name + "' is singular");
                break;
            case MatrixKind::SL: {
                std::vector<Rational> full(static_cast<std::size_t>(a_->rank()) * n_ * n_, Rational(0));
                for (std::size_t i = 0; i < m.rows(); ++i)
                    for (std::size_t j = 0; j < m.cols(); ++j)
                        full[static_cast<std::size_t>(xvarIndex(g, static_cast<int>(i), static_cast<int>(j)))] =
                            m.at(i, j);
                if (polyEval(genDet_[static_cast<std::size_t>(g)], full) != 1)
                    throw std::domain_error("matrix for generator '" + name + "' does not have determinant 1");
                break;
            }
            case MatrixKind::O: {
                if (!(m * m.transposed() == RatMat::identity(m.rows())))
                    throw std::domain_error("matrix for generator '" + name + "' is not orthogonal");
                break;
            }
        }
    }
}

Rational RepAlgebra::evaluateAtPoint(const Rep& e, const std::vector<RatMat>& mats) const {
    validatePoint(mats);
    std::vector<Rational> pt;
    pt.reserve(static_cast<std::size_t>(a_->rank()) * n_ * n_);
    for (int g = 0; g < a_->rank(); ++g)
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                pt.push_back(mats[static_cast<std::size_t>(g)].at(static_cast<std::size_t>(i),
                                                                  static_cast<std::size_t>(j)));
    return ring_.evalAt(e, pt);
}

std::vector<std::pair<Rational, std::vector<std::string>>> RepAlgebra::termFactors(const Rep& e) const {
    std::vector<std::pair<Rational, std::vector<std::string>>> out;
    std::vector<std::string> detFactors;
    for (std::size_t g = 0; g < e.pows.size(); ++g)
        for (int k = 0; k < e.pows[g]; ++k)
            detFactors.push_back("det(" + a_->generatorNames()[g] + ")^-1");
    for (const auto& [m, c] : e.num.terms()) {
        std::vector<std::string> fs;
        for (auto [v, ex] : m.f) {
            std::string f = ring_.vars.name(v);
            if (ex != 1) f += "^" + std::to_string(ex);
            fs.push_back(f);
        }
        fs.insert(fs.end(), detFactors.begin(), detFactors.end());
        if (fs.empty()) fs.push_back("1");
        out.emplace_back(c, std::move(fs));
    }
    return out;
}

std::string RepAlgebra::print(const Rep& e) const {
    auto terms = termFactors(e);
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, fs] : terms) {
        Rational a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        out += toString(a);
        for (const auto& f : fs) out += "*" + f;
        first = false;
    }
    return out;
}

} // namespace foxbrack
