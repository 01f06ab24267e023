#include "foxbrack/balanced.hpp"

namespace foxbrack {

Biderivation::Biderivation(const BAlgebra& B, RatMat iqTable) : b_(&B), iq_(std::move(iqTable)) {
    auto d = static_cast<std::size_t>(B.iqDim());
    if (iq_.rows() != d || iq_.cols() != d) throw std::invalid_argument("I/I^2 table has the wrong shape");
}

Rational Biderivation::bullet(const BAlgebra::El& b, const BAlgebra::El& c) const {
    return dot(b_->pClass(b), iq_.apply(b_->pClass(c)));
}

Rational Biderivation::bullet(const BMono& b, const BMono& c) const {
    return dot(b_->pClass(b), iq_.apply(b_->pClass(c)));
}

TraceLikeForm::TraceLikeForm(const BAlgebra& B, BAlgebra::El t)
    : form_(B, RatMat::identity(static_cast<std::size_t>(B.iqDim()))), t_(std::move(t)) {
    if (!B.isCosymmetric(t_)) throw TraceLikeError("element is not cosymmetric");
    auto psi = B.psiMatrix(t_);
    auto inv = psi.inverse();
    if (!inv) throw TraceLikeError("element is not infinitesimally nonsingular");
    // b .t c = (psi^{-1} p(b))(p(c)): the table is the inverse transpose
    form_ = Biderivation(B, inv->transposed());
}

BAlgebra::El wedge(const Biderivation& d, const BAlgebra::El& b, const BAlgebra::El& c) {
    const BAlgebra& B = d.B();
    BAlgebra::El out = B.ring().zero();
    for (const auto& [bp, cb] : B.sweedler(b, 2))
        for (const auto& [cp, cc] : B.sweedler(c, 2)) {
            Rational k = d.bullet(bp[0], cp[1]) * cb * cc;
            if (k == 0) continue;
            out = B.add(out, B.scale(B.mul(B.toEl(bp[1]), B.antipode(cp[0])), k));
        }
    return out;
}

BAlgebra::El wedgeAlt(const Biderivation& d, const BAlgebra::El& b, const BAlgebra::El& c) {
    const BAlgebra& B = d.B();
    BAlgebra::El out = B.ring().zero();
    for (const auto& [bp, cb] : B.sweedler(b, 2))
        for (const auto& [cp, cc] : B.sweedler(c, 2)) {
            Rational k = d.bullet(bp[1], cp[0]) * cb * cc;
            if (k == 0) continue;
            out = B.add(out, B.scale(B.mul(B.toEl(bp[0]), B.antipode(cp[1])), k));
        }
    return out;
}

Report checkBalanced(const Biderivation& d, const std::vector<BMono>& keys) {
    const BAlgebra& B = d.B();
    ReportBuilder rb("balanced");
    for (const auto& bk : keys) {
        for (const auto& ck : keys) {
            const std::string w = B.printKey(bk) + " , " + B.printKey(ck);

            rb.note("symmetry", d.bullet(bk, ck) == d.bullet(ck, bk), w);

            // (b . c'') s(c') c''' = (c . b'') s(b''') b'
            auto side = [&](const BMono& x, const BMono& y) {
                BAlgebra::El acc = B.ring().zero();
                for (const auto& [yp, cy] : B.sweedler(y, 3)) {
                    Rational k = d.bullet(B.toEl(x), B.toEl(yp[1])) * cy;
                    if (k == 0) continue;
                    acc = B.add(acc, B.scale(B.mul(B.antipode(yp[0]), B.toEl(yp[2])), k));
                }
                return acc;
            };
            rb.note("balanced", B.equal(side(bk, ck), side(ck, bk)), w);

            // (b'' . c') b' s(c'') = (c'' . b') s(c') b''
            BAlgebra::El lhs = B.ring().zero(), rhs = B.ring().zero();
            for (const auto& [bp, cb] : B.sweedler(bk, 2))
                for (const auto& [cp, cc] : B.sweedler(ck, 2)) {
                    Rational kl = d.bullet(bp[1], cp[0]) * cb * cc;
                    if (kl != 0) lhs = B.add(lhs, B.scale(B.mul(B.toEl(bp[0]), B.antipode(cp[1])), kl));
                    Rational kr = d.bullet(cp[1], bp[0]) * cb * cc;
                    if (kr != 0) rhs = B.add(rhs, B.scale(B.mul(B.antipode(cp[0]), B.toEl(bp[1])), kr));
                }
            rb.note("balanced-commutative-form", B.equal(lhs, rhs), w);
        }
    }
    return rb.take();
}

bool checkCyclic(const BAlgebra& B, const RatMat& table) {
    const int n = B.N();
    auto d = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    if (table.rows() != d || table.cols() != d) throw std::invalid_argument("table shape");
    // both sides live in span{t} (x) span{t}: compare coefficient arrays
    auto idx = [n](int i, int j) { return static_cast<std::size_t>(i * n + j); };
    for (int li = 0; li < n; ++li)
        for (int lj = 0; lj < n; ++lj)
            for (int mi = 0; mi < n; ++mi)
                for (int mj = 0; mj < n; ++mj) {
                    RatMat lhs(d, d), rhs(d, d);
                    // (l . m'') m' (x) m''' with Delta^2(m) = sum t_{mi p} (x) t_{pq} (x) t_{q mj}
                    for (int p = 0; p < n; ++p)
                        for (int q = 0; q < n; ++q)
                            lhs.at(idx(mi, p), idx(q, mj)) += table.at(idx(li, lj), idx(p, q));
                    // (m . l'') l''' (x) l'
                    for (int p = 0; p < n; ++p)
                        for (int q = 0; q < n; ++q)
                            rhs.at(idx(q, lj), idx(li, p)) += table.at(idx(mi, mj), idx(p, q));
                    if (!(lhs == rhs)) return false;
                }
    return true;
}

} // namespace foxbrack
