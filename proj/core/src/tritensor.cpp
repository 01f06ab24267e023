#include "foxbrack/tritensor.hpp"

namespace foxbrack {

ATensor3 permute3(const AAlgebra& A, const GradedPermutation& p, const ATensor3& t) {
    std::function<Degree(const Word&)> deg = [&A](const Word& w) { return A.degree(w); };
    return gradedPermute(p, t, deg);
}

ATensor3 digamma(const FoxPairing& rho, const Word& x, const Word& y, const Word& z) {
    const AAlgebra& A = rho.A();
    const long n = rho.degree();
    ATensor3 out;
    for (const auto& [xp, cx] : A.sweedler(x, 2)) {
        const Word &x1 = xp[0], &x2 = xp[1];
        for (const auto& [yp, cy] : A.sweedler(y, 2)) {
            const Word &y1 = yp[0], &y2 = yp[1];
            AElem w = rho.eval(x2, y2);
            for (const auto& [ww, cw] : w.terms()) {
                for (const auto& [wp, cw3] : A.sweedler(ww, 3)) {
                    const Word &w1 = wp[0], &w2 = wp[1], &w3 = wp[2];
                    AElem first;
                    first.add(A.mul(A.mul(AElem::term(y1), A.antipode(w1)), AElem::term(x1)));
                    for (const auto& [zp, cz] : A.sweedler(z, 2)) {
                        const Word &z1 = zp[0], &z2 = zp[1];
                        AElem v = rho.eval(w3, z2);
                        for (const auto& [vv, cv] : v.terms()) {
                            for (const auto& [vp, cv2] : A.sweedler(vv, 2)) {
                                const Word &v1 = vp[0], &v2 = vp[1];
                                long e = static_cast<long>(A.degree(y1)) * (A.degree(x) + n) +
                                         static_cast<long>(A.degree(z1)) * (A.degree(x2) + A.degree(y2)) +
                                         (static_cast<long>(A.degree(x1)) + A.degree(z1)) * A.degree(w1) +
                                         static_cast<long>(A.degree(w2)) * A.degree(v1);
                                Rational coeff = cx * cy * cw * cw3 * cz * cv * cv2 *
                                                 Rational(e % 2 ? -1 : 1);
                                AElem second =
                                    A.mul(A.mul(AElem::term(z1), A.antipode(v1)), AElem::term(w2));
                                for (const auto& [f1, c1] : first.terms())
                                    for (const auto& [f2, c2] : second.terms())
                                        out.add({f1, f2, v2}, coeff * c1 * c2);
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

ATensor3 digamma(const FoxPairing& rho, const ATensor3& t) {
    ATensor3 out;
    for (const auto& [k, c] : t.terms()) out.add(digamma(rho, k[0], k[1], k[2]), c);
    return out;
}

ATensor3 tritensorMap(const FoxPairing& rho, const Word& x, const Word& y, const Word& z) {
    const AAlgebra& A = rho.A();
    const int n = rho.degree();
    ATensor3 input = ATensor3::term({x, y, z});
    ATensor3 out;
    auto p312 = GradedPermutation::make(3, 1, 2, 0);
    auto p312nInv = GradedPermutation::make(3, 1, 2, n).inverse();
    ATensor3 permuted = input;
    for (int i = 0; i < 3; ++i) {
        ATensor3 piece = digamma(rho, permuted);
        for (int k = 0; k < i; ++k) piece = permute3(A, p312, piece);
        out += piece;
        permuted = permute3(A, p312nInv, permuted);
    }
    return out;
}

ATensor3 tritensorMap(const FoxPairing& rho, const AElem& x, const AElem& y, const AElem& z) {
    ATensor3 out;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms())
            for (const auto& [kz, cz] : z.terms())
                out.add(tritensorMap(rho, kx, ky, kz), cx * cy * cz);
    return out;
}

ATensor3 quasiPoissonTarget(const AAlgebra& A, const Word& x, const Word& y, const Word& z) {
    ATensor3 out;
    Word e = A.unitWord();
    Word xz = A.mulWords(x, z);
    Word yx = A.mulWords(y, x);
    Word zy = A.mulWords(z, y);
    out.add({e, y, xz}, Rational(1));
    out.add({yx, e, z}, Rational(1));
    out.add({x, zy, e}, Rational(1));
    out.add({y, z, x}, Rational(1));
    out.add({e, zy, x}, Rational(-1));
    out.add({y, e, xz}, Rational(-1));
    out.add({yx, z, e}, Rational(-1));
    out.add({x, y, z}, Rational(-1));
    return out;
}

bool isGerstenhaber(const FoxPairing& rho, const std::vector<Word>& words) {
    for (const auto& x : words)
        for (const auto& y : words)
            for (const auto& z : words)
                if (!tritensorMap(rho, x, y, z).isZero()) return false;
    return true;
}

bool isQuasiPoisson(const FoxPairing& rho, const std::vector<Word>& words) {
    if (rho.A().graded() || rho.degree() != 0) return false;
    for (const auto& x : words)
        for (const auto& y : words)
            for (const auto& z : words)
                if (tritensorMap(rho, x, y, z) != quasiPoissonTarget(rho.A(), x, y, z)) return false;
    return true;
}

} // namespace foxbrack
