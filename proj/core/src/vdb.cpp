#include "foxbrack/vdb.hpp"

#include <stdexcept>

namespace foxbrack {

DoubleBracket DoubleBracket::fromFox(const FoxPairing& rho) {
    DoubleBracket out;
    out.a_ = &rho.A();
    out.n_ = rho.degree();
    out.rho_ = rho;
    return out;
}

DoubleBracket DoubleBracket::fromTable(const AAlgebra& A, int degree,
                                       std::map<std::pair<int, int>, ATensor2> table) {
    DoubleBracket out;
    out.a_ = &A;
    out.n_ = degree;
    out.table_ = std::move(table);
    return out;
}

namespace {

ATensor2 outerLeft(const AAlgebra& A, const Word& b, const ATensor2& t) {
    ATensor2 out;
    for (const auto& [pr, c] : t.terms()) out.add({A.mulWords(b, pr.first), pr.second}, c);
    return out;
}
ATensor2 outerRight(const AAlgebra& A, const ATensor2& t, const Word& c) {
    ATensor2 out;
    for (const auto& [pr, cc] : t.terms()) out.add({pr.first, A.mulWords(pr.second, c)}, cc);
    return out;
}
ATensor2 innerLeft(const AAlgebra& A, const Word& a, const ATensor2& t) {
    ATensor2 out;
    for (const auto& [pr, c] : t.terms()) out.add({pr.first, A.mulWords(a, pr.second)}, c);
    return out;
}
ATensor2 innerRight(const AAlgebra& A, const ATensor2& t, const Word& b) {
    ATensor2 out;
    for (const auto& [pr, c] : t.terms()) out.add({A.mulWords(pr.first, b), pr.second}, c);
    return out;
}

} // namespace

ATensor2 DoubleBracket::eval(const Word& x, const Word& y) const {
    const AAlgebra& A = *a_;
    if (rho_) {
        // <<x,y>> = (-1)^{|y'||x|_n + |x'||w'|} y' s(w') x' (x) w'', w = rho(x'',y'')
        ATensor2 out;
        const long n = n_;
        for (const auto& [xp, cx] : A.sweedler(x, 2)) {
            for (const auto& [yp, cy] : A.sweedler(y, 2)) {
                AElem w = rho_->eval(xp[1], yp[1]);
                for (const auto& [ww, cw] : w.terms()) {
                    for (const auto& [wp, c2] : A.sweedler(ww, 2)) {
                        long e = static_cast<long>(A.degree(yp[0])) * (A.degree(x) + n) +
                                 static_cast<long>(A.degree(xp[0])) * A.degree(wp[0]);
                        AElem first = A.mul(A.mul(AElem::term(yp[0]), A.antipode(wp[0])),
                                            AElem::term(xp[0]));
                        Rational coeff = cx * cy * cw * c2 * Rational(e % 2 ? -1 : 1);
                        for (const auto& [f, cf] : first.terms()) out.add({f, wp[1]}, coeff * cf);
                    }
                }
            }
        }
        return out;
    }
    // table kind
    if (x.empty() || y.empty()) return {};
    if (A.kind() == AKind::TensorAlgebra) {
        if (x.length() != 1 || y.length() != 1)
            throw std::logic_error("table double brackets on the tensor algebra evaluate on letters only");
        auto it = table_.find({x.ls[0] - 1, y.ls[0] - 1});
        if (it == table_.end()) throw std::out_of_range("double bracket table is missing a pair");
        return it->second;
    }
    if (x.length() > 1) {
        // <<ab, c>> = a * <<b,c>> + <<a,c>> * b (inner structure)
        Word head{{x.ls.front()}};
        Word tail{{x.ls.begin() + 1, x.ls.end()}};
        return innerLeft(A, head, eval(tail, y)) + innerRight(A, eval(head, y), tail);
    }
    if (y.length() > 1) {
        // <<a, bc>> = b <<a,c>> + <<a,b>> c (outer structure)
        Word head{{y.ls.front()}};
        Word tail{{y.ls.begin() + 1, y.ls.end()}};
        return outerLeft(A, head, eval(x, tail)) + outerRight(A, eval(x, head), tail);
    }
    int g = x.ls[0], h = y.ls[0];
    if (g > 0 && h > 0) {
        auto it = table_.find({g - 1, h - 1});
        if (it == table_.end()) throw std::out_of_range("double bracket table is missing a pair");
        return it->second;
    }
    if (g < 0) {
        Word ginv = x;
        ATensor2 inner = eval(Word{{static_cast<std::int16_t>(-g)}}, y);
        // <<g^{-1}, y>> = - (g^{-1} * <<g,y>>) * g^{-1}
        return innerRight(A, innerLeft(A, ginv, inner), ginv) * Rational(-1);
    }
    Word hinv = y;
    ATensor2 inner = eval(x, Word{{static_cast<std::int16_t>(-h)}});
    // <<x, h^{-1}>> = - h^{-1} <<x,h>> h^{-1}
    return outerRight(A, outerLeft(A, hinv, inner), hinv) * Rational(-1);
}

ATensor2 DoubleBracket::eval(const AElem& x, const AElem& y) const {
    ATensor2 out;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) out.add(eval(kx, ky), cx * cy);
    return out;
}

AElem recoverFox(const DoubleBracket& db, const Word& x, const Word& y) {
    const AAlgebra& A = db.A();
    AElem out;
    for (const auto& [pr, c] : db.eval(x, y)) out.add(pr.second, c * A.counit(pr.first));
    return out;
}

bool checkNAntisymmetry(const DoubleBracket& db, const Word& x, const Word& y) {
    const AAlgebra& A = db.A();
    const long n = db.degree();
    ATensor2 lhs = db.eval(y, x);
    ATensor2 rhs;
    long base = (static_cast<long>(A.degree(x)) + n) * (A.degree(y) + n);
    for (const auto& [pr, c] : db.eval(x, y)) {
        long e = base + static_cast<long>(A.degree(pr.first)) * A.degree(pr.second);
        rhs.add({pr.second, pr.first}, c * Rational(e % 2 ? 1 : -1));
    }
    return lhs == rhs;
}

RepAlgebra::Rep bracketAN(const DoubleBracket& db, const RepAlgebra& R, const AElem& x, int i, int j,
                          const AElem& y, int u, int v) {
    RepAlgebra::Rep out = R.zero();
    for (const auto& [pr, c] : db.eval(x, y)) {
        auto term = R.mul(R.wordEntry(pr.first, u, j), R.wordEntry(pr.second, i, v));
        out = R.add(out, R.scale(term, c));
    }
    return out;
}

ATensor3 tripleBracket(const DoubleBracket& db, const Word& x, const Word& y, const Word& z) {
    const AAlgebra& A = db.A();
    const int n = db.degree();
    auto core = [&](const ATensor3& t) {
        ATensor3 out;
        for (const auto& [k, c] : t.terms()) {
            // (id (x) <<,>>) then (<<,>> (x) id)
            for (const auto& [yz, c1] : db.eval(k[1], k[2])) {
                for (const auto& [xl, c2] : db.eval(k[0], yz.first)) {
                    out.add({xl.first, xl.second, yz.second}, c * c1 * c2);
                }
            }
        }
        return out;
    };
    ATensor3 input = ATensor3::term({x, y, z});
    ATensor3 out;
    auto p312 = GradedPermutation::make(3, 1, 2, 0);
    auto p312nInv = GradedPermutation::make(3, 1, 2, n).inverse();
    ATensor3 permuted = input;
    for (int it = 0; it < 3; ++it) {
        ATensor3 piece = core(permuted);
        for (int k = 0; k < it; ++k) piece = permute3(A, p312, piece);
        out += piece;
        permuted = permute3(A, p312nInv, permuted);
    }
    return out;
}

bool checkTripleS(const FoxPairing& rho, const Word& x, const Word& y, const Word& z) {
    const AAlgebra& A = rho.A();
    const int n = rho.degree();
    auto db = DoubleBracket::fromFox(rho);
    auto p213 = GradedPermutation::make(2, 1, 3, 0);
    auto p213n = GradedPermutation::make(2, 1, 3, n);

    ATensor3 lhs = tripleBracket(db, x, y, z);
    ATensor3 inner = permute3(A, p213n, ATensor3::term({x, y, z}));
    ATensor3 rhs;
    for (const auto& [k, c] : inner.terms()) rhs.add(tritensorMap(rho, k[0], k[1], k[2]), c);
    rhs = permute3(A, p213, rhs);
    return lhs == rhs;
}

Reducibility reducibilityCheck(const DoubleBracket& db, const Word& x, const Word& y, int degreeGuard) {
    const AAlgebra& A = db.A();
    ATensor2 expr;
    for (const auto& [xp, cx] : A.sweedler(x, 2)) {
        for (const auto& [yp, cy] : A.sweedler(y, 2)) {
            for (const auto& [pr, c] : db.eval(xp[1], yp[0])) {
                AElem left = A.mul(AElem::term(xp[0]), A.antipode(pr.first));
                AElem right = A.mul(AElem::term(pr.second), A.antipode(yp[1]));
                for (const auto& [l, cl] : left.terms())
                    for (const auto& [r, cr] : right.terms()) expr.add({l, r}, cx * cy * c * cl * cr);
            }
        }
    }
    if (expr.isZero()) return Reducibility::Yes;
    if (A.kind() == AKind::FreeGroup) {
        // Delta(A) is spanned by the diagonal tensors g (x) g
        for (const auto& [pr, c] : expr.terms())
            if (!(pr.first == pr.second)) return Reducibility::No;
        return Reducibility::Yes;
    }
    // tensor algebra: solve over the Delta-images of the basis words in the
    // total degree of the expression
    int totalDeg = -1;
    for (const auto& [pr, c] : expr.terms()) {
        int d = A.degree(pr.first) + A.degree(pr.second);
        if (totalDeg < 0) totalDeg = d;
        if (d != totalDeg) return Reducibility::No; // Delta(A) terms are homogeneous
    }
    if (totalDeg > degreeGuard) return Reducibility::Inconclusive;
    std::vector<Word> basis;
    for (const auto& w : A.wordsUpTo(totalDeg))
        if (A.degree(w) == totalDeg) basis.push_back(w);
    // assemble the linear system over pair-keys
    std::map<std::pair<Word, Word>, std::size_t> rowIndex;
    std::vector<ATensor2> images;
    for (const auto& w : basis) {
        ATensor2 img;
        for (const auto& [pr, c] : A.comul(w)) img.add(pr, c);
        images.push_back(std::move(img));
        for (const auto& [pr, c] : images.back()) rowIndex.emplace(pr, rowIndex.size());
    }
    for (const auto& [pr, c] : expr.terms()) rowIndex.emplace(pr, rowIndex.size());
    RatMat mat(rowIndex.size(), basis.size());
    RatVec rhs(rowIndex.size(), Rational(0));
    for (std::size_t col = 0; col < images.size(); ++col)
        for (const auto& [pr, c] : images[col]) mat.at(rowIndex.at(pr), col) = c;
    for (const auto& [pr, c] : expr.terms()) rhs[rowIndex.at(pr)] = c;
    return solveLinear(mat, rhs) ? Reducibility::Yes : Reducibility::No;
}

} // namespace foxbrack
