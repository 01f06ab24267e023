#include "foxbrack/invariants.hpp"

#include <stdexcept>

namespace foxbrack {

namespace {

void requireUngraded(const AAlgebra& A) {
    if (A.graded()) throw std::invalid_argument("class operations need an ungraded host algebra");
}

// ad^r(z, w) = s(w') z w'' extended bilinearly (ungraded)
AElem adRight(const AAlgebra& A, const AElem& z, const AElem& w) {
    AElem out;
    for (const auto& [kw, cw] : w.terms())
        for (const auto& [pp, c2] : A.comul(kw))
            out.add(A.mul(A.mul(A.antipode(pp.first), z), AElem::term(pp.second)), cw * c2);
    return out;
}

} // namespace

ConjElem classOf(const AAlgebra& A, const AElem& x) {
    requireUngraded(A);
    ConjElem out;
    for (const auto& [k, c] : x.terms()) out.add(A.conjClass(k), c);
    return out;
}

ATensor2 theta(const FoxPairing& rho, const Word& x, const Word& y) {
    const AAlgebra& A = rho.A();
    requireUngraded(A);
    ATensor2 out;
    for (const auto& [xp, cx] : A.sweedler(x, 2)) {
        for (const auto& [yp, cy] : A.sweedler(y, 2)) {
            AElem left = adRight(A, AElem::term(xp[0]), rho.eval(xp[1], yp[0]));
            for (const auto& [l, cl] : left.terms()) out.add({l, yp[1]}, cx * cy * cl);
        }
    }
    return out;
}

ConjElem anglePair(const FoxPairing& rho, const Word& x, const Word& y) {
    const AAlgebra& A = rho.A();
    ConjElem out;
    for (const auto& [pr, c] : theta(rho, x, y)) out.add(A.conjClass(A.mulWords(pr.first, pr.second)), c);
    return out;
}

ConjElem angleSPair(const FoxPairing& rho, const Word& x, const Word& y) {
    const AAlgebra& A = rho.A();
    ConjElem out;
    for (const auto& [pr, c] : theta(rho, x, y))
        out.add(A.conjClass(A.mulWords(pr.first, A.inverseWord(pr.second))), c);
    return out;
}

LinComb<std::pair<Word, Word>> barPair(const FoxPairing& rho, const Word& x, const Word& y) {
    const AAlgebra& A = rho.A();
    requireUngraded(A);
    LinComb<std::pair<Word, Word>> out;
    for (const auto& [xp, cx] : A.sweedler(x, 2))
        for (const auto& [yp, cy] : A.sweedler(y, 2)) {
            Rational eps = A.counit(rho.eval(xp[1], yp[0]));
            if (eps == 0) continue;
            out.add({A.conjClass(xp[0]), A.conjClass(yp[1])}, cx * cy * eps);
        }
    return out;
}

RepAlgebra::Rep smile(const RepAlgebra& R, const Biderivation& d, const BAlgebra::El& b,
                      const BAlgebra::El& c, const ATensor2& v) {
    const BAlgebra& B = R.B();
    if (!B.isCosymmetric(b) || !B.isCosymmetric(c))
        throw std::invalid_argument("smile requires cosymmetric arguments");
    RepAlgebra::Rep out = R.zero();
    for (const auto& [bp, cb] : B.sweedler(b, 2)) {
        for (const auto& [cp, cc] : B.sweedler(c, 2)) {
            Rational k = d.bullet(bp[0], cp[0]) * cb * cc;
            if (k == 0) continue;
            for (const auto& [pr, cv] : v) {
                auto term = R.mul(R.evaluate(AElem::term(pr.first), B.toEl(bp[1])),
                                  R.evaluate(AElem::term(pr.second), B.toEl(cp[1])));
                out = R.add(out, R.scale(term, k * cv));
            }
        }
    }
    return out;
}

bool checkInvariantBracket(const BracketEngine& e, const Word& x, const Word& y,
                           const BAlgebra::El& b, const BAlgebra::El& c) {
    const RepAlgebra& R = e.R();
    auto lhs = e.bracketGenerators(AElem::term(x), b, AElem::term(y), c);
    auto rhs = smile(R, e.bullet(), b, c, theta(e.rho(), x, y));
    return R.equal(lhs, rhs);
}

bool checkClassicalDisplay(const BracketEngine& e, const Word& x, const Word& y) {
    const RepAlgebra& R = e.R();
    const BAlgebra& B = R.B();
    const BAlgebra::El t = e.traceElement();
    auto lhs = e.bracketGenerators(AElem::term(x), t, AElem::term(y), t);

    auto evalClasses = [&](const ConjElem& cls) {
        RepAlgebra::Rep out = R.zero();
        for (const auto& [w, c] : cls.terms()) out = R.add(out, R.scale(R.evaluate(AElem::term(w), t), c));
        return out;
    };

    RepAlgebra::Rep rhs;
    switch (B.matrixKind()) {
        case MatrixKind::GL:
            rhs = evalClasses(anglePair(e.rho(), x, y));
            break;
        case MatrixKind::SL: {
            rhs = evalClasses(anglePair(e.rho(), x, y));
            RepAlgebra::Rep corr = R.zero();
            for (const auto& [pr, c] : barPair(e.rho(), x, y)) {
                auto term = R.mul(R.evaluate(AElem::term(pr.first), t),
                                  R.evaluate(AElem::term(pr.second), t));
                corr = R.add(corr, R.scale(term, c));
            }
            rhs = R.sub(rhs, R.scale(corr, Rational(1, B.N())));
            break;
        }
        case MatrixKind::O: {
            auto plain = evalClasses(anglePair(e.rho(), x, y));
            auto twisted = evalClasses(angleSPair(e.rho(), x, y));
            rhs = R.scale(R.sub(plain, twisted), Rational(1, 2));
            break;
        }
    }
    return R.equal(lhs, rhs);
}

} // namespace foxbrack
