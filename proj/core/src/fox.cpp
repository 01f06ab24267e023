#include "foxbrack/fox.hpp"

#include <stdexcept>

namespace foxbrack {

FoxPairing FoxPairing::fromTable(const AAlgebra& A, int degree,
                                 std::map<std::pair<int, int>, AElem> table) {
    if (A.kind() == AKind::FreeGroup && degree != 0)
        throw std::invalid_argument("group-algebra pairings have degree 0");
    FoxPairing out;
    out.a_ = &A;
    out.n_ = degree;
    out.table_ = std::move(table);
    for (const auto& [gh, val] : out.table_) {
        for (const auto& [w, c] : val.terms()) {
            // degree bookkeeping: |rho(g,h)| = |g| + |h| + n on nonzero values
            Degree want = A.degree(A.generator(gh.first)) + A.degree(A.generator(gh.second)) + degree;
            if (A.degree(w) != want)
                throw std::invalid_argument("table value off the declared degree");
        }
    }
    return out;
}

FoxPairing FoxPairing::trivial(const AAlgebra& A, const AElem& a) {
    FoxPairing out;
    out.a_ = &A;
    out.n_ = A.degreeOf(a);
    out.closedForm_ = true;
    out.closedElement_ = a;
    return out;
}

const AElem& FoxPairing::tableValue(int g, int h) const {
    auto it = table_.find({g, h});
    if (it == table_.end())
        throw std::out_of_range("pairing table is missing the generator pair (" +
                                a_->generatorNames()[static_cast<std::size_t>(g)] + "," +
                                a_->generatorNames()[static_cast<std::size_t>(h)] + ")");
    return it->second;
}

AElem FoxPairing::evalWords(const Word& x, const Word& y) const {
    if (closedForm_) {
        // rho_a(x,y) = (x - eps(x)) a (y - eps(y))
        AElem xe = AElem::term(x) - AElem::term(a_->unitWord(), a_->counit(x));
        AElem ye = AElem::term(y) - AElem::term(a_->unitWord(), a_->counit(y));
        return a_->mul(a_->mul(xe, closedElement_), ye);
    }
    {
        std::scoped_lock lock(memo_->mutex);
        auto it = memo_->vals.find({x, y});
        if (it != memo_->vals.end()) return it->second;
    }
    AElem out;
    if (x.empty() || y.empty()) {
        // rho(1,-) = rho(-,1) = 0
    } else if (x.length() > 1) {
        // rho(uv, z) = rho(u,z) eps(v) + u rho(v,z)
        Word head{{x.ls.front()}};
        Word tail{{x.ls.begin() + 1, x.ls.end()}};
        out = evalWords(head, y) * a_->counit(tail) +
              a_->mul(AElem::term(head), evalWords(tail, y));
    } else if (y.length() > 1) {
        // rho(x, yz) = rho(x,y) z + eps(y) rho(x,z)
        Word head{{y.ls.front()}};
        Word tail{{y.ls.begin() + 1, y.ls.end()}};
        out = a_->mul(evalWords(x, head), AElem::term(tail)) +
              evalWords(x, tail) * a_->counit(head);
    } else {
        int g = x.ls[0], h = y.ls[0];
        if (g > 0 && h > 0) {
            out = tableValue(g - 1, h - 1);
        } else if (g < 0) {
            // rho(g^{-1}, y) = -g^{-1} rho(g, y)
            out = a_->mul(AElem::term(x), evalWords(Word{{static_cast<std::int16_t>(-g)}}, y)) * Rational(-1);
        } else {
            // rho(x, h^{-1}) = -rho(x, h) h^{-1}
            out = a_->mul(evalWords(x, Word{{static_cast<std::int16_t>(-h)}}), AElem::term(y)) * Rational(-1);
        }
    }
    std::scoped_lock lock(memo_->mutex);
    return memo_->vals.emplace(std::make_pair(x, y), std::move(out)).first->second;
}

AElem FoxPairing::eval(const Word& x, const Word& y) const { return evalWords(x, y); }

AElem FoxPairing::eval(const AElem& x, const AElem& y) const {
    AElem out;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) out.add(evalWords(kx, ky), cx * cy);
    return out;
}

FoxPairing operator-(const FoxPairing& a, const FoxPairing& b) {
    if (a.a_ != b.a_ || a.n_ != b.n_) throw std::invalid_argument("pairing mismatch");
    std::map<std::pair<int, int>, AElem> table;
    for (int g = 0; g < a.a_->rank(); ++g)
        for (int h = 0; h < a.a_->rank(); ++h) {
            Word wg = a.a_->generator(g), wh = a.a_->generator(h);
            table[{g, h}] = a.eval(wg, wh) - b.eval(wg, wh);
        }
    return FoxPairing::fromTable(*a.a_, a.n_, std::move(table));
}

FoxPairing operator*(const FoxPairing& a, const Rational& c) {
    std::map<std::pair<int, int>, AElem> table;
    for (int g = 0; g < a.a_->rank(); ++g)
        for (int h = 0; h < a.a_->rank(); ++h)
            table[{g, h}] = a.eval(a.a_->generator(g), a.a_->generator(h)) * c;
    return FoxPairing::fromTable(*a.a_, a.n_, std::move(table));
}

AElem foxTransposeValue(const FoxPairing& rho, const Word& x, const Word& y) {
    const AAlgebra& A = rho.A();
    const int n = rho.degree();
    long sign = (static_cast<long>(A.degree(x)) + n) * (static_cast<long>(A.degree(y)) + n);
    return A.antipode(rho.eval(A.antipode(y), A.antipode(x))) * Rational(sign % 2 ? -1 : 1);
}

FoxPairing foxTranspose(const FoxPairing& rho) {
    const AAlgebra& A = rho.A();
    std::map<std::pair<int, int>, AElem> table;
    for (int g = 0; g < A.rank(); ++g)
        for (int h = 0; h < A.rank(); ++h)
            table[{g, h}] = foxTransposeValue(rho, A.generator(g), A.generator(h));
    return FoxPairing::fromTable(A, rho.degree(), std::move(table));
}

FoxPairing antisymmetrize(const FoxPairing& rho) { return rho - foxTranspose(rho); }

Report checkFox(const FoxPairing& rho, const std::vector<Word>& words, FoxTestOptions opts) {
    return checkFoxWith(
        rho.A(), rho.degree(), [&rho](const Word& x, const Word& y) { return rho.eval(x, y); }, words,
        opts);
}

} // namespace foxbrack
