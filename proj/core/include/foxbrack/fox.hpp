#pragma once

#include "foxbrack/report.hpp"
#include "foxbrack/words.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace foxbrack {

// A Fox pairing of degree n in the host algebra A: bilinear, a twisted
// derivation in each slot. Two storage kinds: a table of values on positive
// generator pairs (extended by the derivation rules, inverse letters by the
// derived rules), or the closed form rho_a(x,y) = (x - eps(x)) a (y - eps(y)).
class FoxPairing {
public:
    static FoxPairing fromTable(const AAlgebra& A, int degree,
                                std::map<std::pair<int, int>, AElem> table);
    static FoxPairing trivial(const AAlgebra& A, const AElem& a);

    const AAlgebra& A() const { return *a_; }
    int degree() const { return n_; }

    AElem eval(const AElem& x, const AElem& y) const;
    AElem eval(const Word& x, const Word& y) const;

    // table value on a positive generator pair; throws when absent
    const AElem& tableValue(int g, int h) const;

    // scaled pointwise combination (used by antisymmetrization)
    friend FoxPairing operator-(const FoxPairing& a, const FoxPairing& b);
    friend FoxPairing operator*(const FoxPairing& a, const Rational& c);

private:
    FoxPairing() = default;
    const AAlgebra* a_ = nullptr;
    int n_ = 0;
    bool closedForm_ = false;
    AElem closedElement_;
    std::map<std::pair<int, int>, AElem> table_;
    // single-writer memo shared by copies of the same pairing
    struct Memo {
        std::mutex mutex;
        std::map<std::pair<Word, Word>, AElem> vals;
    };
    std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();

    AElem evalWords(const Word& x, const Word& y) const;
};

// rho-bar(x,y) = (-1)^{|x|_n |y|_n} s^{-1} rho(s(y), s(x)), materialized as a
// generator table (the transpose of a Fox pairing is again a Fox pairing).
FoxPairing foxTranspose(const FoxPairing& rho);

// rho - rho-bar, always antisymmetric over an involutive host
FoxPairing antisymmetrize(const FoxPairing& rho);

// value-level transpose for spot checks
AElem foxTransposeValue(const FoxPairing& rho, const Word& x, const Word& y);

struct FoxTestOptions {
    bool declaredAntisymmetric = false;
};

// Verifies the two derivation rules on all triples from the word set, the
// antipode compatibility rho(s(x), s(y)) = s(x') rho(x'', y') s(y''), degree
// bookkeeping, and (when declared) antisymmetry of rho and of eps.rho.
// The callback form exists so that validation tests can feed corrupted
// evaluators through the same checks.
template <class EvalFn>
Report checkFoxWith(const AAlgebra& A, int n, EvalFn&& rho, const std::vector<Word>& words,
                    FoxTestOptions opts = {});

Report checkFox(const FoxPairing& rho, const std::vector<Word>& words, FoxTestOptions opts = {});

template <class EvalFn>
Report checkFoxWith(const AAlgebra& A, int n, EvalFn&& rho, const std::vector<Word>& words,
                    FoxTestOptions opts) {
    ReportBuilder rb("fox-pairing");
    auto evalEl = [&](const AElem& x, const AElem& y) {
        AElem out;
        for (const auto& [kx, cx] : x.terms())
            for (const auto& [ky, cy] : y.terms()) out.add(rho(kx, ky), cx * cy);
        return out;
    };
    for (const auto& x : words) {
        for (const auto& y : words) {
            const std::string w = A.printWord(x) + " , " + A.printWord(y);

            AElem val = rho(x, y);
            bool degOk = true;
            for (const auto& [k, c] : val.terms())
                if (A.degree(k) != A.degree(x) + A.degree(y) + n) degOk = false;
            rb.note("degree", degOk, w);

            // rho(s x, s y) = s(x') rho(x'', y') s(y'')
            AElem lhs = evalEl(A.antipode(x), A.antipode(y));
            AElem rhs;
            for (const auto& [px, cx] : A.comul(x))
                for (const auto& [py, cy] : A.comul(y)) {
                    AElem term = A.mul(A.antipode(px.first),
                                       A.mul(rho(px.second, py.first), A.antipode(py.second)));
                    rhs.add(term * (cx * cy));
                }
            rb.note("antipode-compat", lhs == rhs, w);

            if (opts.declaredAntisymmetric) {
                long sg = (static_cast<long>(A.degree(x)) + n) * (A.degree(y) + n);
                AElem bar = A.antipode(evalEl(A.antipode(y), A.antipode(x))) * Rational(sg % 2 ? -1 : 1);
                rb.note("antisymmetry", bar == -val, w);
                Rational flip = A.counit(rho(y, x)) * Rational(sg % 2 ? -1 : 1);
                rb.note("counit-antisymmetry", A.counit(val) == -flip, w);
            }

            for (const auto& z : words) {
                const std::string w3 = w + " , " + A.printWord(z);
                // rho(x, yz) = rho(x,y) z + eps(y) rho(x,z)
                AElem left = rho(x, A.mulWords(y, z));
                AElem right = A.mul(rho(x, y), AElem::term(z)) + rho(x, z) * A.counit(y);
                rb.note("right-derivation", left == right, w3);
                // rho(xy, z) = rho(x,z) eps(y) + x rho(y,z)
                AElem left2 = rho(A.mulWords(x, y), z);
                AElem right2 = rho(x, z) * A.counit(y) + A.mul(AElem::term(x), rho(y, z));
                rb.note("left-derivation", left2 == right2, w3);
            }
        }
    }
    return rb.take();
}

} // namespace foxbrack
