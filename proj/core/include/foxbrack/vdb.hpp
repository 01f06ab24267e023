#pragma once

#include "foxbrack/fox.hpp"
#include "foxbrack/repalg.hpp"
#include "foxbrack/tritensor.hpp"

namespace foxbrack {

// n-graded double bracket A (x) A -> A (x) A. Either derived from an
// antisymmetric Fox pairing via
//   <<x,y>> = +- y' s(w') x' (x) w''   with w = rho(x'', y''),
// or a table on generator pairs extended by the double Leibniz rules
// (group case; tensor-algebra tables evaluate on single letters only and
// serve as hand-built controls).
class DoubleBracket {
public:
    static DoubleBracket fromFox(const FoxPairing& rho);
    static DoubleBracket fromTable(const AAlgebra& A, int degree,
                                   std::map<std::pair<int, int>, ATensor2> table);

    const AAlgebra& A() const { return *a_; }
    int degree() const { return n_; }

    ATensor2 eval(const Word& x, const Word& y) const;
    ATensor2 eval(const AElem& x, const AElem& y) const;

private:
    DoubleBracket() = default;
    const AAlgebra* a_ = nullptr;
    int n_ = 0;
    std::optional<FoxPairing> rho_;
    std::map<std::pair<int, int>, ATensor2> table_;
};

// rho = (eps (x) id) o <<-,->>
AElem recoverFox(const DoubleBracket& db, const Word& x, const Word& y);

// n-antisymmetry: <<y,x>> = -(-1)^{|x|_n|y|_n + |l||r|} r (x) l summed over
// <<x,y>> = l (x) r
bool checkNAntisymmetry(const DoubleBracket& db, const Word& x, const Word& y);

// VdB bracket pushed into A_B (B = GL target): {x_{ij}, y_{uv}} =
// <<x,y>>^l_{uj} <<x,y>>^r_{iv}
RepAlgebra::Rep bracketAN(const DoubleBracket& db, const RepAlgebra& R, const AElem& x, int i, int j,
                          const AElem& y, int u, int v);

// triple bracket sum_i P_312^i (<<,>> (x) id)(id (x) <<,>>) P_{312,n}^{-i}
ATensor3 tripleBracket(const DoubleBracket& db, const Word& x, const Word& y, const Word& z);

// tripleS: triple bracket = P_213 . tritensor . P_{213,n} for Fox-derived
// double brackets
bool checkTripleS(const FoxPairing& rho, const Word& x, const Word& y, const Word& z);

enum class Reducibility { Yes, No, Inconclusive };

// x' s(<<x'',y'>>^l) (x) <<x'',y'>>^r s(y'') in Delta(A)? Group algebras
// decide by diagonal support; tensor algebras by an exact linear solve in
// the relevant homogeneous degree.
Reducibility reducibilityCheck(const DoubleBracket& db, const Word& x, const Word& y,
                               int degreeGuard = 18);

} // namespace foxbrack
