#pragma once

#include "foxbrack/matrix_hopf.hpp"
#include "foxbrack/words.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace foxbrack {

// The representation algebra A_B realized concretely: one N x N symbol
// matrix per generator of A, with the variant's matrix relations (GL:
// inverted determinants; SL: det-1; O: orthogonality) for ungraded A, and
// the free graded-commutative algebra for graded A. Normal forms make
// equality decidable.
class RepAlgebra {
public:
    RepAlgebra(const AAlgebra& A, const BAlgebra& B, long buchbergerBudget = 100000);

    using Rep = QRing::El;

    const AAlgebra& A() const { return *a_; }
    const BAlgebra& B() const { return *b_; }
    const QRing& ring() const { return ring_; }

    int xvarIndex(int gen, int i, int j) const;
    Rep generatorEntry(int gen, int i, int j) const;
    Rep one() const { return ring_.one(); }
    Rep zero() const { return ring_.zero(); }
    Rep add(const Rep& a, const Rep& b) const { return ring_.add(a, b); }
    Rep sub(const Rep& a, const Rep& b) const { return ring_.sub(a, b); }
    Rep mul(const Rep& a, const Rep& b) const { return ring_.mul(a, b); }
    Rep scale(const Rep& a, const Rational& c) const { return ring_.scale(a, c); }
    bool equal(const Rep& a, const Rep& b) const { return ring_.equal(a, b); }
    Degree degreeOf(const Rep& e) const { return ring_.degreeOf(e); }

    // x_b for arbitrary A- and B-elements
    Rep evaluate(const AElem& x, const BAlgebra::El& b) const;
    Rep evaluate(const Word& w, const BMono& k) const;

    // matrix of word entries: (w)_{t_{ij}}
    Rep wordEntry(const Word& w, int i, int j) const;

    // A_B (x) B, with the coaction determined by
    // x_b -> x_{b''} (x) s(b') b'''.
    const QRing& abRing() const { return abRing_; }
    QRing::El coaction(const Rep& e) const;
    QRing::El embedRep(const Rep& e) const;           // e (x) 1
    QRing::El embedB(const BAlgebra::El& b) const;    // 1 (x) b
    bool isInvariant(const Rep& e) const;

    // monomial split of an A_B (x) B element into (A_B part, B part)
    struct ABTerm {
        Rep repPart;
        BMono bPart;
        Rational coeff;
    };
    std::vector<ABTerm> splitAB(const QRing::El& e) const;

    // point evaluation at one invertible matrix per generator (ungraded A);
    // throws std::domain_error naming the first matrix violating the
    // variant's constraints
    void validatePoint(const std::vector<RatMat>& mats) const;
    Rational evaluateAtPoint(const Rep& e, const std::vector<RatMat>& mats) const;

    std::string print(const Rep& e) const;
    // per-term factor lists (det inverses folded into every term)
    std::vector<std::pair<Rational, std::vector<std::string>>> termFactors(const Rep& e) const;

private:
    const AAlgebra* a_;
    const BAlgebra* b_;
    int n_;
    QRing ring_;
    QRing abRing_;
    std::vector<std::vector<Rep>> genMat_;    // [gen] N*N entries
    std::vector<std::vector<Rep>> genMatInv_; // group case only
    std::vector<Poly> genDet_;
    mutable std::map<Word, std::vector<Rep>> wordMatrixCache_;
    mutable std::mutex cacheMutex_;
    std::vector<QRing::El> coactionVar_; // per X-variable

    std::vector<Rep> wordMatrix(const Word& w) const;
    Rep wordDetInverse(const Word& w) const; // (w)_u, GL only
    Rep evalLetter(const Word& w, int i, int j) const;
};

} // namespace foxbrack
