#pragma once

#include "foxbrack/matrix_hopf.hpp"
#include "foxbrack/report.hpp"

namespace foxbrack {

// A biderivation B x B -> Q stored through the correspondence with bilinear
// forms on I/I^2: evaluation projects both arguments and pairs them, which
// makes the derivation property automatic.
class Biderivation {
public:
    Biderivation(const BAlgebra& B, RatMat iqTable);

    const BAlgebra& B() const { return *b_; }
    const RatMat& iqTable() const { return iq_; }

    Rational bullet(const BAlgebra::El& b, const BAlgebra::El& c) const;
    Rational bullet(const BMono& b, const BMono& c) const;

private:
    const BAlgebra* b_;
    RatMat iq_;
};

struct TraceLikeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The form b .t c induced by a trace-like element: cosymmetry and
// infinitesimal nonsingularity are verified, then the I/I^2 table is the
// inverse transpose of the psi matrix. Throws TraceLikeError naming the
// failed certificate.
class TraceLikeForm {
public:
    TraceLikeForm(const BAlgebra& B, BAlgebra::El t);

    const Biderivation& form() const { return form_; }
    const BAlgebra::El& traceElement() const { return t_; }
    const BAlgebra& B() const { return form_.B(); }
    Rational bullet(const BAlgebra::El& b, const BAlgebra::El& c) const { return form_.bullet(b, c); }

private:
    Biderivation form_;
    BAlgebra::El t_;
};

// b v c = (b' . c'') b'' s(c')  =  (b'' . c') b' s(c'')
BAlgebra::El wedge(const Biderivation& d, const BAlgebra::El& b, const BAlgebra::El& c);
// the second defining expression, for cross-checks
BAlgebra::El wedgeAlt(const Biderivation& d, const BAlgebra::El& b, const BAlgebra::El& c);

// Verifies, in B-normal form on all pairs from the key set:
//   (b . c'') s(c') c''' = (c . b'') s(b''') b'
// and the commutative reformulation
//   (b'' . c') b' s(c'') = (c'' . b') s(c') b''.
Report checkBalanced(const Biderivation& d, const std::vector<BMono>& keys);

// Cyclic condition for a bilinear form on the matrix-coalgebra span of the
// t_{ij}: (l . m'') m' (x) m''' = (m . l'') l''' (x) l' for all basis pairs.
// table is indexed by (i*N+j, k*N+l).
bool checkCyclic(const BAlgebra& B, const RatMat& table);

} // namespace foxbrack
