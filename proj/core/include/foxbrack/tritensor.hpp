#pragma once

#include "foxbrack/fox.hpp"

namespace foxbrack {

// signed graded permutation acting on a tritensor of words
ATensor3 permute3(const AAlgebra& A, const GradedPermutation& p, const ATensor3& t);

// The inner map of the tritensor construction:
//   F(x,y,z) = +- y' s(w') x'  (x)  z' s(v') w''  (x)  v''
// with w = rho(x'', y''), v = rho(w''', z''), and the sign exponent
//   |y'||x|_n + |z'||x'' y''| + |x' z'||w'| + |w''||v'|.
ATensor3 digamma(const FoxPairing& rho, const Word& x, const Word& y, const Word& z);
ATensor3 digamma(const FoxPairing& rho, const ATensor3& t);

// sum_{i=0..2} P_312^i . F . P_{312,n}^{-i} applied to x (x) y (x) z
ATensor3 tritensorMap(const FoxPairing& rho, const Word& x, const Word& y, const Word& z);
ATensor3 tritensorMap(const FoxPairing& rho, const AElem& x, const AElem& y, const AElem& z);

// The eight-term right side of the quasi-Poisson condition (ungraded):
//   1 (x) y (x) xz + yx (x) 1 (x) z + x (x) zy (x) 1 + y (x) z (x) x
// - 1 (x) zy (x) x - y (x) 1 (x) xz - yx (x) z (x) 1 - x (x) y (x) z.
ATensor3 quasiPoissonTarget(const AAlgebra& A, const Word& x, const Word& y, const Word& z);

// true iff the tritensor map vanishes on all triples from the word set
bool isGerstenhaber(const FoxPairing& rho, const std::vector<Word>& words);

// true iff the tritensor map matches the quasi-Poisson target on all triples
bool isQuasiPoisson(const FoxPairing& rho, const std::vector<Word>& words);

} // namespace foxbrack
