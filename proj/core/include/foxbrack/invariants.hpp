#pragma once

#include "foxbrack/bracket.hpp"

namespace foxbrack {

// Operations on A/[A,A] for an ungraded host (free-group case). Conjugacy
// classes are canonical cyclic words; Theta values are concrete A (x) A
// representatives whose consumed images are quotient-invariant.

using ConjElem = LinComb<Word>; // keys are canonical class representatives

// class of an element in A/[A,A]
ConjElem classOf(const AAlgebra& A, const AElem& x);

// Theta(x^, y^) = sum ad^r(x', rho(x'', y')) (x) y''
ATensor2 theta(const FoxPairing& rho, const Word& x, const Word& y);

// images of Theta under multiplication, antipode-twisted multiplication,
// and the class-pair projection
ConjElem anglePair(const FoxPairing& rho, const Word& x, const Word& y);
ConjElem angleSPair(const FoxPairing& rho, const Word& x, const Word& y);
LinComb<std::pair<Word, Word>> barPair(const FoxPairing& rho, const Word& x, const Word& y);

// (b ~ c)(x (x) y) = (b' . c') x_{b''} y_{c''}; b, c must be cosymmetric
RepAlgebra::Rep smile(const RepAlgebra& R, const Biderivation& d, const BAlgebra::El& b,
                      const BAlgebra::El& c, const ATensor2& v);

// <x_b, y_c> = (b ~ c) Theta(x^, y^) for cosymmetric b, c, plus the closed
// displays for b = c = t on the three variants
bool checkInvariantBracket(const BracketEngine& e, const Word& x, const Word& y,
                           const BAlgebra::El& b, const BAlgebra::El& c);
bool checkClassicalDisplay(const BracketEngine& e, const Word& x, const Word& y);

} // namespace foxbrack
