#pragma once

#include "foxbrack/balanced.hpp"
#include "foxbrack/fox.hpp"
#include "foxbrack/repalg.hpp"
#include "foxbrack/tritensor.hpp"
#include "foxbrack/vdb.hpp"

#include <optional>

namespace foxbrack {

// The n-graded bracket in A_B built from an antisymmetric Fox pairing and a
// balanced biderivation, together with its trace-like, closed-form and
// double-bracket reformulations, the Leibniz extension to arbitrary
// elements, and the Jacobi-type residuals.
class BracketEngine {
public:
    BracketEngine(const RepAlgebra& R, const FoxPairing& rho, const TraceLikeForm& bullet);
    // custom biderivation without a trace-like certificate: the generator
    // formula and the Leibniz extension remain available
    BracketEngine(const RepAlgebra& R, const FoxPairing& rho, const Biderivation& bullet);

    using Rep = RepAlgebra::Rep;
    using BEl = BAlgebra::El;

    const RepAlgebra& R() const { return *r_; }
    const FoxPairing& rho() const { return *rho_; }
    const Biderivation& bullet() const { return *bullet_; }
    bool hasTraceLike() const { return trace_.has_value(); }
    const BEl& traceElement() const;
    int shift() const { return n_; }

    // <x_b, y_c> by the defining four-fold expansion of b
    Rep bracketGenerators(const AElem& x, const BEl& b, const AElem& y, const BEl& c) const;
    // the trace-like reformulation through t^{(1..4)}
    Rep bracketTracelike(const AElem& x, const BEl& b, const AElem& y, const BEl& c) const;
    // closed form on matrix entries x_{ij} = x_{t_{ij}}, per variant
    Rep bracketClosedForm(const AElem& x, int i, int j, const AElem& y, int k, int l) const;
    // double-bracket route: <<x',y'>>^l_{t1} <<x',y'>>^r_{t3} x''_{b v t2} y''_{c v t4}
    Rep bracketVdB(const AElem& x, const BEl& b, const AElem& y, const BEl& c) const;
    // matrix-coalgebra cyclic form (GL): b, c in span{t_ij}
    Rep bracketCyclicForm(const AElem& x, const BEl& b, const AElem& y, const BEl& c) const;

    // biderivation extension to arbitrary normal-form elements
    Rep bracketExtend(const Rep& p, const Rep& q) const;

    // signed cyclic Jacobiator; zero iff Jacobi holds on the triple
    Rep jacobiResidual(const Rep& x, const Rep& y, const Rep& z) const;

    // Jacobiator minus the two coaction/trace correction terms (n = 0,
    // ungraded host); requires a trace-like form
    Rep quasiJacobiResidual(const Rep& u, const Rep& v, const Rep& w) const;

    // the unconditional Jacobiator identity through the tritensor map and
    // p = t + s(t); holds for every antisymmetric rho
    bool lemma93Check(const AElem& x, const BEl& b, const AElem& y, const BEl& c, const AElem& z,
                      const BEl& d) const;

    // coaction equivariance on a generator pair
    bool checkEquivariance(const AElem& x, const BEl& b, const AElem& y, const BEl& c) const;

    BEl wedgeB(const BEl& b, const BEl& c) const { return wedge(*bullet_, b, c); }

private:
    const RepAlgebra* r_;
    const FoxPairing* rho_;
    std::optional<TraceLikeForm> traceForm_;
    const Biderivation* bullet_;
    std::optional<BEl> trace_;
    int n_;
    mutable std::map<std::pair<int, int>, Rep> generatorPairCache_;
    mutable std::mutex cacheMutex_;

    struct Factor {
        int gen;
        int i, j; // (-1,-1) encodes a det-inverse factor
        Degree degree;
    };
    std::vector<Factor> monoFactors(const Mono& m, const std::vector<int>& pows) const;
    Rep factorRep(const Factor& f) const;
    BEl factorB(const Factor& f) const;
    AElem factorA(const Factor& f) const;
    Rep baseBracket(const Factor& f, const Factor& g) const;
    Rep bracketFactorLists(const std::vector<Factor>& p, const std::vector<Factor>& q) const;
    Rep bracketSingle(const Factor& f, const std::vector<Factor>& q) const;
};

} // namespace foxbrack
