#pragma once

#include "foxbrack/invariants.hpp"

namespace foxbrack {

// Surface-style setups: a free group of the surface's rank together with a
// pairing table fixture. Tables are accepted purely on their algebraic
// properties (Fox rules, antisymmetry, the quasi-Poisson triple identity);
// no geometric provenance is computed or claimed.
struct SurfaceSetup {
    int rank = 0;
    FoxPairing rho;
    std::string note; // free-form provenance comment from the fixture file
};

struct SurfaceValidation {
    Report report;        // fox + antisymmetry details
    bool foxOk = false;
    bool antisymmetric = false;
    bool quasiPoisson = false;
    bool accepted(bool needQuasiPoisson) const {
        return foxOk && antisymmetric && (!needQuasiPoisson || quasiPoisson);
    }
};

SurfaceValidation validateSurfacePairing(const FoxPairing& rho, int maxWordLen);

// <x_t, y_t> computed by the generic engine, the class-operation route and
// the entrywise closed form; throws on internal disagreement.
RepAlgebra::Rep goldmanBracket(const BracketEngine& e, const Word& x, const Word& y);

} // namespace foxbrack
