#include "foxbrack/surfaces.hpp"

#include <stdexcept>

namespace foxbrack {

SurfaceValidation validateSurfacePairing(const FoxPairing& rho, int maxWordLen) {
    const AAlgebra& A = rho.A();
    SurfaceValidation out;
    auto words = A.wordsUpTo(maxWordLen);
    out.report = checkFox(rho, words, {.declaredAntisymmetric = true});
    out.foxOk = true;
    out.antisymmetric = true;
    for (const auto& c : out.report.checks) {
        if (!c.pass) {
            if (c.name == "antisymmetry" || c.name == "counit-antisymmetry")
                out.antisymmetric = false;
            else
                out.foxOk = false;
        }
    }
    std::vector<Word> shortWords = A.wordsUpTo(std::min(maxWordLen, 2));
    out.quasiPoisson = out.foxOk && out.antisymmetric && isQuasiPoisson(rho, shortWords);
    return out;
}

RepAlgebra::Rep goldmanBracket(const BracketEngine& e, const Word& x, const Word& y) {
    const RepAlgebra& R = e.R();
    const BAlgebra& B = R.B();
    const BAlgebra::El t = e.traceElement();
    AElem xe = AElem::term(x), ye = AElem::term(y);

    auto main = e.bracketGenerators(xe, t, ye, t);
    auto viaClasses = smile(R, e.bullet(), t, t, theta(e.rho(), x, y));
    RepAlgebra::Rep viaEntries = R.zero();
    for (int i = 0; i < B.N(); ++i)
        for (int k = 0; k < B.N(); ++k)
            viaEntries = R.add(viaEntries, e.bracketClosedForm(xe, i, i, ye, k, k));

    if (!R.equal(main, viaClasses) || !R.equal(main, viaEntries))
        throw std::logic_error("bracket routes disagree on trace arguments");
    return main;
}

} // namespace foxbrack
