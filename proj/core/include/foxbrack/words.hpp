#pragma once

#include "foxbrack/grading.hpp"
#include "foxbrack/lincomb.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace foxbrack {

// Basis word of the host algebra A. Letters are nonzero: +(g+1) is the g-th
// generator, -(g+1) its inverse (group case only). Free-group words are kept
// freely reduced; tensor words use positive letters of degree 1. The empty
// word is the unit.
struct Word {
    std::vector<std::int16_t> ls;

    bool empty() const { return ls.empty(); }
    std::size_t length() const { return ls.size(); }

    auto operator<=>(const Word& o) const {
        if (ls.size() != o.ls.size()) return ls.size() <=> o.ls.size();
        return ls <=> o.ls;
    }
    bool operator==(const Word&) const = default;
};

using AElem = LinComb<Word>;
using ATensor2 = LinComb<std::pair<Word, Word>>;
using ATensor3 = LinComb<std::array<Word, 3>>;
using ASweedler = LinComb<std::vector<Word>>;

enum class AKind { FreeGroup, TensorAlgebra };

// A as a graded cocommutative Hopf algebra: either the group algebra of a
// free group (group-like generators, degree 0) or the tensor algebra on a
// finite set of primitive degree-1 generators.
class AAlgebra {
public:
    AAlgebra(AKind kind, std::vector<std::string> generatorNames);
    static AAlgebra freeGroup(int rank);
    static AAlgebra tensorAlgebra(std::vector<std::string> generatorNames);

    AKind kind() const { return kind_; }
    int rank() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& generatorNames() const { return names_; }
    bool graded() const { return kind_ == AKind::TensorAlgebra; }

    Word unitWord() const { return {}; }
    Word generator(int g) const;
    Word inverseGenerator(int g) const; // group only

    Word mulWords(const Word& a, const Word& b) const;
    AElem mul(const AElem& a, const AElem& b) const;

    Degree degree(const Word& w) const;
    // Degree of a homogeneous element; throws on mixed degrees. Zero is 0.
    Degree degreeOf(const AElem& x) const;

    Rational counit(const Word& w) const;
    Rational counit(const AElem& x) const;

    Word inverseWord(const Word& w) const; // group only
    AElem antipode(const Word& w) const;
    AElem antipode(const AElem& x) const;

    LinComb<std::pair<Word, Word>> comul(const Word& w) const;

    // m-fold Sweedler expansion x^(1) (x) ... (x) x^(m); m = 0 is the counit
    // (empty tuple), m = 1 the element itself.
    ASweedler sweedler(const Word& w, int m) const;
    ASweedler sweedler(const AElem& x, int m) const;

    // Lexicographically minimal cyclic rotation of the cyclic reduction
    // (group case): canonical representative of the conjugacy class.
    Word conjClass(const Word& w) const;

    // All reduced words (resp. tensor words) of length <= maxLen.
    std::vector<Word> wordsUpTo(int maxLen) const;

    std::string printWord(const Word& w) const;
    std::string print(const AElem& x) const;

private:
    AKind kind_;
    std::vector<std::string> names_;
};

} // namespace foxbrack
