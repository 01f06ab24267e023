#include "foxbrack/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace foxbrack {

AAlgebra::AAlgebra(AKind kind, std::vector<std::string> names)
    : kind_(kind), names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("empty generator set");
}

AAlgebra AAlgebra::freeGroup(int rank) {
    if (rank < 1) throw std::invalid_argument("free group rank must be >= 1");
    std::vector<std::string> names;
    for (int g = 0; g < rank; ++g) names.push_back(std::string(1, static_cast<char>('a' + g)));
    return AAlgebra(AKind::FreeGroup, std::move(names));
}

AAlgebra AAlgebra::tensorAlgebra(std::vector<std::string> names) {
    return AAlgebra(AKind::TensorAlgebra, std::move(names));
}

Word AAlgebra::generator(int g) const {
    if (g < 0 || g >= rank()) throw std::out_of_range("generator index");
    return Word{{static_cast<std::int16_t>(g + 1)}};
}

Word AAlgebra::inverseGenerator(int g) const {
    if (kind_ != AKind::FreeGroup) throw std::logic_error("inverses only exist in the group algebra");
    if (g < 0 || g >= rank()) throw std::out_of_range("generator index");
    return Word{{static_cast<std::int16_t>(-(g + 1))}};
}

Word AAlgebra::mulWords(const Word& a, const Word& b) const {
    Word out = a;
    for (auto l : b.ls) {
        if (kind_ == AKind::FreeGroup && !out.ls.empty() && out.ls.back() == -l)
            out.ls.pop_back();
        else
            out.ls.push_back(l);
    }
    return out;
}

AElem AAlgebra::mul(const AElem& a, const AElem& b) const {
    AElem out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out.add(mulWords(ka, kb), ca * cb);
    return out;
}

Degree AAlgebra::degree(const Word& w) const {
    return kind_ == AKind::FreeGroup ? 0 : static_cast<Degree>(w.length());
}

Degree AAlgebra::degreeOf(const AElem& x) const {
    if (x.isZero()) return 0;
    Degree d = degree(x.begin()->first);
    for (const auto& [k, c] : x.terms())
        if (degree(k) != d) throw std::invalid_argument("element is not homogeneous");
    return d;
}

Rational AAlgebra::counit(const Word& w) const {
    if (kind_ == AKind::FreeGroup) return Rational(1);
    return w.empty() ? Rational(1) : Rational(0);
}

Rational AAlgebra::counit(const AElem& x) const {
    Rational s(0);
    for (const auto& [k, c] : x.terms()) s += counit(k) * c;
    return s;
}

Word AAlgebra::inverseWord(const Word& w) const {
    if (kind_ != AKind::FreeGroup) throw std::logic_error("inverses only exist in the group algebra");
    Word out;
    out.ls.reserve(w.ls.size());
    for (auto it = w.ls.rbegin(); it != w.ls.rend(); ++it) out.ls.push_back(static_cast<std::int16_t>(-*it));
    return out;
}

AElem AAlgebra::antipode(const Word& w) const {
    if (kind_ == AKind::FreeGroup) return AElem::term(inverseWord(w));
    // s(v1...vp) = (-1)^p (-1)^{p(p-1)/2} vp...v1 for degree-1 letters
    Word rev;
    rev.ls.assign(w.ls.rbegin(), w.ls.rend());
    auto p = static_cast<long>(w.length());
    long exp = p + p * (p - 1) / 2;
    return AElem::term(rev, Rational(exp % 2 ? -1 : 1));
}

AElem AAlgebra::antipode(const AElem& x) const {
    AElem out;
    for (const auto& [k, c] : x.terms()) out.add(antipode(k) * c);
    return out;
}

LinComb<std::pair<Word, Word>> AAlgebra::comul(const Word& w) const {
    LinComb<std::pair<Word, Word>> out;
    if (kind_ == AKind::FreeGroup) {
        out.add({w, w}, Rational(1));
        return out;
    }
    auto exp = sweedler(w, 2);
    for (const auto& [tuple, c] : exp.terms()) out.add({tuple[0], tuple[1]}, c);
    return out;
}

ASweedler AAlgebra::sweedler(const Word& w, int m) const {
    if (m < 0) throw std::invalid_argument("negative Sweedler arity");
    ASweedler out;
    if (m == 0) {
        if (counit(w) != 0) out.add(std::vector<Word>{}, counit(w));
        return out;
    }
    if (kind_ == AKind::FreeGroup) {
        out.add(std::vector<Word>(static_cast<std::size_t>(m), w), Rational(1));
        return out;
    }
    // Tensor algebra: distribute the letters of w over m slots. The sign
    // counts the odd-odd inversions of the resulting unshuffle.
    const auto p = w.length();
    std::vector<int> slot(p, 0);
    while (true) {
        long inversions = 0;
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = i + 1; j < p; ++j)
                if (slot[i] > slot[j]) ++inversions;
        std::vector<Word> tuple(static_cast<std::size_t>(m));
        for (std::size_t i = 0; i < p; ++i) tuple[static_cast<std::size_t>(slot[i])].ls.push_back(w.ls[i]);
        out.add(tuple, Rational(inversions % 2 ? -1 : 1));
        // next assignment
        std::size_t i = 0;
        for (; i < p; ++i) {
            if (slot[i] + 1 < m) { ++slot[i]; break; }
            slot[i] = 0;
        }
        if (i == p) break;
        if (p == 0) break;
    }
    if (p == 0 && out.isZero()) out.add(std::vector<Word>(static_cast<std::size_t>(m)), Rational(1));
    return out;
}

ASweedler AAlgebra::sweedler(const AElem& x, int m) const {
    ASweedler out;
    for (const auto& [k, c] : x.terms()) out.add(sweedler(k, m), c);
    return out;
}

Word AAlgebra::conjClass(const Word& w) const {
    if (kind_ != AKind::FreeGroup) throw std::logic_error("conjugacy classes only in the group case");
    Word v = w;
    // cyclic reduction: strip matching first/last letters
    while (v.ls.size() >= 2 && v.ls.front() == -v.ls.back()) {
        v.ls.erase(v.ls.begin());
        v.ls.pop_back();
    }
    if (v.ls.empty()) return v;
    Word best = v;
    Word rot = v;
    for (std::size_t i = 1; i < v.ls.size(); ++i) {
        std::rotate(rot.ls.begin(), rot.ls.begin() + 1, rot.ls.end());
        if (rot < best) best = rot;
    }
    return best;
}

std::vector<Word> AAlgebra::wordsUpTo(int maxLen) const {
    std::vector<Word> out{unitWord()};
    std::size_t levelBegin = 0;
    for (int len = 1; len <= maxLen; ++len) {
        std::size_t levelEnd = out.size();
        for (std::size_t i = levelBegin; i < levelEnd; ++i) {
            for (int g = 0; g < rank(); ++g) {
                for (int sgn : {+1, -1}) {
                    if (sgn < 0 && kind_ != AKind::FreeGroup) continue;
                    auto l = static_cast<std::int16_t>(sgn * (g + 1));
                    if (kind_ == AKind::FreeGroup && !out[i].ls.empty() && out[i].ls.back() == -l) continue;
                    Word w = out[i];
                    w.ls.push_back(l);
                    out.push_back(std::move(w));
                }
            }
        }
        levelBegin = levelEnd;
    }
    return out;
}

std::string AAlgebra::printWord(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.ls.size(); ++i) {
        if (i) out += ".";
        int l = w.ls[i];
        out += names_[static_cast<std::size_t>(std::abs(l) - 1)];
        if (l < 0) out += "^-1";
    }
    return out;
}

std::string AAlgebra::print(const AElem& x) const {
    return x.str([this](const Word& w) { return printWord(w); });
}

} // namespace foxbrack
