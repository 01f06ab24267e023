#pragma once

#include "foxbrack/qring.hpp"
#include "foxbrack/ratmat.hpp"

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

namespace foxbrack {

enum class MatrixKind { GL, SL, O };

std::string to_string(MatrixKind k);

// Basis-monomial key of B: a monomial in the t-variables times u^upow
// (u = det^{-1}un, GL only). Keys are what Sweedler expansions are made of;
// they need not be linearly independent for GL, so equality of elements
// always goes through the ring's canonical form.
struct BMono {
    Mono m;
    int upow = 0;

    auto operator<=>(const BMono& o) const {
        if (upow != o.upow) return upow <=> o.upow;
        if (m.f.size() != o.m.f.size()) return m.f.size() <=> o.m.f.size();
        return m.f <=> o.m.f;
    }
    bool operator==(const BMono&) const = default;
};

using BSweedler = LinComb<std::vector<BMono>>;

// Coordinate Hopf algebra of GL_N, SL_N or O_N with exact normal forms.
// Immutable after construction; construction precomputes the normal-form
// machinery (localization for GL, det-1 reduction for SL, an orthogonality
// Groebner basis for O).
class BAlgebra {
public:
    BAlgebra(MatrixKind kind, int N, long buchbergerBudget = 100000);

    using El = QRing::El;

    MatrixKind matrixKind() const { return kind_; }
    int N() const { return n_; }
    bool hasU() const { return kind_ == MatrixKind::GL; }
    const QRing& ring() const { return ring_; }
    const Poly& detPoly() const { return detT_; }

    int tvarIndex(int i, int j) const; // 0-based
    El t(int i, int j) const;
    El u() const;
    El det() const;
    El one() const { return ring_.one(); }
    El constant(const Rational& c) const { return ring_.constant(c); }

    El toEl(const BMono& k, const Rational& c = Rational(1)) const;
    El add(const El& a, const El& b) const { return ring_.add(a, b); }
    El mul(const El& a, const El& b) const { return ring_.mul(a, b); }
    El scale(const El& a, const Rational& c) const { return ring_.scale(a, c); }
    bool equal(const El& a, const El& b) const { return ring_.equal(a, b); }

    Rational counit(const BMono& k) const;
    Rational counit(const El& e) const;

    El antipodeT(int i, int j) const;
    El antipode(const BMono& k) const;
    El antipode(const El& e) const;

    // m-fold Sweedler expansion; m = 0 encodes the counit.
    BSweedler sweedler(const BMono& k, int m) const;
    BSweedler sweedler(const El& e, int m) const;

    El trace() const;
    bool isCosymmetric(const El& e) const;

    // I/I^2 in the variant's canonical tau-basis
    int iqDim() const;
    std::vector<std::string> iqBasisNames() const;
    RatVec pClassT(int i, int j) const;
    RatVec pClassU() const;
    RatVec pClass(const BMono& k) const;
    RatVec pClass(const El& e) const;

    // matrix of mu -> mu(t') p(t'') in the tau-basis
    RatMat psiMatrix(const El& t) const;

    // B^{(x)k} realized on k disjoint variable copies
    const QRing& tensorRing(int k) const;
    QRing::El embedTensor(int k, std::span<const BMono> keys, const Rational& c) const;
    QRing::El embedTensor(int k, const BSweedler& exp) const;
    QRing::El flip2(const QRing::El& e) const;

    // reduced basis monomials with at most maxLetters letters (u included)
    std::vector<BMono> basisMonomials(int maxLetters) const;

    // single-symbol letters of a monomial key; (-1,-1) marks a u factor
    std::vector<std::pair<int, int>> monoLetters(const BMono& k) const;

    std::string printKey(const BMono& k) const;
    std::string print(const El& e) const;

private:
    MatrixKind kind_;
    int n_;
    QRing ring_;
    Poly detT_;
    std::vector<El> antipodeTCache_;
    mutable std::map<int, std::unique_ptr<QRing>> tensorRings_;
    mutable std::mutex tensorMutex_;

    Poly minor(int row, int col) const; // det of T with row/col deleted
};

} // namespace foxbrack
