#pragma once

#include "foxbrack/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>

namespace foxbrack {

// Sparse linear combination of basis keys with exact rational coefficients.
// Zero coefficients are never stored, so two combinations are equal iff their
// term maps are equal. Keys are kept in a total order fixed by Comp, which
// also makes text rendering canonical.
template <class Key, class Comp = std::less<Key>>
class LinComb {
public:
    using Terms = std::map<Key, Rational, Comp>;

    LinComb() = default;
    explicit LinComb(Comp comp) : terms_(std::move(comp)) {}

    static LinComb term(Key k, Rational c = Rational(1)) {
        LinComb out;
        out.add(std::move(k), std::move(c));
        return out;
    }

    void add(const Key& k, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add(const LinComb& other, const Rational& scale = Rational(1)) {
        if (scale == 0) return;
        for (const auto& [k, c] : other.terms_) add(k, c * scale);
    }

    LinComb& operator+=(const LinComb& o) { add(o); return *this; }
    LinComb& operator-=(const LinComb& o) { add(o, Rational(-1)); return *this; }
    friend LinComb operator+(LinComb a, const LinComb& b) { a += b; return a; }
    friend LinComb operator-(LinComb a, const LinComb& b) { a -= b; return a; }

    LinComb operator-() const { return *this * Rational(-1); }

    friend LinComb operator*(const LinComb& a, const Rational& c) {
        LinComb out;
        if (c == 0) return out;
        for (const auto& [k, v] : a.terms_) out.terms_.emplace(k, v * c);
        return out;
    }
    friend LinComb operator*(const Rational& c, const LinComb& a) { return a * c; }
    LinComb& operator*=(const Rational& c) { *this = *this * c; return *this; }

    bool isZero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    Rational coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    // first term in key order; undefined on zero
    const std::pair<const Key, Rational>& front() const { return *terms_.begin(); }
    void eraseFront() { terms_.erase(terms_.begin()); }

    // Canonical rendering: terms in key order, "p/q*key" joined by signs.
    std::string str(const std::function<std::string(const Key&)>& keyPrinter) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                out += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            out += toString(a) + "*" + keyPrinter(k);
            first = false;
        }
        return out;
    }

private:
    Terms terms_;
};

} // namespace foxbrack
