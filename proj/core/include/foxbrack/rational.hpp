#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace foxbrack {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Always in lowest terms with positive denominator
// (maintained by the backend); the canonical zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline std::string toString(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p", "-p", "p/q".
inline Rational parseRational(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
        BigInt num{std::string(s.substr(0, slash))};
        BigInt den{std::string(s.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: '" + std::string(s) + "'");
    }
}

} // namespace foxbrack
