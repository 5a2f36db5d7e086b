// Exact rational coefficient field used throughout the library.
//
// Rational is boost::multiprecision::cpp_rational: an arbitrary-precision
// fraction kept in canonical reduced form (positive denominator,
// gcd(|num|, den) = 1) by the backend itself.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace rforge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parses "p", "-p" or "p/q" with decimal bignum parts. q must be nonzero.
inline Rational parse_rational(const std::string& text) {
    auto bad = [&] { throw UsageError("invalid rational literal: '" + text + "'"); };
    if (text.empty()) bad();
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rational();  // unreachable
}

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace rforge
