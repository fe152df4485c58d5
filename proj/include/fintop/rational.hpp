#pragma once

#include <boost/rational.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace fintop {

/// Exact rational number. All function values, levels, and grid points in the
/// library are Rational; floating point never appears.
using Rational = boost::rational<long long>;

/// Parses "p/q" or a plain integer (optional leading '-'). Throws ParseError
/// on anything else, including q == 0.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms with positive denominator, or "p" when q == 1.
std::string to_string(const Rational& r);

inline Rational midpoint(const Rational& a, const Rational& b) {
    return (a + b) / 2;
}

/// "a, b, c" with to_string applied to each entry.
std::string to_string(const std::vector<Rational>& values);

} // namespace fintop
