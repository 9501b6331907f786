#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace delaycode {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "85/24", "3", "-1/2".
std::string to_fraction(const Rational& value);

/// Correctly rounded decimal with `digits` places, e.g. "3.541667".
std::string to_decimal(const Rational& value, int digits = 6);

/// Parses "n/d" or "n". Decimal notation is rejected with ParseError.
Rational parse_fraction(std::string_view text);

/// Solves A x = b exactly by Gaussian elimination. A may have more rows
/// than columns. Returns nullopt when the system is inconsistent or its
/// solution is not unique.
std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> A,
                                                  std::vector<Rational> b);

}  // namespace delaycode
