#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace cohomog {

// Exact rational arithmetic. cpp_rational keeps values in lowest terms
// with positive denominator, which the rest of the library relies on.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) {
  return r.str();
}

// Parses "p", "-p", "p/q". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace cohomog
