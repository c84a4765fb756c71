#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace connspec {

// Expression templates are disabled so that `auto` captures values.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline std::string to_string(const BigInt& x) { return x.str(); }
inline std::string to_string(const Rational& x) { return x.str(); }

/// Parses "a", "-a" or "a/b" into an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace connspec
