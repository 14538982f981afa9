#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace hetg2 {

// All scalar quantities are exact rationals; no floating point in the core.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rat(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string render_rational(const Rational& r);

}  // namespace hetg2
