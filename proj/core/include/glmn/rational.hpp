#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace glmn {

using Integer = std::int64_t;
using Rational = boost::rational<Integer>;

/// Parses "3", "-2", "3/2", "-7/4" (surrounding blanks allowed).
Rational parse_rational(std::string_view text);

/// "3", "-3/2"; the inverse of parse_rational.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

// Comparing boost::rational with a plain int literal recurses forever under
// C++20 rewritten comparisons (Boost 1.74), so test zero this way.
inline bool is_zero(const Rational& q) { return q.numerator() == 0; }

} // namespace glmn
