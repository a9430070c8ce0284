#pragma once

// Weights of gl(m|n) over the basis eps_1..eps_m, delta_1..delta_n of h*,
// with delta_j stored at position m+j.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "glmn/rational.hpp"

namespace glmn {

struct Rank {
  int m = 1; ///< even size
  int n = 1; ///< odd size

  Rank() = default;
  Rank(int m_, int n_);

  std::size_t dim() const { return static_cast<std::size_t>(m + n); }
  friend auto operator<=>(const Rank&, const Rank&) = default;
};

std::string to_string(const Rank& r);

class Weight {
public:
  explicit Weight(Rank rank);
  Weight(Rank rank, std::vector<Rational> coeffs);

  /// eps_i, 1-based, i in 1..m+n (so delta_j == epsilon(rank, m+j)).
  static Weight epsilon(Rank rank, int i);
  static Weight delta(Rank rank, int j);

  const Rank& rank() const { return rank_; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  Rational& operator[](std::size_t k) { return coeffs_[k]; }

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Rational& c);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }
  friend Weight operator*(const Rational& c, Weight a) { return a *= c; }
  friend bool operator==(const Weight&, const Weight&) = default;

  bool is_zero() const;

private:
  Rank rank_;
  std::vector<Rational> coeffs_;
};

/// Strict weak order (rank first, then coefficients lexicographically), so
/// weights can key ordered containers.
bool operator<(const Weight& a, const Weight& b);

/// sum_{i<=m} u_i v_i - sum_{i>m} u_i v_i. Throws UsageError on rank mismatch.
Rational bilinear_form(const Weight& u, const Weight& v);

/// (v, eps_i) for i = 1..m+n. For i > m this is minus the delta coefficient.
std::vector<Rational> pairings(const Weight& v);

/// The weight whose pairings with eps_1..eps_{m+n} are `values`.
Weight from_pairings(Rank rank, std::span<const Rational> values);

Weight ber(Rank rank);
Weight rho_zero(Rank rank);
Weight rho_one_distinguished(Rank rank);

/// rho_0 - rho_1 - (m+n-1)/2 ber, the integral Weyl vector of the
/// distinguished Borel. Entries are 1-i-n on eps_i and m+n-j on delta_j.
Weight rho(Rank rank);

/// Entries (lambda + rho, eps_i). Integral weights have integral tuples.
struct TupleWeight {
  Rank rank;
  std::vector<Rational> entries;

  std::span<const Rational> eps_block() const {
    return std::span<const Rational>(entries).first(static_cast<std::size_t>(rank.m));
  }
  std::span<const Rational> delta_block() const {
    return std::span<const Rational>(entries).subspan(static_cast<std::size_t>(rank.m));
  }
  friend bool operator==(const TupleWeight&, const TupleWeight&) = default;
};

TupleWeight tuple_encode(const Weight& lambda);
Weight tuple_decode(const TupleWeight& t);

/// A tuple with integer entries; used by sweeps.
TupleWeight integer_tuple(Rank rank, std::span<const Integer> entries);

// Predicates on a tuple (or any pairing vector laid out the same way).
bool tuple_is_antidominant(Rank rank, std::span<const Rational> entries);
bool tuple_is_dominant(Rank rank, std::span<const Rational> entries);
bool tuple_is_regular(Rank rank, std::span<const Rational> entries);

bool is_integral(const Weight& lambda);
bool is_antidominant(const Weight& lambda);
bool is_dominant(const Weight& lambda);
bool is_regular(const Weight& lambda);

// Same tests applied to the raw pairings (nu, eps_i) of an already
// rho-shifted parameter: is_antidominant_shifted(lambda + rho) ==
// is_antidominant(lambda).
bool is_antidominant_shifted(const Weight& nu);
bool is_dominant_shifted(const Weight& nu);
bool is_regular_shifted(const Weight& nu);

/// The class {eps_p - delta_q, delta_q - eps_p} of an odd root.
struct OddRoot {
  int p = 1; ///< 1..m
  int q = 1; ///< 1..n
  friend auto operator<=>(const OddRoot&, const OddRoot&) = default;
};

/// An odd root with a chosen sign: eps_p - delta_q when eps_first.
struct SignedOddRoot {
  OddRoot root;
  bool eps_first = true;
  friend bool operator==(const SignedOddRoot&, const SignedOddRoot&) = default;
};

void validate(const OddRoot& a, Rank rank);
Weight to_weight(const OddRoot& a, Rank rank); ///< eps_p - delta_q
Weight to_weight(const SignedOddRoot& a, Rank rank);
std::string to_string(const OddRoot& a);
std::string to_string(const SignedOddRoot& a);

/// Maximum number of mutually orthogonal odd roots orthogonal to nu, i.e. a
/// maximum matching in the bipartite graph {(p,q) : (nu, eps_p - delta_q) = 0}.
int atypicality(const Weight& nu);

// Text format "a_1,...,a_m|b_1,...,b_n" with exact rationals.
std::vector<Rational> parse_blocks(Rank rank, std::string_view text);
std::string format_blocks(Rank rank, std::span<const Rational> values);

Weight parse_weight(Rank rank, std::string_view text);
TupleWeight parse_tuple(Rank rank, std::string_view text);
std::string to_string(const Weight& w);
std::string to_string(const TupleWeight& t);

} // namespace glmn
