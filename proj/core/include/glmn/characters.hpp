#pragma once

// Exact Laurent polynomials in x_1..x_{m+n} (x_i standing for e^{eps_i}) and
// the odd numerators of Verma characters.
//
// ch M^b(mu) = e^mu * prod_{gamma odd, b-positive} (1 + e^{-gamma})
//                   / prod_{beta even positive} (1 - e^{-beta}).
// The even denominator does not depend on b, so comparing characters reduces
// to comparing the finite numerators below.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "glmn/borels.hpp"

namespace glmn {

using Exponent = std::vector<Integer>;

class LaurentPoly {
public:
  explicit LaurentPoly(Rank rank); ///< zero

  static LaurentPoly one(Rank rank);
  static LaurentPoly monomial(Rank rank, Exponent exponent, Integer coeff = 1);
  /// e^lambda. Throws UsageError if lambda is not integral.
  static LaurentPoly monomial(const Weight& lambda);

  const Rank& rank() const { return rank_; }
  const std::map<Exponent, Integer>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Exponent& e) const;
  Integer coefficient(const Weight& lambda) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
  void add_term(const Exponent& e, Integer c);

  Rank rank_;
  std::map<Exponent, Integer> terms_; // no zero coefficients
};

/// One term per line, "c * x1^a1*x3^a3" in exponent order, "0" when empty.
std::string to_string(const LaurentPoly& f);

/// e^{nu - rho^P + rho} * prod_{gamma in odd_positive_roots(P)} (1 + e^{-gamma}),
/// the numerator of ch M^P(nu - rho^P) up to the fixed factor e^{rho}.
LaurentPoly verma_numerator(const Partition& p, const Weight& nu);

/// Whether ch M^P(lambda) = ch M^{P'}(lambda'), decided on numerators.
/// Throws InvariantViolation if the answer disagrees with the weight
/// identity lambda + rho^P = lambda' + rho^{P'}.
bool characters_equal_iff(const Partition& p, const Weight& lambda, const Partition& p2, const Weight& lambda2);

/// Number of ways to write v as a sum of standard even positive roots
/// (eps_a - eps_b and delta_a - delta_b, a < b).
Integer even_kostant(const Weight& v);

/// dim M^P(highest)_weight, from the numerator and even_kostant.
Integer verma_weight_multiplicity(const Partition& p, const Weight& highest, const Weight& weight);

} // namespace glmn
