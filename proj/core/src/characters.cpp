#include "glmn/characters.hpp"

#include <sstream>

#include "glmn/error.hpp"

namespace glmn {

namespace {

Exponent exponent_of(const Weight& lambda) {
  Exponent e;
  e.reserve(lambda.rank().dim());
  for (const auto& c : lambda.coeffs()) {
    if (!is_integer(c)) throw UsageError("non-integral exponent in " + to_string(lambda));
    e.push_back(c.numerator());
  }
  return e;
}

// Type A Kostant partition function on one block: ways to write v as a
// non-negative combination of e_a - e_b, a < b.
Integer kostant_block(std::vector<Integer> v, std::map<std::vector<Integer>, Integer>& memo) {
  Integer total = 0;
  for (auto x : v)
    total += x;
  if (total != 0) return 0;
  if (v.size() <= 1) return 1;
  if (v.front() < 0) return 0;
  if (auto it = memo.find(v); it != memo.end()) return it->second;

  // Distribute v_1 copies of "e_1 - e_b" over b = 2..k.
  const Integer head = v.front();
  std::vector<Integer> rest(v.begin() + 1, v.end());
  Integer count = 0;
  auto spread = [&](auto&& self, std::size_t b, Integer left) -> void {
    if (b + 1 == rest.size()) {
      rest[b] += left;
      count += kostant_block(rest, memo);
      rest[b] -= left;
      return;
    }
    for (Integer c = 0; c <= left; ++c) {
      rest[b] += c;
      self(self, b + 1, left - c);
      rest[b] -= c;
    }
  };
  spread(spread, 0, head);
  memo.emplace(std::move(v), count);
  return count;
}

} // namespace

LaurentPoly::LaurentPoly(Rank rank) : rank_(rank) {}

LaurentPoly LaurentPoly::one(Rank rank) { return monomial(rank, Exponent(rank.dim(), 0)); }

LaurentPoly LaurentPoly::monomial(Rank rank, Exponent exponent, Integer coeff) {
  if (exponent.size() != rank.dim()) throw UsageError("exponent length does not match " + to_string(rank));
  LaurentPoly f(rank);
  f.add_term(exponent, coeff);
  return f;
}

LaurentPoly LaurentPoly::monomial(const Weight& lambda) { return monomial(lambda.rank(), exponent_of(lambda)); }

Integer LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

Integer LaurentPoly::coefficient(const Weight& lambda) const { return coefficient(exponent_of(lambda)); }

void LaurentPoly::add_term(const Exponent& e, Integer c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.rank_ != rank_) throw UsageError("rank mismatch in polynomial sum");
  for (const auto& [e, c] : other.terms_)
    add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (other.rank_ != rank_) throw UsageError("rank mismatch in polynomial difference");
  for (const auto& [e, c] : other.terms_)
    add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank_ != b.rank_) throw UsageError("rank mismatch in polynomial product");
  LaurentPoly out(a.rank_);
  Exponent e(a.rank_.dim());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k)
        e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0\n";
  std::ostringstream out;
  for (const auto& [e, c] : f.terms()) {
    out << c;
    bool first = true;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      out << (first ? " * " : "*") << 'x' << k + 1 << '^' << e[k];
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

LaurentPoly verma_numerator(const Partition& p, const Weight& nu) {
  const Rank rank = p.rank();
  if (nu.rank() != rank) throw UsageError("rank mismatch between weight and partition");
  LaurentPoly f = LaurentPoly::monomial(nu - rho_b(p) + rho(rank));
  const auto one = LaurentPoly::one(rank);
  for (const auto& g : odd_positive_roots(p))
    f = f * (one + LaurentPoly::monomial(-to_weight(g, rank)));
  return f;
}

bool characters_equal_iff(const Partition& p, const Weight& lambda, const Partition& p2, const Weight& lambda2) {
  const bool by_poly = verma_numerator(p, lambda + rho_b(p)) == verma_numerator(p2, lambda2 + rho_b(p2));
  const bool by_weight = lambda + rho_b(p) == lambda2 + rho_b(p2);
  if (by_poly != by_weight)
    throw InvariantViolation("character comparison of M^" + to_string(p) + "(" + to_string(lambda) + ") and M^" +
                             to_string(p2) + "(" + to_string(lambda2) + ") disagrees with the weight identity");
  return by_poly;
}

Integer even_kostant(const Weight& v) {
  const auto e = exponent_of(v);
  const auto m = static_cast<std::size_t>(v.rank().m);
  std::map<std::vector<Integer>, Integer> memo;
  const Integer eps = kostant_block({e.begin(), e.begin() + static_cast<std::ptrdiff_t>(m)}, memo);
  if (eps == 0) return 0;
  memo.clear();
  return eps * kostant_block({e.begin() + static_cast<std::ptrdiff_t>(m), e.end()}, memo);
}

Integer verma_weight_multiplicity(const Partition& p, const Weight& highest, const Weight& weight) {
  const Rank rank = p.rank();
  const auto roots = odd_positive_roots(p);
  if (roots.size() > 20) throw UsageError("weight multiplicity limited to mn <= 20");
  std::vector<Weight> gammas;
  for (const auto& g : roots)
    gammas.push_back(to_weight(g, rank));
  const Weight gap = highest - weight;
  Integer total = 0;
  for (std::uint32_t subset = 0; subset < (1U << gammas.size()); ++subset) {
    Weight rest = gap;
    for (std::size_t k = 0; k < gammas.size(); ++k)
      if (subset >> k & 1U) rest -= gammas[k];
    if (is_integral(rest)) total += even_kostant(rest);
  }
  return total;
}

} // namespace glmn
