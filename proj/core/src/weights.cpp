#include "glmn/weights.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

#include "glmn/error.hpp"

namespace glmn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Integer value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw UsageError("malformed rational '" + std::string(whole) + "'");
  return value;
}

void require_same_rank(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw UsageError("rank mismatch: " + to_string(a.rank()) + " vs " + to_string(b.rank()));
}

std::vector<Rational> split_list(std::string_view text) {
  std::vector<Rational> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

} // namespace

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  Integer num = parse_integer(s.substr(0, slash), text);
  Integer den = parse_integer(s.substr(slash + 1), text);
  if (den == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rank::Rank(int m_, int n_) : m(m_), n(n_) {
  if (m < 1 || n < 1)
    throw UsageError("gl(m|n) needs m >= 1 and n >= 1, got m=" + std::to_string(m) + " n=" + std::to_string(n));
}

std::string to_string(const Rank& r) { return "gl(" + std::to_string(r.m) + "|" + std::to_string(r.n) + ")"; }

Weight::Weight(Rank rank) : rank_(rank), coeffs_(rank.dim(), Rational(0)) {}

Weight::Weight(Rank rank, std::vector<Rational> coeffs) : rank_(rank), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != rank_.dim())
    throw UsageError("weight for " + to_string(rank_) + " needs " + std::to_string(rank_.dim()) +
                     " coefficients, got " + std::to_string(coeffs_.size()));
}

Weight Weight::epsilon(Rank rank, int i) {
  if (i < 1 || i > static_cast<int>(rank.dim()))
    throw UsageError("eps index " + std::to_string(i) + " out of range for " + to_string(rank));
  Weight w(rank);
  w.coeffs_[static_cast<std::size_t>(i - 1)] = 1;
  return w;
}

Weight Weight::delta(Rank rank, int j) {
  if (j < 1 || j > rank.n)
    throw UsageError("delta index " + std::to_string(j) + " out of range for " + to_string(rank));
  return epsilon(rank, rank.m + j);
}

Weight& Weight::operator+=(const Weight& other) {
  require_same_rank(*this, other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    coeffs_[k] += other.coeffs_[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  require_same_rank(*this, other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    coeffs_[k] -= other.coeffs_[k];
  return *this;
}

Weight& Weight::operator*=(const Rational& c) {
  for (auto& x : coeffs_)
    x *= c;
  return *this;
}

bool Weight::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& x) { return glmn::is_zero(x); });
}

bool operator<(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  auto ca = a.coeffs();
  auto cb = b.coeffs();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

Rational bilinear_form(const Weight& u, const Weight& v) {
  require_same_rank(u, v);
  const auto m = static_cast<std::size_t>(u.rank().m);
  Rational sum = 0;
  for (std::size_t k = 0; k < u.rank().dim(); ++k) {
    if (k < m)
      sum += u[k] * v[k];
    else
      sum -= u[k] * v[k];
  }
  return sum;
}

std::vector<Rational> pairings(const Weight& v) {
  const auto m = static_cast<std::size_t>(v.rank().m);
  std::vector<Rational> out(v.coeffs().begin(), v.coeffs().end());
  for (std::size_t k = m; k < out.size(); ++k)
    out[k] = -out[k];
  return out;
}

Weight from_pairings(Rank rank, std::span<const Rational> values) {
  if (values.size() != rank.dim())
    throw UsageError("expected " + std::to_string(rank.dim()) + " pairings for " + to_string(rank));
  std::vector<Rational> coeffs(values.begin(), values.end());
  for (std::size_t k = static_cast<std::size_t>(rank.m); k < coeffs.size(); ++k)
    coeffs[k] = -coeffs[k];
  return Weight(rank, std::move(coeffs));
}

Weight ber(Rank rank) {
  Weight w(rank);
  for (std::size_t k = 0; k < rank.dim(); ++k)
    w[k] = k < static_cast<std::size_t>(rank.m) ? 1 : -1;
  return w;
}

Weight rho_zero(Rank rank) {
  // Half-sum of eps_i - eps_j (i<j) and delta_p - delta_q (p<q).
  Weight w(rank);
  for (int i = 1; i <= rank.m; ++i)
    w[static_cast<std::size_t>(i - 1)] = Rational(rank.m + 1 - 2 * i, 2);
  for (int j = 1; j <= rank.n; ++j)
    w[static_cast<std::size_t>(rank.m + j - 1)] = Rational(rank.n + 1 - 2 * j, 2);
  return w;
}

Weight rho_one_distinguished(Rank rank) {
  Weight w(rank);
  for (int p = 1; p <= rank.m; ++p)
    for (int q = 1; q <= rank.n; ++q)
      w += to_weight(OddRoot{p, q}, rank);
  return Rational(1, 2) * w;
}

Weight rho(Rank rank) {
  Weight r = rho_zero(rank) - rho_one_distinguished(rank) - Rational(rank.m + rank.n - 1, 2) * ber(rank);
  for (const auto& c : r.coeffs())
    if (!is_integer(c)) throw InvariantViolation("rho(" + to_string(rank) + ") is not integral: " + to_string(r));
  return r;
}

TupleWeight tuple_encode(const Weight& lambda) {
  return TupleWeight{lambda.rank(), pairings(lambda + rho(lambda.rank()))};
}

Weight tuple_decode(const TupleWeight& t) { return from_pairings(t.rank, t.entries) - rho(t.rank); }

TupleWeight integer_tuple(Rank rank, std::span<const Integer> entries) {
  if (entries.size() != rank.dim())
    throw UsageError("expected " + std::to_string(rank.dim()) + " tuple entries for " + to_string(rank));
  TupleWeight t{rank, {}};
  t.entries.reserve(entries.size());
  for (auto e : entries)
    t.entries.emplace_back(e);
  return t;
}

namespace {

template <class Cmp> bool block_monotone(std::span<const Rational> block, Cmp cmp) {
  for (std::size_t k = 1; k < block.size(); ++k)
    if (!cmp(block[k - 1], block[k])) return false;
  return true;
}

bool block_distinct(std::span<const Rational> block) {
  std::set<Rational> seen(block.begin(), block.end());
  return seen.size() == block.size();
}

void require_tuple_size(Rank rank, std::span<const Rational> entries) {
  if (entries.size() != rank.dim())
    throw UsageError("tuple length " + std::to_string(entries.size()) + " does not match " + to_string(rank));
}

} // namespace

bool tuple_is_antidominant(Rank rank, std::span<const Rational> entries) {
  require_tuple_size(rank, entries);
  const auto m = static_cast<std::size_t>(rank.m);
  return block_monotone(entries.first(m), std::less_equal<>{}) &&
         block_monotone(entries.subspan(m), std::greater_equal<>{});
}

bool tuple_is_dominant(Rank rank, std::span<const Rational> entries) {
  require_tuple_size(rank, entries);
  const auto m = static_cast<std::size_t>(rank.m);
  return block_monotone(entries.first(m), std::greater_equal<>{}) &&
         block_monotone(entries.subspan(m), std::less_equal<>{});
}

bool tuple_is_regular(Rank rank, std::span<const Rational> entries) {
  require_tuple_size(rank, entries);
  const auto m = static_cast<std::size_t>(rank.m);
  return block_distinct(entries.first(m)) && block_distinct(entries.subspan(m));
}

bool is_integral(const Weight& lambda) {
  return std::all_of(lambda.coeffs().begin(), lambda.coeffs().end(), is_integer);
}

bool is_antidominant(const Weight& lambda) {
  return tuple_is_antidominant(lambda.rank(), tuple_encode(lambda).entries);
}
bool is_dominant(const Weight& lambda) { return tuple_is_dominant(lambda.rank(), tuple_encode(lambda).entries); }
bool is_regular(const Weight& lambda) { return tuple_is_regular(lambda.rank(), tuple_encode(lambda).entries); }

bool is_antidominant_shifted(const Weight& nu) { return tuple_is_antidominant(nu.rank(), pairings(nu)); }
bool is_dominant_shifted(const Weight& nu) { return tuple_is_dominant(nu.rank(), pairings(nu)); }
bool is_regular_shifted(const Weight& nu) { return tuple_is_regular(nu.rank(), pairings(nu)); }

void validate(const OddRoot& a, Rank rank) {
  if (a.p < 1 || a.p > rank.m || a.q < 1 || a.q > rank.n)
    throw UsageError("odd root " + to_string(a) + " out of range for " + to_string(rank));
}

Weight to_weight(const OddRoot& a, Rank rank) {
  validate(a, rank);
  return Weight::epsilon(rank, a.p) - Weight::delta(rank, a.q);
}

Weight to_weight(const SignedOddRoot& a, Rank rank) {
  auto w = to_weight(a.root, rank);
  return a.eps_first ? w : -w;
}

std::string to_string(const OddRoot& a) { return "{e" + std::to_string(a.p) + "-d" + std::to_string(a.q) + "}"; }

std::string to_string(const SignedOddRoot& a) {
  const auto e = "e" + std::to_string(a.root.p);
  const auto d = "d" + std::to_string(a.root.q);
  return a.eps_first ? e + "-" + d : d + "-" + e;
}

int atypicality(const Weight& nu) {
  const Rank rank = nu.rank();
  const auto t = pairings(nu);
  const auto m = static_cast<std::size_t>(rank.m);
  const auto n = static_cast<std::size_t>(rank.n);
  // (nu, eps_p - delta_q) = t_p - t_{m+q}
  auto edge = [&](std::size_t p, std::size_t q) { return t[p] == t[m + q]; };

  std::vector<int> match_col(n, -1);
  std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t p, std::vector<char>& seen) {
    for (std::size_t q = 0; q < n; ++q) {
      if (!edge(p, q) || seen[q]) continue;
      seen[q] = 1;
      if (match_col[q] < 0 || augment(static_cast<std::size_t>(match_col[q]), seen)) {
        match_col[q] = static_cast<int>(p);
        return true;
      }
    }
    return false;
  };

  int size = 0;
  for (std::size_t p = 0; p < m; ++p) {
    std::vector<char> seen(n, 0);
    if (augment(p, seen)) ++size;
  }
  return size;
}

std::vector<Rational> parse_blocks(Rank rank, std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    throw UsageError("weight '" + std::string(text) + "' must have the form a_1,...,a_m|b_1,...,b_n");
  auto left = split_list(text.substr(0, bar));
  auto right = split_list(text.substr(bar + 1));
  if (left.size() != static_cast<std::size_t>(rank.m) || right.size() != static_cast<std::size_t>(rank.n))
    throw UsageError("weight '" + std::string(text) + "' does not have " + std::to_string(rank.m) + "|" +
                     std::to_string(rank.n) + " entries");
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

std::string format_blocks(Rank rank, std::span<const Rational> values) {
  std::ostringstream out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k == static_cast<std::size_t>(rank.m))
      out << '|';
    else if (k > 0)
      out << ',';
    out << to_string(values[k]);
  }
  return out.str();
}

Weight parse_weight(Rank rank, std::string_view text) { return Weight(rank, parse_blocks(rank, text)); }

TupleWeight parse_tuple(Rank rank, std::string_view text) { return TupleWeight{rank, parse_blocks(rank, text)}; }

std::string to_string(const Weight& w) { return format_blocks(w.rank(), w.coeffs()); }

std::string to_string(const TupleWeight& t) { return format_blocks(t.rank, t.entries); }

} // namespace glmn
