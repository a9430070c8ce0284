#include "glmn/borels.hpp"

#include <algorithm>
#include <sstream>

#include "glmn/error.hpp"

namespace glmn {

std::string to_string(const Box& b) { return "(" + std::to_string(b.i) + "," + std::to_string(b.j) + ")"; }

void validate(const Box& b, Rank rank) {
  if (b.i < 1 || b.i > rank.n || b.j < 1 || b.j > rank.m)
    throw UsageError("box " + to_string(b) + " lies outside the " + std::to_string(rank.m) + "x" +
                     std::to_string(rank.n) + " rectangle");
}

std::vector<Box> all_boxes(Rank rank) {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(rank.m * rank.n));
  for (int j = 1; j <= rank.m; ++j)
    for (int i = 1; i <= rank.n; ++i)
      out.push_back(Box{i, j});
  return out;
}

Partition::Partition(Rank rank) : rank_(rank) {}

Partition::Partition(Rank rank, std::vector<int> rows) : rank_(rank), rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0)
    rows_.pop_back();
  if (static_cast<int>(rows_.size()) > rank_.m)
    throw UsageError("partition has more than m=" + std::to_string(rank_.m) + " rows");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k] < 0 || rows_[k] > rank_.n)
      throw UsageError("partition row " + std::to_string(rows_[k]) + " outside 0..n=" + std::to_string(rank_.n));
    if (k > 0 && rows_[k] > rows_[k - 1]) throw UsageError("partition rows must be weakly decreasing");
  }
}

Partition Partition::full(Rank rank) {
  return Partition(rank, std::vector<int>(static_cast<std::size_t>(rank.m), rank.n));
}

int Partition::row(int j) const {
  if (j < 1 || j > static_cast<int>(rows_.size())) return 0;
  return rows_[static_cast<std::size_t>(j - 1)];
}

int Partition::size() const {
  int total = 0;
  for (int r : rows_)
    total += r;
  return total;
}

bool Partition::contains(const Box& b) const {
  validate(b, rank_);
  return b.i <= row(b.j);
}

bool Partition::is_addable(const Box& b) const {
  validate(b, rank_);
  return row(b.j) == b.i - 1 && (b.j == 1 || row(b.j - 1) >= b.i);
}

bool Partition::is_removable(const Box& b) const {
  validate(b, rank_);
  return row(b.j) == b.i && row(b.j + 1) < b.i;
}

Partition Partition::toggled(const Box& b) const {
  std::vector<int> rows(static_cast<std::size_t>(rank_.m), 0);
  std::copy(rows_.begin(), rows_.end(), rows.begin());
  if (is_addable(b))
    ++rows[static_cast<std::size_t>(b.j - 1)];
  else if (is_removable(b))
    --rows[static_cast<std::size_t>(b.j - 1)];
  else
    throw UsageError("box " + to_string(b) + " is neither addable to nor removable from " + to_string(*this));
  return Partition(rank_, std::move(rows));
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  for (int j = 1; j <= static_cast<int>(rows_.size()); ++j)
    for (int i = 1; i <= row(j); ++i)
      out.push_back(Box{i, j});
  return out;
}

std::vector<Box> Partition::addable_boxes() const {
  std::vector<Box> out;
  for (int j = 1; j <= rank_.m; ++j) {
    Box b{row(j) + 1, j};
    if (b.i <= rank_.n && is_addable(b)) out.push_back(b);
  }
  return out;
}

std::vector<Box> Partition::removable_boxes() const {
  std::vector<Box> out;
  for (int j = 1; j <= static_cast<int>(rows_.size()); ++j) {
    Box b{row(j), j};
    if (is_removable(b)) out.push_back(b);
  }
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.rows_.begin(), a.rows_.end(), b.rows_.begin(), b.rows_.end());
}

std::string to_string(const Partition& p) {
  if (p.rows().empty()) return "()";
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < p.rows().size(); ++k)
    out << (k ? "," : "") << p.rows()[k];
  out << ')';
  return out.str();
}

Partition parse_partition(Rank rank, std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '(' && c != ')') s.push_back(c);
  std::vector<int> rows;
  if (!s.empty()) {
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        rows.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw UsageError("malformed partition '" + std::string(text) + "'");
      }
    }
  }
  return Partition(rank, std::move(rows));
}

std::vector<Partition> all_partitions(Rank rank) {
  std::vector<Partition> out;
  std::vector<int> rows;
  auto rec = [&](auto&& self, int bound) -> void {
    if (static_cast<int>(rows.size()) == rank.m) {
      out.emplace_back(rank, rows);
      return;
    }
    for (int r = 0; r <= bound; ++r) {
      rows.push_back(r);
      self(self, r);
      rows.pop_back();
    }
  };
  rec(rec, rank.n);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

EpsDeltaSequence::EpsDeltaSequence(Rank rank, std::vector<SequenceLetter> word) : rank_(rank), word_(std::move(word)) {
  if (word_.size() != rank_.dim())
    throw UsageError("eps/delta word must have length m+n=" + std::to_string(rank_.dim()));
  int next_eps = 1;
  int next_delta = 1;
  for (const auto& l : word_) {
    int& expected = l.letter == Letter::Eps ? next_eps : next_delta;
    if (l.index != expected) throw UsageError("eps/delta word indices must increase within each letter");
    ++expected;
  }
  if (next_eps != rank_.m + 1 || next_delta != rank_.n + 1)
    throw UsageError("eps/delta word must contain m eps and n delta letters");
}

std::vector<int> EpsDeltaSequence::shuffle() const {
  std::vector<int> tau(rank_.dim(), 0);
  for (std::size_t pos = 0; pos < word_.size(); ++pos) {
    const auto& l = word_[pos];
    const int k = l.letter == Letter::Eps ? l.index : rank_.m + l.index;
    tau[static_cast<std::size_t>(k - 1)] = static_cast<int>(pos) + 1;
  }
  return tau;
}

std::string to_string(const EpsDeltaSequence& s) {
  std::string out;
  for (const auto& l : s.word())
    out.push_back(l.letter == Letter::Eps ? 'e' : 'd');
  return out;
}

EpsDeltaSequence parse_sequence(Rank rank, std::string_view letters) {
  std::vector<SequenceLetter> word;
  int e = 0;
  int d = 0;
  for (char c : letters) {
    if (c == 'e' || c == 'E')
      word.push_back({Letter::Eps, ++e});
    else if (c == 'd' || c == 'D')
      word.push_back({Letter::Delta, ++d});
    else
      throw UsageError("malformed eps/delta word '" + std::string(letters) + "'");
  }
  return EpsDeltaSequence(rank, std::move(word));
}

EpsDeltaSequence sequence_from_shuffle(Rank rank, const std::vector<int>& tau) {
  if (tau.size() != rank.dim()) throw UsageError("shuffle must have length m+n");
  std::vector<SequenceLetter> word(rank.dim());
  std::vector<char> used(rank.dim(), 0);
  for (std::size_t k = 0; k < tau.size(); ++k) {
    const int pos = tau[k];
    if (pos < 1 || pos > static_cast<int>(rank.dim()) || used[static_cast<std::size_t>(pos - 1)])
      throw UsageError("shuffle is not a permutation");
    used[static_cast<std::size_t>(pos - 1)] = 1;
    const bool eps = k < static_cast<std::size_t>(rank.m);
    word[static_cast<std::size_t>(pos - 1)] = SequenceLetter{
        eps ? Letter::Eps : Letter::Delta, eps ? static_cast<int>(k) + 1 : static_cast<int>(k) + 1 - rank.m};
  }
  return EpsDeltaSequence(rank, std::move(word)); // rejects non-shuffles
}

EpsDeltaSequence partition_to_sequence(const Partition& p) {
  const Rank rank = p.rank();
  std::vector<SequenceLetter> word;
  int deltas = 0;
  // eps_k is preceded by exactly row(m+1-k) deltas.
  for (int k = 1; k <= rank.m; ++k) {
    while (deltas < p.row(rank.m + 1 - k))
      word.push_back({Letter::Delta, ++deltas});
    word.push_back({Letter::Eps, k});
  }
  while (deltas < rank.n)
    word.push_back({Letter::Delta, ++deltas});
  return EpsDeltaSequence(rank, std::move(word));
}

Partition sequence_to_partition(const EpsDeltaSequence& s) {
  const Rank rank = s.rank();
  std::vector<int> rows(static_cast<std::size_t>(rank.m), 0);
  int deltas = 0;
  for (const auto& l : s.word()) {
    if (l.letter == Letter::Delta)
      ++deltas;
    else
      rows[static_cast<std::size_t>(rank.m - l.index)] = deltas;
  }
  return Partition(rank, std::move(rows));
}

// ---------------------------------------------------------------------------

OddRoot box_to_root(const Box& b, Rank rank) {
  validate(b, rank);
  return OddRoot{rank.m + 1 - b.j, b.i};
}

Box root_to_box(const OddRoot& a, Rank rank) {
  validate(a, rank);
  return Box{a.q, rank.m + 1 - a.p};
}

std::vector<SignedOddRoot> odd_positive_roots(const Partition& p) {
  std::vector<SignedOddRoot> out;
  for (const auto& b : all_boxes(p.rank()))
    out.push_back(SignedOddRoot{box_to_root(b, p.rank()), !p.contains(b)});
  return out;
}

std::vector<std::pair<Box, SignedOddRoot>> simple_odd_roots(const Partition& p) {
  std::vector<std::pair<Box, SignedOddRoot>> out;
  for (const auto& b : p.addable_boxes())
    out.emplace_back(b, SignedOddRoot{box_to_root(b, p.rank()), true});
  for (const auto& b : p.removable_boxes())
    out.emplace_back(b, SignedOddRoot{box_to_root(b, p.rank()), false});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

Weight rho_b(const Partition& p) {
  const Rank rank = p.rank();
  Weight rho_one(rank);
  for (const auto& g : odd_positive_roots(p))
    rho_one += to_weight(g, rank);
  Weight r = rho_zero(rank) - Rational(1, 2) * rho_one - Rational(rank.m + rank.n - 1, 2) * ber(rank);
  if (!is_integral(r)) throw InvariantViolation("rho^b is not integral for b=" + to_string(p) + ": " + to_string(r));
  return r;
}

Reflection odd_reflection(const Partition& p, const Box& b) {
  const bool adding = p.is_addable(b);
  if (!adding && !p.is_removable(b))
    throw UsageError("box " + to_string(b) + " is neither addable to nor removable from " + to_string(p));
  return Reflection{p.toggled(b), SignedOddRoot{box_to_root(b, p.rank()), adding}};
}

std::vector<Partition> walk_partitions(const Partition& start, const std::vector<Box>& walk) {
  std::vector<Partition> out{start};
  out.reserve(walk.size() + 1);
  for (const auto& b : walk)
    out.push_back(out.back().toggled(b));
  return out;
}

Weight transport_verma(const Weight& nu, const Partition& start, const std::vector<Box>& walk) {
  if (nu.rank() != start.rank()) throw UsageError("rank mismatch between weight and partition");
  walk_partitions(start, walk);
  return nu;
}

Weight transport_simple(const Weight& nu, const Partition& start, const std::vector<Box>& walk) {
  if (nu.rank() != start.rank()) throw UsageError("rank mismatch between weight and partition");
  const Rank rank = nu.rank();
  Weight current = nu;
  Partition at = start;
  for (const auto& b : walk) {
    auto step = odd_reflection(at, b);
    const Weight alpha = to_weight(step.root, rank);
    if (is_zero(bilinear_form(current, alpha))) current += alpha;
    at = std::move(step.target);
  }
  return current;
}

std::vector<Box> monotone_walk(const Partition& p) {
  std::vector<Box> walk;
  const Rank rank = p.rank();
  for (int i = 1; i <= rank.n; ++i)
    for (int j = 1; j <= rank.m; ++j)
      if (p.row(j) >= i) walk.push_back(Box{i, j});
  return walk;
}

} // namespace glmn
