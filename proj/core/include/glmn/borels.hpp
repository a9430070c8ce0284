#pragma once

// Borel subalgebras of gl(m|n) containing the standard even Borel, labelled
// by partitions inside the m x n rectangle (m rows of length <= n).
//
// Boxes use French coordinates: (i, j) is column i (1..n, from the left) and
// row j (1..m, from the bottom). Box (i, j) is the odd root
// eps_{m+1-j} - delta_i; it lies in P exactly when delta_i - eps_{m+1-j} is
// positive for the Borel P.

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "glmn/weights.hpp"

namespace glmn {

struct Box {
  int i = 1; ///< column, 1..n
  int j = 1; ///< row, 1..m
  friend auto operator<=>(const Box&, const Box&) = default;
};

std::string to_string(const Box& b); ///< "(i,j)"

class Partition {
public:
  /// The empty partition () of the given rank.
  explicit Partition(Rank rank);
  /// Throws UsageError unless rows are weakly decreasing, non-negative and fit
  /// in the rectangle. Trailing zeros are dropped.
  Partition(Rank rank, std::vector<int> rows);

  static Partition empty(Rank rank) { return Partition(rank); }
  static Partition full(Rank rank); ///< (n^m)

  const Rank& rank() const { return rank_; }
  const std::vector<int>& rows() const { return rows_; }
  /// Length of row j (1-based), zero beyond the last non-empty row.
  int row(int j) const;
  int size() const; ///< number of boxes

  bool contains(const Box& b) const;
  bool is_addable(const Box& b) const;
  bool is_removable(const Box& b) const;
  /// P with b added or removed; throws UsageError if b is neither.
  Partition toggled(const Box& b) const;

  std::vector<Box> boxes() const;
  std::vector<Box> addable_boxes() const;
  std::vector<Box> removable_boxes() const;

  /// Rank first, then rows lexicographically: () < (1) < (1,1) < (2) < ...
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
  friend bool operator==(const Partition& a, const Partition& b) = default;

private:
  Rank rank_;
  std::vector<int> rows_;
};

/// "(2,1)", or "()" for the empty partition.
std::string to_string(const Partition& p);
/// Accepts "2,1", "(2,1)", "()" and "".
Partition parse_partition(Rank rank, std::string_view text);

/// All C(m+n, m) partitions in the rectangle, in increasing order.
std::vector<Partition> all_partitions(Rank rank);

void validate(const Box& b, Rank rank);

/// Enumerates every box of the rectangle, row by row.
std::vector<Box> all_boxes(Rank rank);

// ---------------------------------------------------------------------------
// eps/delta sequences and shuffles

enum class Letter { Eps, Delta };

struct SequenceLetter {
  Letter letter = Letter::Eps;
  int index = 1;
  friend bool operator==(const SequenceLetter&, const SequenceLetter&) = default;
};

class EpsDeltaSequence {
public:
  /// Throws UsageError unless the word has m eps and n delta letters with
  /// indices 1..m (resp. 1..n) in increasing order.
  EpsDeltaSequence(Rank rank, std::vector<SequenceLetter> word);

  const Rank& rank() const { return rank_; }
  const std::vector<SequenceLetter>& word() const { return word_; }

  /// The (m|n)-shuffle tau: tau(k) is the position (1-based) of eps_k in the
  /// word for k <= m, and of delta_{k-m} for k > m.
  std::vector<int> shuffle() const;

  friend bool operator==(const EpsDeltaSequence&, const EpsDeltaSequence&) = default;

private:
  Rank rank_;
  std::vector<SequenceLetter> word_;
};

/// Letters only, e.g. "eeedd"; indices are implied.
std::string to_string(const EpsDeltaSequence& s);
EpsDeltaSequence parse_sequence(Rank rank, std::string_view letters);
EpsDeltaSequence sequence_from_shuffle(Rank rank, const std::vector<int>& tau);

EpsDeltaSequence partition_to_sequence(const Partition& p);
Partition sequence_to_partition(const EpsDeltaSequence& s);

// ---------------------------------------------------------------------------
// roots, Weyl vectors, odd reflections

OddRoot box_to_root(const Box& b, Rank rank);
Box root_to_box(const OddRoot& a, Rank rank);

/// The mn positive odd roots of P: eps-first for boxes outside P,
/// delta-first for boxes inside. Listed in all_boxes order.
std::vector<SignedOddRoot> odd_positive_roots(const Partition& p);

/// The P-simple odd roots, one per addable or removable box, oriented to be
/// positive for P.
std::vector<std::pair<Box, SignedOddRoot>> simple_odd_roots(const Partition& p);

/// rho_0 - rho_1^P - (m+n-1)/2 ber. Throws InvariantViolation if not integral.
Weight rho_b(const Partition& p);

struct Reflection {
  Partition target;
  SignedOddRoot root; ///< simple for the source, so rho_b(target) = rho_b(source) + root
};

/// Toggles an addable or removable box. Throws UsageError otherwise.
Reflection odd_reflection(const Partition& p, const Box& b);

/// Partitions visited by toggling the boxes of `walk` in order from `start`.
/// Throws UsageError on the first box that is neither addable nor removable.
std::vector<Partition> walk_partitions(const Partition& start, const std::vector<Box>& walk);

/// Verma parameters nu (with M = M^P(nu - rho^P)) do not depend on the Borel,
/// so this validates the walk and returns nu.
Weight transport_verma(const Weight& nu, const Partition& start, const std::vector<Box>& walk);

/// Moves the rho-shifted highest weight of a simple module along a walk: at
/// each step with source-simple root alpha, nu is unchanged if
/// (nu, alpha) != 0 and becomes nu + alpha otherwise.
Weight transport_simple(const Weight& nu, const Partition& start, const std::vector<Box>& walk);

/// A fixed walk from () to p that adds the boxes of p column by column.
std::vector<Box> monotone_walk(const Partition& p);

} // namespace glmn
