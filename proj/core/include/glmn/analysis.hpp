#pragma once

// Verification sweeps over integral weights that tie the weight, Borel,
// lattice and character layers together, plus weight diagrams and total
// disconnectedness.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "glmn/lattice.hpp"

namespace glmn {

// ---------------------------------------------------------------------------
// weight diagrams

enum class DiagramLabel { Cross, Circle, Down, Up }; // x, o, v, ^

class WeightDiagram {
public:
  WeightDiagram() = default;
  explicit WeightDiagram(std::map<Integer, DiagramLabel> marks);

  /// Up for every unlisted integer.
  DiagramLabel label(Integer position) const;
  /// Positions that are not Up, ascending.
  const std::map<Integer, DiagramLabel>& marks() const { return marks_; }

  friend bool operator==(const WeightDiagram&, const WeightDiagram&) = default;

private:
  std::map<Integer, DiagramLabel> marks_;
};

char to_char(DiagramLabel l);

/// Labels I_x = {t_1..t_m} and I_o = {t_{m+1}..t_{m+n}}: v on I_x & I_o, x and
/// o on the rest of each, ^ elsewhere. Throws UsageError unless t is
/// integral, regular and dominant.
WeightDiagram weight_diagram(const TupleWeight& t);

/// Inverse of weight_diagram: eps entries descending, delta entries ascending.
TupleWeight diagram_to_tuple(const WeightDiagram& d, Rank rank);

/// Two lines, positions lo..hi and their labels.
std::string render(const WeightDiagram& d, Integer lo, Integer hi);

/// At least one ^ strictly between any two consecutive v's of the diagram of
/// lambda (which must be integral, regular and dominant).
bool diagram_condition(const Weight& lambda);

// ---------------------------------------------------------------------------
// typicality, relabelling, total disconnectedness

/// atypicality(nu) == 0. Throws InvariantViolation if that disagrees with
/// L(m,n)_nu being a single vertex.
bool is_typical(const Weight& nu);

/// The rho-shifted highest weight lambda_b of L^{()}(lambda), given
/// nu = lambda + rho, moved to Borel p along monotone_walk(p).
Weight relabel(const Weight& nu, const Partition& p);

/// For every Borel b, L(m,n)_{lambda_b} is a path. lambda must be integral.
bool is_totally_disconnected(const Weight& lambda);

// ---------------------------------------------------------------------------
// sweeps and reports

/// Integral tuples with entries in [-bound, bound]. With modulo_shift only the
/// representative whose minimum entry is -bound is kept from each class of
/// tuples that differ by a constant (a multiple of ber).
struct Sweep {
  Rank rank;
  int bound = 3;
  bool modulo_shift = true;

  std::vector<TupleWeight> tuples() const;
};

/// A tuple read as the raw pairings of a rho-shifted parameter nu.
Weight shifted_parameter(const TupleWeight& t);

struct VerificationReport {
  std::string suite;
  std::string instance;
  std::uint64_t checked = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t violation_count = 0;
  std::vector<std::string> violations; ///< first few, for display
  std::vector<std::string> notes;      ///< informational examples
  std::map<std::string, std::uint64_t> census;
  double seconds = 0.0;

  bool passed() const { return violation_count == 0; }
  void add_violation(std::string what);
  void add_note(std::string what);
  /// Sums counters and census; keeps violations in order.
  void merge(const VerificationReport& other);
};

std::string to_json(const std::vector<VerificationReport>& reports, bool with_timing = false);
std::string to_table(const std::vector<VerificationReport>& reports, bool with_timing = false);

/// Worker threads for sweeps: GLMN_THREADS if set and positive, otherwise
/// the hardware concurrency.
unsigned sweep_threads();

/// [(n^m)] is the unique [()]-geodesically maximal vertex of L(m,n)_nu.
VerificationReport verify_lmmB(const Sweep& sweep);

/// For antidominant tuples, {[()],[(n^m)]} is the only mutually unique
/// geodesically maximal pair; when L(m,n)_nu is not a point, [()] is a leaf
/// whose edge is a bridge.
VerificationReport verify_lemmF(const Sweep& sweep);

/// Census of mutually unique maximal pairs. Only antidominant tuples are
/// asserted (no pair other than the distinguished one); the rest is counted.
VerificationReport verify_theorem_b1b2_necessity(const Sweep& sweep);

/// atypicality == 0 iff L(m,n)_nu is a single vertex.
VerificationReport verify_rbtriv(const Sweep& sweep);

/// For every bridge and every vertex on one side, some vertex on the other
/// side is geodesically maximal for it.
VerificationReport verify_lemmA(const Sweep& sweep);

/// rainbow iff shortest for every walk of length <= diameter + 2, and
/// rainbow_endpoint_map is well defined from every vertex.
VerificationReport verify_rainbow_shortest(const Sweep& sweep);

/// rho^{r_alpha b} = rho^b + alpha, (rho^b, alpha) = 0 for simple alpha,
/// rho^b integral; all partitions of the rank.
VerificationReport verify_rho_laws(Rank rank);

/// Borel independence of Verma numerators, highest weight multiplicity 1,
/// and equal characters iff lambda + rho^b = lambda' + rho^b', over integral
/// lambda with coefficients in [-bound, bound].
VerificationReport verify_character_identity(Rank rank, int bound);

/// transport_simple gives the same result along every shortest walk between
/// any two Borels; along shortest walks out of () it keeps antidominant
/// tuples antidominant. Whether regularity also survives is recorded in the
/// census under "regularity_lost" (it does not always).
VerificationReport verify_transport(const Sweep& sweep);

/// Total disconnectedness: diagram_condition iff totally disconnected on
/// regular dominant tuples; regular antidominant implies totally
/// disconnected; for n == 1 every tuple is totally disconnected.
VerificationReport verify_total_disconnection(const Sweep& sweep);

/// Maximum atypicality over tuples with entries in [-bound, bound].
int defect_sweep(Rank rank, int bound);

/// defect_sweep == min(m, n).
VerificationReport verify_defect(Rank rank, int bound);

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one named suite (or every suite for "all"). Throws UsageError on an
/// unknown name.
std::vector<VerificationReport> run_suite(const std::string& name, Rank rank, int bound);

} // namespace glmn
