#include "glmn/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "glmn/characters.hpp"
#include "glmn/error.hpp"

namespace glmn {

// ---------------------------------------------------------------------------
// weight diagrams

WeightDiagram::WeightDiagram(std::map<Integer, DiagramLabel> marks) : marks_(std::move(marks)) {
  std::erase_if(marks_, [](const auto& kv) { return kv.second == DiagramLabel::Up; });
}

DiagramLabel WeightDiagram::label(Integer position) const {
  auto it = marks_.find(position);
  return it == marks_.end() ? DiagramLabel::Up : it->second;
}

char to_char(DiagramLabel l) {
  switch (l) {
  case DiagramLabel::Cross: return 'x';
  case DiagramLabel::Circle: return 'o';
  case DiagramLabel::Down: return 'v';
  case DiagramLabel::Up: return '^';
  }
  return '?';
}

WeightDiagram weight_diagram(const TupleWeight& t) {
  const Rank rank = t.rank;
  if (!std::all_of(t.entries.begin(), t.entries.end(), is_integer))
    throw UsageError("weight diagram needs an integral tuple, got " + to_string(t));
  if (!tuple_is_regular(rank, t.entries) || !tuple_is_dominant(rank, t.entries))
    throw UsageError("weight diagram needs a regular dominant tuple, got " + to_string(t));
  std::map<Integer, DiagramLabel> marks;
  for (const auto& x : t.eps_block())
    marks[x.numerator()] = DiagramLabel::Cross;
  for (const auto& y : t.delta_block()) {
    auto [it, fresh] = marks.emplace(y.numerator(), DiagramLabel::Circle);
    if (!fresh) it->second = DiagramLabel::Down;
  }
  return WeightDiagram(std::move(marks));
}

TupleWeight diagram_to_tuple(const WeightDiagram& d, Rank rank) {
  std::vector<Rational> eps, delta;
  for (const auto& [pos, label] : d.marks()) {
    if (label == DiagramLabel::Cross || label == DiagramLabel::Down) eps.emplace_back(pos);
    if (label == DiagramLabel::Circle || label == DiagramLabel::Down) delta.emplace_back(pos);
  }
  if (eps.size() != static_cast<std::size_t>(rank.m) || delta.size() != static_cast<std::size_t>(rank.n))
    throw UsageError("diagram has " + std::to_string(eps.size()) + " x/v and " + std::to_string(delta.size()) +
                     " o/v marks, expected " + std::to_string(rank.m) + " and " + std::to_string(rank.n));
  std::reverse(eps.begin(), eps.end());
  TupleWeight t{rank, std::move(eps)};
  t.entries.insert(t.entries.end(), delta.begin(), delta.end());
  return t;
}

std::string render(const WeightDiagram& d, Integer lo, Integer hi) {
  if (lo > hi) throw UsageError("empty diagram range");
  const auto width = std::max(std::to_string(lo).size(), std::to_string(hi).size()) + 1;
  std::string top, bottom;
  for (Integer k = lo; k <= hi; ++k) {
    auto num = std::to_string(k);
    top += std::string(width - num.size(), ' ') + num;
    bottom += std::string(width - 1, ' ') + to_char(d.label(k));
  }
  return top + "\n" + bottom + "\n";
}

bool diagram_condition(const Weight& lambda) {
  const auto d = weight_diagram(tuple_encode(lambda));
  std::optional<Integer> last_down;
  for (const auto& [pos, label] : d.marks()) {
    if (label != DiagramLabel::Down) continue;
    if (last_down) {
      bool has_up = false;
      for (Integer k = *last_down + 1; k < pos && !has_up; ++k)
        has_up = d.label(k) == DiagramLabel::Up;
      if (!has_up) return false;
    }
    last_down = pos;
  }
  return true;
}

// ---------------------------------------------------------------------------
// typicality, relabelling, total disconnectedness

bool is_typical(const Weight& nu) {
  const bool typical = atypicality(nu) == 0;
  const auto g = contract_at_weight(build_lattice(nu.rank()), nu);
  if (typical != (g.vertex_count() == 1))
    throw InvariantViolation("atypicality of " + to_string(nu) + " disagrees with the contracted graph");
  return typical;
}

Weight relabel(const Weight& nu, const Partition& p) {
  return transport_simple(nu, Partition::empty(p.rank()), monotone_walk(p));
}

namespace {

bool totally_disconnected_on(const ColoredGraph& base, const std::vector<Partition>& parts, const Weight& nu) {
  return std::all_of(parts.begin(), parts.end(),
                     [&](const Partition& p) { return is_path_graph(contract_at_weight(base, relabel(nu, p))); });
}

} // namespace

bool is_totally_disconnected(const Weight& lambda) {
  if (!is_integral(lambda)) throw UsageError("total disconnectedness needs an integral weight");
  const Rank rank = lambda.rank();
  return totally_disconnected_on(build_lattice(rank), all_partitions(rank), lambda + rho(rank));
}

// ---------------------------------------------------------------------------
// sweeps

std::vector<TupleWeight> Sweep::tuples() const {
  if (bound < 0) throw UsageError("sweep bound must be non-negative");
  const auto d = static_cast<std::size_t>(rank.dim());
  std::vector<Integer> cur(d, -bound);
  std::vector<TupleWeight> out;
  while (true) {
    if (!modulo_shift || std::find(cur.begin(), cur.end(), Integer{-bound}) != cur.end())
      out.push_back(integer_tuple(rank, cur));
    std::size_t k = d;
    while (k > 0 && cur[k - 1] == bound)
      cur[--k] = -bound;
    if (k == 0) break;
    ++cur[k - 1];
  }
  return out;
}

Weight shifted_parameter(const TupleWeight& t) { return from_pairings(t.rank, t.entries); }

unsigned sweep_threads() {
  if (const char* env = std::getenv("GLMN_THREADS"); env != nullptr && *env != '\0') {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec != std::errc{} || *ptr != '\0' || value == 0)
      throw UsageError(std::string("GLMN_THREADS must be a positive integer, got '") + env + "'");
    return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string describe(const Sweep& s) {
  return to_string(s.rank) + ", entries in [" + std::to_string(-s.bound) + "," + std::to_string(s.bound) + "]" +
         (s.modulo_shift ? " mod shift" : "");
}

// Runs fn(i, part) for i in [0, n) on contiguous chunks and merges the parts
// in chunk order, so the result does not depend on the thread count.
void parallel_for(std::size_t n, VerificationReport& out,
                  const std::function<void(std::size_t, VerificationReport&)>& fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(sweep_threads(), n));
  std::vector<VerificationReport> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto body = [&](std::size_t w) {
    try {
      for (std::size_t i = n * w / workers; i < n * (w + 1) / workers; ++i)
        fn(i, parts[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(body, w);
    for (auto& t : pool)
      t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (const auto& p : parts)
    out.merge(p);
}

struct GraphFacts {
  ColoredGraph g;
  DistanceTable d;
  VertexId bottom; // [()]
  VertexId top;    // [(n^m)]

  explicit GraphFacts(ColoredGraph graph)
      : g(std::move(graph)), d(g), bottom(*g.vertex_of(Partition::empty(g.rank()))),
        top(*g.vertex_of(Partition::full(g.rank()))) {}
};

// The tuples of a sweep with their contracted graphs, one per distinct
// colour set.
struct SweepGraphs {
  Rank rank;
  ColoredGraph base;
  std::vector<TupleWeight> tuples;
  std::vector<Weight> nus;
  std::vector<std::size_t> graph_of;
  std::vector<std::optional<GraphFacts>> graphs;

  explicit SweepGraphs(const Sweep& sweep) : rank(sweep.rank), base(build_lattice(sweep.rank)), tuples(sweep.tuples()) {
    std::map<ColorSet, std::size_t> index;
    std::vector<const ColorSet*> keys;
    nus.reserve(tuples.size());
    graph_of.reserve(tuples.size());
    for (const auto& t : tuples) {
      nus.push_back(shifted_parameter(t));
      auto [it, fresh] = index.emplace(nonorthogonal_colors(nus.back()), index.size());
      if (fresh) keys.push_back(&it->first);
      graph_of.push_back(it->second);
    }
    graphs.resize(keys.size());
    VerificationReport unused;
    parallel_for(keys.size(), unused,
                 [&](std::size_t k, VerificationReport&) { graphs[k].emplace(contract_colors(base, *keys[k])); });
  }

  const GraphFacts& facts(std::size_t i) const { return *graphs[graph_of[i]]; }
};

std::string at(const TupleWeight& t) { return "tuple " + to_string(t) + ": "; }

std::string vertex_name(const ColoredGraph& g, VertexId v) { return "[" + to_string(g.representative(v)) + "]"; }

VerificationReport start_report(std::string suite, std::string instance) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.instance = std::move(instance);
  return r;
}

std::vector<std::size_t> component_without_edge(const ColoredGraph& g, VertexId from, std::size_t skip) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (const auto& [w, e] : g.neighbors(v))
      if (e != skip && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  std::vector<std::size_t> side;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (seen[v]) side.push_back(v);
  return side;
}

} // namespace

// ---------------------------------------------------------------------------
// graph suites

VerificationReport verify_lmmB(const Sweep& sweep) {
  const auto start = Clock::now();
  auto report = start_report("lmmB", describe(sweep));
  const SweepGraphs sg(sweep);
  std::vector<char> ok(sg.graphs.size());
  for (std::size_t k = 0; k < sg.graphs.size(); ++k) {
    const auto& f = *sg.graphs[k];
    ok[k] = geodesically_maximal(f.d, f.bottom) == std::vector<VertexId>{f.top};
  }
  for (std::size_t i = 0; i < sg.tuples.size(); ++i) {
    ++report.checked;
    const auto& f = sg.facts(i);
    if (f.g.vertex_count() == 1) ++report.vacuous;
    if (!ok[sg.graph_of[i]]) report.add_violation(at(sg.tuples[i]) + "[(n^m)] is not the unique [()]-maximal vertex");
  }
  report.census["distinct_graphs"] = sg.graphs.size();
  report.seconds = seconds_since(start);
  return report;
}

VerificationReport verify_lemmF(const Sweep& sweep) {
  const auto start = Clock::now();
  auto report = start_report("lemmF", describe(sweep));
  const SweepGraphs sg(sweep);
  for (std::size_t i = 0; i < sg.tuples.size(); ++i) {
    const auto& t = sg.tuples[i];
    if (!tuple_is_antidominant(t.rank, t.entries)) continue;
    ++report.checked;
    const auto& f = sg.facts(i);
    if (f.g.vertex_count() == 1) {
      ++report.vacuous;
      ++report.census["bridge_claim_vacuous"];
      continue;
    }
    const auto pairs = mutually_unique_maximal_pairs(f.d);
    const std::pair<VertexId, VertexId> expected{std::min(f.bottom, f.top), std::max(f.bottom, f.top)};
    if (pairs != std::vector<std::pair<VertexId, VertexId>>{expected})
      report.add_violation(at(t) + "mutually unique maximal pairs are not exactly {[()],[(n^m)]}");
    ++report.census["bridge_claim_checked"];
    const auto& nb = f.g.neighbors(f.bottom);
    const auto br = bridges(f.g);
    if (nb.size() != 1 || !std::binary_search(br.begin(), br.end(), nb.front().second))
      report.add_violation(at(t) + "[()] is not cut off by a bridge");
  }
  report.seconds = seconds_since(start);
  return report;
}

VerificationReport verify_theorem_b1b2_necessity(const Sweep& sweep) {
  const auto start = Clock::now();
  auto report = start_report("b1b2", describe(sweep));
  const SweepGraphs sg(sweep);
  std::vector<std::vector<std::pair<VertexId, VertexId>>> pairs(sg.graphs.size());
  for (std::size_t k = 0; k < sg.graphs.size(); ++k)
    pairs[k] = mutually_unique_maximal_pairs(sg.graphs[k]->d);
  for (std::size_t i = 0; i < sg.tuples.size(); ++i) {
    const auto& t = sg.tuples[i];
    const auto& f = sg.facts(i);
    ++report.checked;
    if (f.g.vertex_count() == 1) {
      ++report.vacuous;
      continue;
    }
    const bool anti = tuple_is_antidominant(t.rank, t.entries);
    const std::string kind = anti ? "antidominant" : "other";
    bool distinguished = false;
    std::size_t exceptions = 0;
    for (const auto& [a, b] : pairs[sg.graph_of[i]]) {
      if ((a == f.bottom && b == f.top) || (a == f.top && b == f.bottom)) {
        distinguished = true;
      } else {
        ++exceptions;
        if (anti)
          report.add_violation(at(t) + "extra pair {" + vertex_name(f.g, a) + "," + vertex_name(f.g, b) + "}");
        else if (report.census[kind + "_exception_pairs"] == 0)
          report.add_note(at(t) + "pair {" + vertex_name(f.g, a) + "," + vertex_name(f.g, b) + "}");
      }
    }
    ++report.census[kind];
    if (distinguished) ++report.census[kind + "_with_distinguished_pair"];
    if (pairs[sg.graph_of[i]].empty()) ++report.census[kind + "_no_pair"];
    report.census[kind + "_exception_pairs"] += exceptions;
  }
  report.seconds = seconds_since(start);
  return report;
}

VerificationReport verify_rbtriv(const Sweep& sweep) {
  const auto start = Clock::now();
  auto report = start_report("rbtriv", describe(sweep));
  const SweepGraphs sg(sweep);
  parallel_for(sg.tuples.size(), report, [&](std::size_t i, VerificationReport& r) {
    ++r.checked;
    const bool typical = atypicality(sg.nus[i]) == 0;
    if (typical) ++r.census["typical"];
    if (typical != (sg.facts(i).g.vertex_count() == 1))
      r.add_violation(at(sg.tuples[i]) + "typicality disagrees with the contracted graph");
  });
  report.seconds = seconds_since(start);
  return report;
}

VerificationReport verify_lemmA(const Sweep& sweep) {
  const auto start = Clock::now();
  auto report = start_report("lemmA", describe(sweep));
  const SweepGraphs sg(sweep);
  VerificationReport per_graph;
  std::vector<std::string> failure(sg.graphs.size());
  std::vector<std::uint64_t> bridge_count(sg.graphs.size());
  parallel_for(sg.graphs.size(), per_graph, [&](std::size_t k, VerificationReport&) {
    const auto& f = *sg.graphs[k];
    const auto br = bridges(f.g);
    bridge_count[k] = br.size();
    for (auto e : br) {
      const auto& edge = f.g.edges()[e];
      const auto side_u = component_without_edge(f.g, edge.u, e);
      const auto side_v = component_without_edge(f.g, edge.v, e);
      auto check = [&](const std::vector<std::size_t>& near, const std::vector<std::size_t>& far) {
        for (auto c1 : near) {
          const auto gm = geodesically_maximal(f.d, c1);
          const bool found = std::any_of(gm.begin(), gm.end(),
                                         [&](VertexId c2) { return std::binary_search(far.begin(), far.end(), c2); });
          if (!found && failure[k].empty())
            failure[k] =
                "bridge " + to_string(edge.color) + ": nothing maximal for " + vertex_name(f.g, c1) + " across it";
        }
      };
      check(side_u, side_v);
      check(side_v, side_u);
    }
  });
  for (std::size_t i = 0; i < sg.tuples.size(); ++i) {
    ++report.checked;
    const auto k = sg.graph_of[i];
    if (bridge_count[k] == 0) ++report.vacuous;
    if (!failure[k].empty()) report.add_violation(at(sg.tuples[i]) + failure[k]);
  }
  std::uint64_t total = 0;
  for (auto b : bridge_count)
    total += b;
  report.census["distinct_graphs"] = sg.graphs.size();
  report.census["bridges_in_distinct_graphs"] = total;
  report.seconds = seconds_since(start);
  return report;
}

VerificationReport verify_rainbow_shortest(const Sweep& sweep) {
  const auto start = Clock::now();
  auto report = start_report("rainbow", describe(sweep));
  const SweepGraphs sg(sweep);
  std::vector<WalkCensus> census(sg.graphs.size());
  std::vector<std::string> failure(sg.graphs.size());
  VerificationReport per_graph;
  parallel_for(sg.graphs.size(), per_graph, [&](std::size_t k, VerificationReport&) {
    const auto& f = *sg.graphs[k];
    census[k] = classify_walks(f.g, f.d, f.d.diameter() + 2);
    if (census[k].violations > 0) {
      std::string path;
      for (auto v : census[k].first_violation->vertices)
        path += (path.empty() ? "" : " - ") + vertex_name(f.g, v);
      failure[k] = "walk " + path + " breaks rainbow iff shortest";
    }
    for (VertexId a = 0; a < f.g.vertex_count() && failure[k].empty(); ++a) {
      try {
        rainbow_endpoint_map(f.g, a);
      } catch (const InvariantViolation& e) {
        failure[k] = e.what();
      }
    }
  });
  for (std::size_t i = 0; i < sg.tuples.size(); ++i) {
    ++report.checked;
    if (!failure[sg.graph_of[i]].empty()) report.add_violation(at(sg.tuples[i]) + failure[sg.graph_of[i]]);
  }
  for (const auto& c : census) {
    report.census["walks_total"] += c.total_walks;
    report.census["walks_visited"] += c.visited;
    report.census["walks_pruned"] += c.pruned;
    report.census["geodesics"] += c.geodesics;
  }
  report.census["distinct_graphs"] = sg.graphs.size();
  report.seconds = seconds_since(start);
  return report;
}

// ---------------------------------------------------------------------------
// rho, characters, transport

VerificationReport verify_rho_laws(Rank rank) {
  const auto start = Clock::now();
  auto report = start_report("rho", to_string(rank));
  for (const auto& p : all_partitions(rank)) {
    ++report.checked;
    Weight r(rank);
    try {
      r = rho_b(p);
    } catch (const InvariantViolation& e) {
      report.add_violation("rho of " + to_string(p) + ": " + e.what());
      continue;
    }
    for (const auto& [box, alpha] : simple_odd_roots(p)) {
      ++report.census["reflections"];
      const Weight a = to_weight(alpha, rank);
      const std::string where = to_string(p) + " at " + to_string(box) + ": ";
      if (!is_zero(bilinear_form(r, a))) report.add_violation(where + "rho not orthogonal to " + to_string(alpha));
      const auto refl = odd_reflection(p, box);
      if (rho_b(refl.target) != r + a) report.add_violation(where + "rho does not shift by " + to_string(alpha));
    }
  }
  report.seconds = seconds_since(start);
  return report;
}

namespace {

std::vector<Weight> weight_box(Rank rank, int bound) {
  std::vector<Weight> out;
  for (const auto& t : Sweep{rank, bound, false}.tuples())
    out.emplace_back(rank, t.entries);
  return out;
}

std::uint64_t poly_hash(const LaurentPoly& f) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  };
  for (const auto& [e, c] : f.terms()) {
    for (auto x : e)
      mix(static_cast<std::uint64_t>(x));
    mix(static_cast<std::uint64_t>(c));
  }
  return h;
}

} // namespace

VerificationReport verify_character_identity(Rank rank, int bound) {
  const auto start = Clock::now();
  auto report = start_report("characters", to_string(rank) + ", coefficients in [" + std::to_string(-bound) + "," +
                                               std::to_string(bound) + "]");
  const auto parts = all_partitions(rank);
  std::vector<Weight> rhos;
  for (const auto& p : parts)
    rhos.push_back(rho_b(p));
  const Weight rho0 = rho(rank);
  const auto box = weight_box(rank, bound);

  // Same parameter, every Borel: one numerator, highest weight coefficient 1.
  parallel_for(box.size(), report, [&](std::size_t k, VerificationReport& r) {
    const auto& lambda = box[k];
    const auto ref = verma_numerator(parts.front(), lambda);
    for (std::size_t a = 0; a < parts.size(); ++a) {
      ++r.checked;
      if (a > 0 && verma_numerator(parts[a], lambda) != ref)
        r.add_violation("numerators of () and " + to_string(parts[a]) + " differ at " + to_string(lambda));
      if (ref.coefficient(lambda - rhos[a] + rho0) != 1)
        r.add_violation("highest weight of " + to_string(parts[a]) + " has multiplicity != 1 at " + to_string(lambda));
    }
  });

  // Full weight multiplicity with the even Kostant function; it does not
  // depend on lambda, so lambda = 0.
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = 0; b < parts.size(); ++b) {
      ++report.census["kostant_pairs"];
      if (verma_weight_multiplicity(parts[b], -rhos[b], -rhos[a]) != 1)
        report.add_violation("dim M^" + to_string(parts[b]) + " at the highest weight of " + to_string(parts[a]) +
                             " is not 1");
    }

  // Equal numerators iff equal lambda + rho^P.
  struct Item {
    Weight nu;
    std::uint64_t hash;
    std::size_t part;
  };
  std::vector<std::optional<Item>> items(parts.size() * box.size());
  VerificationReport unused;
  parallel_for(items.size(), unused, [&](std::size_t k, VerificationReport&) {
    const auto& p = parts[k / box.size()];
    Weight nu = box[k % box.size()] + rhos[k / box.size()];
    items[k].emplace(Item{nu, poly_hash(verma_numerator(p, nu)), k / box.size()});
  });
  std::map<Weight, std::uint64_t> hash_of;
  std::unordered_map<std::uint64_t, std::vector<const Item*>> weights_of;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const auto& it = *items[k];
    ++report.census["character_comparisons"];
    auto [pos, fresh] = hash_of.emplace(it.nu, it.hash);
    if (!fresh) {
      if (pos->second != it.hash)
        report.add_violation("equal lambda + rho^P but different numerators at " + to_string(it.nu));
      continue;
    }
    auto& bucket = weights_of[it.hash];
    for (const auto* other : bucket)
      if (verma_numerator(parts[other->part], other->nu) == verma_numerator(parts[it.part], it.nu))
        report.add_violation("different lambda + rho^P with equal numerators: " + to_string(other->nu) + " and " +
                             to_string(it.nu));
    bucket.push_back(&it);
  }
  report.census["distinct_parameters"] = hash_of.size();
  report.seconds = seconds_since(start);
  return report;
}

namespace {

// Every shortest walk from a to b in the base lattice, as box sequences.
void shortest_walks(const ColoredGraph& g, const DistanceTable& d, VertexId a, VertexId b, std::vector<Box>& prefix,
                    std::vector<std::vector<Box>>& out) {
  if (a == b) {
    out.push_back(prefix);
    return;
  }
  for (const auto& [w, e] : g.neighbors(a)) {
    if (d(w, b) != d(a, b) - 1) continue;
    prefix.push_back(g.edges()[e].color);
    shortest_walks(g, d, w, b, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

VerificationReport verify_transport(const Sweep& sweep) {
  const auto start = Clock::now();
  auto report = start_report("transport", describe(sweep));
  const Rank rank = sweep.rank;
  const auto base = build_lattice(rank);
  const DistanceTable dist(base);
  const auto parts = all_partitions(rank);
  const auto bottom = *base.vertex_of(Partition::empty(rank));

  struct PairWalks {
    std::size_t from, to;
    std::vector<std::vector<Box>> walks;
  };
  std::vector<PairWalks> pairs;
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = 0; b < parts.size(); ++b) {
      if (a == b) continue;
      PairWalks pw{a, b, {}};
      std::vector<Box> prefix;
      shortest_walks(base, dist, *base.vertex_of(parts[a]), *base.vertex_of(parts[b]), prefix, pw.walks);
      report.census["shortest_walks"] += pw.walks.size();
      pairs.push_back(std::move(pw));
    }
  std::vector<std::vector<Box>> from_bottom;
  for (const auto& p : parts) {
    std::vector<Box> prefix;
    shortest_walks(base, dist, bottom, *base.vertex_of(p), prefix, from_bottom);
  }

  const auto tuples = sweep.tuples();
  parallel_for(tuples.size(), report, [&](std::size_t i, VerificationReport& r) {
    const auto& t = tuples[i];
    const Weight nu = shifted_parameter(t);
    ++r.checked;
    for (const auto& pw : pairs) {
      const Weight first = transport_simple(nu, parts[pw.from], pw.walks.front());
      for (std::size_t k = 1; k < pw.walks.size(); ++k)
        if (transport_simple(nu, parts[pw.from], pw.walks[k]) != first) {
          r.add_violation(at(t) + "transport from " + to_string(parts[pw.from]) + " to " + to_string(parts[pw.to]) +
                          " depends on the walk");
          break;
        }
    }
    if (!tuple_is_antidominant(rank, t.entries)) return;
    const bool regular = tuple_is_regular(rank, t.entries);
    ++r.census["antidominant"];
    if (regular) ++r.census["regular_antidominant"];
    bool lost = false;
    for (const auto& walk : from_bottom) {
      Weight cur = nu;
      Partition p = Partition::empty(rank);
      for (const auto& b : walk) {
        Weight next = transport_simple(cur, p, {b});
        if (nonorthogonal_colors(next) != nonorthogonal_colors(cur)) ++r.census["colorset_changes"];
        cur = std::move(next);
        p = p.toggled(b);
        if (!is_antidominant_shifted(cur)) {
          r.add_violation(at(t) + "antidominance lost at " + to_string(p) + "");
          break;
        }
        if (regular && !lost && !is_regular_shifted(cur)) {
          lost = true;
          r.add_note(at(t) + "regularity lost at " + to_string(p) + ", tuple becomes " +
                     format_blocks(rank, pairings(cur)));
        }
      }
    }
    if (lost) ++r.census["regularity_lost"];
  });
  report.seconds = seconds_since(start);
  return report;
}

VerificationReport verify_total_disconnection(const Sweep& sweep) {
  const auto start = Clock::now();
  auto report = start_report("disconnection", describe(sweep));
  const Rank rank = sweep.rank;
  const auto base = build_lattice(rank);
  const auto parts = all_partitions(rank);
  const auto tuples = sweep.tuples();
  parallel_for(tuples.size(), report, [&](std::size_t i, VerificationReport& r) {
    const auto& t = tuples[i];
    const bool regular = tuple_is_regular(rank, t.entries);
    const bool dominant = regular && tuple_is_dominant(rank, t.entries);
    const bool antidominant = regular && tuple_is_antidominant(rank, t.entries);
    if (rank.n != 1 && !dominant && !antidominant) return;
    ++r.checked;
    const Weight nu = shifted_parameter(t);
    const bool td = totally_disconnected_on(base, parts, nu);
    if (td) ++r.census["totally_disconnected"];
    if (rank.n == 1 && !td) r.add_violation(at(t) + "not totally disconnected although n = 1");
    if (antidominant) {
      ++r.census["regular_antidominant"];
      if (!td) r.add_violation(at(t) + "regular antidominant but not totally disconnected");
    }
    if (dominant) {
      ++r.census["regular_dominant"];
      const bool cond = diagram_condition(nu - rho(rank));
      if (cond) ++r.census["diagram_condition"];
      if (cond != td)
        r.add_violation(at(t) + (td ? "totally disconnected but the diagram condition fails"
                                    : "diagram condition holds but not totally disconnected"));
    }
  });
  report.seconds = seconds_since(start);
  return report;
}

int defect_sweep(Rank rank, int bound) {
  int best = 0;
  for (const auto& t : Sweep{rank, bound, true}.tuples())
    best = std::max(best, atypicality(shifted_parameter(t)));
  return best;
}

VerificationReport verify_defect(Rank rank, int bound) {
  const auto start = Clock::now();
  auto report = start_report("defect", to_string(rank) + ", entries in [" + std::to_string(-bound) + "," +
                                           std::to_string(bound) + "]");
  ++report.checked;
  const int d = defect_sweep(rank, bound);
  report.census["max_atypicality"] = static_cast<std::uint64_t>(d);
  if (d != std::min(rank.m, rank.n))
    report.add_violation("maximal atypicality " + std::to_string(d) + " differs from min(m,n)");
  report.seconds = seconds_since(start);
  return report;
}

// ---------------------------------------------------------------------------
// runner

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rho",   "characters", "rbtriv",    "rainbow",       "lemmA", "lmmB",
                                              "lemmF", "b1b2",       "transport", "disconnection", "defect"};
  return names;
}

std::vector<VerificationReport> run_suite(const std::string& name, Rank rank, int bound) {
  if (bound < 0) throw UsageError("bound must be non-negative");
  if (name == "all") {
    std::vector<VerificationReport> out;
    for (const auto& n : suite_names()) {
      auto part = run_suite(n, rank, bound);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  const Sweep sweep{rank, bound, true};
  if (name == "rho") return {verify_rho_laws(rank)};
  if (name == "characters") return {verify_character_identity(rank, bound)};
  if (name == "rbtriv") return {verify_rbtriv(sweep)};
  if (name == "rainbow") return {verify_rainbow_shortest(sweep)};
  if (name == "lemmA") return {verify_lemmA(sweep)};
  if (name == "lmmB") return {verify_lmmB(sweep)};
  if (name == "lemmF") return {verify_lemmF(sweep)};
  if (name == "b1b2") return {verify_theorem_b1b2_necessity(sweep)};
  if (name == "transport") return {verify_transport(sweep)};
  if (name == "disconnection") return {verify_total_disconnection(sweep)};
  if (name == "defect") return {verify_defect(rank, bound)};
  std::string known;
  for (const auto& n : suite_names())
    known += " " + n;
  throw UsageError("unknown suite '" + name + "'; known:" + known + " all");
}

} // namespace glmn
