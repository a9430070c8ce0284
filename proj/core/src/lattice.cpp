#include "glmn/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "glmn/error.hpp"

namespace glmn {

namespace {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

} // namespace

ColoredGraph::ColoredGraph(Rank rank, std::vector<std::vector<Partition>> classes, std::vector<ColoredEdge> edges)
    : rank_(rank) {
  for (auto& cls : classes) {
    if (cls.empty()) throw UsageError("graph vertex with an empty partition class");
    for (const auto& p : cls)
      if (p.rank() != rank_) throw UsageError("partition " + to_string(p) + " has the wrong rank");
    std::sort(cls.begin(), cls.end());
  }

  std::vector<VertexId> order(classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return classes[a].front() < classes[b].front(); });
  std::vector<VertexId> new_id(classes.size());
  classes_.reserve(classes.size());
  for (VertexId k = 0; k < order.size(); ++k) {
    new_id[order[k]] = k;
    classes_.push_back(std::move(classes[order[k]]));
  }

  for (VertexId v = 0; v < classes_.size(); ++v)
    for (const auto& p : classes_[v])
      if (!index_.emplace(p, v).second)
        throw UsageError("partition " + to_string(p) + " appears in two vertex classes");

  std::map<std::pair<VertexId, VertexId>, Box> merged;
  for (const auto& e : edges) {
    if (e.u >= new_id.size() || e.v >= new_id.size()) throw UsageError("edge endpoint out of range");
    VertexId a = new_id[e.u];
    VertexId b = new_id[e.v];
    if (a == b) throw UsageError("loop at vertex " + to_string(classes_[a].front()));
    validate(e.color, rank_);
    if (a > b) std::swap(a, b);
    auto [it, inserted] = merged.emplace(std::make_pair(a, b), e.color);
    if (!inserted && it->second != e.color)
      throw InvariantViolation("parallel edges between [" + to_string(classes_[a].front()) + "] and [" +
                               to_string(classes_[b].front()) + "] carry colours " + to_string(it->second) + " and " +
                               to_string(e.color));
  }

  adjacency_.resize(classes_.size());
  edges_.reserve(merged.size());
  for (const auto& [ends, color] : merged) {
    const std::size_t idx = edges_.size();
    edges_.push_back(ColoredEdge{ends.first, ends.second, color});
    adjacency_[ends.first].emplace_back(ends.second, idx);
    adjacency_[ends.second].emplace_back(ends.first, idx);
  }
  for (auto& nbrs : adjacency_)
    std::sort(nbrs.begin(), nbrs.end());
}

std::optional<std::size_t> ColoredGraph::edge_between(VertexId a, VertexId b) const {
  const auto& nbrs = adjacency_.at(a);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), std::make_pair(b, std::size_t{0}));
  if (it == nbrs.end() || it->first != b) return std::nullopt;
  return it->second;
}

std::optional<VertexId> ColoredGraph::vertex_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ColorSet ColoredGraph::colorset() const {
  ColorSet out;
  for (const auto& e : edges_)
    out.insert(e.color);
  return out;
}

ColoredGraph build_lattice(Rank rank) {
  auto parts = all_partitions(rank);
  std::vector<std::vector<Partition>> classes;
  classes.reserve(parts.size());
  std::map<Partition, VertexId> id;
  for (VertexId k = 0; k < parts.size(); ++k) {
    id.emplace(parts[k], k);
    classes.push_back({parts[k]});
  }
  std::vector<ColoredEdge> edges;
  for (VertexId k = 0; k < parts.size(); ++k)
    for (const auto& b : parts[k].addable_boxes())
      edges.push_back(ColoredEdge{k, id.at(parts[k].toggled(b)), b});
  return ColoredGraph(rank, std::move(classes), std::move(edges));
}

ColoredGraph contract_colors(const ColoredGraph& g, const ColorSet& colors) {
  const auto present = g.colorset();
  for (const auto& c : colors)
    if (!present.contains(c)) throw UsageError("colour " + to_string(c) + " does not occur in the graph");

  DisjointSets sets(g.vertex_count());
  for (const auto& e : g.edges())
    if (colors.contains(e.color)) sets.unite(e.u, e.v);

  std::map<std::size_t, VertexId> root_to_new;
  std::vector<std::vector<Partition>> classes;
  std::vector<VertexId> new_of(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto [it, inserted] = root_to_new.emplace(sets.find(v), classes.size());
    if (inserted) classes.emplace_back();
    new_of[v] = it->second;
    const auto& cls = g.vertex_class(v);
    classes[it->second].insert(classes[it->second].end(), cls.begin(), cls.end());
  }

  std::vector<ColoredEdge> edges;
  for (const auto& e : g.edges()) {
    if (colors.contains(e.color)) continue;
    const VertexId a = new_of[e.u];
    const VertexId b = new_of[e.v];
    if (a == b) continue; // would be a loop
    edges.push_back(ColoredEdge{a, b, e.color});
  }
  return ColoredGraph(g.rank(), std::move(classes), std::move(edges));
}

ColorSet nonorthogonal_colors(const Weight& lambda) {
  ColorSet out;
  const Rank rank = lambda.rank();
  for (const auto& b : all_boxes(rank))
    if (!is_zero(bilinear_form(lambda, to_weight(box_to_root(b, rank), rank)))) out.insert(b);
  return out;
}

ColoredGraph contract_at_weight(const ColoredGraph& g, const Weight& lambda) {
  if (lambda.rank() != g.rank()) throw UsageError("rank mismatch between graph and weight");
  const auto present = g.colorset();
  ColorSet colors;
  for (const auto& c : nonorthogonal_colors(lambda))
    if (present.contains(c)) colors.insert(c);
  return contract_colors(g, colors);
}

// ---------------------------------------------------------------------------

DistanceTable::DistanceTable(const ColoredGraph& g) : size_(g.vertex_count()), dist_(size_ * size_, -1) {
  std::vector<VertexId> queue;
  queue.reserve(size_);
  for (VertexId s = 0; s < size_; ++s) {
    int* row = &dist_[s * size_];
    row[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId x = queue[head];
      for (const auto& [y, e] : g.neighbors(x)) {
        if (row[y] >= 0) continue;
        row[y] = row[x] + 1;
        queue.push_back(y);
      }
    }
  }
}

int DistanceTable::diameter() const {
  int best = 0;
  for (int d : dist_)
    best = std::max(best, d);
  return best;
}

bool DistanceTable::connected() const {
  return std::none_of(dist_.begin(), dist_.end(), [](int d) { return d < 0; });
}

void validate_walk(const ColoredGraph& g, const Walk& w) {
  if (w.vertices.empty()) throw UsageError("a walk needs at least its start vertex");
  for (auto v : w.vertices)
    if (v >= g.vertex_count()) throw UsageError("walk vertex out of range");
  for (std::size_t k = 1; k < w.vertices.size(); ++k)
    if (!g.edge_between(w.vertices[k - 1], w.vertices[k]))
      throw UsageError("walk step " + std::to_string(k) + " is not an edge");
}

std::vector<Box> walk_colors(const ColoredGraph& g, const Walk& w) {
  validate_walk(g, w);
  std::vector<Box> out;
  for (std::size_t k = 1; k < w.vertices.size(); ++k)
    out.push_back(g.edges()[*g.edge_between(w.vertices[k - 1], w.vertices[k])].color);
  return out;
}

bool is_rainbow(const ColoredGraph& g, const Walk& w) {
  auto colors = walk_colors(g, w);
  std::sort(colors.begin(), colors.end());
  return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

bool is_shortest(const ColoredGraph& g, const DistanceTable& d, const Walk& w) {
  validate_walk(g, w);
  return static_cast<int>(w.length()) == d(w.vertices.front(), w.vertices.back());
}

std::vector<VertexId> geodesically_maximal(const DistanceTable& d, VertexId a) {
  std::vector<VertexId> out;
  for (VertexId b = 0; b < d.size(); ++b) {
    bool maximal = true;
    for (VertexId c = 0; c < d.size() && maximal; ++c)
      if (c != b && d(c, a) == d(c, b) + d(b, a)) maximal = false;
    if (maximal) out.push_back(b);
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> mutually_unique_maximal_pairs(const DistanceTable& d) {
  std::vector<std::optional<VertexId>> unique(d.size());
  for (VertexId a = 0; a < d.size(); ++a) {
    auto gm = geodesically_maximal(d, a);
    if (gm.size() == 1) unique[a] = gm.front();
  }
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId a = 0; a < d.size(); ++a) {
    if (!unique[a]) continue;
    const VertexId b = *unique[a];
    if (a < b && unique[b] == a) out.emplace_back(a, b);
  }
  return out;
}

std::vector<std::size_t> bridges(const ColoredGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<std::size_t> out;
  int timer = 0;
  auto dfs = [&](auto&& self, VertexId v, std::optional<std::size_t> via) -> void {
    disc[v] = low[v] = timer++;
    for (const auto& [w, e] : g.neighbors(v)) {
      if (via && e == *via) continue;
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
      } else {
        self(self, w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) out.push_back(e);
      }
    }
  };
  for (VertexId v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(dfs, v, std::nullopt);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const ColoredGraph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const auto& [w, e] : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.vertex_count();
}

bool is_path_graph(const ColoredGraph& g) {
  if (g.vertex_count() == 0) return false;
  if (g.edge_count() + 1 != g.vertex_count()) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.neighbors(v).size() > 2) return false;
  return is_connected(g);
}

namespace {

// Colours of g, indexed for bitmask use.
std::vector<Box> color_index(const ColoredGraph& g) {
  auto cs = g.colorset();
  if (cs.size() > 64) throw UsageError("walk analysis supports at most 64 colours");
  return {cs.begin(), cs.end()};
}

std::uint64_t color_bit(const std::vector<Box>& colors, const Box& b) {
  auto it = std::lower_bound(colors.begin(), colors.end(), b);
  return std::uint64_t{1} << static_cast<unsigned>(it - colors.begin());
}

} // namespace

std::map<ColorSet, VertexId> rainbow_endpoint_map(const ColoredGraph& g, VertexId a) {
  if (a >= g.vertex_count()) throw UsageError("start vertex out of range");
  const auto colors = color_index(g);
  std::vector<std::uint64_t> edge_bit(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    edge_bit[e] = color_bit(colors, g.edges()[e].color);

  std::map<std::uint64_t, VertexId> endpoint;
  std::set<std::pair<VertexId, std::uint64_t>> visited;
  auto dfs = [&](auto&& self, VertexId v, std::uint64_t used) -> void {
    if (!visited.emplace(v, used).second) return;
    auto [it, inserted] = endpoint.emplace(used, v);
    if (!inserted && it->second != v) {
      std::string set;
      for (std::size_t k = 0; k < colors.size(); ++k)
        if (used >> k & 1U) set += to_string(colors[k]);
      throw InvariantViolation("rainbow walks from [" + to_string(g.representative(a)) + "] with colour set {" + set +
                               "} end at both [" + to_string(g.representative(it->second)) + "] and [" +
                               to_string(g.representative(v)) + "]");
    }
    for (const auto& [w, e] : g.neighbors(v))
      if (!(used & edge_bit[e])) self(self, w, used | edge_bit[e]);
  };
  dfs(dfs, a, 0);

  std::map<ColorSet, VertexId> out;
  for (const auto& [mask, v] : endpoint) {
    ColorSet set;
    for (std::size_t k = 0; k < colors.size(); ++k)
      if (mask >> k & 1U) set.insert(colors[k]);
    out.emplace(std::move(set), v);
  }
  return out;
}

WalkCensus classify_walks(const ColoredGraph& g, const DistanceTable& d, int max_length) {
  WalkCensus census;
  const auto colors = color_index(g);
  std::vector<std::uint64_t> edge_bit(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    edge_bit[e] = color_bit(colors, g.edges()[e].color);

  // Walk counts by dynamic programming, independent of the enumeration.
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> ways(n, 1);
  census.total_walks = n;
  for (int k = 1; k <= max_length; ++k) {
    std::vector<std::uint64_t> next(n, 0);
    for (VertexId v = 0; v < n; ++v)
      for (const auto& [w, e] : g.neighbors(v))
        next[w] += ways[v];
    ways = std::move(next);
    for (auto x : ways)
      census.total_walks += x;
  }

  std::vector<VertexId> path;
  auto dfs = [&](auto&& self, VertexId start, VertexId v, std::uint64_t used, bool repeated, int len) -> void {
    ++census.visited;
    const bool rainbow = !repeated;
    const bool shortest = len == d(start, v);
    if (rainbow != shortest) {
      ++census.violations;
      if (!census.first_violation) census.first_violation = Walk{path};
      return;
    }
    if (!rainbow) {
      ++census.pruned;
      return;
    }
    ++census.geodesics;
    if (len == max_length) return;
    for (const auto& [w, e] : g.neighbors(v)) {
      path.push_back(w);
      self(self, start, w, used | edge_bit[e], repeated || (used & edge_bit[e]) != 0, len + 1);
      path.pop_back();
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    path.assign(1, s);
    dfs(dfs, s, s, 0, false, 0);
  }
  return census;
}

} // namespace glmn
