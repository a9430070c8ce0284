#pragma once

// Edge-coloured simple graphs whose vertices are classes of partitions: the
// finite Young lattice L(m,n) and its colour contractions L(m,n)_lambda.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "glmn/borels.hpp"

namespace glmn {

using VertexId = std::size_t;
using ColorSet = std::set<Box>;

struct ColoredEdge {
  VertexId u = 0; ///< u < v
  VertexId v = 0;
  Box color;
  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

class ColoredGraph {
public:
  /// Canonicalises the input: each class is sorted, vertices are ordered by
  /// their smallest partition, edges by endpoints. Parallel edges of equal
  /// colour collapse; parallel edges of different colours raise
  /// InvariantViolation. Loops and empty or overlapping classes raise
  /// UsageError.
  ColoredGraph(Rank rank, std::vector<std::vector<Partition>> classes, std::vector<ColoredEdge> edges);

  const Rank& rank() const { return rank_; }
  std::size_t vertex_count() const { return classes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::vector<Partition>>& classes() const { return classes_; }
  const std::vector<Partition>& vertex_class(VertexId v) const { return classes_.at(v); }
  const Partition& representative(VertexId v) const { return classes_.at(v).front(); }
  const std::vector<ColoredEdge>& edges() const { return edges_; }

  /// (neighbour, edge index) pairs, sorted by neighbour.
  const std::vector<std::pair<VertexId, std::size_t>>& neighbors(VertexId v) const { return adjacency_.at(v); }
  std::optional<std::size_t> edge_between(VertexId a, VertexId b) const;
  std::optional<VertexId> vertex_of(const Partition& p) const;

  /// Colours carried by at least one edge.
  ColorSet colorset() const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.rank_ == b.rank_ && a.classes_ == b.classes_ && a.edges_ == b.edges_;
  }

private:
  Rank rank_;
  std::vector<std::vector<Partition>> classes_;
  std::vector<ColoredEdge> edges_;
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> adjacency_;
  std::map<Partition, VertexId> index_;
};

/// L(m,n): all partitions in the rectangle, joined when they differ by one
/// box, coloured by that box.
ColoredGraph build_lattice(Rank rank);

/// Contracts every edge whose colour lies in `colors`; vertices become the
/// connected components of that spanning subgraph. Throws UsageError if a
/// colour is not present in g.
ColoredGraph contract_colors(const ColoredGraph& g, const ColorSet& colors);

/// Boxes b with (lambda, box_to_root(b)) != 0.
ColorSet nonorthogonal_colors(const Weight& lambda);

/// L(m,n)_lambda style quotient: contracts the colours of g that pair
/// nontrivially with lambda (lambda is used as given, no rho shift).
ColoredGraph contract_at_weight(const ColoredGraph& g, const Weight& lambda);

// ---------------------------------------------------------------------------
// distances and walks

class DistanceTable {
public:
  explicit DistanceTable(const ColoredGraph& g);

  /// -1 when unreachable.
  int operator()(VertexId a, VertexId b) const { return dist_[a * size_ + b]; }
  std::size_t size() const { return size_; }
  int diameter() const;
  bool connected() const;

private:
  std::size_t size_ = 0;
  std::vector<int> dist_;
};

/// Vertex sequence v_0, ..., v_k with consecutive vertices adjacent.
struct Walk {
  std::vector<VertexId> vertices;
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Throws UsageError unless w is a non-empty walk in g.
void validate_walk(const ColoredGraph& g, const Walk& w);
std::vector<Box> walk_colors(const ColoredGraph& g, const Walk& w);
bool is_rainbow(const ColoredGraph& g, const Walk& w);
bool is_shortest(const ColoredGraph& g, const DistanceTable& d, const Walk& w);

/// Vertices b such that no c != b has d(c,a) = d(c,b) + d(b,a).
std::vector<VertexId> geodesically_maximal(const DistanceTable& d, VertexId a);

/// Unordered pairs {a,b}, a < b, where b is the unique a-geodesically maximal
/// vertex and a the unique b-geodesically maximal vertex.
std::vector<std::pair<VertexId, VertexId>> mutually_unique_maximal_pairs(const DistanceTable& d);

/// Indices into g.edges() of the bridges, ascending.
std::vector<std::size_t> bridges(const ColoredGraph& g);

/// True for a single vertex or a simple path.
bool is_path_graph(const ColoredGraph& g);

bool is_connected(const ColoredGraph& g);

/// For every colour set used by a rainbow walk from `a`, the endpoint of such
/// walks. Throws InvariantViolation if two rainbow walks with the same colour
/// set end at different vertices.
std::map<ColorSet, VertexId> rainbow_endpoint_map(const ColoredGraph& g, VertexId a);

/// Result of checking "rainbow iff shortest" on every walk of length at most
/// max_length. A walk that is neither rainbow nor shortest has only such
/// extensions, so its subtree is counted in `pruned` instead of enumerated.
struct WalkCensus {
  std::uint64_t total_walks = 0; ///< all walks of length <= max_length, by counting
  std::uint64_t visited = 0;     ///< walks inspected one by one
  std::uint64_t pruned = 0;      ///< neither-rainbow-nor-shortest subtrees cut off
  std::uint64_t geodesics = 0;   ///< rainbow and shortest
  std::uint64_t violations = 0;
  std::optional<Walk> first_violation;
};

WalkCensus classify_walks(const ColoredGraph& g, const DistanceTable& d, int max_length);

// ---------------------------------------------------------------------------
// emission

/// Graphviz, one node per class labelled by its representative (and class
/// size when > 1), edges labelled "(i,j)". Byte-stable.
std::string to_dot(const ColoredGraph& g, const std::string& name = "L");

/// {"rank":[m,n],"vertices":[[partition,...],...],"edges":[{"u":k,"v":k,"color":[i,j]}]}
/// with partitions as arrays of row lengths. Byte-stable.
std::string to_json(const ColoredGraph& g);
ColoredGraph graph_from_json(const std::string& text);

} // namespace glmn
