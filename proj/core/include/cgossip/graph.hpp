#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cgossip {

/// Simple undirected graph on nodes 1..n. Node ids are 1-based at every
/// public surface (matching the input format); storage is 0-based.
class Graph {
 public:
  /// Normalizes and deduplicates edges. Throws std::invalid_argument on
  /// self-loops or indices outside 1..n.
  Graph(int node_count, const std::vector<std::pair<int, int>>& edges);

  int node_count() const { return n_; }
  bool has_edge(int u, int v) const;

  /// Sorted (i<j), deduplicated, 1-based.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Neighbor ids of node v, ascending, 1-based.
  const std::vector<int>& neighbors(int v) const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;  // indexed 0..n-1, holds 1-based ids
};

/// Nonempty sorted node subset. Construction sorts and rejects duplicates;
/// completeness of the induced subgraph is checked by is_clique / coverage
/// validation, not here.
struct Clique {
  std::vector<int> members;

  explicit Clique(std::vector<int> nodes);
  int size() const { return static_cast<int>(members.size()); }
  bool contains(int v) const;
  bool intersects(const Clique& other) const;
};

/// True iff every pair in members is an edge (singletons vacuously true).
/// Throws std::invalid_argument on out-of-range ids.
bool is_clique(const Graph& g, const std::vector<int>& members);

class CliqueCoverage {
 public:
  CliqueCoverage(Graph graph, std::vector<Clique> cliques)
      : graph_(std::move(graph)), cliques_(std::move(cliques)) {}

  const Graph& graph() const { return graph_; }
  int size() const { return static_cast<int>(cliques_.size()); }

  /// 1-based clique index, matching schedule entries.
  const Clique& clique(int index) const { return cliques_.at(index - 1); }
  const std::vector<Clique>& cliques() const { return cliques_; }

 private:
  Graph graph_;
  std::vector<Clique> cliques_;
};

struct CoverageError {
  enum class Kind { NotAClique, UncoveredNode, DisconnectedUnion };
  Kind kind;
  int clique_index = 0;  // 1-based, for NotAClique
  int node = 0;          // for UncoveredNode
  std::string message;
};

using CoverageResult = std::variant<CliqueCoverage, CoverageError>;

/// Checks the three coverage conditions in order (each set is a clique, the
/// union covers 1..n, the union of induced edges is connected) and reports
/// the first failure.
CoverageResult validate_coverage(const Graph& g,
                                 const std::vector<std::vector<int>>& cliques);

/// One vertex per coverage clique, an edge wherever two cliques intersect.
class LineGraph {
 public:
  LineGraph(int clique_count, std::vector<std::pair<int, int>> edges);

  int size() const { return d_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int i, int j) const;
  const std::vector<int>& neighbors(int i) const;
  int degree(int i) const;
  int max_degree() const;
  bool connected() const;

 private:
  int d_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

LineGraph line_graph(const CliqueCoverage& cov);

/// True iff vertex i (1-based) lies on a simple cycle of length >= 3,
/// i.e. it has an incident non-bridge edge.
bool in_cycle(const LineGraph& lg, int clique_index);

}  // namespace cgossip
