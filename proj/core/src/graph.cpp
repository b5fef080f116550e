#include "cgossip/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace cgossip {

namespace {

std::pair<int, int> normalize_edge(int u, int v, int n) {
  if (u == v)
    throw std::invalid_argument("self-loop (" + std::to_string(u) + "," +
                                std::to_string(v) + ") is not allowed");
  if (u < 1 || u > n || v < 1 || v > n)
    throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") has a node outside 1.." +
                                std::to_string(n));
  return {std::min(u, v), std::max(u, v)};
}

void check_node_range(int v, int n) {
  if (v < 1 || v > n)
    throw std::invalid_argument("node " + std::to_string(v) + " outside 1.." +
                                std::to_string(n));
}

}  // namespace

Graph::Graph(int node_count, const std::vector<std::pair<int, int>>& edges)
    : n_(node_count) {
  if (node_count < 1) throw std::invalid_argument("node count must be >= 1");
  std::set<std::pair<int, int>> normalized;
  for (const auto& [u, v] : edges) normalized.insert(normalize_edge(u, v, n_));
  edges_.assign(normalized.begin(), normalized.end());
  adjacency_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u - 1].push_back(v);
    adjacency_[v - 1].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  check_node_range(u, n_);
  check_node_range(v, n_);
  const auto& nbrs = adjacency_[u - 1];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_node_range(v, n_);
  return adjacency_[v - 1];
}

Clique::Clique(std::vector<int> nodes) : members(std::move(nodes)) {
  if (members.empty()) throw std::invalid_argument("clique must be nonempty");
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw std::invalid_argument("clique has duplicate members");
}

bool Clique::contains(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

bool Clique::intersects(const Clique& other) const {
  auto a = members.begin();
  auto b = other.members.begin();
  while (a != members.end() && b != other.members.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

bool is_clique(const Graph& g, const std::vector<int>& members) {
  for (int v : members) check_node_range(v, g.node_count());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (members[i] == members[j] || !g.has_edge(members[i], members[j]))
        return false;
  return true;
}

CoverageResult validate_coverage(const Graph& g,
                                 const std::vector<std::vector<int>>& cliques) {
  const int n = g.node_count();
  if (cliques.empty())
    return CoverageError{CoverageError::Kind::UncoveredNode, 0, 1,
                         "coverage has no cliques"};

  std::vector<Clique> validated;
  validated.reserve(cliques.size());
  for (std::size_t k = 0; k < cliques.size(); ++k) {
    if (!is_clique(g, cliques[k]))
      return CoverageError{CoverageError::Kind::NotAClique,
                           static_cast<int>(k + 1), 0,
                           "set #" + std::to_string(k + 1) +
                               " does not induce a complete subgraph"};
    validated.emplace_back(cliques[k]);
  }

  std::vector<bool> covered(n, false);
  for (const auto& c : validated)
    for (int v : c.members) covered[v - 1] = true;
  for (int v = 1; v <= n; ++v)
    if (!covered[v - 1])
      return CoverageError{CoverageError::Kind::UncoveredNode, 0, v,
                           "node " + std::to_string(v) +
                               " is not covered by any clique"};

  // BFS over the union of induced edges. Within a clique all pairs are
  // connected, so it is enough to link nodes sharing a clique.
  std::vector<std::vector<int>> union_adj(n);
  for (const auto& c : validated)
    for (std::size_t i = 0; i < c.members.size(); ++i)
      for (std::size_t j = i + 1; j < c.members.size(); ++j) {
        union_adj[c.members[i] - 1].push_back(c.members[j]);
        union_adj[c.members[j] - 1].push_back(c.members[i]);
      }
  std::vector<bool> seen(n, false);
  std::queue<int> queue;
  queue.push(1);
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : union_adj[v - 1])
      if (!seen[w - 1]) {
        seen[w - 1] = true;
        ++reached;
        queue.push(w);
      }
  }
  if (reached != n)
    return CoverageError{CoverageError::Kind::DisconnectedUnion, 0, 0,
                         "union of induced subgraphs is not connected"};

  return CliqueCoverage(g, std::move(validated));
}

LineGraph::LineGraph(int clique_count, std::vector<std::pair<int, int>> edges)
    : d_(clique_count), edges_(std::move(edges)) {
  adjacency_.assign(d_, {});
  for (const auto& [i, j] : edges_) {
    adjacency_[i - 1].push_back(j);
    adjacency_[j - 1].push_back(i);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool LineGraph::adjacent(int i, int j) const {
  const auto& nbrs = adjacency_.at(i - 1);
  return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

const std::vector<int>& LineGraph::neighbors(int i) const {
  return adjacency_.at(i - 1);
}

int LineGraph::degree(int i) const {
  return static_cast<int>(adjacency_.at(i - 1).size());
}

int LineGraph::max_degree() const {
  int best = 0;
  for (const auto& nbrs : adjacency_)
    best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

bool LineGraph::connected() const {
  if (d_ == 0) return false;
  std::vector<bool> seen(d_, false);
  std::queue<int> queue;
  queue.push(1);
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : adjacency_[v - 1])
      if (!seen[w - 1]) {
        seen[w - 1] = true;
        ++reached;
        queue.push(w);
      }
  }
  return reached == d_;
}

LineGraph line_graph(const CliqueCoverage& cov) {
  const int d = cov.size();
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      if (cov.clique(i).intersects(cov.clique(j))) edges.emplace_back(i, j);
  return LineGraph(d, std::move(edges));
}

namespace {

// Iterative DFS lowlink; returns per-vertex flag "has an incident non-bridge
// edge", which on a simple graph is exactly cycle membership.
std::vector<bool> non_bridge_incidence(const LineGraph& lg) {
  const int d = lg.size();
  std::vector<int> disc(d, -1), low(d, 0), parent(d, 0);
  std::vector<bool> on_cycle(d, false);
  int timer = 0;

  for (int root = 1; root <= d; ++root) {
    if (disc[root - 1] != -1) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    parent[root - 1] = 0;
    disc[root - 1] = low[root - 1] = timer++;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& nbrs = lg.neighbors(v);
      if (next < nbrs.size()) {
        int w = nbrs[next++];
        if (disc[w - 1] == -1) {
          parent[w - 1] = v;
          disc[w - 1] = low[w - 1] = timer++;
          stack.emplace_back(w, 0);
        } else if (w != parent[v - 1]) {
          low[v - 1] = std::min(low[v - 1], disc[w - 1]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().first;
          low[p - 1] = std::min(low[p - 1], low[v - 1]);
          if (low[v - 1] <= disc[p - 1]) {
            // edge (p,v) lies on a cycle
            on_cycle[p - 1] = true;
            on_cycle[v - 1] = true;
          }
        }
      }
    }
  }
  return on_cycle;
}

}  // namespace

bool in_cycle(const LineGraph& lg, int clique_index) {
  if (clique_index < 1 || clique_index > lg.size())
    throw std::invalid_argument("clique index outside 1.." +
                                std::to_string(lg.size()));
  return non_bridge_incidence(lg)[clique_index - 1];
}

}  // namespace cgossip
