#pragma once

#include <cstdint>
#include <vector>

#include "cgossip/graph.hpp"

namespace cgossip {

/// Periodic clique-selection signal bound to a CliqueCoverage: entries are
/// 1-based clique indices in time order, sigma(t) = order[t mod d]. In the
/// period-based product the later entries multiply on the left.
struct Schedule {
  std::vector<int> order;

  int period() const { return static_cast<int>(order.size()); }
  int at(int t) const { return order[t % order.size()]; }
};

/// Synthesized schedule carrying explicit node sets (clique_select, lattice,
/// multi-factor constructions); nodes are 1-based.
struct NodeSchedule {
  int node_count = 0;
  std::vector<std::vector<int>> cliques;

  int length() const { return static_cast<int>(cliques.size()); }
};

/// Exchanges entries s and s+1 (1-based). Throws std::out_of_range.
Schedule apply_swap(const Schedule& sched, int s);

struct Factorization {
  // (prime, exponent), primes increasing
  std::vector<std::pair<std::int64_t, int>> factors;
};

/// Trial division; inputs are desk-scale. Throws std::invalid_argument for n < 2.
Factorization factorize(std::int64_t n);

enum class Feasibility { Ok, NotDivisible, ExtraPrime };

/// Theorem condition for m-regular finite-time convergence: m | n and n, m
/// share exactly the same prime factors.
Feasibility check_regular(std::int64_t n, std::int64_t m);
bool regular_feasible(std::int64_t n, std::int64_t m);

/// max over shared primes of ceil(s_i / r_i). Throws std::domain_error on an
/// infeasible pair.
std::int64_t delta(std::int64_t n, std::int64_t m);

/// Minimal length of an m-regular finite-time schedule: delta(n,m) * n / m.
std::int64_t min_steps(std::int64_t n, std::int64_t m);

/// Recursive fastest m-regular construction over an ordered node list.
/// Output length equals min_steps(|nodes|, m); exact averaging along it
/// reaches the global mean at the last step.
NodeSchedule clique_select(const std::vector<int>& nodes, std::int64_t m);

/// Two-phase lattice construction for n = r1*r2: r2 blocks of r1 consecutive
/// nodes, then r1 strided transversals; r1 + r2 steps.
NodeSchedule lattice_schedule(int n, int r1, int r2);

/// k-phase generalization for n = r1*...*rk via the lattice embedding; phase i
/// holds n/r_i cliques of size r_i. Reduces to lattice_schedule for k = 2.
NodeSchedule multi_factor_schedule(int n, const std::vector<int>& factors);

struct CoverageBundle {
  Graph graph;
  CliqueCoverage coverage;
  Schedule schedule;
};

/// Interprets a node-set schedule as a coverage of the union graph (each set
/// induces a complete subgraph) plus the index schedule over it. Repeated
/// sets map to the same coverage clique.
CoverageBundle coverage_from(const NodeSchedule& sched);

}  // namespace cgossip
