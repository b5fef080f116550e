#include "cgossip/scheduler.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace cgossip {

Schedule apply_swap(const Schedule& sched, int s) {
  if (s < 1 || s >= sched.period())
    throw std::out_of_range("swap position " + std::to_string(s) +
                            " outside 1.." + std::to_string(sched.period() - 1));
  Schedule out = sched;
  std::swap(out.order[s - 1], out.order[s]);
  return out;
}

Factorization factorize(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("factorize requires n >= 2");
  Factorization f;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  }
  if (n > 1) f.factors.emplace_back(n, 1);
  return f;
}

Feasibility check_regular(std::int64_t n, std::int64_t m) {
  if (m < 2 || n < m) throw std::invalid_argument("need n >= m >= 2");
  if (n % m != 0) return Feasibility::NotDivisible;
  auto primes_of = [](std::int64_t v) {
    std::set<std::int64_t> ps;
    for (const auto& [p, e] : factorize(v).factors) ps.insert(p);
    return ps;
  };
  return primes_of(n) == primes_of(m) ? Feasibility::Ok
                                      : Feasibility::ExtraPrime;
}

bool regular_feasible(std::int64_t n, std::int64_t m) {
  return check_regular(n, m) == Feasibility::Ok;
}

std::int64_t delta(std::int64_t n, std::int64_t m) {
  if (!regular_feasible(n, m))
    throw std::domain_error("no m-regular finite-time schedule for n=" +
                            std::to_string(n) + ", m=" + std::to_string(m));
  std::map<std::int64_t, int> r;
  for (const auto& [p, e] : factorize(m).factors) r[p] = e;
  std::int64_t best = 1;
  for (const auto& [p, s] : factorize(n).factors) {
    const int ri = r.at(p);
    best = std::max<std::int64_t>(best, (s + ri - 1) / ri);
  }
  return best;
}

std::int64_t min_steps(std::int64_t n, std::int64_t m) {
  return delta(n, m) * n / m;
}

namespace {

void append(NodeSchedule& to, const NodeSchedule& tail) {
  to.cliques.insert(to.cliques.end(), tail.cliques.begin(), tail.cliques.end());
}

NodeSchedule clique_select_impl(const std::vector<int>& nodes, std::int64_t m) {
  const std::int64_t n = static_cast<std::int64_t>(nodes.size());
  NodeSchedule out;
  const std::int64_t n1 = n / m;
  if (n1 == 1) {
    out.cliques.push_back(nodes);
    return out;
  }
  // blocks of m consecutive positions
  for (std::int64_t i = 0; i < n1; ++i)
    out.cliques.emplace_back(nodes.begin() + i * m, nodes.begin() + (i + 1) * m);

  // m1 = min{b : m | n1*b}, strided sub-blocks of m1 consecutive positions
  std::int64_t m1 = 1;
  while ((n1 * m1) % m != 0) ++m1;
  const std::int64_t n2 = m / m1;
  for (std::int64_t j = 0; j < n2; ++j) {
    std::vector<int> transversal;
    transversal.reserve(n1 * m1);
    for (std::int64_t i = 0; i < n1; ++i)
      for (std::int64_t k = 0; k < m1; ++k)
        transversal.push_back(nodes[i * m + j * m1 + k]);
    append(out, clique_select_impl(transversal, m));
  }
  return out;
}

}  // namespace

NodeSchedule clique_select(const std::vector<int>& nodes, std::int64_t m) {
  if (std::set<int>(nodes.begin(), nodes.end()).size() != nodes.size())
    throw std::invalid_argument("node list has duplicates");
  if (!regular_feasible(static_cast<std::int64_t>(nodes.size()), m))
    throw std::domain_error("clique_select infeasible for n=" +
                            std::to_string(nodes.size()) +
                            ", m=" + std::to_string(m));
  NodeSchedule out = clique_select_impl(nodes, m);
  out.node_count = *std::max_element(nodes.begin(), nodes.end());
  return out;
}

NodeSchedule lattice_schedule(int n, int r1, int r2) {
  if (r1 < 2 || r2 < 2 || n != r1 * r2)
    throw std::invalid_argument("lattice needs n = r1*r2 with r1, r2 >= 2");
  NodeSchedule out;
  out.node_count = n;
  for (int p = 0; p < r2; ++p) {
    std::vector<int> c(r1);
    for (int k = 0; k < r1; ++k) c[k] = r1 * p + k + 1;
    out.cliques.push_back(std::move(c));
  }
  for (int q = 1; q <= r1; ++q) {
    std::vector<int> c(r2);
    for (int k = 0; k < r2; ++k) c[k] = r1 * k + q;
    out.cliques.push_back(std::move(c));
  }
  return out;
}

NodeSchedule multi_factor_schedule(int n, const std::vector<int>& factors) {
  std::int64_t prod = 1;
  for (int r : factors) {
    if (r < 2) throw std::invalid_argument("every factor must be >= 2");
    prod *= r;
  }
  if (factors.empty() || prod != n)
    throw std::invalid_argument("factors must multiply to n");

  NodeSchedule out;
  out.node_count = n;
  // node <-> mixed-radix lattice point; phase i averages along dimension i
  std::int64_t stride = 1;
  for (int r : factors) {
    for (int base = 0; base < n; ++base) {
      if ((base / stride) % r != 0) continue;
      std::vector<int> c(r);
      for (int a = 0; a < r; ++a) c[a] = static_cast<int>(base + a * stride) + 1;
      out.cliques.push_back(std::move(c));
    }
    stride *= r;
  }
  return out;
}

CoverageBundle coverage_from(const NodeSchedule& sched) {
  if (sched.cliques.empty())
    throw std::invalid_argument("empty schedule");
  int n = sched.node_count;
  for (const auto& c : sched.cliques)
    for (int v : c) n = std::max(n, v);

  std::vector<std::pair<int, int>> edges;
  for (const auto& c : sched.cliques)
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        edges.emplace_back(c[i], c[j]);
  Graph g(n, edges);

  std::vector<std::vector<int>> unique;
  std::map<std::vector<int>, int> index_of;
  Schedule order;
  for (const auto& c : sched.cliques) {
    std::vector<int> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    auto it = index_of.find(sorted);
    if (it == index_of.end()) {
      unique.push_back(sorted);
      it = index_of.emplace(sorted, static_cast<int>(unique.size())).first;
    }
    order.order.push_back(it->second);
  }

  auto result = validate_coverage(g, unique);
  if (const auto* err = std::get_if<CoverageError>(&result))
    throw std::invalid_argument("schedule does not form a coverage: " +
                                err->message);
  return CoverageBundle{std::move(g),
                        std::get<CliqueCoverage>(std::move(result)),
                        std::move(order)};
}

}  // namespace cgossip
