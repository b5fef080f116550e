#include "cgossip/transition.hpp"

#include <stdexcept>
#include <string>

namespace cgossip {

namespace {

void check_members_range(const Clique& c, int n) {
  for (int v : c.members)
    if (v < 1 || v > n)
      throw std::invalid_argument("clique member " + std::to_string(v) +
                                  " outside 1.." + std::to_string(n));
}

}  // namespace

Transition Transition::averaging(const Clique& c, int n) {
  check_members_range(c, n);
  return Transition(n, 1, Averaging{{c}});
}

Transition Transition::multi(const std::vector<Clique>& cliques, int n) {
  if (cliques.empty())
    throw std::invalid_argument("multi transition needs at least one clique");
  for (const auto& c : cliques) check_members_range(c, n);
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = i + 1; j < cliques.size(); ++j)
      if (cliques[i].intersects(cliques[j]))
        throw std::invalid_argument(
            "cliques in one class must be pairwise disjoint");
  return Transition(n, 1, Averaging{cliques});
}

Transition Transition::blocks(const Clique& c, const BlockMap& blocks, int n,
                              int b) {
  check_members_range(c, n);
  if (b < 1) throw std::invalid_argument("block dimension must be >= 1");
  for (int i : c.members)
    for (int j : c.members) {
      auto it = blocks.find({i, j});
      if (it == blocks.end())
        throw std::invalid_argument("missing block (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
      if (it->second.rows() != b || it->second.cols() != b)
        throw std::invalid_argument("block (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") is not " +
                                    std::to_string(b) + "x" + std::to_string(b));
    }
  return Transition(n, b, Blocks{c, blocks});
}

Transition Transition::symmetric_blocks(
    const Clique& c, const std::map<int, Eigen::MatrixXd>& diagonal,
    const std::map<std::pair<int, int>, Eigen::MatrixXd>& off_diagonal, int n,
    int b) {
  BlockMap ordered;
  for (int i : c.members) {
    auto it = diagonal.find(i);
    if (it == diagonal.end())
      throw std::invalid_argument("missing diagonal block for node " +
                                  std::to_string(i));
    ordered[{i, i}] = it->second;
  }
  for (std::size_t a = 0; a < c.members.size(); ++a)
    for (std::size_t d = a + 1; d < c.members.size(); ++d) {
      int i = c.members[a], j = c.members[d];
      auto it = off_diagonal.find({i, j});
      if (it == off_diagonal.end()) it = off_diagonal.find({j, i});
      if (it == off_diagonal.end())
        throw std::invalid_argument("missing block for pair (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      ordered[{i, j}] = it->second;
      ordered[{j, i}] = it->second;
    }
  return blocks(c, ordered, n, b);
}

bool Transition::rational_capable() const {
  return std::holds_alternative<Averaging>(form_);
}

Eigen::MatrixXd Transition::dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim(), dim());
  if (const auto* avg = std::get_if<Averaging>(&form_)) {
    for (const auto& c : avg->cliques) {
      const double w = 1.0 / c.size();
      for (int i : c.members) {
        m.row(i - 1).setZero();
        for (int j : c.members) m(i - 1, j - 1) = w;
      }
    }
    return m;
  }
  const auto& bl = std::get<Blocks>(form_);
  for (int i : bl.clique.members) {
    m.block((i - 1) * b_, (i - 1) * b_, b_, b_).setZero();
    for (int j : bl.clique.members)
      m.block((i - 1) * b_, (j - 1) * b_, b_, b_) = bl.blocks.at({i, j});
  }
  return m;
}

Eigen::VectorXd Transition::apply(const Eigen::VectorXd& x) const {
  if (x.size() != dim())
    throw std::invalid_argument("state dimension " + std::to_string(x.size()) +
                                " != " + std::to_string(dim()));
  Eigen::VectorXd y = x;
  if (const auto* avg = std::get_if<Averaging>(&form_)) {
    for (const auto& c : avg->cliques) {
      double sum = 0.0;
      for (int i : c.members) sum += x(i - 1);
      const double mean = sum / c.size();
      for (int i : c.members) y(i - 1) = mean;
    }
    return y;
  }
  const auto& bl = std::get<Blocks>(form_);
  for (int i : bl.clique.members) {
    Eigen::VectorXd yi = Eigen::VectorXd::Zero(b_);
    for (int j : bl.clique.members)
      yi += bl.blocks.at({i, j}) * x.segment((j - 1) * b_, b_);
    y.segment((i - 1) * b_, b_) = yi;
  }
  return y;
}

RationalVector Transition::apply(const RationalVector& x) const {
  const auto* avg = std::get_if<Averaging>(&form_);
  if (avg == nullptr)
    throw std::domain_error(
        "rational mode is only defined for averaging/multi transitions");
  if (static_cast<int>(x.size()) != dim())
    throw std::invalid_argument("state dimension " + std::to_string(x.size()) +
                                " != " + std::to_string(dim()));
  RationalVector y = x;
  for (const auto& c : avg->cliques) {
    Rational sum = 0;
    for (int i : c.members) sum += x[i - 1];
    const Rational mean = sum / c.size();
    for (int i : c.members) y[i - 1] = mean;
  }
  return y;
}

Eigen::MatrixXd projection_matrix(const Eigen::VectorXd& h) {
  const double norm2 = h.squaredNorm();
  if (norm2 == 0.0)
    throw std::invalid_argument("projection needs a nonzero vector");
  const auto m = h.size();
  return Eigen::MatrixXd::Identity(m, m) - (h * h.transpose()) / norm2;
}

BlockMap solver_blocks(const Clique& c,
                       const std::map<int, Eigen::VectorXd>& rows) {
  const int size = c.size();
  BlockMap blocks;
  Eigen::Index m = -1;
  for (int i : c.members) {
    auto it = rows.find(i);
    if (it == rows.end())
      throw std::invalid_argument("missing system row for node " +
                                  std::to_string(i));
    if (m < 0) m = it->second.size();
    if (it->second.size() != m)
      throw std::invalid_argument("system rows have mixed dimensions");
    const Eigen::MatrixXd p = projection_matrix(it->second);  // rejects h = 0
    blocks[{i, i}] = Eigen::MatrixXd::Identity(m, m) -
                     (static_cast<double>(size - 1) / size) * p;
    for (int j : c.members)
      if (j != i) blocks[{i, j}] = p / size;
  }
  return blocks;
}

}  // namespace cgossip
