#pragma once

#include <map>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "cgossip/graph.hpp"
#include "cgossip/rational.hpp"

namespace cgossip {

/// Ordered (i,j) -> b x b block, for i,j in one clique (diagonal included).
using BlockMap = std::map<std::pair<int, int>, Eigen::MatrixXd>;

/// Per-step state update M: identity outside the active clique(s). Kept in
/// lazy form; dense() materializes the full n*b x n*b matrix for spectral
/// work only.
class Transition {
 public:
  /// All clique members adopt the clique mean (b = 1).
  static Transition averaging(const Clique& c, int n);

  /// One simultaneous step over pairwise-disjoint cliques; equals the product
  /// of their averaging transitions in any order.
  static Transition multi(const std::vector<Clique>& cliques, int n);

  /// Generic block-linear update. Requires a block for every ordered pair
  /// (i,j) with i,j in c; every block must be b x b.
  static Transition blocks(const Clique& c, const BlockMap& blocks, int n, int b);

  /// Convenience for the symmetric reading of the block assignment: one block
  /// per unordered pair, placed at both (i,j) and (j,i); diagonal blocks keyed
  /// by node.
  static Transition symmetric_blocks(const Clique& c,
                                     const std::map<int, Eigen::MatrixXd>& diagonal,
                                     const std::map<std::pair<int, int>, Eigen::MatrixXd>& off_diagonal,
                                     int n, int b);

  int node_count() const { return n_; }
  int block_dim() const { return b_; }
  int dim() const { return n_ * b_; }

  /// True for averaging/multi forms, whose entries are rational by
  /// construction.
  bool rational_capable() const;

  Eigen::MatrixXd dense() const;

  /// Lazy matrix-vector product; only clique rows are recomputed.
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;

  /// Exact product. Throws std::domain_error on block transitions.
  RationalVector apply(const RationalVector& x) const;

 private:
  struct Averaging {
    std::vector<Clique> cliques;  // one entry, or several disjoint ones
  };
  struct Blocks {
    Clique clique;
    BlockMap blocks;
  };

  Transition(int n, int b, std::variant<Averaging, Blocks> form)
      : n_(n), b_(b), form_(std::move(form)) {}

  int n_;
  int b_;
  std::variant<Averaging, Blocks> form_;
};

/// P = I - h h^T / (h^T h): symmetric, idempotent, P h = 0.
/// Throws std::invalid_argument when h = 0.
Eigen::MatrixXd projection_matrix(const Eigen::VectorXd& h);

/// Blocks of the distributed linear-equation solver: each node i holds a row
/// h_i of the system; A_ii = I - ((|C|-1)/|C|) P_i and A_ij = P_i / |C|.
BlockMap solver_blocks(const Clique& c, const std::map<int, Eigen::VectorXd>& rows);

}  // namespace cgossip
