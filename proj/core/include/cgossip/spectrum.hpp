#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "cgossip/graph.hpp"
#include "cgossip/scheduler.hpp"
#include "cgossip/transition.hpp"

namespace cgossip {

/// F_d = M_{sigma(d-1)} ... M_{sigma(0)}: one period of the protocol, later
/// steps multiplying on the left.
struct PeriodMatrix {
  Eigen::MatrixXd matrix;
  Schedule schedule;

  int period() const { return schedule.period(); }
};

/// Builds the ordered dense product. `transitions[k]` corresponds to coverage
/// clique k+1. Throws on invalid indices or mixed dimensions.
PeriodMatrix period_matrix(const Schedule& sched,
                           const std::vector<Transition>& transitions);

/// Dense nonsymmetric eigensolve; eigenvalues sorted by descending modulus,
/// then ascending argument. Throws std::invalid_argument on non-finite input.
std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXd& m);

struct SpectrumReport {
  std::vector<std::complex<double>> eigenvalues;  // sorted as above
  double rho = 0.0;
  std::optional<double> lambda2;  // largest modulus strictly below rho
};

SpectrumReport spectrum_report(const std::vector<std::complex<double>>& eigs);

std::optional<double> lambda2(const SpectrumReport& report);

/// Multiset equality up to tol via greedy nearest-neighbour matching of the
/// sorted lists. tol < 0 selects the default 1e-9 * max(1, rho).
bool spectra_equal(const std::vector<std::complex<double>>& a,
                   const std::vector<std::complex<double>>& b,
                   double tol = -1.0);

enum class SwapCondition {
  NonAdjacent,      // sigma(s), sigma(s+1) disjoint: factors commute
  AdjacentAcyclic,  // adjacent, but neither clique lies on a line-graph cycle
  NotGuaranteed,    // neither sufficient condition holds
};

/// Classifies the swap of schedule positions s, s+1 (1-based). The schedule
/// must visit every coverage clique exactly once per period; otherwise
/// std::invalid_argument.
SwapCondition swap_condition(const CliqueCoverage& cov, const LineGraph& lg,
                             const Schedule& sched, int s);

/// nu = |lambda2(F_d)|^{1/d}; empty when lambda2 is absent or zero
/// (degenerate or finite-time protocol).
std::optional<double> convergence_rate(const PeriodMatrix& f);

struct ConvergenceReport {
  bool convergent = false;
  bool spectral_radius_ok = false;   // rho <= 1 + tol
  bool one_semisimple_ok = false;    // rank(F - I) == dim - mult(1)
  bool no_other_unimodular = false;  // |lambda| ~ 1 implies lambda ~ 1
  bool partial_products_fix = false; // M_{sigma(k)}..M_{sigma(0)} fix ker(F - I)
  double rho = 0.0;
  int one_multiplicity = 0;
  int fixed_space_dim = 0;
};

/// The four convergence conditions for the periodic protocol; the fixed space
/// is the numerical kernel of F_d - I (SVD threshold 1e-9 * ||F_d||).
ConvergenceReport check_convergence(const PeriodMatrix& f,
                                    const std::vector<Transition>& transitions,
                                    double tol = 1e-9);

}  // namespace cgossip
