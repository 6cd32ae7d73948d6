#pragma once

#include <Eigen/Dense>

#include "polyrecip/equilibrium.hpp"

namespace polyrecip {

struct DensityVector {
  Eigen::VectorXd q;
  /// Set when q vanished (the ZeroSolution warning); q is still returned.
  bool zero_solution = false;
};

/// q = (I - A+ A) xi. Throws ZeroDof when dof = 0 and DimensionMismatch when
/// xi does not have one entry per face.
DensityVector solve_mpi(const EquilibriumSystem& sys, const Eigen::VectorXd& xi);

/// Independent faces take zeta, pivot faces take -B zeta.
DensityVector solve_rref(const EquilibriumSystem& sys, const Eigen::VectorXd& zeta);

/// minimize lambda.q subject to A q = 0 and q >= 1. Throws Infeasible when
/// no such q exists; std::invalid_argument when lambda has a non-positive
/// entry.
DensityVector solve_lp(const EquilibriumSystem& sys, const Eigen::VectorXd& lambda);

}  // namespace polyrecip
