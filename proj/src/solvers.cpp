#include "polyrecip/solvers.hpp"

#include <stdexcept>

#include "polyrecip/simplex.hpp"

namespace polyrecip {

namespace {

void require_dof(const EquilibriumSystem& sys) {
  if (sys.dof() == 0) throw Error(ErrorCode::ZeroDof, "the only solution is q = 0");
}

void require_length(const Eigen::VectorXd& v, int expected, const char* name) {
  if (v.size() != expected) {
    throw Error(ErrorCode::DimensionMismatch, std::string(name) + " has " + std::to_string(v.size()) +
                                                  " entries, expected " + std::to_string(expected));
  }
}

DensityVector finish(Eigen::VectorXd q, double scale) {
  DensityVector out;
  const double norm = q.size() ? q.cwiseAbs().maxCoeff() : 0.0;
  out.zero_solution = norm <= 1e-10 * std::max(1.0, scale);
  if (out.zero_solution) q.setZero();
  out.q = std::move(q);
  return out;
}

}  // namespace

DensityVector solve_mpi(const EquilibriumSystem& sys, const Eigen::VectorXd& xi) {
  require_dof(sys);
  require_length(xi, sys.face_count(), "xi");
  const Eigen::VectorXd ax = kernels::multiply(sys.matrix(), xi, sys.exec());
  Eigen::VectorXd q = xi - kernels::multiply(sys.pinv(), ax, sys.exec());
  return finish(std::move(q), xi.cwiseAbs().maxCoeff());
}

DensityVector solve_rref(const EquilibriumSystem& sys, const Eigen::VectorXd& zeta) {
  require_dof(sys);
  require_length(zeta, sys.dof(), "zeta");
  const Rref& red = sys.reduced();
  if (static_cast<int>(red.free_columns.size()) != sys.dof()) {
    throw Error(ErrorCode::DimensionMismatch, "row reduction found " + std::to_string(red.free_columns.size()) +
                                                  " independent faces but the rank gives " +
                                                  std::to_string(sys.dof()));
  }
  const Eigen::VectorXd dependent = -(red.free_block() * zeta);
  Eigen::VectorXd q(sys.face_count());
  for (std::size_t k = 0; k < red.free_columns.size(); ++k) q(red.free_columns[k]) = zeta(k);
  for (std::size_t i = 0; i < red.pivots.size(); ++i) q(red.pivots[i]) = dependent(i);
  return finish(std::move(q), zeta.size() ? zeta.cwiseAbs().maxCoeff() : 0.0);
}

DensityVector solve_lp(const EquilibriumSystem& sys, const Eigen::VectorXd& lambda) {
  require_dof(sys);
  require_length(lambda, sys.face_count(), "lambda");
  if ((lambda.array() <= 0.0).any()) throw std::invalid_argument("lambda must be strictly positive");
  const Eigen::MatrixXd& n = sys.nullspace();
  const Eigen::VectorXd c = n.transpose() * lambda;
  const LpSolution sol = minimize_free(c, n, Eigen::VectorXd::Ones(n.rows()));
  return finish(n * sol.x, 1.0);
}

}  // namespace polyrecip
