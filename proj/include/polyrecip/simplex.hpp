#pragma once

#include <Eigen/Dense>

namespace polyrecip {

struct LpSolution {
  Eigen::VectorXd x;
  double objective = 0.0;
  int iterations = 0;
};

/// minimize c.x subject to g x >= h with x unrestricted in sign.
/// Dense two-phase simplex with Bland's rule. Throws Error(Infeasible) when
/// the constraints admit no point; throws std::domain_error when the
/// objective is unbounded below.
LpSolution minimize_free(const Eigen::VectorXd& c, const Eigen::MatrixXd& g, const Eigen::VectorXd& h);

}  // namespace polyrecip
