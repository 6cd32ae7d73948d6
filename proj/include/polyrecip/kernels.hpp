#pragma once

#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace polyrecip {

/// Execution policy for the dense kernels. Both policies produce bitwise
/// identical results; `serial` is the reference.
enum class Exec { serial, parallel };

std::string_view to_string(Exec exec);

namespace kernels {

/// Runs fn(0), ..., fn(n-1). fn must not throw.
template <class F>
void for_each_index(int n, Exec exec, F&& fn) {
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (int i = 0; i < n; ++i) fn(i);
  } else {
    for (int i = 0; i < n; ++i) fn(i);
  }
}

/// In-place Gauss-Jordan elimination to reduced row echelon form with
/// partial pivoting (largest magnitude, first row on ties). A column is
/// skipped when its best candidate is at most pivot_tol times the column's
/// largest magnitude in the input. Returns the pivot columns.
std::vector<int> gauss_jordan(Eigen::MatrixXd& m, double pivot_tol, Exec exec);

/// y = m * x, one dot product per row.
Eigen::VectorXd multiply(const Eigen::MatrixXd& m, const Eigen::VectorXd& x, Exec exec);

}  // namespace kernels
}  // namespace polyrecip
