#include "polyrecip/kernels.hpp"

#include <cmath>

namespace polyrecip {

std::string_view to_string(Exec exec) { return exec == Exec::serial ? "serial" : "parallel"; }

namespace kernels {

std::vector<int> gauss_jordan(Eigen::MatrixXd& m, double pivot_tol, Exec exec) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  Eigen::VectorXd thresholds(cols);
  for (int j = 0; j < cols; ++j) thresholds(j) = pivot_tol * (rows > 0 ? m.col(j).cwiseAbs().maxCoeff() : 0.0);

  std::vector<int> pivots;
  int r = 0;
  for (int j = 0; j < cols && r < rows; ++j) {
    int p = r;
    double best = std::abs(m(r, j));
    for (int i = r + 1; i < rows; ++i) {
      const double v = std::abs(m(i, j));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best <= thresholds(j) || best == 0.0) {
      m.col(j).tail(rows - r).setZero();
      continue;
    }
    if (p != r) m.row(p).tail(cols - j).swap(m.row(r).tail(cols - j));
    const double inv = 1.0 / m(r, j);
    m.row(r).tail(cols - j) *= inv;
    m(r, j) = 1.0;

    Eigen::VectorXd factors = m.col(j);
    factors(r) = 0.0;
    const Eigen::RowVectorXd pivot_row = m.row(r);
    for_each_index(cols - j, exec, [&](int k) {
      const int c = j + k;
      const double s = pivot_row(c);
      if (s != 0.0) m.col(c).noalias() -= s * factors;
    });
    m.col(j).setZero();
    m(r, j) = 1.0;
    pivots.push_back(j);
    ++r;
  }
  return pivots;
}

Eigen::VectorXd multiply(const Eigen::MatrixXd& m, const Eigen::VectorXd& x, Exec exec) {
  Eigen::VectorXd y(m.rows());
  for_each_index(static_cast<int>(m.rows()), exec, [&](int i) { y(i) = m.row(i).dot(x); });
  return y;
}

}  // namespace kernels
}  // namespace polyrecip
