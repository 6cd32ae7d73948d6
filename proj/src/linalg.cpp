#include "polyrecip/linalg.hpp"

#include <Eigen/SVD>

namespace polyrecip {

namespace {

Eigen::BDCSVD<Eigen::MatrixXd> decompose(const Eigen::MatrixXd& a, unsigned options) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd;
  svd.compute(a, options);
  return svd;
}

int count_rank(const Eigen::VectorXd& sv, double rank_tol) {
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  const double cutoff = rank_tol * sv(0);
  int r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return r;
}

}  // namespace

Spectrum spectrum(const Eigen::MatrixXd& a, double rank_tol) {
  Spectrum s;
  if (a.size() == 0) return s;
  s.singular_values = decompose(a, 0).singularValues();
  s.rank = count_rank(s.singular_values, rank_tol);
  s.cutoff = s.singular_values.size() ? rank_tol * s.singular_values(0) : 0.0;
  if (s.rank > 0) s.last_kept = s.singular_values(s.rank - 1);
  if (s.rank < s.singular_values.size()) s.first_dropped = s.singular_values(s.rank);
  return s;
}

Eigen::MatrixXd pseudoinverse(const Eigen::MatrixXd& a, double rank_tol) {
  if (a.size() == 0) return Eigen::MatrixXd::Zero(a.cols(), a.rows());
  auto svd = decompose(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const int r = count_rank(sv, rank_tol);
  if (r == 0) return Eigen::MatrixXd::Zero(a.cols(), a.rows());
  const Eigen::VectorXd inv = sv.head(r).cwiseInverse();
  return svd.matrixV().leftCols(r) * inv.asDiagonal() * svd.matrixU().leftCols(r).transpose();
}

Eigen::MatrixXd svd_nullspace(const Eigen::MatrixXd& a, double rank_tol) {
  const int n = static_cast<int>(a.cols());
  if (a.rows() == 0) return Eigen::MatrixXd::Identity(n, n);
  auto svd = decompose(a, Eigen::ComputeFullV);
  const int r = count_rank(svd.singularValues(), rank_tol);
  return svd.matrixV().rightCols(n - r);
}

Eigen::MatrixXd Rref::free_block() const {
  Eigen::MatrixXd b(pivots.size(), free_columns.size());
  for (std::size_t k = 0; k < free_columns.size(); ++k) b.col(k) = r.col(free_columns[k]);
  return b;
}

Eigen::MatrixXd Rref::nullspace() const {
  const Eigen::MatrixXd b = free_block();
  Eigen::MatrixXd n = Eigen::MatrixXd::Zero(r.cols(), free_columns.size());
  for (std::size_t k = 0; k < free_columns.size(); ++k) {
    n(free_columns[k], k) = 1.0;
    for (std::size_t i = 0; i < pivots.size(); ++i) n(pivots[i], k) = -b(i, k);
  }
  return n;
}

Rref rref(const Eigen::MatrixXd& a, double pivot_tol, Exec exec) {
  Eigen::MatrixXd m = a;
  Rref out;
  out.pivots = kernels::gauss_jordan(m, pivot_tol, exec);
  out.r = m.topRows(out.pivots.size());
  std::size_t p = 0;
  for (int j = 0; j < a.cols(); ++j) {
    if (p < out.pivots.size() && out.pivots[p] == j) {
      ++p;
    } else {
      out.free_columns.push_back(j);
    }
  }
  return out;
}

}  // namespace polyrecip
