#pragma once

#include <vector>

#include <Eigen/Dense>

#include "polyrecip/kernels.hpp"

namespace polyrecip {

inline constexpr double kRankTolerance = 1e-10;
inline constexpr double kPivotTolerance = 1e-10;

struct Spectrum {
  Eigen::VectorXd singular_values;  // descending
  int rank = 0;
  double cutoff = 0.0;       // rank_tol * largest singular value
  double last_kept = 0.0;    // smallest singular value above the cutoff
  double first_dropped = 0.0;  // largest singular value at or below it
};

Spectrum spectrum(const Eigen::MatrixXd& a, double rank_tol = kRankTolerance);

/// Moore-Penrose inverse from the SVD, singular values at or below
/// rank_tol * max treated as zero.
Eigen::MatrixXd pseudoinverse(const Eigen::MatrixXd& a, double rank_tol = kRankTolerance);

/// Orthonormal basis of the right nullspace from the SVD.
Eigen::MatrixXd svd_nullspace(const Eigen::MatrixXd& a, double rank_tol = kRankTolerance);

struct Rref {
  Eigen::MatrixXd r;  // reduced rows only (rank x cols)
  std::vector<int> pivots;
  std::vector<int> free_columns;

  /// The B block: pivot rows restricted to the free columns.
  Eigen::MatrixXd free_block() const;
  /// Nullspace basis with the identity on the free columns: column k is the
  /// solution with free variable k set to 1 and the others to 0.
  Eigen::MatrixXd nullspace() const;
};

Rref rref(const Eigen::MatrixXd& a, double pivot_tol = kPivotTolerance, Exec exec = Exec::serial);

}  // namespace polyrecip
