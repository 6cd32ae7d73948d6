#pragma once

#include <vector>

#include <Eigen/Dense>

#include "polyrecip/complex.hpp"
#include "polyrecip/linalg.hpp"
#include "polyrecip/topology.hpp"

namespace polyrecip {

struct AnalysisReport {
  int rows = 0;
  int cols = 0;
  int rank = 0;
  int dof = 0;
  std::vector<int> independent_faces;  // column indices, ascending
  Spectrum spectrum;
  double rank_tol = kRankTolerance;
  int rref_rank = 0;
  bool rank_consistent = true;  // SVD and RREF ranks agree
  bool only_zero_solution() const { return dof == 0; }
};

/// A q = 0 with A = [C_ef N_x; C_ef N_y; C_ef N_z]. Columns follow the
/// primal faces, rows the primal edges (x block, then y, then z). Analysis
/// is computed eagerly, so a built system is immutable and can be shared.
class EquilibriumSystem {
 public:
  /// Throws Error(EmptySystem) when no edge or no face is left.
  static EquilibriumSystem assemble(const CellComplex& complex, const IncidenceSet& inc,
                                    double rank_tol = kRankTolerance, Exec exec = Exec::serial);

  const Eigen::MatrixXd& matrix() const { return a_; }
  const Eigen::VectorXd& nx() const { return nx_; }
  const Eigen::VectorXd& ny() const { return ny_; }
  const Eigen::VectorXd& nz() const { return nz_; }
  /// Complex edge id of each block row.
  const std::vector<int>& row_edges() const { return row_edges_; }
  /// Complex face id of each column.
  const std::vector<int>& column_faces() const { return column_faces_; }
  int edge_count() const { return static_cast<int>(row_edges_.size()); }
  int face_count() const { return static_cast<int>(column_faces_.size()); }

  const AnalysisReport& analysis() const { return report_; }
  int rank() const { return report_.rank; }
  int dof() const { return report_.dof; }
  const std::vector<int>& independent_faces() const { return report_.independent_faces; }

  const Eigen::MatrixXd& pinv() const { return pinv_; }
  const Rref& reduced() const { return rref_; }
  /// Nullspace basis with the identity on the independent faces.
  const Eigen::MatrixXd& nullspace() const { return nullspace_; }
  Exec exec() const { return exec_; }

  /// ||A q||_inf
  double residual(const Eigen::VectorXd& q) const;

 private:
  EquilibriumSystem() = default;

  Eigen::MatrixXd a_;
  Eigen::VectorXd nx_, ny_, nz_;
  std::vector<int> row_edges_;
  std::vector<int> column_faces_;
  AnalysisReport report_;
  Eigen::MatrixXd pinv_;
  Rref rref_;
  Eigen::MatrixXd nullspace_;
  Exec exec_ = Exec::serial;
};

Eigen::MatrixXd equilibrium_matrix(const Incidence& edge_face, const Eigen::VectorXd& nx, const Eigen::VectorXd& ny,
                                   const Eigen::VectorXd& nz);

AnalysisReport analyze(const Eigen::MatrixXd& a, double rank_tol = kRankTolerance, Exec exec = Exec::serial);

}  // namespace polyrecip
