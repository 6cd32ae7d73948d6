#include "polyrecip/equilibrium.hpp"

namespace polyrecip {

Eigen::MatrixXd equilibrium_matrix(const Incidence& edge_face, const Eigen::VectorXd& nx, const Eigen::VectorXd& ny,
                                   const Eigen::VectorXd& nz) {
  const Eigen::Index e = edge_face.rows();
  Eigen::MatrixXd a(3 * e, edge_face.cols());
  const Eigen::MatrixXd c = dense(edge_face);
  a.topRows(e) = c * nx.asDiagonal();
  a.middleRows(e, e) = c * ny.asDiagonal();
  a.bottomRows(e) = c * nz.asDiagonal();
  return a;
}

namespace {

AnalysisReport report_for(const Eigen::MatrixXd& a, double rank_tol, const Rref& red) {
  AnalysisReport r;
  r.rows = static_cast<int>(a.rows());
  r.cols = static_cast<int>(a.cols());
  r.rank_tol = rank_tol;
  r.spectrum = spectrum(a, rank_tol);
  r.rank = r.spectrum.rank;
  r.dof = r.cols - r.rank;
  r.rref_rank = static_cast<int>(red.pivots.size());
  r.rank_consistent = r.rref_rank == r.rank;
  r.independent_faces = red.free_columns;
  return r;
}

}  // namespace

AnalysisReport analyze(const Eigen::MatrixXd& a, double rank_tol, Exec exec) {
  return report_for(a, rank_tol, rref(a, kPivotTolerance, exec));
}

EquilibriumSystem EquilibriumSystem::assemble(const CellComplex& complex, const IncidenceSet& inc, double rank_tol,
                                              Exec exec) {
  if (inc.edges.empty() || inc.faces.empty()) {
    throw Error(ErrorCode::EmptySystem, "no equilibrium equations remain after removing the stress cell");
  }
  EquilibriumSystem s;
  s.exec_ = exec;
  s.row_edges_ = inc.edges;
  s.column_faces_ = inc.faces;
  const int f = static_cast<int>(inc.faces.size());
  s.nx_.resize(f);
  s.ny_.resize(f);
  s.nz_.resize(f);
  for (int k = 0; k < f; ++k) {
    const Eigen::Vector3d& n = complex.faces()[inc.faces[k]].normal;
    s.nx_(k) = n.x();
    s.ny_(k) = n.y();
    s.nz_(k) = n.z();
  }
  s.a_ = equilibrium_matrix(inc.edge_face, s.nx_, s.ny_, s.nz_);

  s.rref_ = rref(s.a_, kPivotTolerance, exec);
  s.report_ = report_for(s.a_, rank_tol, s.rref_);
  s.pinv_ = pseudoinverse(s.a_, rank_tol);
  s.nullspace_ = s.rref_.nullspace();
  return s;
}

double EquilibriumSystem::residual(const Eigen::VectorXd& q) const {
  return a_.rows() ? (a_ * q).cwiseAbs().maxCoeff() : 0.0;
}

}  // namespace polyrecip
