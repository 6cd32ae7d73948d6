#pragma once

#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "polyrecip/complex.hpp"

namespace polyrecip {

/// Signed incidence matrix; entries are -1, 0 or +1.
using Incidence = Eigen::SparseMatrix<double, Eigen::RowMajor>;

inline Eigen::MatrixXd dense(const Incidence& m) { return Eigen::MatrixXd(m); }

/// Directions of the cells, as propagated from the stress cell.
struct CellOrientation {
  /// Per complex cell: -1 inward, +1 outward. The stress cell carries the
  /// direction stated in the document; every other cell carries its
  /// direction relative to its own region (the exterior cell's region being
  /// the space outside the complex).
  std::vector<int> signs;
  /// Per complex cell, per entry of cells()[c].faces: +1 where the face
  /// normal points out of the cell's region.
  std::vector<std::vector<int>> outward;
};

/// Incidence matrices of the primal (stress cell subtracted). Rows and
/// columns are local; `edges`, `faces` and `cells` map them back to complex
/// ids. Vertex columns are complex vertex ids.
struct IncidenceSet {
  std::vector<int> edges;
  std::vector<int> faces;
  std::vector<int> cells;
  Incidence edge_vertex;  // [e x v]
  Incidence edge_face;    // [e x f]
  Incidence face_cell;    // [f x c]
  CellOrientation orientation;

  int local_face(int complex_face) const;
  int local_cell(int complex_cell) const;
};

/// C_ev: +1 at the head, -1 at the tail of each primal edge.
Incidence edge_vertex_matrix(const CellComplex& complex);

/// C_ef: +1 where the edge direction agrees with the loop orientation the
/// face normal induces by the right-hand rule, -1 where it is opposite.
Incidence edge_face_matrix(const CellComplex& complex);

/// Breadth-first propagation from the stress cell across shared faces.
/// Throws InconsistentOrientation when two paths disagree, or when a cell's
/// faces cannot be oriented coherently. `reverse_neighbors` visits adjacent
/// cells in reverse order; the result does not depend on it.
CellOrientation propagate_cell_orientations(const CellComplex& complex, bool reverse_neighbors = false);

/// C_fc: +1 where the face normal has the direction of the cell, -1 where it
/// is opposite. Every row has exactly one +1 and one -1.
Incidence face_cell_matrix(const CellComplex& complex, const CellOrientation& orientation);

IncidenceSet build_incidence(const CellComplex& complex);

}  // namespace polyrecip
