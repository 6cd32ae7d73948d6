#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "polyrecip/complex.hpp"
#include "polyrecip/kernels.hpp"
#include "polyrecip/topology.hpp"

namespace polyrecip {

enum class MemberForce { compressive, tensile, zero };
std::string to_string(MemberForce force);

/// Dual edge of primal face `face`; its vector x[head] - x[tail] is q * n.
struct DualEdge {
  int tail = 0;
  int head = 0;
  int face = 0;  // complex face id
};

/// Dual polygon of a primal edge: the cells around the edge in walking
/// order, and the dual edges between consecutive ones.
struct DualFace {
  int primal_edge = 0;       // complex edge id
  std::vector<int> loop;     // dual vertex indices
  std::vector<int> edges;    // dual edge indices; edges[k] joins loop[k] and loop[k+1]
  std::vector<int> signs;    // C_ef entries, +1 where edges[k] runs from loop[k] to loop[k+1]
};

struct DualDiagram {
  /// One vertex per primal cell, in IncidenceSet::cells order.
  std::vector<Point3> vertices;
  std::vector<int> vertex_cells;  // complex cell ids
  /// One edge per primal face, in IncidenceSet::faces order.
  std::vector<DualEdge> edges;
  /// One face per primal edge, in IncidenceSet::edges order.
  std::vector<DualFace> faces;
  /// One cell per primal vertex: indices into `faces`.
  std::vector<std::vector<int>> cells;
  Eigen::VectorXd q;
  int anchor = 0;
  Point3 anchor_point = Point3::Zero();

  Counts counts() const;
  /// Signed Newell area of each face loop; for display.
  std::vector<double> face_areas() const;
};

/// Rows q_i * n_i, one per primal face.
Eigen::MatrixXd edge_vectors(const CellComplex& complex, const IncidenceSet& inc, const Eigen::VectorXd& q);

/// Combinatorial part of the dual, without coordinates.
DualDiagram dual_topology(const CellComplex& complex, const IncidenceSet& inc);

/// Solves [sigma; C_fc] x = [0; u] in the least-squares sense for each
/// coordinate, then moves the anchor vertex to anchor_point. Throws
/// ZeroSolution when q = 0 and DisconnectedComplex when the normal matrix is
/// singular.
DualDiagram build_dual_algebraic(const CellComplex& complex, const IncidenceSet& inc, const Eigen::VectorXd& q,
                                 int anchor = 0, const Point3& anchor_point = Point3::Zero());

/// Places vertices by breadth-first search from the anchor across primal
/// faces. Throws ZeroSolution when q = 0 and DisconnectedComplex when some
/// cell is unreachable.
DualDiagram build_dual_graphsearch(const CellComplex& complex, const IncidenceSet& inc, const Eigen::VectorXd& q,
                                   int anchor = 0, const Point3& anchor_point = Point3::Zero());

struct MemberLabels {
  std::vector<MemberForce> labels;  // per dual edge
  std::vector<double> psi;
  int compressive = 0;
  int tensile = 0;
  int zero = 0;
};

/// Reads the member forces of a force diagram's dual. Throws RoleMismatch
/// for form diagrams.
MemberLabels classify_members(const CellComplex& complex, const DualDiagram& dual);

struct ReciprocityReport {
  double tolerance = 0.0;
  double closure = 0.0;          // max |sum of signed dual edge vectors| per face, measured
  double q_closure = 0.0;        // same with q * n in place of measured vectors
  double parallel_angle = 0.0;   // max angle between dual edge and primal normal
  double parallel_cross = 0.0;   // max |edge x n| / |q|
  double perpendicular = 0.0;    // max |primal edge . dual face side| / |side|
  Counts primal_counts;
  Counts dual_counts;
  bool closure_ok = false;
  bool parallel_ok = false;
  bool perpendicular_ok = false;
  bool counts_ok = false;
  std::vector<std::string> failures;

  bool ok() const { return closure_ok && parallel_ok && perpendicular_ok && counts_ok; }
};

inline constexpr double kReciprocityTolerance = 1e-8;
inline constexpr double kParallelAngleTolerance = 1e-6;

/// Lengths and angles are measured from the dual's coordinates. The closure
/// tolerance scales with max(1, |q|_inf).
ReciprocityReport verify_reciprocity(const CellComplex& complex, const DualDiagram& dual,
                                     double tol = kReciprocityTolerance, Exec exec = Exec::serial);

}  // namespace polyrecip
