#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "polyrecip/errors.hpp"

namespace polyrecip {

using Point3 = Eigen::Vector3d;

/// Primal edge, stored with the smaller vertex index as tail.
struct Edge {
  int tail = 0;
  int head = 0;
};

struct Face {
  std::vector<int> loop;
  Eigen::Vector3d normal = Eigen::Vector3d::UnitZ();
};

struct Cell {
  std::vector<int> faces;
};

enum class Role { form, force };
enum class Direction { inward, outward };

inline int sign_of(Direction d) { return d == Direction::inward ? -1 : +1; }
std::string to_string(Role role);
std::string to_string(Direction direction);

struct Counts {
  int v = 0;
  int e = 0;
  int f = 0;
  int c = 0;
  friend bool operator==(const Counts&, const Counts&) = default;
};

/// Polyhedral cell complex as read from a document: every cell is listed,
/// including the exterior one, and one of them is the stress cell (SSP for a
/// form diagram, GFP for a force diagram).
///
/// The object is immutable once built. Edges are derived from the face loops
/// in order of first appearance; face normals come from Newell's method with
/// the first non-zero coordinate made positive.
///
/// The primal Γ used by the equilibrium equations is the complex with the
/// stress cell subtracted: its faces and edges are dropped, every vertex is
/// kept. `primal_edges()`, `primal_faces()` and `primal_cells()` list the
/// surviving ids in ascending order.
class CellComplex {
 public:
  /// Throws Error(MalformedDocument) on index, loop or coordinate problems.
  /// Planarity and closure are not checked here; see validate().
  static CellComplex build(std::vector<Point3> vertices, std::vector<std::vector<int>> face_loops,
                           std::vector<std::vector<int>> cell_faces, Role role, int stress_cell,
                           Direction stress_direction);

  const std::vector<Point3>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Cell>& cells() const { return cells_; }

  Role role() const { return role_; }
  int stress_cell() const { return stress_cell_; }
  Direction stress_direction() const { return stress_direction_; }
  int exterior_cell() const { return exterior_cell_; }

  Counts counts() const;
  Counts primal_counts() const;
  const std::vector<int>& primal_edges() const { return primal_edges_; }
  const std::vector<int>& primal_faces() const { return primal_faces_; }
  const std::vector<int>& primal_cells() const { return primal_cells_; }

  /// Edge ids of face f; entry k joins loop[k] and loop[k+1].
  const std::vector<int>& face_edges(int f) const { return face_edges_[f]; }
  /// +1 where the canonical edge direction follows the loop orientation
  /// induced by the face normal (right-hand rule), -1 otherwise.
  const std::vector<int>& face_edge_signs(int f) const { return face_edge_signs_[f]; }
  const std::vector<int>& edge_faces(int e) const { return edge_faces_[e]; }
  const std::vector<int>& face_cells(int f) const { return face_cells_[f]; }
  const std::vector<int>& cell_edges(int c) const { return cell_edges_[c]; }
  int find_edge(int a, int b) const;
  int edge_face_sign(int e, int f) const;

  bool edge_on_stress_cell(int e) const { return stress_edge_[e]; }
  bool face_on_stress_cell(int f) const { return stress_face_[f]; }

  /// +1 if the stored loop winds counter-clockwise about the face normal.
  int loop_sign(int f) const { return loop_sign_[f]; }
  double face_area(int f) const { return face_area_[f]; }
  Point3 face_centroid(int f) const;
  /// Max distance of a loop vertex to the face's best-fit plane.
  double face_plane_deviation(int f) const;
  double bbox_diagonal() const;

  /// Coherent orientation of a closed cell's faces relative to their normals,
  /// first face +1. Empty when the cell is open or not orientable.
  const std::vector<int>& cell_face_orientation(int c) const { return cell_orientation_[c]; }
  /// Signed enclosed volume under cell_face_orientation (0 for open cells).
  double cell_signed_volume(int c) const { return cell_volume_[c]; }

  CellComplex with_flipped_normal(int f) const;
  CellComplex with_stress(int cell, Direction direction) const;
  CellComplex with_role(Role role) const;
  CellComplex transformed(double scale, const Point3& shift) const;
  CellComplex with_vertex(int v, const Point3& p) const;

  /// Raw document data, for rebuilding modified copies.
  std::vector<std::vector<int>> face_loops() const;
  std::vector<std::vector<int>> cell_face_lists() const;

 private:
  CellComplex() = default;
  void derive();

  std::vector<Point3> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::vector<Cell> cells_;
  Role role_ = Role::form;
  int stress_cell_ = 0;
  Direction stress_direction_ = Direction::inward;
  int exterior_cell_ = 0;

  std::vector<std::vector<int>> face_edges_;
  std::vector<std::vector<int>> face_edge_signs_;
  std::vector<std::vector<int>> edge_faces_;
  std::vector<std::vector<int>> face_cells_;
  std::vector<std::vector<int>> cell_edges_;
  std::vector<int> loop_sign_;
  std::vector<double> face_area_;
  std::vector<char> stress_edge_;
  std::vector<char> stress_face_;
  std::vector<int> primal_edges_;
  std::vector<int> primal_faces_;
  std::vector<int> primal_cells_;
  std::vector<std::vector<int>> cell_orientation_;
  std::vector<double> cell_volume_;
};

struct ValidationIssue {
  ErrorCode code = ErrorCode::MalformedDocument;
  int index = -1;      // face, cell or edge id the issue refers to
  double value = 0.0;  // plane deviation for NonPlanarFace
  std::string message;
};

struct ValidationReport {
  bool planarity = true;
  bool two_cells_per_face = true;
  bool cell_closure = true;
  bool edge_orientation = true;
  std::vector<ValidationIssue> issues;

  bool ok() const { return planarity && two_cells_per_face && cell_closure && edge_orientation; }
};

/// `tol` is relative to the bounding-box diagonal.
ValidationReport validate(const CellComplex& complex, double tol);

inline constexpr double kPlanarityTolerance = 1e-6;

/// Parses the JSON input document without the geometric checks.
CellComplex read_complex(const std::string& document);
/// Parses the JSON input document and validates it; the first failing check
/// is thrown as an Error carrying its code.
CellComplex parse_complex(const std::string& document);
std::string serialize(const CellComplex& complex);

}  // namespace polyrecip
