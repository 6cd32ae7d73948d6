#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "polyrecip/complex.hpp"

namespace polyrecip::fixtures {

/// Regular tetrahedron subdivided at its centroid: v0 is the centroid, v1 the
/// apex, v2..v4 the base corners lying in z = 0. Faces 0..5 are the internal
/// triangles, 6..9 the boundary, cells 0..3 the internal cells and cell 4 the
/// exterior, which is the (inward) stress cell of a form diagram. Numbering
/// follows the classic incidence example: after subtracting the stress cell
/// the primal has edges (0,3), (0,1), (0,2), (0,4) in that order.
CellComplex tetra();

/// Single tetrahedron plus its exterior: two cells sharing all four faces.
CellComplex tetrahedron(const std::array<Point3, 4>& corners, Role role = Role::force, int stress_cell = 0,
                        Direction direction = Direction::outward);

/// Two unit boxes glued along x = 1; cells 0 and 1 are the boxes, cell 2 the
/// exterior (stress cell).
CellComplex glued_boxes(Role role = Role::form, Direction direction = Direction::inward);

/// Rectilinear grid of boxes with the given strictly increasing coordinates.
/// Box (i, j, k) is cell i + nx * (j + ny * k); the exterior is the last cell
/// and is the stress cell.
CellComplex box_grid(const std::vector<double>& xs, const std::vector<double>& ys, const std::vector<double>& zs,
                     Role role = Role::form, Direction direction = Direction::inward);

/// Cones every non-stress cell of `base` from the matching point in `centers`
/// (one per base.primal_cells() entry, each strictly inside its cell). Base
/// faces keep their ids; cells are renumbered cone by cone and the stress
/// cell is moved to the end.
CellComplex stellar_subdivision(const CellComplex& base, const std::vector<Point3>& centers);

/// Tetrahedron coned from an interior point: four cells plus the exterior.
/// stress_cell < 0 picks the exterior; otherwise one of the four cones.
CellComplex subdivided_tetrahedron(const std::array<Point3, 4>& corners, const Point3& center,
                                   Role role = Role::force, int stress_cell = -1,
                                   Direction direction = Direction::inward);

/// glued_boxes() with each box coned from its center.
CellComplex stellar_glued_boxes(Role role = Role::form, Direction direction = Direction::inward);

/// Randomized members of the fixture families, all with an exterior stress
/// cell. Geometry stays well away from degeneracy.
CellComplex random_subdivided_tetrahedron(std::mt19937& rng, Role role = Role::force);
CellComplex random_stellar_glued_boxes(std::mt19937& rng, Role role = Role::form);
CellComplex random_box_grid(std::mt19937& rng, int nx, int ny, int nz, Role role = Role::form);

/// Fixtures addressable by name from the command line.
std::vector<std::string> names();
/// Throws std::invalid_argument for unknown names.
CellComplex named(const std::string& name);

}  // namespace polyrecip::fixtures
