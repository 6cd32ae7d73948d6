#include "polyrecip/topology.hpp"

#include <algorithm>
#include <queue>

namespace polyrecip {

namespace {

int position_in(const std::vector<int>& list, int value) {
  auto it = std::find(list.begin(), list.end(), value);
  return it == list.end() ? -1 : static_cast<int>(it - list.begin());
}

Incidence from_triplets(int rows, int cols, const std::vector<Eigen::Triplet<double>>& triplets) {
  Incidence m(rows, cols);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

}  // namespace

int IncidenceSet::local_face(int complex_face) const {
  auto it = std::lower_bound(faces.begin(), faces.end(), complex_face);
  return (it != faces.end() && *it == complex_face) ? static_cast<int>(it - faces.begin()) : -1;
}

int IncidenceSet::local_cell(int complex_cell) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), complex_cell);
  return (it != cells.end() && *it == complex_cell) ? static_cast<int>(it - cells.begin()) : -1;
}

Incidence edge_vertex_matrix(const CellComplex& complex) {
  const auto& ids = complex.primal_edges();
  std::vector<Eigen::Triplet<double>> t;
  for (int row = 0; row < static_cast<int>(ids.size()); ++row) {
    const Edge& e = complex.edges()[ids[row]];
    t.emplace_back(row, e.head, 1.0);
    t.emplace_back(row, e.tail, -1.0);
  }
  return from_triplets(static_cast<int>(ids.size()), static_cast<int>(complex.vertices().size()), t);
}

Incidence edge_face_matrix(const CellComplex& complex) {
  const auto& edge_ids = complex.primal_edges();
  const auto& face_ids = complex.primal_faces();
  std::vector<Eigen::Triplet<double>> t;
  for (int row = 0; row < static_cast<int>(edge_ids.size()); ++row) {
    for (int f : complex.edge_faces(edge_ids[row])) {
      // faces of an edge off the stress cell are never stress faces
      const int col = static_cast<int>(std::lower_bound(face_ids.begin(), face_ids.end(), f) - face_ids.begin());
      t.emplace_back(row, col, complex.edge_face_sign(edge_ids[row], f));
    }
  }
  return from_triplets(static_cast<int>(edge_ids.size()), static_cast<int>(face_ids.size()), t);
}

CellOrientation propagate_cell_orientations(const CellComplex& complex, bool reverse_neighbors) {
  const int nc = static_cast<int>(complex.cells().size());
  for (int c = 0; c < nc; ++c) {
    if (complex.cell_face_orientation(c).empty()) {
      throw Error(ErrorCode::InconsistentOrientation,
                  "cell " + std::to_string(c) + " has no coherent face orientation");
    }
  }

  // region[c] * cell_face_orientation(c) is the outward orientation of c's region.
  std::vector<int> region(nc, 0);
  const int g = complex.stress_cell();
  const int volume_sign = complex.cell_signed_volume(g) >= 0 ? 1 : -1;
  region[g] = g == complex.exterior_cell() ? -volume_sign : volume_sign;

  std::queue<int> pending;
  pending.push(g);
  while (!pending.empty()) {
    const int a = pending.front();
    pending.pop();
    std::vector<int> faces = complex.cells()[a].faces;
    if (reverse_neighbors) std::reverse(faces.begin(), faces.end());
    const auto& oa = complex.cell_face_orientation(a);
    for (int f : faces) {
      const int ia = position_in(complex.cells()[a].faces, f);
      for (int b : complex.face_cells(f)) {
        if (b == a) continue;
        const int ib = position_in(complex.cells()[b].faces, f);
        // across a shared face the two regions' outward normals are opposite
        const int want = -region[a] * oa[ia] * complex.cell_face_orientation(b)[ib];
        if (region[b] == 0) {
          region[b] = want;
          pending.push(b);
        } else if (region[b] != want) {
          throw Error(ErrorCode::InconsistentOrientation,
                      "cells " + std::to_string(a) + " and " + std::to_string(b) + " disagree across face " +
                          std::to_string(f));
        }
      }
    }
  }

  CellOrientation out;
  out.signs.assign(nc, 0);
  out.outward.assign(nc, {});
  const int stated = sign_of(complex.stress_direction());
  const int stress_region_dir = g == complex.exterior_cell() ? -stated : stated;
  for (int c = 0; c < nc; ++c) {
    if (region[c] == 0) {
      throw Error(ErrorCode::DisconnectedComplex, "cell " + std::to_string(c) + " is not reachable from the stress cell");
    }
    const auto& o = complex.cell_face_orientation(c);
    out.outward[c].resize(o.size());
    for (std::size_t i = 0; i < o.size(); ++i) out.outward[c][i] = region[c] * o[i];
    out.signs[c] = c == g ? stated : -stress_region_dir;
  }
  return out;
}

Incidence face_cell_matrix(const CellComplex& complex, const CellOrientation& orientation) {
  const auto& face_ids = complex.primal_faces();
  const auto& cell_ids = complex.primal_cells();
  std::vector<Eigen::Triplet<double>> t;
  for (int row = 0; row < static_cast<int>(face_ids.size()); ++row) {
    const int f = face_ids[row];
    for (int c : complex.face_cells(f)) {
      const int col = static_cast<int>(std::lower_bound(cell_ids.begin(), cell_ids.end(), c) - cell_ids.begin());
      const int i = position_in(complex.cells()[c].faces, f);
      t.emplace_back(row, col, orientation.signs[c] * orientation.outward[c][i]);
    }
  }
  return from_triplets(static_cast<int>(face_ids.size()), static_cast<int>(cell_ids.size()), t);
}

IncidenceSet build_incidence(const CellComplex& complex) {
  IncidenceSet inc;
  inc.edges = complex.primal_edges();
  inc.faces = complex.primal_faces();
  inc.cells = complex.primal_cells();
  inc.edge_vertex = edge_vertex_matrix(complex);
  inc.edge_face = edge_face_matrix(complex);
  inc.orientation = propagate_cell_orientations(complex);
  inc.face_cell = face_cell_matrix(complex, inc.orientation);
  return inc;
}

}  // namespace polyrecip
