#include "polyrecip/complex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <utility>

namespace polyrecip {

namespace {

Eigen::Vector3d newell(const std::vector<Point3>& vertices, const std::vector<int>& loop) {
  Eigen::Vector3d n = Eigen::Vector3d::Zero();
  const std::size_t k = loop.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Point3& a = vertices[loop[i]];
    const Point3& b = vertices[loop[(i + 1) % k]];
    n.x() += (a.y() - b.y()) * (a.z() + b.z());
    n.y() += (a.z() - b.z()) * (a.x() + b.x());
    n.z() += (a.x() - b.x()) * (a.y() + b.y());
  }
  return n;
}

Eigen::Vector3d canonical_unit(const Eigen::Vector3d& n) {
  Eigen::Vector3d u = n.normalized();
  for (int i = 0; i < 3; ++i) {
    if (std::abs(u[i]) > 1e-12) {
      if (u[i] < 0) u = -u;
      break;
    }
  }
  return u;
}

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedDocument, what); }

}  // namespace

std::string to_string(Role role) { return role == Role::form ? "form" : "force"; }
std::string to_string(Direction direction) { return direction == Direction::inward ? "inward" : "outward"; }

CellComplex CellComplex::build(std::vector<Point3> vertices, std::vector<std::vector<int>> face_loops,
                               std::vector<std::vector<int>> cell_faces, Role role, int stress_cell,
                               Direction stress_direction) {
  const int nv = static_cast<int>(vertices.size());
  for (int i = 0; i < nv; ++i) {
    if (!vertices[i].allFinite()) malformed("vertex " + std::to_string(i) + " has a non-finite coordinate");
  }
  if (face_loops.empty()) malformed("document has no faces");
  if (cell_faces.empty()) malformed("document has no cells");

  CellComplex cx;
  cx.vertices_ = std::move(vertices);
  for (std::size_t f = 0; f < face_loops.size(); ++f) {
    auto& loop = face_loops[f];
    const std::string id = "face " + std::to_string(f);
    if (loop.size() < 3) malformed(id + " has fewer than 3 vertices");
    std::set<int> seen;
    for (int v : loop) {
      if (v < 0 || v >= nv) malformed(id + " references vertex " + std::to_string(v) + " out of range");
      if (!seen.insert(v).second) malformed(id + " repeats vertex " + std::to_string(v));
    }
    Face face;
    face.loop = std::move(loop);
    cx.faces_.push_back(std::move(face));
  }
  const int nf = static_cast<int>(cx.faces_.size());
  for (std::size_t c = 0; c < cell_faces.size(); ++c) {
    std::set<int> seen;
    const std::string id = "cell " + std::to_string(c);
    if (cell_faces[c].empty()) malformed(id + " has no faces");
    for (int f : cell_faces[c]) {
      if (f < 0 || f >= nf) malformed(id + " references face " + std::to_string(f) + " out of range");
      if (!seen.insert(f).second) malformed(id + " lists face " + std::to_string(f) + " twice");
    }
    cx.cells_.push_back(Cell{std::move(cell_faces[c])});
  }
  if (stress_cell < 0 || stress_cell >= static_cast<int>(cx.cells_.size())) {
    malformed("stress_cell " + std::to_string(stress_cell) + " out of range");
  }
  cx.role_ = role;
  cx.stress_cell_ = stress_cell;
  cx.stress_direction_ = stress_direction;

  for (int f = 0; f < nf; ++f) {
    const Eigen::Vector3d n = newell(cx.vertices_, cx.faces_[f].loop);
    if (!(n.norm() > 1e-300)) malformed("face " + std::to_string(f) + " is degenerate (zero area)");
    cx.faces_[f].normal = canonical_unit(n);
  }
  cx.derive();
  return cx;
}

void CellComplex::derive() {
  const int nf = static_cast<int>(faces_.size());
  const int nc = static_cast<int>(cells_.size());

  edges_.clear();
  std::map<std::pair<int, int>, int> edge_ids;
  face_edges_.assign(nf, {});
  face_edge_signs_.assign(nf, {});
  loop_sign_.assign(nf, 1);
  face_area_.assign(nf, 0.0);
  for (int f = 0; f < nf; ++f) {
    const auto& loop = faces_[f].loop;
    const Eigen::Vector3d n = newell(vertices_, loop);
    loop_sign_[f] = n.dot(faces_[f].normal) >= 0 ? 1 : -1;
    face_area_[f] = 0.5 * n.norm();
    const std::size_t k = loop.size();
    for (std::size_t i = 0; i < k; ++i) {
      const int a = loop[i];
      const int b = loop[(i + 1) % k];
      const auto key = std::minmax(a, b);
      auto [it, inserted] = edge_ids.try_emplace({key.first, key.second}, static_cast<int>(edges_.size()));
      if (inserted) edges_.push_back(Edge{key.first, key.second});
      face_edges_[f].push_back(it->second);
      face_edge_signs_[f].push_back((a < b ? 1 : -1) * loop_sign_[f]);
    }
  }
  const int ne = static_cast<int>(edges_.size());

  edge_faces_.assign(ne, {});
  for (int f = 0; f < nf; ++f) {
    for (int e : face_edges_[f]) edge_faces_[e].push_back(f);
  }
  face_cells_.assign(nf, {});
  cell_edges_.assign(nc, {});
  for (int c = 0; c < nc; ++c) {
    std::set<int> es;
    for (int f : cells_[c].faces) {
      face_cells_[f].push_back(c);
      es.insert(face_edges_[f].begin(), face_edges_[f].end());
    }
    cell_edges_[c].assign(es.begin(), es.end());
  }

  stress_face_.assign(nf, 0);
  stress_edge_.assign(ne, 0);
  for (int f : cells_[stress_cell_].faces) stress_face_[f] = 1;
  for (int e : cell_edges_[stress_cell_]) stress_edge_[e] = 1;
  primal_edges_.clear();
  primal_faces_.clear();
  primal_cells_.clear();
  for (int e = 0; e < ne; ++e) {
    if (!stress_edge_[e]) primal_edges_.push_back(e);
  }
  for (int f = 0; f < nf; ++f) {
    if (!stress_face_[f]) primal_faces_.push_back(f);
  }
  for (int c = 0; c < nc; ++c) {
    if (c != stress_cell_) primal_cells_.push_back(c);
  }

  // Coherent face orientation per cell: two faces of a cell meeting at an
  // edge traverse it in opposite directions.
  cell_orientation_.assign(nc, {});
  cell_volume_.assign(nc, 0.0);
  for (int c = 0; c < nc; ++c) {
    const auto& cf = cells_[c].faces;
    std::map<int, std::vector<int>> by_edge;  // edge -> local face positions
    for (std::size_t i = 0; i < cf.size(); ++i) {
      for (int e : face_edges_[cf[i]]) by_edge[e].push_back(static_cast<int>(i));
    }
    bool closed = std::all_of(by_edge.begin(), by_edge.end(), [](const auto& kv) { return kv.second.size() == 2; });
    if (!closed) continue;
    std::vector<int> orient(cf.size(), 0);
    orient[0] = 1;
    std::queue<int> pending;
    pending.push(0);
    bool coherent = true;
    while (!pending.empty() && coherent) {
      const int i = pending.front();
      pending.pop();
      for (int e : face_edges_[cf[i]]) {
        const auto& pair = by_edge[e];
        const int j = pair[0] == i ? pair[1] : pair[0];
        const int want = -orient[i] * edge_face_sign(e, cf[i]) * edge_face_sign(e, cf[j]);
        if (orient[j] == 0) {
          orient[j] = want;
          pending.push(j);
        } else if (orient[j] != want) {
          coherent = false;
        }
      }
    }
    if (!coherent || std::find(orient.begin(), orient.end(), 0) != orient.end()) continue;
    double vol = 0.0;
    for (std::size_t i = 0; i < cf.size(); ++i) {
      const int f = cf[i];
      vol += orient[i] * face_area_[f] * faces_[f].normal.dot(vertices_[faces_[f].loop[0]]) / 3.0;
    }
    cell_orientation_[c] = std::move(orient);
    cell_volume_[c] = vol;
  }

  // Exterior cell: largest enclosed volume, highest index on ties.
  double best = -1.0;
  exterior_cell_ = 0;
  for (int c = 0; c < nc; ++c) {
    const double v = std::abs(cell_volume_[c]);
    if (v >= best * (1.0 - 1e-9)) {
      best = std::max(best, v);
      exterior_cell_ = c;
    }
  }
}

Counts CellComplex::counts() const {
  return {static_cast<int>(vertices_.size()), static_cast<int>(edges_.size()), static_cast<int>(faces_.size()),
          static_cast<int>(cells_.size())};
}

Counts CellComplex::primal_counts() const {
  return {static_cast<int>(vertices_.size()), static_cast<int>(primal_edges_.size()),
          static_cast<int>(primal_faces_.size()), static_cast<int>(primal_cells_.size())};
}

int CellComplex::find_edge(int a, int b) const {
  const auto key = std::minmax(a, b);
  for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
    for (int e : face_edges_[f]) {
      if (edges_[e].tail == key.first && edges_[e].head == key.second) return e;
    }
  }
  return -1;
}

int CellComplex::edge_face_sign(int e, int f) const {
  const auto& fe = face_edges_[f];
  for (std::size_t k = 0; k < fe.size(); ++k) {
    if (fe[k] == e) return face_edge_signs_[f][k];
  }
  return 0;
}

Point3 CellComplex::face_centroid(int f) const {
  Point3 c = Point3::Zero();
  for (int v : faces_[f].loop) c += vertices_[v];
  return c / static_cast<double>(faces_[f].loop.size());
}

double CellComplex::face_plane_deviation(int f) const {
  const Point3 c = face_centroid(f);
  const Eigen::Vector3d& n = faces_[f].normal;
  double dev = 0.0;
  for (int v : faces_[f].loop) dev = std::max(dev, std::abs(n.dot(vertices_[v] - c)));
  return dev;
}

double CellComplex::bbox_diagonal() const {
  if (vertices_.empty()) return 0.0;
  Point3 lo = vertices_.front();
  Point3 hi = vertices_.front();
  for (const auto& p : vertices_) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  return (hi - lo).norm();
}

std::vector<std::vector<int>> CellComplex::face_loops() const {
  std::vector<std::vector<int>> out;
  out.reserve(faces_.size());
  for (const auto& f : faces_) out.push_back(f.loop);
  return out;
}

std::vector<std::vector<int>> CellComplex::cell_face_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(cells_.size());
  for (const auto& c : cells_) out.push_back(c.faces);
  return out;
}

CellComplex CellComplex::with_flipped_normal(int f) const {
  CellComplex copy = *this;
  copy.faces_.at(f).normal = -copy.faces_[f].normal;
  copy.derive();
  return copy;
}

CellComplex CellComplex::with_stress(int cell, Direction direction) const {
  return build(vertices_, face_loops(), cell_face_lists(), role_, cell, direction);
}

CellComplex CellComplex::with_role(Role role) const {
  return build(vertices_, face_loops(), cell_face_lists(), role, stress_cell_, stress_direction_);
}

CellComplex CellComplex::transformed(double scale, const Point3& shift) const {
  std::vector<Point3> moved = vertices_;
  for (auto& p : moved) p = scale * p + shift;
  return build(std::move(moved), face_loops(), cell_face_lists(), role_, stress_cell_, stress_direction_);
}

CellComplex CellComplex::with_vertex(int v, const Point3& p) const {
  std::vector<Point3> moved = vertices_;
  moved.at(v) = p;
  return build(std::move(moved), face_loops(), cell_face_lists(), role_, stress_cell_, stress_direction_);
}

ValidationReport validate(const CellComplex& complex, double tol) {
  ValidationReport report;
  const double limit = tol * complex.bbox_diagonal();
  const int nf = static_cast<int>(complex.faces().size());
  const int nc = static_cast<int>(complex.cells().size());

  for (int f = 0; f < nf; ++f) {
    const double dev = complex.face_plane_deviation(f);
    if (dev > limit) {
      report.planarity = false;
      report.issues.push_back({ErrorCode::NonPlanarFace, f, dev,
                               "face " + std::to_string(f) + " deviates " + std::to_string(dev) + " from its plane"});
    }
  }
  for (int c = 0; c < nc; ++c) {
    std::map<int, int> uses;
    for (int f : complex.cells()[c].faces) {
      for (int e : complex.face_edges(f)) ++uses[e];
    }
    const bool closed = std::all_of(uses.begin(), uses.end(), [](const auto& kv) { return kv.second == 2; });
    if (!closed) {
      report.cell_closure = false;
      report.issues.push_back({ErrorCode::OpenCell, c, 0.0, "cell " + std::to_string(c) + " is not closed"});
    } else if (complex.cell_face_orientation(c).empty()) {
      report.cell_closure = false;
      report.issues.push_back(
          {ErrorCode::OpenCell, c, 0.0, "cell " + std::to_string(c) + " faces cannot be oriented coherently"});
    }
  }
  for (int f = 0; f < nf; ++f) {
    const auto n = complex.face_cells(f).size();
    if (n != 2) {
      report.two_cells_per_face = false;
      report.issues.push_back({ErrorCode::DanglingFace, f, static_cast<double>(n),
                               "face " + std::to_string(f) + " bounds " + std::to_string(n) + " cells"});
    }
  }
  const auto& edges = complex.edges();
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (!(edges[e].tail < edges[e].head)) {
      report.edge_orientation = false;
      report.issues.push_back({ErrorCode::MalformedDocument, e, 0.0, "edge " + std::to_string(e) + " is not tail<head"});
    }
  }
  return report;
}

}  // namespace polyrecip
