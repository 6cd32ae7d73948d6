#include "polyrecip/fixtures.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace polyrecip::fixtures {

CellComplex tetra() {
  const double r = 1.0;  // circumradius of the base triangle
  const double h = std::sqrt(2.0) * r;
  const double s = std::sqrt(3.0) / 2.0 * r;
  std::vector<Point3> v = {
      {0.0, 0.0, h / 4.0},   // centroid
      {0.0, 0.0, h},         // apex
      {-r, 0.0, 0.0},        // base corners
      {r / 2.0, s, 0.0},
      {r / 2.0, -s, 0.0},
  };
  std::vector<std::vector<int>> faces = {
      {0, 3, 1}, {0, 1, 2}, {0, 2, 4}, {0, 3, 4}, {0, 2, 3}, {0, 1, 4},  // internal
      {1, 2, 3}, {1, 3, 4}, {1, 2, 4}, {2, 3, 4},                        // boundary
  };
  std::vector<std::vector<int>> cells = {
      {0, 1, 4, 6}, {0, 3, 5, 7}, {1, 2, 5, 8}, {2, 3, 4, 9}, {6, 7, 8, 9},
  };
  return CellComplex::build(std::move(v), std::move(faces), std::move(cells), Role::form, 4, Direction::inward);
}

CellComplex tetrahedron(const std::array<Point3, 4>& corners, Role role, int stress_cell, Direction direction) {
  std::vector<Point3> v(corners.begin(), corners.end());
  std::vector<std::vector<int>> faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  std::vector<std::vector<int>> cells = {{0, 1, 2, 3}, {0, 1, 2, 3}};
  return CellComplex::build(std::move(v), std::move(faces), std::move(cells), role, stress_cell, direction);
}

CellComplex glued_boxes(Role role, Direction direction) {
  return box_grid({0.0, 1.0, 2.0}, {0.0, 1.0}, {0.0, 1.0}, role, direction);
}

CellComplex box_grid(const std::vector<double>& xs, const std::vector<double>& ys, const std::vector<double>& zs,
                     Role role, Direction direction) {
  const int nx = static_cast<int>(xs.size()) - 1;
  const int ny = static_cast<int>(ys.size()) - 1;
  const int nz = static_cast<int>(zs.size()) - 1;
  if (nx < 1 || ny < 1 || nz < 1) throw std::invalid_argument("box_grid needs at least one box per axis");
  auto vid = [&](int i, int j, int k) { return i + (nx + 1) * (j + (ny + 1) * k); };
  auto cid = [&](int i, int j, int k) { return i + nx * (j + ny * k); };

  std::vector<Point3> v;
  for (int k = 0; k <= nz; ++k)
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i <= nx; ++i) v.emplace_back(xs[i], ys[j], zs[k]);

  const int ncells = nx * ny * nz;
  std::vector<std::vector<int>> faces;
  std::vector<std::vector<int>> cells(ncells + 1);
  auto add_face = [&](std::vector<int> loop, int a, int b) {
    const int id = static_cast<int>(faces.size());
    faces.push_back(std::move(loop));
    cells[a < 0 ? ncells : a].push_back(id);
    cells[b < 0 ? ncells : b].push_back(id);
  };
  for (int k = 0; k < nz; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i <= nx; ++i)
        add_face({vid(i, j, k), vid(i, j + 1, k), vid(i, j + 1, k + 1), vid(i, j, k + 1)},
                 i > 0 ? cid(i - 1, j, k) : -1, i < nx ? cid(i, j, k) : -1);
  for (int k = 0; k < nz; ++k)
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i < nx; ++i)
        add_face({vid(i, j, k), vid(i, j, k + 1), vid(i + 1, j, k + 1), vid(i + 1, j, k)},
                 j > 0 ? cid(i, j - 1, k) : -1, j < ny ? cid(i, j, k) : -1);
  for (int k = 0; k <= nz; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        add_face({vid(i, j, k), vid(i + 1, j, k), vid(i + 1, j + 1, k), vid(i, j + 1, k)},
                 k > 0 ? cid(i, j, k - 1) : -1, k < nz ? cid(i, j, k) : -1);

  return CellComplex::build(std::move(v), std::move(faces), std::move(cells), role, ncells, direction);
}

CellComplex stellar_subdivision(const CellComplex& base, const std::vector<Point3>& centers) {
  const auto& inner = base.primal_cells();
  if (centers.size() != inner.size()) throw std::invalid_argument("one center per non-stress cell required");

  std::vector<Point3> v = base.vertices();
  std::vector<std::vector<int>> faces = base.face_loops();
  std::vector<std::vector<int>> cells;

  for (std::size_t n = 0; n < inner.size(); ++n) {
    const int c = inner[n];
    const int apex = static_cast<int>(v.size());
    v.push_back(centers[n]);
    std::map<int, int> cone_face;  // base edge -> triangle id
    for (int e : base.cell_edges(c)) {
      cone_face[e] = static_cast<int>(faces.size());
      faces.push_back({apex, base.edges()[e].tail, base.edges()[e].head});
    }
    for (int f : base.cells()[c].faces) {
      std::vector<int> cell = {f};
      for (int e : base.face_edges(f)) cell.push_back(cone_face.at(e));
      cells.push_back(std::move(cell));
    }
  }
  cells.push_back(base.cells()[base.stress_cell()].faces);
  const int stress = static_cast<int>(cells.size()) - 1;
  return CellComplex::build(std::move(v), std::move(faces), std::move(cells), base.role(), stress,
                            base.stress_direction());
}

CellComplex subdivided_tetrahedron(const std::array<Point3, 4>& corners, const Point3& center, Role role,
                                   int stress_cell, Direction direction) {
  const CellComplex base = tetrahedron(corners, role, 1, direction);
  const CellComplex cones = stellar_subdivision(base, {center});
  if (stress_cell < 0) return cones;
  return cones.with_stress(stress_cell, direction);
}

CellComplex stellar_glued_boxes(Role role, Direction direction) {
  return stellar_subdivision(glued_boxes(role, direction), {Point3(0.5, 0.5, 0.5), Point3(1.5, 0.5, 0.5)});
}

namespace {

std::vector<double> increasing(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> step(0.5, 2.0);
  std::uniform_real_distribution<double> start(-1.0, 1.0);
  std::vector<double> out{start(rng)};
  for (int i = 0; i < n; ++i) out.push_back(out.back() + step(rng));
  return out;
}

}  // namespace

CellComplex random_subdivided_tetrahedron(std::mt19937& rng, Role role) {
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);
  std::array<Point3, 4> corners{Point3(0, 0, 0), Point3(1, 0, 0), Point3(0, 1, 0), Point3(0, 0, 1)};
  for (auto& c : corners) c += Point3(jitter(rng), jitter(rng), jitter(rng));
  std::uniform_real_distribution<double> weight(0.5, 1.5);
  double total = 0.0;
  Point3 center = Point3::Zero();
  for (const auto& c : corners) {
    const double w = weight(rng);
    center += w * c;
    total += w;
  }
  return subdivided_tetrahedron(corners, center / total, role);
}

CellComplex random_stellar_glued_boxes(std::mt19937& rng, Role role) {
  const auto xs = increasing(rng, 2);
  const auto ys = increasing(rng, 1);
  const auto zs = increasing(rng, 1);
  std::uniform_real_distribution<double> t(0.3, 0.7);
  auto inside = [&](double a, double b) { return a + t(rng) * (b - a); };
  const CellComplex base = box_grid(xs, ys, zs, role, Direction::inward);
  return stellar_subdivision(base, {Point3(inside(xs[0], xs[1]), inside(ys[0], ys[1]), inside(zs[0], zs[1])),
                                    Point3(inside(xs[1], xs[2]), inside(ys[0], ys[1]), inside(zs[0], zs[1]))});
}

CellComplex random_box_grid(std::mt19937& rng, int nx, int ny, int nz, Role role) {
  return box_grid(increasing(rng, nx), increasing(rng, ny), increasing(rng, nz), role, Direction::inward);
}

std::vector<std::string> names() {
  return {"tetra", "glued-boxes", "stellar-glued-boxes", "subdivided-tetrahedron", "subdivided-tetrahedron-interior",
          "box-grid-2x2x1", "box-grid-4x4x3"};
}

CellComplex named(const std::string& name) {
  const std::array<Point3, 4> unit{Point3(0, 0, 0), Point3(1, 0, 0), Point3(0, 1, 0), Point3(0, 0, 1)};
  const Point3 centroid(0.25, 0.25, 0.25);
  if (name == "tetra") return tetra();
  if (name == "glued-boxes") return glued_boxes();
  if (name == "stellar-glued-boxes") return stellar_glued_boxes();
  if (name == "subdivided-tetrahedron") return subdivided_tetrahedron(unit, centroid);
  if (name == "subdivided-tetrahedron-interior") return subdivided_tetrahedron(unit, centroid, Role::force, 0);
  if (name == "box-grid-2x2x1") return box_grid({0, 1, 2}, {0, 1, 2}, {0, 1});
  if (name == "box-grid-4x4x3") return box_grid({0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}, {0, 1, 2, 3});
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace polyrecip::fixtures
