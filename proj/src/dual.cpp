#include "polyrecip/dual.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include <Eigen/Cholesky>

namespace polyrecip {

std::string to_string(MemberForce force) {
  switch (force) {
    case MemberForce::compressive: return "compressive";
    case MemberForce::tensile: return "tensile";
    case MemberForce::zero: return "zero";
  }
  return "zero";
}

Counts DualDiagram::counts() const {
  return {static_cast<int>(vertices.size()), static_cast<int>(edges.size()), static_cast<int>(faces.size()),
          static_cast<int>(cells.size())};
}

std::vector<double> DualDiagram::face_areas() const {
  std::vector<double> out;
  out.reserve(faces.size());
  for (const auto& face : faces) {
    Eigen::Vector3d n = Eigen::Vector3d::Zero();
    for (std::size_t k = 0; k < face.loop.size(); ++k) {
      const Point3& a = vertices[face.loop[k]];
      const Point3& b = vertices[face.loop[(k + 1) % face.loop.size()]];
      n += a.cross(b);
    }
    out.push_back(0.5 * n.norm());
  }
  return out;
}

Eigen::MatrixXd edge_vectors(const CellComplex& complex, const IncidenceSet& inc, const Eigen::VectorXd& q) {
  if (q.size() != static_cast<Eigen::Index>(inc.faces.size())) {
    throw Error(ErrorCode::DimensionMismatch, "q has " + std::to_string(q.size()) + " entries, expected " +
                                                  std::to_string(inc.faces.size()));
  }
  Eigen::MatrixXd out(q.size(), 3);
  for (Eigen::Index k = 0; k < q.size(); ++k) out.row(k) = q(k) * complex.faces()[inc.faces[k]].normal.transpose();
  return out;
}

DualDiagram dual_topology(const CellComplex& complex, const IncidenceSet& inc) {
  DualDiagram d;
  d.vertex_cells = inc.cells;
  d.vertices.assign(inc.cells.size(), Point3::Zero());

  const Incidence& fc = inc.face_cell;
  d.edges.resize(inc.faces.size());
  for (int row = 0; row < fc.outerSize(); ++row) {
    DualEdge& e = d.edges[row];
    e.face = inc.faces[row];
    for (Incidence::InnerIterator it(fc, row); it; ++it) {
      if (it.value() > 0) {
        e.head = static_cast<int>(it.col());
      } else {
        e.tail = static_cast<int>(it.col());
      }
    }
  }

  const Incidence& ef = inc.edge_face;
  d.faces.resize(inc.edges.size());
  for (int row = 0; row < ef.outerSize(); ++row) {
    const int edge = inc.edges[row];
    DualFace& face = d.faces[row];
    face.primal_edge = edge;
    std::vector<std::pair<int, int>> around;  // (local face, C_ef sign)
    for (Incidence::InnerIterator it(ef, row); it; ++it) {
      around.emplace_back(static_cast<int>(it.col()), static_cast<int>(it.value()));
    }
    if (around.empty()) continue;
    auto sign_of_face = [&](int local_face) {
      for (auto [f, s] : around) {
        if (f == local_face) return s;
      }
      return 0;
    };

    // Walk face -> cell -> face around the edge.
    int f = around.front().first;
    int s = around.front().second;
    const int start = s > 0 ? d.edges[f].tail : d.edges[f].head;
    int cell = start;
    for (std::size_t guard = 0; guard <= around.size(); ++guard) {
      face.loop.push_back(cell);
      face.edges.push_back(f);
      face.signs.push_back(s);
      const DualEdge& de = d.edges[f];
      const int next = de.tail == cell ? de.head : de.tail;
      if ((de.tail == cell ? 1 : -1) != s) {
        throw Error(ErrorCode::InconsistentOrientation,
                    "face and cell orientations disagree around edge " + std::to_string(edge));
      }
      cell = next;
      if (cell == start) break;
      int following = -1;
      for (int g : complex.cells()[inc.cells[cell]].faces) {
        const int local = inc.local_face(g);
        if (local >= 0 && local != f && sign_of_face(local) != 0) {
          following = local;
          break;
        }
      }
      if (following < 0) {
        throw Error(ErrorCode::OpenCell, "cell " + std::to_string(inc.cells[cell]) + " does not close around edge " +
                                             std::to_string(edge));
      }
      f = following;
      s = sign_of_face(f);
    }
    if (cell != start || face.edges.size() != around.size()) {
      throw Error(ErrorCode::InconsistentOrientation, "faces around edge " + std::to_string(edge) +
                                                          " do not form a single cycle");
    }
  }

  d.cells.assign(complex.vertices().size(), {});
  for (std::size_t k = 0; k < inc.edges.size(); ++k) {
    const Edge& e = complex.edges()[inc.edges[k]];
    d.cells[e.tail].push_back(static_cast<int>(k));
    d.cells[e.head].push_back(static_cast<int>(k));
  }
  return d;
}

namespace {

void check_inputs(const IncidenceSet& inc, const Eigen::VectorXd& q, int anchor) {
  if (q.size() != static_cast<Eigen::Index>(inc.faces.size())) {
    throw Error(ErrorCode::DimensionMismatch, "q has " + std::to_string(q.size()) + " entries, expected " +
                                                  std::to_string(inc.faces.size()));
  }
  if (anchor < 0 || anchor >= static_cast<int>(inc.cells.size())) {
    throw std::invalid_argument("anchor " + std::to_string(anchor) + " is not a dual vertex");
  }
  if (q.size() == 0 || q.cwiseAbs().maxCoeff() == 0.0) {
    throw Error(ErrorCode::ZeroSolution, "q = 0: the dual collapses into a single point");
  }
}

}  // namespace

DualDiagram build_dual_algebraic(const CellComplex& complex, const IncidenceSet& inc, const Eigen::VectorXd& q,
                                 int anchor, const Point3& anchor_point) {
  check_inputs(inc, q, anchor);
  DualDiagram d = dual_topology(complex, inc);
  const int f = static_cast<int>(inc.faces.size());
  const int c = static_cast<int>(inc.cells.size());

  Eigen::MatrixXd cs = Eigen::MatrixXd::Zero(f + 1, c);
  cs(0, anchor) = 1.0;
  cs.bottomRows(f) = dense(inc.face_cell);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(f + 1, 3);
  rhs.bottomRows(f) = edge_vectors(complex, inc, q);

  const Eigen::LLT<Eigen::MatrixXd> llt(cs.transpose() * cs);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::DisconnectedComplex, "the augmented incidence matrix is rank deficient");
  }
  const Eigen::MatrixXd x = llt.solve(cs.transpose() * rhs);
  for (int k = 0; k < c; ++k) d.vertices[k] = x.row(k).transpose() - x.row(anchor).transpose() + anchor_point;
  d.q = q;
  d.anchor = anchor;
  d.anchor_point = anchor_point;
  return d;
}

DualDiagram build_dual_graphsearch(const CellComplex& complex, const IncidenceSet& inc, const Eigen::VectorXd& q,
                                   int anchor, const Point3& anchor_point) {
  check_inputs(inc, q, anchor);
  DualDiagram d = dual_topology(complex, inc);
  const int c = static_cast<int>(inc.cells.size());
  std::vector<char> placed(c, 0);
  d.vertices[anchor] = anchor_point;
  placed[anchor] = 1;
  std::queue<int> pending;
  pending.push(anchor);
  while (!pending.empty()) {
    const int a = pending.front();
    pending.pop();
    for (int g : complex.cells()[inc.cells[a]].faces) {
      const int local = inc.local_face(g);
      if (local < 0) continue;
      const DualEdge& e = d.edges[local];
      const int b = e.tail == a ? e.head : e.tail;
      if (placed[b]) continue;
      const double sign = b == e.head ? 1.0 : -1.0;
      d.vertices[b] = d.vertices[a] + sign * q(local) * complex.faces()[g].normal;
      placed[b] = 1;
      pending.push(b);
    }
  }
  if (std::find(placed.begin(), placed.end(), 0) != placed.end()) {
    throw Error(ErrorCode::DisconnectedComplex, "some cells are not reachable from the anchor");
  }
  d.q = q;
  d.anchor = anchor;
  d.anchor_point = anchor_point;
  return d;
}

MemberLabels classify_members(const CellComplex& complex, const DualDiagram& dual) {
  if (complex.role() != Role::force) {
    throw Error(ErrorCode::RoleMismatch, "member forces are read from a force diagram's dual");
  }
  const double scale = std::max(1.0, dual.q.size() ? dual.q.cwiseAbs().maxCoeff() : 0.0);
  const double zero_tol = 1e-9 * scale;
  const bool inward = complex.stress_direction() == Direction::inward;
  MemberLabels out;
  for (const DualEdge& e : dual.edges) {
    const double psi = (dual.vertices[e.head] - dual.vertices[e.tail]).dot(complex.faces()[e.face].normal);
    out.psi.push_back(psi);
    MemberForce label = MemberForce::zero;
    if (std::abs(psi) > zero_tol) {
      label = (psi > 0) == inward ? MemberForce::compressive : MemberForce::tensile;
    }
    out.labels.push_back(label);
    if (label == MemberForce::compressive) ++out.compressive;
    if (label == MemberForce::tensile) ++out.tensile;
    if (label == MemberForce::zero) ++out.zero;
  }
  return out;
}

ReciprocityReport verify_reciprocity(const CellComplex& complex, const DualDiagram& dual, double tol, Exec exec) {
  ReciprocityReport r;
  r.tolerance = tol;
  r.primal_counts = complex.primal_counts();
  r.dual_counts = dual.counts();
  const Counts& p = r.primal_counts;
  const Counts& d = r.dual_counts;
  r.counts_ok = p.v == d.c && p.e == d.f && p.f == d.e && p.c == d.v;
  if (!r.counts_ok) r.failures.push_back("duality counts differ");

  const int ne = static_cast<int>(dual.edges.size());
  const int nf = static_cast<int>(dual.faces.size());
  const bool has_q = dual.q.size() == ne;
  const double scale = std::max(1.0, has_q && ne ? dual.q.cwiseAbs().maxCoeff() : 0.0);

  auto measured = [&](int k) {
    const DualEdge& e = dual.edges[k];
    return Eigen::Vector3d(dual.vertices[e.head] - dual.vertices[e.tail]);
  };

  std::vector<double> angle(ne, 0.0), cross(ne, 0.0);
  kernels::for_each_index(ne, exec, [&](int k) {
    const double qk = has_q ? dual.q(k) : measured(k).norm();
    if (std::abs(qk) <= 1e-9) return;
    const Eigen::Vector3d v = measured(k);
    const Eigen::Vector3d n = complex.faces()[dual.edges[k].face].normal * (qk > 0 ? 1.0 : -1.0);
    cross[k] = v.cross(n).norm() / std::abs(qk);
    angle[k] = std::atan2(v.cross(n).norm(), v.dot(n));
  });

  std::vector<double> closure(nf, 0.0), q_closure(nf, 0.0), perp(nf, 0.0);
  kernels::for_each_index(nf, exec, [&](int j) {
    const DualFace& face = dual.faces[j];
    Eigen::Vector3d sum = Eigen::Vector3d::Zero();
    Eigen::Vector3d q_sum = Eigen::Vector3d::Zero();
    for (std::size_t k = 0; k < face.edges.size(); ++k) {
      const Eigen::Vector3d& n = complex.faces()[dual.edges[face.edges[k]].face].normal;
      sum += face.signs[k] * measured(face.edges[k]).dot(n) * n;
      if (has_q) q_sum += face.signs[k] * dual.q(face.edges[k]) * n;
    }
    closure[j] = sum.norm();
    q_closure[j] = q_sum.norm();

    const Edge& pe = complex.edges()[face.primal_edge];
    const Eigen::Vector3d dir = (complex.vertices()[pe.head] - complex.vertices()[pe.tail]).normalized();
    for (std::size_t k = 0; k < face.loop.size(); ++k) {
      const Eigen::Vector3d side = dual.vertices[face.loop[(k + 1) % face.loop.size()]] - dual.vertices[face.loop[k]];
      const double len = side.norm();
      if (len <= 1e-12 * scale) continue;
      perp[j] = std::max(perp[j], std::abs(dir.dot(side)) / len);
    }
  });

  auto max_of = [](const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); };
  r.closure = max_of(closure);
  r.q_closure = max_of(q_closure);
  r.parallel_angle = max_of(angle);
  r.parallel_cross = max_of(cross);
  r.perpendicular = max_of(perp);

  r.closure_ok = r.closure <= tol * scale && r.q_closure <= tol * scale;
  r.parallel_ok = r.parallel_angle <= kParallelAngleTolerance && r.parallel_cross <= tol;
  r.perpendicular_ok = r.perpendicular <= tol;
  if (!r.closure_ok) r.failures.push_back("dual faces do not close");
  if (!r.parallel_ok) r.failures.push_back("dual edges are not parallel to the primal normals");
  if (!r.perpendicular_ok) r.failures.push_back("primal edges are not perpendicular to the dual faces");
  return r;
}

}  // namespace polyrecip
