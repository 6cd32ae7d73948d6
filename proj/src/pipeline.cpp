#include "polyrecip/pipeline.hpp"

#include <algorithm>

#include "json.hpp"

namespace polyrecip {

using nlohmann::json;

std::string to_string(Method method) {
  switch (method) {
    case Method::mpi: return "mpi";
    case Method::rref: return "rref";
    case Method::lp: return "lp";
  }
  return "mpi";
}

std::optional<Method> parse_method(const std::string& name) {
  if (name == "mpi") return Method::mpi;
  if (name == "rref") return Method::rref;
  if (name == "lp") return Method::lp;
  return std::nullopt;
}

Model::Model(CellComplex complex, Exec exec)
    : complex_(std::move(complex)),
      inc_(build_incidence(complex_)),
      sys_(EquilibriumSystem::assemble(complex_, inc_, kRankTolerance, exec)) {}

std::vector<int> Model::independent_face_ids() const {
  std::vector<int> ids;
  for (int col : sys_.independent_faces()) ids.push_back(sys_.column_faces()[col]);
  return ids;
}

DensityVector Model::densities(const SolveRequest& request) const {
  const int f = sys_.face_count();
  switch (request.method) {
    case Method::mpi:
      return solve_mpi(sys_, request.params.value_or(Eigen::VectorXd::Ones(f)));
    case Method::rref:
      return solve_rref(sys_, request.params.value_or(Eigen::VectorXd::Ones(sys_.dof())));
    case Method::lp:
      return solve_lp(sys_, request.params.value_or(Eigen::VectorXd::Ones(f)));
  }
  throw RequestError("unknown method");
}

SolveResponse Model::solve(const SolveRequest& request) const {
  SolveResponse r;
  r.method = request.method;
  r.density = densities(request);
  if (r.density.zero_solution) throw Error(ErrorCode::ZeroSolution, "q = 0: the dual collapses into a single point");
  r.dual = build_dual_algebraic(complex_, inc_, r.density.q, request.anchor, request.anchor_point);
  const DualDiagram graph = build_dual_graphsearch(complex_, inc_, r.density.q, request.anchor, request.anchor_point);
  for (std::size_t k = 0; k < graph.vertices.size(); ++k) {
    r.cross_method = std::max(r.cross_method, (graph.vertices[k] - r.dual.vertices[k]).cwiseAbs().maxCoeff());
  }
  if (complex_.role() == Role::force) r.labels = classify_members(complex_, r.dual);
  r.residual = sys_.residual(r.density.q);
  r.reciprocity = verify_reciprocity(complex_, r.dual, kReciprocityTolerance, sys_.exec());
  const double scale = std::max(1.0, r.density.q.cwiseAbs().maxCoeff());
  r.degraded = !r.reciprocity.ok() || r.residual > kReciprocityTolerance * scale ||
               r.cross_method > kReciprocityTolerance * scale;
  return r;
}

namespace {

Eigen::VectorXd vector_from(const json& j, const std::string& name) {
  if (!j.is_array()) throw RequestError(name + " must be an array of numbers");
  Eigen::VectorXd v(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number()) throw RequestError(name + " must be an array of numbers");
    v(k) = j[k].get<double>();
  }
  return v;
}

json vector_json(const Eigen::VectorXd& v) { return json(std::vector<double>(v.data(), v.data() + v.size())); }

json point_json(const Point3& p) { return json::array({p.x(), p.y(), p.z()}); }

json counts_json(const Counts& c) { return {{"v", c.v}, {"e", c.e}, {"f", c.f}, {"c", c.c}}; }

json reciprocity_json(const ReciprocityReport& r) {
  return {{"ok", r.ok()},
          {"tolerance", r.tolerance},
          {"closure", r.closure},
          {"q_closure", r.q_closure},
          {"parallel_angle", r.parallel_angle},
          {"parallel_cross", r.parallel_cross},
          {"perpendicular", r.perpendicular},
          {"closure_ok", r.closure_ok},
          {"parallel_ok", r.parallel_ok},
          {"perpendicular_ok", r.perpendicular_ok},
          {"counts_ok", r.counts_ok},
          {"primal_counts", counts_json(r.primal_counts)},
          {"dual_counts", counts_json(r.dual_counts)},
          {"failures", r.failures}};
}

}  // namespace

SolveRequest parse_solve_request(const std::string& body) {
  json j;
  try {
    j = json::parse(body);
  } catch (const json::parse_error& e) {
    throw RequestError(std::string("request is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw RequestError("request must be a JSON object");

  SolveRequest req;
  if (j.contains("method")) {
    if (!j["method"].is_string()) throw RequestError("method must be a string");
    const auto m = parse_method(j["method"].get<std::string>());
    if (!m) throw RequestError("unknown method '" + j["method"].get<std::string>() + "'");
    req.method = *m;
  }
  const std::string wanted = req.method == Method::mpi ? "xi" : req.method == Method::rref ? "zeta" : "lambda";
  for (const auto& [key, value] : j.items()) {
    if (key == "method") continue;
    if (key == "xi" || key == "zeta" || key == "lambda") {
      if (key != wanted) throw RequestError(key + " does not apply to method " + to_string(req.method));
      req.params = vector_from(value, key);
    } else if (key == "anchor" || key == "anchor_cell") {
      if (!value.is_number_integer()) throw RequestError(key + " must be an integer");
      req.anchor = value.get<int>();
    } else if (key == "anchor_point") {
      const Eigen::VectorXd p = vector_from(value, key);
      if (p.size() != 3) throw RequestError("anchor_point must have three coordinates");
      req.anchor_point = p;
    } else {
      throw RequestError("unknown field '" + key + "'");
    }
  }
  return req;
}

std::string complex_json(const Model& model) {
  const CellComplex& cx = model.complex();
  json j = json::parse(serialize(cx));
  json edges = json::array();
  for (const Edge& e : cx.edges()) edges.push_back({e.tail, e.head});
  json normals = json::array();
  for (const Face& f : cx.faces()) normals.push_back(point_json(f.normal));
  j["edges"] = edges;
  j["normals"] = normals;
  j["exterior_cell"] = cx.exterior_cell();
  j["counts"] = counts_json(cx.counts());
  j["primal_counts"] = counts_json(cx.primal_counts());
  j["primal_edges"] = cx.primal_edges();
  j["primal_faces"] = cx.primal_faces();
  j["primal_cells"] = cx.primal_cells();
  return j.dump();
}

std::string analysis_json(const Model& model) {
  const AnalysisReport& a = model.system().analysis();
  json j = {{"rows", a.rows},
            {"cols", a.cols},
            {"rank", a.rank},
            {"dof", a.dof},
            {"independent_faces", model.independent_face_ids()},
            {"independent_columns", a.independent_faces},
            {"rank_tol", a.rank_tol},
            {"singular_values", vector_json(a.spectrum.singular_values)},
            {"cutoff", a.spectrum.cutoff},
            {"last_kept", a.spectrum.last_kept},
            {"first_dropped", a.spectrum.first_dropped},
            {"rref_rank", a.rref_rank},
            {"rank_consistent", a.rank_consistent},
            {"only_zero_solution", a.only_zero_solution()},
            {"counts", counts_json(model.complex().primal_counts())}};
  if (a.only_zero_solution()) j["warning"] = "the only solution is q = 0; the dual collapses to a point";
  return j.dump();
}

std::string response_json(const Model& model, const SolveResponse& r) {
  const CellComplex& cx = model.complex();
  const DualDiagram& d = r.dual;
  json vertices = json::array();
  for (const Point3& p : d.vertices) vertices.push_back(point_json(p));
  json edges = json::array();
  for (const DualEdge& e : d.edges) edges.push_back({e.tail, e.head, e.face});
  json faces = json::array();
  json face_edges = json::array();
  for (const DualFace& f : d.faces) {
    faces.push_back(f.loop);
    face_edges.push_back({{"primal_edge", f.primal_edge}, {"edges", f.edges}, {"signs", f.signs}});
  }
  json labels = nullptr;
  if (r.labels) {
    labels = json::array();
    for (MemberForce m : r.labels->labels) labels.push_back(to_string(m));
  }
  json j = {{"role", to_string(cx.role() == Role::form ? Role::force : Role::form)},
            {"method", to_string(r.method)},
            {"vertices", vertices},
            {"vertex_cells", d.vertex_cells},
            {"edges", edges},
            {"faces", faces},
            {"face_edges", face_edges},
            {"cells", d.cells},
            {"face_areas", d.face_areas()},
            {"q", vector_json(r.density.q)},
            {"member_forces", labels},
            {"anchor", d.anchor},
            {"anchor_point", point_json(d.anchor_point)},
            {"dof", model.system().dof()},
            {"independent_faces", model.independent_face_ids()},
            {"residuals",
             {{"equilibrium", r.residual}, {"closure", r.reciprocity.closure}, {"cross_method", r.cross_method}}},
            {"reciprocity", reciprocity_json(r.reciprocity)},
            {"degraded", r.degraded},
            {"primal", json::parse(serialize(cx))}};
  return j.dump(2);
}

std::string error_json(const std::string& code, const std::string& message) {
  return json{{"error", code}, {"message", message}}.dump();
}

DualDocument parse_dual_document(const std::string& document) {
  auto malformed = [](const std::string& what) { return Error(ErrorCode::MalformedDocument, what); };
  json j;
  try {
    j = json::parse(document);
  } catch (const json::parse_error& e) {
    throw malformed(std::string("dual document is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("primal") || !j.contains("vertices") || !j.contains("q")) {
    throw malformed("dual document needs 'primal', 'vertices' and 'q'");
  }
  CellComplex primal = parse_complex(j["primal"].dump());
  const IncidenceSet inc = build_incidence(primal);
  DualDiagram dual = dual_topology(primal, inc);

  const json& verts = j["vertices"];
  if (!verts.is_array() || verts.size() != dual.vertices.size()) throw malformed("dual vertex count does not match");
  for (std::size_t k = 0; k < verts.size(); ++k) {
    Eigen::VectorXd p;
    try {
      p = vector_from(verts[k], "vertex");
    } catch (const RequestError& e) {
      throw malformed(e.what());
    }
    if (p.size() != 3) throw malformed("dual vertex needs three coordinates");
    dual.vertices[k] = p;
  }
  try {
    dual.q = vector_from(j["q"], "q");
  } catch (const RequestError& e) {
    throw malformed(e.what());
  }
  if (dual.q.size() != static_cast<Eigen::Index>(dual.edges.size())) throw malformed("q length does not match");
  if (j.contains("faces")) {
    if (!j["faces"].is_array() || j["faces"].size() != dual.faces.size()) throw malformed("dual face count differs");
    for (std::size_t k = 0; k < dual.faces.size(); ++k) {
      if (j["faces"][k] != json(dual.faces[k].loop)) throw malformed("dual face " + std::to_string(k) + " differs");
    }
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array() || j["edges"].size() != dual.edges.size()) throw malformed("dual edge count differs");
    for (std::size_t k = 0; k < dual.edges.size(); ++k) {
      const DualEdge& e = dual.edges[k];
      if (j["edges"][k] != json({e.tail, e.head, e.face})) throw malformed("dual edge " + std::to_string(k) + " differs");
    }
  }
  if (j.contains("anchor") && j["anchor"].is_number_integer()) dual.anchor = j["anchor"].get<int>();
  return {std::move(primal), std::move(dual)};
}

}  // namespace polyrecip
