#include <cmath>

#include "json.hpp"
#include "polyrecip/complex.hpp"

namespace polyrecip {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedDocument, what); }

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) malformed(std::string("missing key \"") + key + "\"");
  return *it;
}

std::vector<std::vector<int>> index_lists(const json& node, const char* key) {
  if (!node.is_array()) malformed(std::string("\"") + key + "\" must be an array");
  std::vector<std::vector<int>> out;
  for (const auto& item : node) {
    if (!item.is_array()) malformed(std::string("\"") + key + "\" entries must be arrays of integers");
    std::vector<int> list;
    for (const auto& x : item) {
      if (!x.is_number_integer()) malformed(std::string("\"") + key + "\" entries must be arrays of integers");
      list.push_back(x.get<int>());
    }
    out.push_back(std::move(list));
  }
  return out;
}

}  // namespace

CellComplex read_complex(const std::string& document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("document must be a JSON object");

  const json& role_node = require(doc, "role");
  if (!role_node.is_string()) malformed("\"role\" must be a string");
  Role role;
  if (role_node == "form") role = Role::form;
  else if (role_node == "force") role = Role::force;
  else malformed("\"role\" must be \"form\" or \"force\"");

  const json& dir_node = require(doc, "direction");
  if (!dir_node.is_string()) malformed("\"direction\" must be a string");
  Direction direction;
  if (dir_node == "inward") direction = Direction::inward;
  else if (dir_node == "outward") direction = Direction::outward;
  else malformed("\"direction\" must be \"inward\" or \"outward\"");

  const json& stress_node = require(doc, "stress_cell");
  if (!stress_node.is_number_integer()) malformed("\"stress_cell\" must be an integer");

  const json& vert_node = require(doc, "vertices");
  if (!vert_node.is_array()) malformed("\"vertices\" must be an array");
  std::vector<Point3> vertices;
  for (const auto& v : vert_node) {
    if (!v.is_array() || v.size() != 3) malformed("each vertex must be [x, y, z]");
    Point3 p;
    for (int i = 0; i < 3; ++i) {
      if (!v[i].is_number()) malformed("vertex coordinates must be numbers");
      p[i] = v[i].get<double>();
    }
    vertices.push_back(p);
  }

  return CellComplex::build(std::move(vertices), index_lists(require(doc, "faces"), "faces"),
                                    index_lists(require(doc, "cells"), "cells"), role, stress_node.get<int>(),
                                    direction);
}

CellComplex parse_complex(const std::string& document) {
  CellComplex complex = read_complex(document);
  const ValidationReport report = validate(complex, kPlanarityTolerance);
  if (!report.ok()) {
    const auto& first = report.issues.front();
    throw Error(first.code, first.message);
  }
  return complex;
}

std::string serialize(const CellComplex& complex) {
  json doc;
  doc["role"] = to_string(complex.role());
  json vertices = json::array();
  for (const auto& p : complex.vertices()) vertices.push_back({p.x(), p.y(), p.z()});
  doc["vertices"] = std::move(vertices);
  doc["faces"] = complex.face_loops();
  doc["cells"] = complex.cell_face_lists();
  doc["stress_cell"] = complex.stress_cell();
  doc["direction"] = to_string(complex.stress_direction());
  return doc.dump(2);
}

}  // namespace polyrecip
