#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "polyrecip/complex.hpp"
#include "polyrecip/dual.hpp"
#include "polyrecip/equilibrium.hpp"
#include "polyrecip/solvers.hpp"
#include "polyrecip/topology.hpp"

namespace polyrecip {

enum class Method { mpi, rref, lp };
std::string to_string(Method method);
std::optional<Method> parse_method(const std::string& name);

/// Thrown for requests that are malformed rather than unsolvable.
class RequestError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SolveRequest {
  Method method = Method::mpi;
  /// The vector matching the method; all-ones when empty.
  std::optional<Eigen::VectorXd> params;
  int anchor = 0;
  Point3 anchor_point = Point3::Zero();
};

struct SolveResponse {
  Method method = Method::mpi;
  DensityVector density;
  DualDiagram dual;
  std::optional<MemberLabels> labels;  // force diagrams only
  double residual = 0.0;               // ||A q||_inf
  double cross_method = 0.0;           // max vertex difference between the two constructions
  ReciprocityReport reciprocity;
  bool degraded = false;
};

/// A loaded complex with everything that does not depend on a request.
/// Immutable once built; solve() may be called concurrently.
class Model {
 public:
  explicit Model(CellComplex complex, Exec exec = Exec::serial);

  const CellComplex& complex() const { return complex_; }
  const IncidenceSet& incidence() const { return inc_; }
  const EquilibriumSystem& system() const { return sys_; }
  /// Complex face ids of the independent columns.
  std::vector<int> independent_face_ids() const;

  DensityVector densities(const SolveRequest& request) const;
  SolveResponse solve(const SolveRequest& request) const;

 private:
  CellComplex complex_;
  IncidenceSet inc_;
  EquilibriumSystem sys_;
};

/// Parses a POST /api/solve body. Throws RequestError.
SolveRequest parse_solve_request(const std::string& body);

std::string complex_json(const Model& model);
std::string analysis_json(const Model& model);
std::string response_json(const Model& model, const SolveResponse& response);
std::string error_json(const std::string& code, const std::string& message);

/// The dual document written by `solve`, read back. The primal is restored
/// from the embedded input document and the dual's topology rebuilt from it;
/// coordinates and q come from the document.
struct DualDocument {
  CellComplex primal;
  DualDiagram dual;
};
DualDocument parse_dual_document(const std::string& document);

}  // namespace polyrecip
