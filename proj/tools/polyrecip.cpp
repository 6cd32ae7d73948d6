#include <csignal>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyrecip/fixtures.hpp"
#include "polyrecip/pipeline.hpp"
#include "polyrecip/service.hpp"

using namespace polyrecip;
using nlohmann::json;

namespace {

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedDocument:
    case ErrorCode::NonPlanarFace:
    case ErrorCode::OpenCell:
    case ErrorCode::DanglingFace: return 2;
    case ErrorCode::Infeasible: return 3;
    case ErrorCode::ZeroDof: return 4;
    case ErrorCode::DimensionMismatch: return 5;
    case ErrorCode::InconsistentOrientation: return 6;
    case ErrorCode::EmptySystem: return 7;
    case ErrorCode::ZeroSolution: return 8;
    case ErrorCode::DisconnectedComplex: return 9;
    case ErrorCode::RoleMismatch: return 10;
  }
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedDocument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text << "\n";
}

Eigen::VectorXd parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw RequestError("not a number: '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw RequestError("not a number: '" + item + "'");
    values.push_back(v);
  }
  return Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

json issue_json(const ValidationIssue& issue) {
  return {{"code", std::string(to_string(issue.code))},
          {"index", issue.index},
          {"value", issue.value},
          {"message", issue.message}};
}

int cmd_check(const std::string& path, double tol) {
  const CellComplex complex = read_complex(read_file(path));
  const ValidationReport report = validate(complex, tol);
  json issues = json::array();
  for (const auto& issue : report.issues) issues.push_back(issue_json(issue));
  bool orientation = true;
  if (report.ok()) {
    try {
      propagate_cell_orientations(complex);
    } catch (const Error& e) {
      orientation = false;
      issues.push_back({{"code", std::string(to_string(e.code()))}, {"index", -1}, {"value", 0.0}, {"message", e.what()}});
    }
  }
  const bool ok = report.ok() && orientation;
  json out = {{"ok", ok},
              {"planarity", report.planarity},
              {"two_cells_per_face", report.two_cells_per_face},
              {"cell_closure", report.cell_closure},
              {"edge_orientation", report.edge_orientation},
              {"orientation", orientation},
              {"issues", issues}};
  std::cout << out.dump(2) << "\n";
  if (ok) return 0;
  if (!report.issues.empty()) return exit_code(report.issues.front().code);
  return exit_code(ErrorCode::InconsistentOrientation);
}

int cmd_analyze(const std::string& path, Exec exec) {
  const Model model(parse_complex(read_file(path)), exec);
  json out = json::parse(analysis_json(model));
  out["complex_counts"] = json::parse(complex_json(model))["counts"];
  std::cout << out.dump(2) << "\n";
  if (model.system().dof() == 0) std::cerr << "warning: dof = 0, the dual collapses to a point\n";
  return 0;
}

struct SolveOptions {
  std::string method = "mpi";
  std::string xi, zeta, lambda;
  int anchor = 0;
  std::string anchor_point;
  std::string output;
};

int cmd_solve(const std::string& path, const SolveOptions& opt, Exec exec) {
  SolveRequest request;
  const auto method = parse_method(opt.method);
  if (!method) throw RequestError("unknown method '" + opt.method + "'");
  request.method = *method;
  const std::pair<const char*, const std::string*> given[] = {{"xi", &opt.xi}, {"zeta", &opt.zeta}, {"lambda", &opt.lambda}};
  const std::string wanted = request.method == Method::mpi ? "xi" : request.method == Method::rref ? "zeta" : "lambda";
  for (const auto& [name, value] : given) {
    if (value->empty()) continue;
    if (name != wanted) throw RequestError(std::string("--") + name + " does not apply to --method=" + opt.method);
    request.params = parse_list(*value);
  }
  request.anchor = opt.anchor;
  if (!opt.anchor_point.empty()) {
    const Eigen::VectorXd p = parse_list(opt.anchor_point);
    if (p.size() != 3) throw RequestError("--anchor-point needs three coordinates");
    request.anchor_point = p;
  }
  const Model model(parse_complex(read_file(path)), exec);
  const SolveResponse response = model.solve(request);
  write_output(opt.output, response_json(model, response));
  if (response.density.zero_solution) std::cerr << "warning: q = 0\n";
  if (response.degraded) std::cerr << "warning: reciprocity checks failed\n";
  return 0;
}

Service* running_service = nullptr;

void on_signal(int) {
  if (running_service) running_service->stop();
}

int cmd_serve(const std::string& path, const std::string& host, int port, const std::string& viewer_dir, Exec exec) {
  auto model = std::make_shared<const Model>(parse_complex(read_file(path)), exec);
  Service service(model, ServiceOptions{viewer_dir});
  const int bound = service.bind(host, port);
  std::cout << "listening on http://" << host << ":" << bound << "/" << std::endl;
  running_service = &service;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  service.listen();
  running_service = nullptr;
  return 0;
}

int cmd_fixture(const std::string& name, const std::string& output) {
  write_output(output, serialize(fixtures::named(name)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reciprocal polyhedral diagrams from cell complexes"};
  app.require_subcommand(1);
  bool parallel = false;
  app.add_flag("--parallel", parallel, "Use the OpenMP kernels");

  std::string file;
  double tol = kPlanarityTolerance;
  auto* check = app.add_subcommand("check", "Validate an input document");
  check->add_option("file", file, "Input document")->required();
  check->add_option("--tol", tol, "Planarity tolerance relative to the bounding-box diagonal");

  auto* analyze = app.add_subcommand("analyze", "Report rank, dof and independent faces");
  analyze->add_option("file", file, "Input document")->required();

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "Solve for q and build the dual");
  solve->add_option("file", file, "Input document")->required();
  solve->add_option("--method", solve_opt.method, "mpi, rref or lp")->check(CLI::IsMember({"mpi", "rref", "lp"}));
  solve->add_option("--xi", solve_opt.xi, "Comma-separated seed vector for mpi");
  solve->add_option("--zeta", solve_opt.zeta, "Comma-separated independent lengths for rref");
  solve->add_option("--lambda", solve_opt.lambda, "Comma-separated positive weights for lp");
  solve->add_option("--anchor", solve_opt.anchor, "Dual vertex pinned to the anchor point");
  solve->add_option("--anchor-point", solve_opt.anchor_point, "x,y,z of the anchor vertex");
  solve->add_option("-o,--output", solve_opt.output, "Output file (default stdout)");

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string viewer_dir;
  auto* serve = app.add_subcommand("serve", "Serve the HTTP API");
  serve->add_option("file", file, "Input document")->required();
  serve->add_option("--port", port, "Port (0 picks a free one)");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--viewer-dir", viewer_dir, "Directory with the viewer bundle");

  std::string fixture_name;
  std::string fixture_out;
  auto* fixture = app.add_subcommand("fixture", "Write a built-in fixture as an input document");
  fixture->add_option("name", fixture_name, "Fixture name")->required()->check(CLI::IsMember(fixtures::names()));
  fixture->add_option("-o,--output", fixture_out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);
  const Exec exec = parallel ? Exec::parallel : Exec::serial;

  try {
    if (*check) return cmd_check(file, tol);
    if (*analyze) return cmd_analyze(file, exec);
    if (*solve) return cmd_solve(file, solve_opt, exec);
    if (*serve) return cmd_serve(file, host, port, viewer_dir, exec);
    if (*fixture) return cmd_fixture(fixture_name, fixture_out);
  } catch (const Error& e) {
    std::cerr << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << "\n";
    return exit_code(e.code());
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", "BadRequest"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InternalError"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 1;
}
