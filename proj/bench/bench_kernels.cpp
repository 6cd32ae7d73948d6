// Serial reference vs OpenMP kernels on box-grid equilibrium matrices.

#include <benchmark/benchmark.h>

#include <map>
#include <vector>

#include "polyrecip/dual.hpp"
#include "polyrecip/equilibrium.hpp"
#include "polyrecip/fixtures.hpp"
#include "polyrecip/kernels.hpp"
#include "polyrecip/linalg.hpp"
#include "polyrecip/solvers.hpp"

using namespace polyrecip;

namespace {

struct Grid {
  CellComplex complex;
  IncidenceSet inc;
  EquilibriumSystem sys;
};

const Grid& grid(int n) {
  static std::map<int, Grid> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<double> xs;
    for (int i = 0; i <= n; ++i) xs.push_back(i + 0.1 * (i % 3));
    CellComplex c = fixtures::box_grid(xs, xs, xs);
    IncidenceSet inc = build_incidence(c);
    EquilibriumSystem sys = EquilibriumSystem::assemble(c, inc);
    it = cache.emplace(n, Grid{std::move(c), std::move(inc), std::move(sys)}).first;
  }
  return it->second;
}

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state, const Grid& g) {
  state.SetLabel(std::string(to_string(exec_of(state))) + " A " + std::to_string(g.sys.matrix().rows()) + "x" +
                 std::to_string(g.sys.matrix().cols()));
}

void bm_gauss_jordan(benchmark::State& state) {
  const Grid& g = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Eigen::MatrixXd m = g.sys.matrix();
    benchmark::DoNotOptimize(kernels::gauss_jordan(m, kPivotTolerance, exec_of(state)));
  }
  label(state, g);
}

void bm_multiply(benchmark::State& state) {
  const Grid& g = grid(static_cast<int>(state.range(0)));
  const Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(g.sys.matrix().cols(), -1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply(g.sys.matrix(), x, exec_of(state)));
  label(state, g);
}

void bm_verify(benchmark::State& state) {
  const Grid& g = grid(static_cast<int>(state.range(0)));
  const Eigen::VectorXd q = solve_mpi(g.sys, Eigen::VectorXd::Ones(g.sys.face_count())).q;
  const DualDiagram d = build_dual_algebraic(g.complex, g.inc, q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_reciprocity(g.complex, d, kReciprocityTolerance, exec_of(state)));
  }
  label(state, g);
}

}  // namespace

BENCHMARK(bm_gauss_jordan)->ArgsProduct({{3, 5, 7}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_multiply)->ArgsProduct({{5, 8}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_verify)->ArgsProduct({{5, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
