#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polyrecip/fixtures.hpp"
#include "polyrecip/solvers.hpp"
#include "support.hpp"

using namespace polyrecip;

namespace {

EquilibriumSystem system_of(const CellComplex& cx) { return EquilibriumSystem::assemble(cx, build_incidence(cx)); }

double scaled_residual(const EquilibriumSystem& sys, const Eigen::VectorXd& q) {
  return sys.residual(q) / std::max(1.0, q.cwiseAbs().maxCoeff());
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::MalformedDocument;
}

}  // namespace

TEST_SUITE("solvers") {
  TEST_CASE("mpi on the tetra gives equal lengths") {
    const EquilibriumSystem sys = system_of(fixtures::tetra());
    const DensityVector d = solve_mpi(sys, Eigen::VectorXd::Ones(6));
    CHECK_FALSE(d.zero_solution);
    for (int i = 0; i < 6; ++i) CHECK(d.q(i) == doctest::Approx(d.q(0)));
    const Eigen::MatrixXd basis = oracle::nullspace(sys.matrix());
    REQUIRE(basis.cols() == 1);
    CHECK(oracle::off_span(basis, d.q) <= 1e-10);
    CHECK(scaled_residual(sys, d.q) <= 1e-8);
  }

  TEST_CASE("mpi fixes nullspace vectors and kills row-space ones") {
    const EquilibriumSystem sys = system_of(fixtures::named("stellar-glued-boxes"));
    const Eigen::MatrixXd n = oracle::nullspace(sys.matrix());
    Eigen::VectorXd xi = n * Eigen::VectorXd::LinSpaced(n.cols(), 1.0, 2.0);
    CHECK((solve_mpi(sys, xi).q - xi).cwiseAbs().maxCoeff() <= 1e-9);
    const Eigen::VectorXd row_space = sys.matrix().transpose() * Eigen::VectorXd::Ones(sys.matrix().rows());
    const DensityVector d = solve_mpi(sys, row_space);
    CHECK(d.zero_solution);
    CHECK(d.q.isZero());
  }

  TEST_CASE("a symmetric primal gives a symmetric solution") {
    const EquilibriumSystem sys = system_of(fixtures::named("box-grid-2x2x1"));
    const DensityVector d = solve_mpi(sys, Eigen::VectorXd::Ones(sys.face_count()));
    for (int i = 0; i < d.q.size(); ++i) CHECK(d.q(i) == doctest::Approx(d.q(0)));
  }

  TEST_CASE("rref on the tetra is homogeneous") {
    const EquilibriumSystem sys = system_of(fixtures::tetra());
    const DensityVector one = solve_rref(sys, Eigen::VectorXd::Constant(1, 1.0));
    const DensityVector two = solve_rref(sys, Eigen::VectorXd::Constant(1, 2.0));
    CHECK((two.q - 2.0 * one.q).cwiseAbs().maxCoeff() <= 1e-12);
    const Eigen::MatrixXd basis = oracle::nullspace(sys.matrix());
    CHECK(oracle::off_span(basis, two.q) <= 1e-8 * two.q.norm());
    for (int i = 0; i < 6; ++i) CHECK(two.q(i) == doctest::Approx(2.0));
  }

  TEST_CASE("rref sets the independent faces to zeta") {
    const EquilibriumSystem sys = system_of(fixtures::named("box-grid-4x4x3"));
    REQUIRE(sys.dof() == 8);
    const Eigen::VectorXd zeta = Eigen::VectorXd::LinSpaced(8, -2.0, 3.0);
    const DensityVector d = solve_rref(sys, zeta);
    for (int k = 0; k < 8; ++k) CHECK(d.q(sys.independent_faces()[k]) == doctest::Approx(zeta(k)));
    CHECK(scaled_residual(sys, d.q) <= 1e-8);
  }

  TEST_CASE("zero zeta warns") {
    const EquilibriumSystem sys = system_of(fixtures::tetra());
    const DensityVector d = solve_rref(sys, Eigen::VectorXd::Zero(1));
    CHECK(d.zero_solution);
    CHECK(d.q.isZero());
  }

  TEST_CASE("argument errors") {
    const EquilibriumSystem sys = system_of(fixtures::tetra());
    CHECK(code_of([&] { solve_rref(sys, Eigen::VectorXd::Ones(2)); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([&] { solve_mpi(sys, Eigen::VectorXd::Ones(5)); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([&] { solve_lp(sys, Eigen::VectorXd::Ones(7)); }) == ErrorCode::DimensionMismatch);
    Eigen::VectorXd bad = Eigen::VectorXd::Ones(6);
    bad(2) = 0.0;
    CHECK_THROWS_AS(solve_lp(sys, bad), std::invalid_argument);
    const EquilibriumSystem rigid = system_of(fixtures::glued_boxes().with_stress(0, Direction::inward));
    CHECK(code_of([&] { solve_mpi(rigid, Eigen::VectorXd::Ones(rigid.face_count())); }) == ErrorCode::ZeroDof);
    CHECK(code_of([&] { solve_rref(rigid, Eigen::VectorXd()); }) == ErrorCode::ZeroDof);
    CHECK(code_of([&] { solve_lp(rigid, Eigen::VectorXd::Ones(rigid.face_count())); }) == ErrorCode::ZeroDof);
  }

  TEST_CASE("lp on the tetra gives all ones") {
    const EquilibriumSystem sys = system_of(fixtures::tetra());
    const DensityVector d = solve_lp(sys, Eigen::VectorXd::Ones(6));
    CHECK((d.q - Eigen::VectorXd::Ones(6)).cwiseAbs().maxCoeff() <= 1e-8);
  }

  TEST_CASE("lp matches vertex enumeration over the nullspace") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> weight(0.5, 2.0);
    auto all = support::generated(59, 2);
    for (auto& n : support::solvable_named()) {
      if (n.name != "box-grid-4x4x3" && n.name != "subdivided-tetrahedron-interior") all.push_back(std::move(n));
    }
    for (const auto& item : all) {
      CAPTURE(item.name);
      const EquilibriumSystem sys = system_of(item.complex);
      Eigen::VectorXd lambda(sys.face_count());
      for (int i = 0; i < lambda.size(); ++i) lambda(i) = weight(rng);
      const Eigen::MatrixXd n = oracle::nullspace(sys.matrix());
      const oracle::LpOptimum expect =
          oracle::lp_by_vertices(n.transpose() * lambda, n, Eigen::VectorXd::Ones(n.rows()));
      REQUIRE(expect.feasible);
      const DensityVector d = solve_lp(sys, lambda);
      CHECK(lambda.dot(d.q) == doctest::Approx(expect.value).epsilon(1e-8));
      CHECK(d.q.minCoeff() >= 1.0 - 1e-9);
      CHECK(scaled_residual(sys, d.q) <= 1e-8);
    }
  }

  TEST_CASE("lp reports infeasibility when no positive solution exists") {
    const EquilibriumSystem sys = system_of(fixtures::named("subdivided-tetrahedron-interior"));
    const Eigen::MatrixXd n = oracle::nullspace(sys.matrix());
    const oracle::LpOptimum feasible = oracle::lp_by_vertices(Eigen::VectorXd::Zero(n.cols()), n,
                                                              Eigen::VectorXd::Ones(n.rows()));
    CHECK_FALSE(feasible.feasible);
    CHECK(code_of([&] { solve_lp(sys, Eigen::VectorXd::Ones(sys.face_count())); }) == ErrorCode::Infeasible);
  }

  TEST_CASE("every solver's output is a fixed point of mpi and lies in the nullspace") {
    auto all = support::generated(61, 2);
    for (auto& n : support::solvable_named()) all.push_back(std::move(n));
    std::mt19937 rng(67);
    std::normal_distribution<double> gauss;
    for (const auto& item : all) {
      CAPTURE(item.name);
      const EquilibriumSystem sys = system_of(item.complex);
      const Eigen::MatrixXd basis = oracle::nullspace(sys.matrix());
      Eigen::VectorXd xi(sys.face_count()), zeta(sys.dof());
      for (int i = 0; i < xi.size(); ++i) xi(i) = gauss(rng);
      for (int i = 0; i < zeta.size(); ++i) zeta(i) = gauss(rng);
      std::vector<Eigen::VectorXd> outputs{solve_mpi(sys, xi).q, solve_rref(sys, zeta).q};
      try {
        outputs.push_back(solve_lp(sys, Eigen::VectorXd::Ones(sys.face_count())).q);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Infeasible);
      }
      for (const auto& q : outputs) {
        CHECK(scaled_residual(sys, q) <= 1e-8);
        CHECK(oracle::off_span(basis, q) <= 1e-8 * q.norm());
        CHECK((solve_mpi(sys, q).q - q).cwiseAbs().maxCoeff() <= 1e-9 * std::max(1.0, q.cwiseAbs().maxCoeff()));
      }
    }
  }

  TEST_CASE("pseudoinverse of the tetra matrix") {
    const EquilibriumSystem sys = system_of(fixtures::tetra());
    const Eigen::MatrixXd& a = sys.matrix();
    CHECK((a * sys.pinv() * a - a).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK((sys.pinv() - oracle::pinv(a)).cwiseAbs().maxCoeff() <= 1e-9);
  }
}
