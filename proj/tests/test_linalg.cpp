#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polyrecip/errors.hpp"
#include "polyrecip/linalg.hpp"
#include "polyrecip/simplex.hpp"

using namespace polyrecip;

namespace {

Eigen::MatrixXd random_rank(std::mt19937& rng, int rows, int cols, int rank) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd l(rows, rank), r(rank, cols);
  for (int i = 0; i < l.size(); ++i) l.data()[i] = g(rng);
  for (int i = 0; i < r.size(); ++i) r.data()[i] = g(rng);
  return l * r;
}

bool is_rref(const Rref& red) {
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    const int p = red.pivots[i];
    for (int r = 0; r < red.r.rows(); ++r) {
      if (red.r(r, p) != (r == static_cast<int>(i) ? 1.0 : 0.0)) return false;
    }
    for (int c = 0; c < p; ++c) {
      if (std::abs(red.r(i, c)) > 1e-12) return false;
    }
    if (i > 0 && red.pivots[i - 1] >= p) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("pseudoinverse of identity and zero") {
    CHECK(pseudoinverse(Eigen::MatrixXd::Identity(4, 4)).isApprox(Eigen::MatrixXd::Identity(4, 4)));
    const Eigen::MatrixXd z = pseudoinverse(Eigen::MatrixXd::Zero(3, 5));
    CHECK(z.rows() == 5);
    CHECK(z.cols() == 3);
    CHECK(z.isZero());
  }

  TEST_CASE("pseudoinverse satisfies the Penrose equations and matches an independent one") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const int rows = 3 + trial % 7, cols = 2 + trial % 5;
      const int k = 1 + trial % std::min(rows, cols);
      const Eigen::MatrixXd a = random_rank(rng, rows, cols, k);
      const Eigen::MatrixXd m = pseudoinverse(a);
      const double s = std::max(1.0, a.cwiseAbs().maxCoeff());
      CHECK((a * m * a - a).cwiseAbs().maxCoeff() <= 1e-9 * s);
      CHECK((m * a * m - m).cwiseAbs().maxCoeff() <= 1e-9 * std::max(1.0, m.cwiseAbs().maxCoeff()));
      CHECK((m - oracle::pinv(a)).cwiseAbs().maxCoeff() <= 1e-8 * std::max(1.0, m.cwiseAbs().maxCoeff()));
    }
  }

  TEST_CASE("spectrum rank on random low-rank matrices") {
    std::mt19937 rng(5);
    for (int k = 1; k <= 6; ++k) {
      const Eigen::MatrixXd a = random_rank(rng, 12, 8, k);
      const Spectrum s = spectrum(a);
      CHECK(s.rank == k);
      CHECK(s.rank == oracle::rank(a));
      CHECK(s.last_kept > s.cutoff);
      CHECK(s.first_dropped <= s.cutoff);
    }
  }

  TEST_CASE("rref of identity") {
    const Rref red = rref(Eigen::MatrixXd::Identity(5, 5));
    CHECK(red.r == Eigen::MatrixXd::Identity(5, 5));
    CHECK(red.pivots == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(red.free_columns.empty());
  }

  TEST_CASE("rref of random rank-k matrices") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
      const int rows = 4 + trial % 9, cols = 3 + trial % 8;
      const int k = 1 + trial % std::min(rows, cols);
      const Eigen::MatrixXd a = random_rank(rng, rows, cols, k);
      const Rref red = rref(a);
      CAPTURE(trial);
      CHECK(static_cast<int>(red.pivots.size()) == oracle::rank(a));
      CHECK(is_rref(red));
      const Eigen::MatrixXd n = red.nullspace();
      CHECK(n.cols() == cols - k);
      if (n.cols() > 0) CHECK((a * n).cwiseAbs().maxCoeff() <= 1e-8 * std::max(1.0, a.cwiseAbs().maxCoeff()));
    }
  }

  TEST_CASE("rref picks the largest pivot and the first on ties") {
    Eigen::MatrixXd a(3, 2);
    a << 1, 2, -3, 1, 3, 5;
    const Rref red = rref(a);
    CHECK(red.pivots == std::vector<int>{0, 1});
    // the first of the two rows of magnitude 3 is used, so its sign fixes row 0
    Eigen::MatrixXd b(2, 2);
    b << -3, 1, 3, 1;
    Eigen::MatrixXd m = b;
    kernels::gauss_jordan(m, kPivotTolerance, Exec::serial);
    CHECK(m.isApprox(Eigen::MatrixXd::Identity(2, 2)));
  }

  TEST_CASE("columns below the tolerance are free") {
    Eigen::MatrixXd a(2, 3);
    a << 1, 1e-14, 2, 2, 2e-14, 4;
    const Rref red = rref(a);
    CHECK(red.pivots == std::vector<int>{0});
    CHECK(red.free_columns == std::vector<int>{1, 2});
  }

  TEST_CASE("serial and parallel elimination agree bitwise") {
    std::mt19937 rng(23);
    const Eigen::MatrixXd a = random_rank(rng, 60, 40, 25);
    const Rref s = rref(a, kPivotTolerance, Exec::serial);
    const Rref p = rref(a, kPivotTolerance, Exec::parallel);
    CHECK(s.pivots == p.pivots);
    CHECK(s.r == p.r);
    const Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(40, -1.0, 1.0);
    CHECK(kernels::multiply(a, x, Exec::serial) == kernels::multiply(a, x, Exec::parallel));
  }

  TEST_CASE("svd nullspace is orthonormal and annihilated") {
    std::mt19937 rng(29);
    const Eigen::MatrixXd a = random_rank(rng, 9, 7, 4);
    const Eigen::MatrixXd n = svd_nullspace(a);
    CHECK(n.cols() == 3);
    CHECK((n.transpose() * n).isApprox(Eigen::MatrixXd::Identity(3, 3)));
    CHECK((a * n).cwiseAbs().maxCoeff() <= 1e-10 * a.cwiseAbs().maxCoeff());
  }
}

TEST_SUITE("simplex") {
  TEST_CASE("one variable") {
    Eigen::MatrixXd g(2, 1);
    g << 1, 2;
    const LpSolution s = minimize_free(Eigen::VectorXd::Constant(1, 3.0), g, Eigen::VectorXd::Constant(2, 1.0));
    CHECK(s.x(0) == doctest::Approx(1.0));
    CHECK(s.objective == doctest::Approx(3.0));
  }

  TEST_CASE("negative variables") {
    // minimize x + y with x >= -2, y >= -3, x + y >= -4
    Eigen::MatrixXd g(3, 2);
    g << 1, 0, 0, 1, 1, 1;
    Eigen::VectorXd h(3);
    h << -2, -3, -4;
    const LpSolution s = minimize_free(Eigen::VectorXd::Ones(2), g, h);
    CHECK(s.objective == doctest::Approx(-4.0));
  }

  TEST_CASE("infeasible") {
    Eigen::MatrixXd g(2, 1);
    g << 1, -1;
    Eigen::VectorXd h(2);
    h << 1, 1;
    try {
      minimize_free(Eigen::VectorXd::Ones(1), g, h);
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Infeasible);
    }
  }

  TEST_CASE("unbounded") {
    Eigen::MatrixXd g(1, 1);
    g << 1;
    CHECK_THROWS_AS(minimize_free(Eigen::VectorXd::Constant(1, -1.0), g, Eigen::VectorXd::Ones(1)), std::domain_error);
  }

  TEST_CASE("degenerate vertex with redundant rows") {
    Eigen::MatrixXd g(4, 2);
    g << 1, 0, 1, 0, 0, 1, 1, 1;
    Eigen::VectorXd h(4);
    h << 1, 1, 1, 2;
    const LpSolution s = minimize_free(Eigen::VectorXd::Ones(2), g, h);
    CHECK(s.objective == doctest::Approx(2.0));
  }

  TEST_CASE("random feasible problems match vertex enumeration") {
    std::mt19937 rng(31);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> pos(0.2, 2.0);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + trial % 3, m = n + 2 + trial % 5;
      Eigen::MatrixXd g(m, n);
      for (int i = 0; i < g.size(); ++i) g.data()[i] = gauss(rng);
      Eigen::VectorXd h(m);
      for (int i = 0; i < m; ++i) h(i) = gauss(rng);
      // an objective that is a positive combination of rows keeps it bounded
      Eigen::VectorXd w(m);
      for (int i = 0; i < m; ++i) w(i) = pos(rng);
      const Eigen::VectorXd c = g.transpose() * w;
      const oracle::LpOptimum expect = oracle::lp_by_vertices(c, g, h);
      CAPTURE(trial);
      if (!expect.feasible) {
        CHECK_THROWS(minimize_free(c, g, h));
        continue;
      }
      const LpSolution got = minimize_free(c, g, h);
      CHECK(got.objective == doctest::Approx(expect.value).epsilon(1e-8));
      CHECK(((g * got.x - h).array() >= -1e-9).all());
    }
  }
}
