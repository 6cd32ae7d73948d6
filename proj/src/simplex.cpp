#include "polyrecip/simplex.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "polyrecip/errors.hpp"

namespace polyrecip {

namespace {

constexpr double kEps = 1e-11;

// Tableau in standard form: rows 0..m-1 are constraints, last column the
// right-hand side. The objective row is kept separately.
struct Tableau {
  Eigen::MatrixXd t;
  std::vector<int> basis;
  int iterations = 0;

  int rows() const { return static_cast<int>(t.rows()); }
  int rhs() const { return static_cast<int>(t.cols()) - 1; }

  void pivot(int row, int col, Eigen::RowVectorXd& obj) {
    t.row(row) /= t(row, col);
    for (int i = 0; i < rows(); ++i) {
      if (i != row && t(i, col) != 0.0) t.row(i) -= t(i, col) * t.row(row);
    }
    if (obj(col) != 0.0) obj -= obj(col) * t.row(row);
    basis[row] = col;
    ++iterations;
  }

  // Minimizes the objective row over columns < allowed. obj holds reduced
  // costs with obj(rhs) = -value. Returns false if unbounded.
  bool run(Eigen::RowVectorXd& obj, int allowed) {
    const double scale = std::max(1.0, allowed ? obj.head(allowed).cwiseAbs().maxCoeff() : 0.0);
    for (;;) {
      int enter = -1;
      for (int j = 0; j < allowed; ++j) {
        if (obj(j) < -kEps * scale) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = 0.0;
      for (int i = 0; i < rows(); ++i) {
        if (t(i, enter) <= kEps) continue;
        const double ratio = t(i, rhs()) / t(i, enter);
        if (leave < 0 || ratio < best - kEps || (std::abs(ratio - best) <= kEps && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter, obj);
    }
  }
};

}  // namespace

LpSolution minimize_free(const Eigen::VectorXd& c, const Eigen::MatrixXd& g, const Eigen::VectorXd& h) {
  const int m = static_cast<int>(g.rows());
  const int n = static_cast<int>(g.cols());
  if (c.size() != n || h.size() != m) throw std::invalid_argument("minimize_free: dimension mismatch");

  // Columns: x+ (n), x- (n), surplus (m), artificial (m), rhs.
  const int structural = 2 * n + m;
  Tableau tab;
  tab.t = Eigen::MatrixXd::Zero(m, structural + m + 1);
  tab.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    const double s = h(i) < 0 ? -1.0 : 1.0;
    tab.t.row(i).segment(0, n) = s * g.row(i);
    tab.t.row(i).segment(n, n) = -s * g.row(i);
    tab.t(i, 2 * n + i) = -s;
    tab.t(i, structural + i) = 1.0;
    tab.t(i, tab.rhs()) = s * h(i);
    tab.basis[i] = structural + i;
  }

  // Phase I: minimize the sum of artificials.
  Eigen::RowVectorXd obj = Eigen::RowVectorXd::Zero(tab.t.cols());
  obj.segment(structural, m).setOnes();
  for (int i = 0; i < m; ++i) obj -= tab.t.row(i);
  tab.run(obj, structural + m);
  const double infeasibility = -obj(tab.rhs());
  const double h_scale = std::max(1.0, m ? h.cwiseAbs().maxCoeff() : 0.0);
  if (infeasibility > 1e-9 * h_scale) {
    throw Error(ErrorCode::Infeasible, "no point satisfies the constraints (phase I optimum " +
                                           std::to_string(infeasibility) + ")");
  }

  // Drive remaining artificials out of the basis; drop redundant rows.
  std::vector<int> keep;
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] >= structural) {
      int col = -1;
      for (int j = 0; j < structural; ++j) {
        if (std::abs(tab.t(i, j)) > 1e-9) {
          col = j;
          break;
        }
      }
      if (col < 0) continue;
      tab.pivot(i, col, obj);
    }
    keep.push_back(i);
  }
  if (static_cast<int>(keep.size()) < m) {
    Tableau reduced;
    reduced.t.resize(keep.size(), tab.t.cols());
    for (std::size_t k = 0; k < keep.size(); ++k) {
      reduced.t.row(k) = tab.t.row(keep[k]);
      reduced.basis.push_back(tab.basis[keep[k]]);
    }
    reduced.iterations = tab.iterations;
    tab = std::move(reduced);
  }

  // Phase II over the structural columns.
  obj.setZero();
  obj.segment(0, n) = c.transpose();
  obj.segment(n, n) = -c.transpose();
  for (int i = 0; i < tab.rows(); ++i) {
    const int b = tab.basis[i];
    if (obj(b) != 0.0) obj -= obj(b) * tab.t.row(i);
  }
  if (!tab.run(obj, structural)) throw std::domain_error("minimize_free: objective unbounded below");

  LpSolution out;
  Eigen::VectorXd z = Eigen::VectorXd::Zero(structural);
  for (int i = 0; i < tab.rows(); ++i) {
    if (tab.basis[i] < structural) z(tab.basis[i]) = tab.t(i, tab.rhs());
  }
  out.x = z.head(n) - z.segment(n, n);
  out.objective = c.dot(out.x);
  out.iterations = tab.iterations;
  return out;
}

}  // namespace polyrecip
