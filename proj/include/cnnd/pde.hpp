#pragma once

// Finite-difference least-squares solver for
//   (1+fy^2) gx^2 - 2 fx fy gx gy - (1-gy^2) fx^2 = 0
// with f given and g prescribed on the edge x = x0.
//
// Grid nodes (i, j) sit at (x0 + i*hx, y0 + j*hy), stored row-major with
// index i*ny + j. The unknowns are g at every node with i >= 1, and there is
// one residual per unknown node, so Gauss-Newton solves a square system.
// Derivatives of g use centered differences in the interior and three-point
// second-order one-sided differences on the edges.

#include <string>
#include <vector>

#include "cnnd/battery.hpp"
#include "cnnd/expr.hpp"

namespace cnnd {

enum class InitialGuess {
  /// Explicit march along x on the root branch
  /// gx = fx (fy gy + sqrt(1 + fy^2 - gy^2)) / (1 + fy^2).
  March,
  /// g(x, y) = boundary(y).
  Constant,
};

struct GraphPDEProblem {
  Expr f;
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  int nx = 21, ny = 21;
  /// g on the edge x = x0, length ny.
  std::vector<double> boundary;
  int max_iter = 50;
  /// Initial step fraction of the backtracking line search.
  double damping = 1.0;
  double tol_resid = 1e-10;
  InitialGuess init = InitialGuess::March;
  bool parallel = true;
};

struct Triplet {
  int row, col;
  double value;
};

/// Discretized residual and its Jacobian for a fixed problem.
class GraphPdeSystem {
 public:
  explicit GraphPdeSystem(const GraphPDEProblem& p);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double hx() const { return hx_; }
  double hy() const { return hy_; }
  int unknowns() const { return (nx_ - 1) * ny_; }

  /// Residual at every node (i = 0 uses the one-sided x stencil).
  std::vector<double> node_residuals(const std::vector<double>& g, bool parallel) const;
  /// Residuals of the unknown nodes, ordered like the unknowns.
  std::vector<double> residuals(const std::vector<double>& g, bool parallel) const;
  std::vector<Triplet> jacobian(const std::vector<double>& g, bool parallel) const;

  std::vector<double> initial_guess(const std::vector<double>& boundary, InitialGuess kind) const;

 private:
  double gx(const std::vector<double>& g, int i, int j) const;
  double gy(const std::vector<double>& g, int i, int j) const;

  int nx_, ny_;
  double x0_, y0_, hx_, hy_;
  std::vector<double> fx_, fy_;
};

struct PdeSolution {
  int nx = 0, ny = 0;
  std::vector<double> xs, ys;
  std::vector<double> g;         // row-major i*ny + j
  std::vector<double> residual;  // per node
  /// max |residual| over unknown nodes before each step and after the last.
  std::vector<double> history;
  int iterations = 0;
  bool success = false;
  double max_residual = 0.0;

  double at(int i, int j) const { return g[static_cast<std::size_t>(i) * ny + j]; }
  /// x,y,g,residual per node, row-major.
  std::string csv() const;
  std::string log() const;
};

/// Throws Diverged when the line search cannot reduce the residual norm and
/// SingularJacobian on rank loss. Hitting max_iter returns success = false.
PdeSolution pde_solve(const GraphPDEProblem& p);

/// pde_residual of (f, g) at each point.
std::vector<double> residual_grid(const Expr& f, const Expr& g, const std::vector<GridPoint>& points, bool parallel);

}  // namespace cnnd
