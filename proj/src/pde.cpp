#include "cnnd/pde.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseQR>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "cnnd/constructions.hpp"
#include "cnnd/errors.hpp"

namespace cnnd {

namespace {

struct Stencil {
  int idx[3];
  double w[3];
  int n;
};

Stencil stencil(int i, int n, double h) {
  const double c = 1.0 / (2.0 * h);
  if (i == 0) return {{0, 1, 2}, {-3.0 * c, 4.0 * c, -c}, 3};
  if (i == n - 1) return {{n - 1, n - 2, n - 3}, {3.0 * c, -4.0 * c, c}, 3};
  return {{i - 1, i + 1, 0}, {-c, c, 0.0}, 2};
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

std::string num(double v) { return std::isnan(v) ? "nan" : shortest_repr(v); }

}  // namespace

GraphPdeSystem::GraphPdeSystem(const GraphPDEProblem& p)
    : nx_(p.nx), ny_(p.ny), x0_(p.x0), y0_(p.y0) {
  if (nx_ < 3 || ny_ < 3) throw Error("pde grid needs at least 3 x 3 nodes");
  if (!(p.x1 > p.x0) || !(p.y1 > p.y0)) throw Error("pde domain is empty");
  hx_ = (p.x1 - p.x0) / (nx_ - 1);
  hy_ = (p.y1 - p.y0) / (ny_ - 1);
  fx_.resize(static_cast<std::size_t>(nx_) * ny_);
  fy_.resize(fx_.size());
  for (int i = 0; i < nx_; ++i)
    for (int j = 0; j < ny_; ++j) {
      const Jet2 fj = eval_jet(p.f, x0_ + i * hx_, y0_ + j * hy_);
      fx_[i * ny_ + j] = fj.dx;
      fy_[i * ny_ + j] = fj.dy;
    }
}

double GraphPdeSystem::gx(const std::vector<double>& g, int i, int j) const {
  const Stencil s = stencil(i, nx_, hx_);
  double v = 0.0;
  for (int k = 0; k < s.n; ++k) v += s.w[k] * g[s.idx[k] * ny_ + j];
  return v;
}

double GraphPdeSystem::gy(const std::vector<double>& g, int i, int j) const {
  const Stencil s = stencil(j, ny_, hy_);
  double v = 0.0;
  for (int k = 0; k < s.n; ++k) v += s.w[k] * g[i * ny_ + s.idx[k]];
  return v;
}

std::vector<double> GraphPdeSystem::node_residuals(const std::vector<double>& g, bool parallel) const {
  std::vector<double> r(g.size());
  const int n = nx_ * ny_;
#pragma omp parallel for schedule(static) if (parallel)
  for (int k = 0; k < n; ++k) {
    const int i = k / ny_, j = k % ny_;
    r[k] = pde_residual(fx_[k], fy_[k], gx(g, i, j), gy(g, i, j));
  }
  return r;
}

std::vector<double> GraphPdeSystem::residuals(const std::vector<double>& g, bool parallel) const {
  std::vector<double> r(static_cast<std::size_t>(unknowns()));
  const int n = unknowns();
#pragma omp parallel for schedule(static) if (parallel)
  for (int k = 0; k < n; ++k) {
    const int node = k + ny_;
    const int i = node / ny_, j = node % ny_;
    r[k] = pde_residual(fx_[node], fy_[node], gx(g, i, j), gy(g, i, j));
  }
  return r;
}

std::vector<Triplet> GraphPdeSystem::jacobian(const std::vector<double>& g, bool parallel) const {
  // At most three x-stencil and three y-stencil entries per row; unused
  // slots stay with col = -1 and are dropped afterwards.
  constexpr int kSlots = 6;
  const int n = unknowns();
  std::vector<Triplet> slots(static_cast<std::size_t>(n) * kSlots, Triplet{0, -1, 0.0});
#pragma omp parallel for schedule(static) if (parallel)
  for (int k = 0; k < n; ++k) {
    const int node = k + ny_;
    const int i = node / ny_, j = node % ny_;
    const double fx = fx_[node], fy = fy_[node];
    const double gxv = gx(g, i, j), gyv = gy(g, i, j);
    const double dR_dgx = 2.0 * (1.0 + fy * fy) * gxv - 2.0 * fx * fy * gyv;
    const double dR_dgy = -2.0 * fx * fy * gxv + 2.0 * gyv * fx * fx;
    Triplet* out = &slots[static_cast<std::size_t>(k) * kSlots];
    const Stencil sx = stencil(i, nx_, hx_);
    for (int m = 0; m < sx.n; ++m)
      if (sx.idx[m] >= 1) out[m] = {k, (sx.idx[m] - 1) * ny_ + j, dR_dgx * sx.w[m]};
    const Stencil sy = stencil(j, ny_, hy_);
    for (int m = 0; m < sy.n; ++m) out[3 + m] = {k, (i - 1) * ny_ + sy.idx[m], dR_dgy * sy.w[m]};
  }
  std::vector<Triplet> t;
  t.reserve(slots.size());
  for (const auto& s : slots)
    if (s.col >= 0) t.push_back(s);
  return t;
}

std::vector<double> GraphPdeSystem::initial_guess(const std::vector<double>& boundary, InitialGuess kind) const {
  if (static_cast<int>(boundary.size()) != ny_) throw Error("boundary length must equal ny");
  std::vector<double> g(static_cast<std::size_t>(nx_) * ny_);
  for (int j = 0; j < ny_; ++j) g[j] = boundary[j];
  for (int i = 1; i < nx_; ++i)
    for (int j = 0; j < ny_; ++j) {
      const int prev = (i - 1) * ny_ + j;
      if (kind == InitialGuess::Constant) {
        g[i * ny_ + j] = g[prev];
        continue;
      }
      const double fx = fx_[prev], fy = fy_[prev], gyv = gy(g, i - 1, j);
      const double disc = std::max(0.0, 1.0 + fy * fy - gyv * gyv);
      const double slope = fx * (fy * gyv + std::sqrt(disc)) / (1.0 + fy * fy);
      g[i * ny_ + j] = g[prev] + hx_ * slope;
    }
  return g;
}

std::string PdeSolution::csv() const {
  std::ostringstream os;
  os << "x,y,g,residual\n";
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      const std::size_t k = static_cast<std::size_t>(i) * ny + j;
      os << num(xs[i]) << ',' << num(ys[j]) << ',' << num(g[k]) << ',' << num(residual[k]) << '\n';
    }
  return os.str();
}

std::string PdeSolution::log() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < history.size(); ++k) os << "iter " << k << " max_residual " << num(history[k]) << '\n';
  os << "iterations " << iterations << '\n';
  os << "max_residual " << num(max_residual) << '\n';
  os << "success " << (success ? "true" : "false") << '\n';
  return os.str();
}

PdeSolution pde_solve(const GraphPDEProblem& p) {
  const GraphPdeSystem sys(p);
  const int n = sys.unknowns();
  const int ny = sys.ny();
  std::vector<double> g = sys.initial_guess(p.boundary, p.init);
  std::vector<double> r = sys.residuals(g, p.parallel);

  PdeSolution sol;
  sol.nx = sys.nx();
  sol.ny = ny;
  for (int i = 0; i < sol.nx; ++i) sol.xs.push_back(p.x0 + i * sys.hx());
  for (int j = 0; j < ny; ++j) sol.ys.push_back(p.y0 + j * sys.hy());
  sol.history.push_back(max_abs(r));

  using SpMat = Eigen::SparseMatrix<double>;
  while (sol.history.back() > p.tol_resid && sol.iterations < p.max_iter) {
    const auto trip = sys.jacobian(g, p.parallel);
    std::vector<Eigen::Triplet<double>> et;
    et.reserve(trip.size());
    for (const auto& t : trip) et.emplace_back(t.row, t.col, t.value);
    SpMat J(n, n);
    J.setFromTriplets(et.begin(), et.end());
    J.makeCompressed();

    Eigen::SparseQR<SpMat, Eigen::COLAMDOrdering<int>> qr;
    qr.compute(J);
    if (qr.info() != Eigen::Success) throw Error("sparse QR factorization failed");
    if (qr.rank() < n) {
      const int col = qr.colsPermutation().indices()(qr.rank());
      throw SingularJacobian(static_cast<std::size_t>(col / ny + 1), static_cast<std::size_t>(col % ny));
    }
    Eigen::VectorXd rhs(n);
    for (int k = 0; k < n; ++k) rhs(k) = -r[k];
    const Eigen::VectorXd step = qr.solve(rhs);

    const double base = norm2(r);
    double t = p.damping;
    bool accepted = false;
    std::vector<double> trial(g.size());
    for (int halvings = 0; halvings < 40 && !accepted; ++halvings, t *= 0.5) {
      trial = g;
      for (int k = 0; k < n; ++k) trial[ny + k] += t * step(k);
      std::vector<double> rt = sys.residuals(trial, p.parallel);
      if (norm2(rt) < base) {
        g.swap(trial);
        r.swap(rt);
        accepted = true;
      }
    }
    if (!accepted) throw Diverged("line search could not reduce the residual at iteration " + std::to_string(sol.iterations));
    ++sol.iterations;
    sol.history.push_back(max_abs(r));
  }

  sol.g = g;
  sol.residual = sys.node_residuals(g, p.parallel);
  sol.max_residual = sol.history.back();
  sol.success = sol.max_residual <= p.tol_resid;
  return sol;
}

std::vector<double> residual_grid(const Expr& f, const Expr& g, const std::vector<GridPoint>& points, bool parallel) {
  std::vector<double> out(points.size());
  const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (long k = 0; k < n; ++k) out[k] = pde_residual(f, g, points[k].x, points[k].y);
  return out;
}

}  // namespace cnnd
