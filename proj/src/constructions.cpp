#include "cnnd/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "cnnd/errors.hpp"
#include "cnnd/spline.hpp"

namespace cnnd {

namespace {

Expr X() { return Expr::variable(Var::X); }
Expr Y() { return Expr::variable(Var::Y); }
Expr lit(double v) { return Expr::literal(v); }

Vec4 curve_derivative(const CurveExprs& c, double t) {
  Vec4 v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = eval_curve_jet(c[i], t).dx;
  return v;
}

}  // namespace

CurveExprs parse_curve(const std::array<std::string, 4>& src) {
  CurveExprs c;
  for (std::size_t i = 0; i < 4; ++i) c[i] = parse(src[i], ExprContext::Curve);
  return c;
}

SurfaceDef translation_surface(const CurveExprs& alpha, const CurveExprs& delta, const Vec4& Z) {
  SurfaceDef s;
  s.kind = SurfaceKind::Translation;
  for (std::size_t i = 0; i < 4; ++i)
    s.psi[i] = substitute(alpha[i], Var::T, X()) + substitute(delta[i], Var::T, Y());
  s.Z = Z;
  s.alpha = alpha;
  s.delta = delta;
  return s;
}

TranslationDiagnostics translation_diagnostics(const SurfaceDef& s, const std::vector<double>& xs,
                                               const std::vector<double>& ys, double tol) {
  if (!s.alpha || !s.delta) throw Error("translation diagnostics need a translation surface");
  TranslationDiagnostics d;
  for (double x : xs) {
    const Vec4 a = curve_derivative(*s.alpha, x);
    d.max_alpha_e1 = std::max(d.max_alpha_e1, std::abs(a[0]));
    for (double y : ys) d.max_alpha_delta = std::max(d.max_alpha_delta, std::abs(mink_dot(a, curve_derivative(*s.delta, y))));
  }
  for (double y : ys) d.max_delta_e1 = std::max(d.max_delta_e1, std::abs(curve_derivative(*s.delta, y)[0]));
  d.curves_orthogonal = d.max_alpha_delta <= tol;
  d.delta_perp_e1 = d.max_delta_e1 <= tol;
  d.alpha_perp_e1 = d.max_alpha_e1 <= tol;
  return d;
}

bool translation_cnnd_criterion(const SurfaceDef& s, double x, double tol) {
  if (!s.alpha) throw Error("translation criterion needs a translation surface");
  const Vec4 a = curve_derivative(*s.alpha, x);
  return std::abs(a[0] * a[0] - mink_dot(a, a)) <= tol;
}

SurfaceDef graph_surface(const Expr& f, const Expr& g, const Vec4& Z) {
  SurfaceDef s;
  s.kind = SurfaceKind::Graph;
  s.psi = {X(), Y(), f, g};
  s.Z = Z;
  return s;
}

const char* to_string(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::Holds: return "Holds";
    case CriterionStatus::HoldsDegenerate: return "HoldsDegenerate";
    case CriterionStatus::Fails: return "Fails";
  }
  return "?";
}

GraphCriterion graph_cnnd_criterion(const SurfaceDef& s, double x, double y, double tol) {
  const bool e1 = s.Z == Vec4{1, 0, 0, 0};
  const bool e2 = s.Z == Vec4{0, 1, 0, 0};
  if (!e1 && !e2) throw Error("graph criterion is stated for Z = e1 or Z = e2");
  const LocalGeometry g = local_geometry(s, x, y);
  const double d = g.I.det;
  const double target = e1 ? g.I.G : g.I.E;
  GraphCriterion c;
  c.residual = target - d;
  c.z_top = g.ambient(g.tangential(s.Z));
  const bool holds = std::abs(c.residual) <= tol * std::max({1.0, std::abs(d), std::abs(target)});
  if (!holds)
    c.status = CriterionStatus::Fails;
  else if (causal_class(s.Z - c.z_top, tol, kTolZero) == CausalClass::Zero)
    c.status = CriterionStatus::HoldsDegenerate;
  else
    c.status = CriterionStatus::Holds;
  return c;
}

double pde_residual(double fx, double fy, double gx, double gy) {
  return (1.0 + fy * fy) * gx * gx - 2.0 * fx * fy * gx * gy - (1.0 - gy * gy) * fx * fx;
}

double pde_residual(const Expr& f, const Expr& g, double x, double y) {
  const Jet2 fj = eval_jet(f, x, y), gj = eval_jet(g, x, y);
  return pde_residual(fj.dx, fj.dy, gj.dx, gj.dy);
}

SplitDerivatives split_ops(const Expr& f, const Expr& g, double x, double y) {
  const Jet2 fj = eval_jet(f, x, y), gj = eval_jet(g, x, y);
  return {{0.5 * (fj.dx + gj.dy), 0.5 * (gj.dx + fj.dy)}, {0.5 * (fj.dx - gj.dy), 0.5 * (gj.dx - fj.dy)}};
}

std::pair<Expr, Expr> family1(const Expr& alpha, double k) {
  const Expr a = substitute(alpha, Var::T, X() + Y());
  return {(a + lit(k)) / lit(2.0), (a - lit(k)) / lit(2.0)};
}

namespace {

// 8-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 8> kGlNodes{-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                         -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                         0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGlWeights{0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                           0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                           0.2223810344533745, 0.1012285362903763};

constexpr double kKnotsPerUnit = 256.0;

double gauss_legendre(const Expr& c, double lo, double hi) {
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  double s = 0.0;
  for (std::size_t i = 0; i < kGlNodes.size(); ++i) s += kGlWeights[i] * eval_curve(c, mid + half * kGlNodes[i]);
  return half * s;
}

// Antiderivative of c vanishing at lo, tabulated on [lo, hi].
std::shared_ptr<const CubicSpline> tabulate_integral(const Expr& c, double lo, double hi) {
  const int n = std::max(4, static_cast<int>(std::ceil((hi - lo) * kKnotsPerUnit)));
  const double h = (hi - lo) / n;
  std::vector<double> values(n + 1, 0.0);
  for (int i = 0; i < n; ++i) values[i + 1] = values[i] + gauss_legendre(c, lo + i * h, lo + (i + 1) * h);
  return std::make_shared<const CubicSpline>(lo, hi, std::move(values), eval_curve(c, lo), eval_curve(c, hi));
}

}  // namespace

Family2 family2(const Expr& alpha, const Expr& c, double k, const Rect& domain, int n) {
  const double lo = domain.x0 + domain.y0, hi = domain.x1 + domain.y1;
  constexpr int kChecks = 1024;
  double prev = 0.0;
  for (int i = 0; i <= kChecks; ++i) {
    const double s = lo + (hi - lo) * i / kChecks;
    const double v = eval_curve(alpha, s);
    // A sign change between samples hides a root the grid missed.
    if (std::abs(v) < 1e-8 || (i > 0 && (v > 0) != (prev > 0)))
      throw AlphaVanishes("alpha vanishes near s = " + shortest_repr(s));
    prev = v;
  }

  const Expr S = X() + Y();
  const Expr a = substitute(alpha, Var::T, S);
  Family2 out;
  Expr C;
  bool c_zero = false;
  if (auto poly = as_polynomial(c, Var::T)) {
    std::vector<double> anti(poly->size() + 1, 0.0);
    for (std::size_t i = 0; i < poly->size(); ++i) anti[i + 1] = (*poly)[i] / static_cast<double>(i + 1);
    C = polynomial_expr(anti, S);
    out.symbolic_integral = true;
    c_zero = std::all_of(poly->begin(), poly->end(), [](double v) { return v == 0.0; });
  } else {
    C = Expr::table(tabulate_integral(c, lo, hi), S);
  }
  // Numerator a^2 + rest for f and a^2 - rest for g; zero terms are left out
  // so the generated source stays readable.
  Expr rest = X() * X() - Y() * Y();
  if (!c_zero) rest = rest + C;
  if (k != 0.0) rest = rest + lit(k) * (X() - Y());
  const Expr den = lit(2.0) * a;
  out.f = (Expr::power(a, 2) + rest) / den;
  out.g = (Expr::power(a, 2) - rest) / den;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double x = n == 1 ? domain.x0 : domain.x0 + (domain.x1 - domain.x0) * i / (n - 1);
      const double y = n == 1 ? domain.y0 : domain.y0 + (domain.y1 - domain.y0) * j / (n - 1);
      out.max_residual = std::max(out.max_residual, std::abs(pde_residual(out.f, out.g, x, y)));
    }
  return out;
}

SurfaceDef ruled_surface(const CurveExprs& alpha, const Vec4& Z0, const Vec4& Z) {
  CurveExprs d;
  for (std::size_t i = 0; i < 4; ++i) d[i] = lit(Z0[i]);
  return ruled_surface(alpha, d, Z);
}

SurfaceDef ruled_surface(const CurveExprs& alpha, const CurveExprs& direction, const Vec4& Z) {
  SurfaceDef s;
  s.kind = SurfaceKind::Ruled;
  for (std::size_t i = 0; i < 4; ++i)
    s.psi[i] = substitute(alpha[i], Var::T, Y()) + X() * substitute(direction[i], Var::T, Y());
  s.Z = Z;
  return s;
}

}  // namespace cnnd
