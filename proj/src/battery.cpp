#include "cnnd/battery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cnnd/errors.hpp"
#include "cnnd/geometry.hpp"

namespace cnnd {

std::vector<GridPoint> grid(double x0, double x1, int nx, double y0, double y1, int ny) {
  std::vector<GridPoint> pts;
  pts.reserve(static_cast<std::size_t>(std::max(nx, 0)) * static_cast<std::size_t>(std::max(ny, 0)));
  for (int i = 0; i < nx; ++i) {
    const double x = nx == 1 ? x0 : x0 + (x1 - x0) * i / (nx - 1);
    for (int j = 0; j < ny; ++j) {
      const double y = ny == 1 ? y0 : y0 + (y1 - y0) * j / (ny - 1);
      pts.push_back({x, y});
    }
  }
  return pts;
}

double BatteryReport::max_residual(std::size_t identity) const {
  double m = 0.0;
  for (const auto& r : residuals)
    if (!std::isnan(r[identity])) m = std::max(m, std::abs(r[identity]));
  return m;
}

double BatteryReport::max_residual() const {
  double m = 0.0;
  for (std::size_t k = 0; k < identities.size(); ++k) m = std::max(m, max_residual(k));
  return m;
}

bool BatteryReport::passed() const {
  for (const auto& r : residuals)
    for (double v : r)
      if (!std::isnan(v) && !(std::abs(v) <= tol)) return false;
  return true;
}

namespace {

const char* verdict(double v, double tol) {
  if (std::isnan(v)) return "n/a";
  return std::abs(v) <= tol ? "PASS" : "FAIL";
}

std::string num(double v) { return std::isnan(v) ? "nan" : shortest_repr(v); }

}  // namespace

std::string BatteryReport::text() const {
  std::ostringstream os;
  for (std::size_t p = 0; p < points.size(); ++p)
    for (std::size_t k = 0; k < identities.size(); ++k)
      os << num(points[p].x) << ' ' << num(points[p].y) << ' ' << identities[k] << ' ' << num(residuals[p][k]) << ' '
         << verdict(residuals[p][k], tol) << '\n';
  return os.str();
}

std::string BatteryReport::csv() const {
  std::ostringstream os;
  os << "x,y,identity,residual,pass\n";
  for (std::size_t p = 0; p < points.size(); ++p)
    for (std::size_t k = 0; k < identities.size(); ++k)
      os << num(points[p].x) << ',' << num(points[p].y) << ',' << identities[k] << ',' << num(residuals[p][k]) << ','
         << verdict(residuals[p][k], tol) << '\n';
  return os.str();
}

std::string BatteryReport::summary() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < identities.size(); ++k) {
    const double m = max_residual(k);
    os << identities[k] << " max " << num(m) << ' ' << (m <= tol ? "PASS" : "FAIL") << '\n';
  }
  for (const auto& p : degenerate) os << "skipped " << num(p.x) << ' ' << num(p.y) << " (Zperp vanishes)\n";
  return os.str();
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{
      "frame",          "shape_zperp_ztop", "lc_ztop_ztop", "lc_w_ztop",    "lc_ztop_w",
      "lc_w_w",         "alpha_ztop",       "k_gauss_a",    "k_dalpha",     "k_a_betaz",
      "kn_a_betaw",     "kn_dbeta",         "beta_relation", "h_zperp",     "h_norm_relation",
      "hstar_norm",     "hstar_norm_corrected", "minimal_flat",
  };
  return names;
}

std::vector<double> identity_residuals(const SurfaceDef& s, double x, double y) {
  const LocalGeometry g = local_geometry(s, x, y);
  const GeometryReport r = geometry_report(s, x, y);
  const CnndFrame& f = r.frame;
  const double a = f.a;
  std::vector<double> out;
  out.reserve(identity_names().size());

  const double frame_err = std::max({std::abs(mink_dot(f.Ztop, f.Ztop) - 1.0), std::abs(mink_dot(f.W, f.W) - 1.0),
                                     std::abs(mink_dot(f.Ztop, f.W)), std::abs(mink_dot(f.Zperp, f.Zperp)),
                                     std::abs(mink_dot(f.Wprime, f.Wprime)),
                                     std::abs(mink_dot(f.Zperp, f.Wprime) - 1.0),
                                     std::abs(det4(f.Ztop, f.W, f.n3(), f.n4()) - 1.0)});
  out.push_back(frame_err);
  out.push_back(g.I.norm(shape_operator(g.I, g.II, f.Zperp, f.ztop)));

  const FrameFields ff = frame_fields(s, x, y, f.orientation);
  const Connection conn = christoffel(s, x, y);
  out.push_back(g.I.norm(covariant_derivative(conn, ff.ztop, ff.ztop)));
  out.push_back(g.I.norm(covariant_derivative(conn, ff.w, ff.ztop) - a * f.w));
  out.push_back(g.I.norm(covariant_derivative(conn, ff.ztop, ff.w)));
  out.push_back(g.I.norm(covariant_derivative(conn, ff.w, ff.w) + a * f.ztop));

  const double alpha_z = mink_dot(g.II(f.ztop, f.w), f.Zperp);
  out.push_back(alpha_z);

  const double Za = directional_derivative(s, ScalarField::A, x, y, f.ztop);
  out.push_back(r.K + Za + a * a);

  const Tangent br = lie_bracket(ff.ztop, ff.w);
  const double dalpha = Za - directional_derivative(s, ScalarField::AlphaZtop, x, y, f.w) -
                        mink_dot(g.II(br, f.w), f.Zperp);
  out.push_back(r.K + dalpha);

  out.push_back(r.K - a * f.betaZ);
  out.push_back(r.KN + a * f.betaW);

  const double ZbW = directional_derivative(s, ScalarField::BetaW, x, y, f.ztop);
  const double WbZ = directional_derivative(s, ScalarField::BetaZ, x, y, f.w);
  const double beta_br = fit_along(g.II(br, f.ztop), f.Zperp).first;
  out.push_back(r.KN - (ZbW - WbZ - beta_br));
  out.push_back(ZbW - WbZ + 2.0 * a * f.betaW);

  out.push_back(mink_dot(r.Hvec, f.Zperp) - 0.5 * a);
  out.push_back(4.0 * r.H2 - 2.0 * r.K - mink_dot(r.Bww, r.Bww));
  out.push_back(mink_dot(r.Hstar, r.Hstar) - 2.0 * (r.H2 - r.K));
  // Expanding Hstar in (Zperp, Wprime) gives |Hstar|^2 = |H|^2 - K.
  out.push_back(mink_dot(r.Hstar, r.Hstar) - (r.H2 - r.K));

  double hmax = 0.0;
  for (double c : r.Hvec.c) hmax = std::max(hmax, std::abs(c));
  out.push_back(hmax <= 1e-8 ? std::max(std::abs(r.K), std::abs(r.KN)) : std::numeric_limits<double>::quiet_NaN());
  return out;
}

namespace {

BatteryReport run_battery(const SurfaceDef& s, const std::vector<GridPoint>& points, double tol, bool parallel) {
  BatteryReport rep;
  rep.identities = identity_names();
  rep.points = points;
  rep.tol = tol;
  const std::size_t n = rep.identities.size();
  rep.residuals = evaluate_points(points, parallel, [&](const GridPoint& p) {
    try {
      return identity_residuals(s, p.x, p.y);
    } catch (const DegenerateZperp&) {
      return std::vector<double>(n, std::numeric_limits<double>::quiet_NaN());
    }
  });
  for (std::size_t i = 0; i < points.size(); ++i)
    if (std::all_of(rep.residuals[i].begin(), rep.residuals[i].end(), [](double v) { return std::isnan(v); }))
      rep.degenerate.push_back(points[i]);
  return rep;
}

}  // namespace

BatteryReport identity_battery(const SurfaceDef& s, const std::vector<GridPoint>& points, double tol) {
  return run_battery(s, points, tol, true);
}

BatteryReport identity_battery_serial(const SurfaceDef& s, const std::vector<GridPoint>& points, double tol) {
  return run_battery(s, points, tol, false);
}

}  // namespace cnnd
