#include "cnnd/gauss_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cnnd/errors.hpp"

namespace cnnd {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double diff_norm(const Bivector& a, const Bivector& b) { return euclid_norm(a - b); }

std::array<double, 2> normalized(double s, double t) {
  const double n = std::hypot(s, t);
  s /= n;
  t /= n;
  if (s < 0.0 || (s == 0.0 && t < 0.0)) {
    s = -s;
    t = -t;
  }
  return {s + 0.0, t + 0.0};
}

}  // namespace

int frame_orientation(const SurfaceDef& s, double x, double y) {
  try {
    return cnnd_frame(s, x, y).orientation;
  } catch (const PointError&) {
    return 1;
  }
}

Bivector gauss_map(const SurfaceDef& s, double x, double y) { return gauss_map(s, x, y, frame_orientation(s, x, y)); }

Bivector gauss_map(const SurfaceDef& s, double x, double y, int orientation) {
  const LocalGeometry g = local_geometry(s, x, y);
  const Bivector P = wedge(g.pt.px, g.pt.py);
  return (orientation < 0 ? -1.0 : 1.0) / std::sqrt(biv_dot(P, P)) * P;
}

Bivector dgauss(const SurfaceDef& s, double x, double y, Tangent u) {
  return dgauss(s, x, y, u, frame_orientation(s, x, y));
}

Bivector dgauss(const SurfaceDef& s, double x, double y, Tangent u, int orientation) {
  const LocalGeometry g = local_geometry(s, x, y);
  const auto& p = g.pt;
  const Bivector P = wedge(p.px, p.py);
  const Bivector dP = wedge(u.x * p.pxx + u.y * p.pxy, p.py) + wedge(p.px, u.x * p.pxy + u.y * p.pyy);
  const double n = std::sqrt(biv_dot(P, P));
  const double dn = biv_dot(P, dP) / n;
  const double o = orientation < 0 ? -1.0 : 1.0;
  return o * ((1.0 / n) * dP - (dn / (n * n)) * P);
}

ComplexScalar gstar_h(const SurfaceDef& s, double x, double y, Tangent u, Tangent v) {
  const int o = frame_orientation(s, x, y);
  return h_form(dgauss(s, x, y, u, o), dgauss(s, x, y, v, o));
}

GStarH gstar_h_frame(const SurfaceDef& s, double x, double y) {
  const CnndFrame f = cnnd_frame(s, x, y);
  const Bivector dz = dgauss(s, x, y, f.ztop, f.orientation);
  const Bivector dw = dgauss(s, x, y, f.w, f.orientation);
  return {h_form(dz, dz), h_form(dz, dw), h_form(dw, dw)};
}

ComplexScalar gstar_h_discriminant(const SurfaceDef& s, double x, double y, double tol_a) {
  const CnndFrame f = cnnd_frame(s, x, y);
  if (std::abs(f.a) <= tol_a) throw AZero("discriminant formula requires a != 0");
  return gstar_h_frame(s, x, y).discriminant();
}

double delta_form(const SurfaceDef& s, double x, double y, Tangent u) {
  const Bivector d = dgauss(s, x, y, u);
  return wedge4(d, d);
}

DeltaInvariant delta_invariant(const SurfaceDef& s, double x, double y) {
  const CnndFrame f = cnnd_frame(s, x, y);
  const Bivector dz = dgauss(s, x, y, f.ztop, f.orientation);
  const Bivector dw = dgauss(s, x, y, f.w, f.orientation);
  return {wedge4(dz, dz), wedge4(dw, dw), wedge4(dz, dw)};
}

const char* to_string(DirectionKind k) {
  switch (k) {
    case DirectionKind::TwoDistinct: return "TwoDistinct";
    case DirectionKind::Double: return "Double";
    case DirectionKind::All: return "All";
  }
  return "?";
}

DirectionSet asymptotic_directions(const GeometryReport& rep, double tol) {
  DirectionSet d;
  if (std::abs(rep.frame.a) <= tol) {
    d.kind = DirectionKind::All;
  } else if (std::abs(rep.K) > tol) {
    d.kind = DirectionKind::TwoDistinct;
    d.directions = {normalized(1.0, 0.0), normalized(rep.KN / rep.K, 1.0)};
  } else {
    d.kind = DirectionKind::Double;
    d.directions = {normalized(1.0, 0.0)};
  }
  return d;
}

DirectionSet mean_curvature_directions(const GeometryReport& rep, double tol) {
  DirectionSet d;
  if (std::abs(rep.frame.a) <= tol) {
    d.kind = DirectionKind::All;
    return d;
  }
  const double K = rep.K, KN = rep.KN;
  d.kind = DirectionKind::TwoDistinct;
  if (std::abs(K) > tol) {
    const double r = std::hypot(K, KN);
    d.directions = {normalized(K, -KN + r), normalized(K, -KN - r)};
  } else if (std::abs(KN) > tol) {
    // u1*u2*KN = 0: the coordinate axes of the frame.
    d.directions = {normalized(1.0, 0.0), normalized(0.0, 1.0)};
    d.reduced = true;
  } else {
    throw DegenerateFormula("mean curvature directions undefined: a != 0 but K = KN = 0");
  }
  return d;
}

double mixed_product(const CnndFrame& f, const Vec4& v1, const Vec4& v2) {
  const Vec4 n3 = f.n3(), n4 = f.n4();
  const double p1 = mink_dot(v1, n3), q1 = -mink_dot(v1, n4);
  const double p2 = mink_dot(v2, n3), q2 = -mink_dot(v2, n4);
  return p1 * q2 - q1 * p2;
}

std::array<double, 2> null_coords(const CnndFrame& f, const Vec4& v) {
  return {mink_dot(v, f.Wprime), mink_dot(v, f.Zperp)};
}

EllipseData curvature_ellipse(const GeometryReport& rep, int nsamples, double tol) {
  const CnndFrame& f = rep.frame;
  const double a = f.a, K = rep.K, KN = rep.KN, H2 = rep.H2;
  EllipseData e;
  e.degenerate = std::abs(a) <= kTolA;
  if (e.degenerate) {
    e.center = null_coords(f, rep.Hvec);
    e.coeff_cos = {(f.betaZ - f.b) / 2.0, 0.0};
    e.coeff_sin = {f.betaW, 0.0};
    e.halflength = std::max(std::abs(mink_dot(rep.Hstar, f.Wprime)), std::abs(f.betaW));
  } else {
    e.center = {H2 / a, a / 2.0};
    e.coeff_cos = {(K - H2) / a, -a / 2.0};
    e.coeff_sin = {-KN / a, 0.0};
  }

  const bool implicit = !e.degenerate && std::abs(H2 - K) > tol && std::abs(KN) > tol;
  const double hstar_len = std::sqrt(std::abs(mink_dot(rep.Hstar, rep.Hstar)));
  const double hz = mink_dot(rep.Hstar, f.Zperp);
  const double hw = mink_dot(rep.Hstar, f.Wprime);

  for (int k = 0; k < nsamples; ++k) {
    EllipseSample smp;
    smp.theta = std::numbers::pi * k / nsamples;
    const double c2 = std::cos(2.0 * smp.theta), s2 = std::sin(2.0 * smp.theta);
    for (int i = 0; i < 2; ++i) smp.formula[i] = e.center[i] + c2 * e.coeff_cos[i] + s2 * e.coeff_sin[i];
    smp.B = rep.B(std::cos(smp.theta), std::sin(smp.theta));
    smp.direct = null_coords(f, smp.B);
    if (implicit) {
      // v - H = X * Hstar + Y * Zperp
      const Vec4 d = smp.B - rep.Hvec;
      const double X = mink_dot(d, f.Zperp) / hz;
      const double Y = mink_dot(d, f.Wprime) - X * hw;
      const double x = X * hstar_len;
      const double yterm = Y * Y * a * a / (KN * KN);
      smp.implicit_literal = x * x / (2.0 * std::abs(H2 - K)) + yterm - 1.0;
      smp.implicit_corrected = x * x / std::abs(H2 - K) + yterm - 1.0;
    } else {
      smp.implicit_literal = smp.implicit_corrected = kNaN;
    }
    e.samples.push_back(smp);
  }
  return e;
}

AdaptedBasis adapted_basis(const CnndFrame& f) {
  const Vec4 e3 = f.n3();
  return {wedge(f.Ztop, f.W), wedge(f.W, e3), wedge(e3, f.Ztop)};
}

std::array<ComplexScalar, 3> e_coords(const AdaptedBasis& b, const Bivector& eta) {
  return {h_form(eta, b.E1), h_form(eta, b.E2), h_form(eta, b.E3)};
}

const std::vector<std::string>& gauss_identity_names() {
  static const std::vector<std::string> names{
      "g_unit",        "g_frame",        "g_sphere",      "adapted_gram",   "dg_ztop",
      "dg_w",          "dg_adapted_ztop", "dg_adapted_w",  "pair_zz",        "pair_zw",
      "pair_ww",       "discriminant",   "delta_ztop",    "delta_w",        "mixed_k",
      "delta_k2",      "asymptotic",     "mean_curvature", "null_form",     "w_asymptotic",
  };
  return names;
}

std::vector<double> gauss_identity_residuals(const SurfaceDef& s, double x, double y) {
  const GeometryReport rep = geometry_report(s, x, y);
  const CnndFrame& f = rep.frame;
  const int o = f.orientation;
  const double a = f.a, b = f.b, K = rep.K, KN = rep.KN, H2 = rep.H2;
  const bool a_nonzero = std::abs(a) > 1e-6;
  std::vector<double> out;

  const Bivector G = gauss_map(s, x, y, o);
  out.push_back(std::abs(h_form(G, G) - 1.0));
  out.push_back(diff_norm(G, wedge(f.Ztop, f.W)));

  const AdaptedBasis eb = adapted_basis(f);
  const auto z = e_coords(eb, G);
  out.push_back(std::abs(z[0] * z[0] + z[1] * z[1] + z[2] * z[2] - 1.0));
  {
    const std::array<Bivector, 3> E{eb.E1, eb.E2, eb.E3};
    double m = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(h_form(E[i], E[j]) - (i == j ? 1.0 : 0.0)));
    out.push_back(m);
  }

  const Bivector dz = dgauss(s, x, y, f.ztop, o);
  const Bivector dw = dgauss(s, x, y, f.w, o);
  out.push_back(diff_norm(dz, f.betaZ * wedge(f.Zperp, f.W) + f.betaW * wedge(f.Ztop, f.Zperp)));
  out.push_back(diff_norm(dw, f.betaW * wedge(f.Zperp, f.W) + wedge(f.Ztop, rep.Bww)));

  if (a_nonzero) {
    using C = ComplexScalar;
    const double r2a = std::sqrt(2.0) * a;
    const std::array<C, 3> ez{C(0.0), -C(K, KN) / r2a, C(KN, -K) / r2a};
    const std::array<C, 3> ew{C(0.0), C(KN, -a * (a - b)) / r2a, -C(a * (a + b), -KN) / r2a};
    const auto cz = e_coords(eb, dz), cw = e_coords(eb, dw);
    double mz = 0.0, mw = 0.0;
    for (int k = 0; k < 3; ++k) {
      mz = std::max(mz, std::abs(cz[k] - ez[k]));
      mw = std::max(mw, std::abs(cw[k] - ew[k]));
    }
    out.push_back(mz);
    out.push_back(mw);
  } else {
    out.push_back(kNaN);
    out.push_back(kNaN);
  }

  const GStarH q{h_form(dz, dz), h_form(dz, dw), h_form(dw, dw)};
  out.push_back(std::abs(q.zz));
  out.push_back(std::abs(q.zw - ComplexScalar(-KN, K)));
  out.push_back(std::abs(q.ww - ComplexScalar(2.0 * (2.0 * H2 - K), -2.0 * KN)));
  if (a_nonzero) {
    const ComplexScalar kk(K, KN);
    out.push_back(std::abs(q.discriminant() + kk * kk));
  } else {
    out.push_back(kNaN);
  }

  const DeltaInvariant d{wedge4(dz, dz), wedge4(dw, dw), wedge4(dz, dw)};
  out.push_back(std::abs(d.delta_z));
  out.push_back(std::abs(d.delta_w + 2.0 * KN));
  out.push_back(std::abs(d.mixed - K));
  out.push_back(std::abs(d.value() - K * K) / std::max(1.0, K * K));

  auto delta_at = [&](double s1, double t1) {
    const Bivector dd = dgauss(s, x, y, f.tangent(s1, t1), o);
    return wedge4(dd, dd);
  };
  auto mixed_at = [&](double s1, double t1) { return mixed_product(f, rep.Hvec, rep.B(s1, t1)); };
  const std::array<std::array<double, 2>, 3> probes{{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}}};

  const DirectionSet asym = asymptotic_directions(rep);
  {
    double m = 0.0;
    if (asym.kind == DirectionKind::All)
      for (const auto& p : probes) m = std::max(m, std::abs(delta_at(p[0], p[1])));
    for (const auto& dir : asym.directions) m = std::max(m, std::abs(delta_at(dir[0], dir[1])));
    out.push_back(m);
  }
  try {
    const DirectionSet mc = mean_curvature_directions(rep);
    double m = 0.0;
    if (mc.kind == DirectionKind::All)
      for (const auto& p : probes) m = std::max(m, std::abs(mixed_at(p[0], p[1])));
    for (const auto& dir : mc.directions) m = std::max(m, std::abs(mixed_at(dir[0], dir[1])));
    out.push_back(m);
  } catch (const DegenerateFormula&) {
    out.push_back(kNaN);
  }

  {
    bool null_form = true;
    for (const auto& p : probes) {
      const Bivector dd = dgauss(s, x, y, f.tangent(p[0], p[1]), o);
      null_form = null_form && std::abs(h_form(dd, dd)) <= 1e-6;
    }
    out.push_back(null_form ? std::max({std::abs(K), std::abs(KN), std::abs(H2)}) : kNaN);
  }
  {
    const bool w_asym = std::abs(d.delta_w) <= 1e-6;
    const bool kn_zero = std::abs(KN) <= 1e-6;
    out.push_back(w_asym == kn_zero ? 0.0 : 1.0);
  }
  return out;
}

namespace {

BatteryReport run_suite(const SurfaceDef& s, const std::vector<GridPoint>& points, double tol, bool parallel) {
  BatteryReport rep;
  rep.identities = gauss_identity_names();
  rep.points = points;
  rep.tol = tol;
  const std::size_t n = rep.identities.size();
  rep.residuals = evaluate_points(points, parallel, [&](const GridPoint& p) {
    try {
      return gauss_identity_residuals(s, p.x, p.y);
    } catch (const DegenerateZperp&) {
      return std::vector<double>(n, kNaN);
    }
  });
  for (std::size_t i = 0; i < points.size(); ++i)
    if (std::all_of(rep.residuals[i].begin(), rep.residuals[i].end(), [](double v) { return std::isnan(v); }))
      rep.degenerate.push_back(points[i]);
  return rep;
}

}  // namespace

BatteryReport gauss_suite(const SurfaceDef& s, const std::vector<GridPoint>& points, double tol) {
  return run_suite(s, points, tol, true);
}

BatteryReport gauss_suite_serial(const SurfaceDef& s, const std::vector<GridPoint>& points, double tol) {
  return run_suite(s, points, tol, false);
}

}  // namespace cnnd
