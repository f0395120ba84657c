#include "cnnd/geometry.hpp"

#include <cmath>

#include "cnnd/errors.hpp"

namespace cnnd {

double FirstForm::norm(Tangent u) const { return std::sqrt(std::max(0.0, dot(u, u))); }

Tangent FirstForm::solve(double r1, double r2) const {
  return {(G * r1 - F * r2) / det, (E * r2 - F * r1) / det};
}

namespace {

double euclid_dot(const Vec4& u, const Vec4& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3]; }

}  // namespace

std::pair<double, double> fit_along(const Vec4& v, const Vec4& d) {
  const double c = euclid_dot(v, d) / euclid_dot(d, d);
  return {c, euclid_norm(v - c * d)};
}

Vec4 CnndFrame::n3() const { return (Zperp + Wprime) / std::sqrt(2.0); }
Vec4 CnndFrame::n4() const { return (Zperp - Wprime) / std::sqrt(2.0); }

double det4(const Vec4& r0, const Vec4& r1, const Vec4& r2, const Vec4& r3) {
  const std::array<const Vec4*, 4> m{&r0, &r1, &r2, &r3};
  // Laplace expansion along the first two rows by complementary 2x2 minors.
  auto minor = [&](int r, int i, int j) { return (*m[r])[i] * (*m[r + 1])[j] - (*m[r])[j] * (*m[r + 1])[i]; };
  return minor(0, 0, 1) * minor(2, 2, 3) - minor(0, 0, 2) * minor(2, 1, 3) + minor(0, 0, 3) * minor(2, 1, 2) +
         minor(0, 1, 2) * minor(2, 0, 3) - minor(0, 1, 3) * minor(2, 0, 2) + minor(0, 2, 3) * minor(2, 0, 1);
}

LocalGeometry local_geometry(const SurfaceDef& s, double x, double y) {
  LocalGeometry g;
  g.pt = evaluate(s, x, y);
  const auto& p = g.pt;
  g.I.E = mink_dot(p.px, p.px);
  g.I.F = mink_dot(p.px, p.py);
  g.I.G = mink_dot(p.py, p.py);
  g.I.det = g.I.E * g.I.G - g.I.F * g.I.F;
  if (!(g.I.det > kTolSpacelike) || !(g.I.E > 0.0)) throw NotSpacelike("induced metric is not positive definite", x, y);
  g.II.Bxx = g.normal_part(p.pxx);
  g.II.Bxy = g.normal_part(p.pxy);
  g.II.Byy = g.normal_part(p.pyy);
  return g;
}

std::pair<FirstForm, SecondForm> fundamental_forms(const SurfaceDef& s, double x, double y) {
  const LocalGeometry g = local_geometry(s, x, y);
  return {g.I, g.II};
}

namespace {

Vec4 unit_z(const Vec4& Z) {
  const double n2 = mink_dot(Z, Z);
  if (!(n2 > 0.0)) throw Error("Z must be a spacelike vector");
  return Z / std::sqrt(n2);
}

}  // namespace

double zperp_norm2(const SurfaceDef& s, double x, double y) {
  const LocalGeometry g = local_geometry(s, x, y);
  const Vec4 Zp = g.normal_part(unit_z(s.Z));
  return mink_dot(Zp, Zp);
}

CnndFrame cnnd_frame(const SurfaceDef& s, double x, double y, double tol) {
  return cnnd_frame(local_geometry(s, x, y), s.Z, x, y, tol);
}

CnndFrame cnnd_frame(const LocalGeometry& g, const Vec4& Zraw, double x, double y, double tol) {
  const Vec4 Z = unit_z(Zraw);
  CnndFrame f;
  f.ztop = g.tangential(Z);
  f.Ztop = g.ambient(f.ztop);
  f.Zperp = Z - f.Ztop;
  if (causal_class(f.Zperp, tol, kTolZero) == CausalClass::Zero) throw DegenerateZperp(x, y);
  const double zz = mink_dot(f.Zperp, f.Zperp);
  if (std::abs(zz) > tol) throw NotCnnd(x, y, zz);

  const FirstForm& I = g.I;
  const Tangent c = f.ztop;
  const double scale = std::sqrt(I.det) * I.norm(c);
  f.w = {-(I.F * c.x + I.G * c.y) / scale, (I.E * c.x + I.F * c.y) / scale};
  f.W = g.ambient(f.w);

  // Wprime: the null normal pairing to 1 with Zperp, built from the normal
  // projection of the basis vector that is least orthogonal to Zperp.
  Vec4 m;
  double best = -1.0;
  for (std::size_t k = 0; k < 4; ++k) {
    const Vec4 cand = g.normal_part(Vec4::basis(k));
    const double p = std::abs(mink_dot(cand, f.Zperp));
    if (p > best) {
      best = p;
      m = cand;
    }
  }
  const double zm = mink_dot(f.Zperp, m);
  const double q = 1.0 / zm;
  const double p = -q * mink_dot(m, m) / (2.0 * zm);
  f.Wprime = p * f.Zperp + q * m;

  if (det4(f.Ztop, f.W, f.n3(), f.n4()) < 0.0) {
    f.W = -f.W;
    f.w = -1.0 * f.w;
    f.orientation = -1;
  }

  const Vec4 Bww = g.II(f.w, f.w);
  f.a = mink_dot(Bww, f.Zperp);
  f.b = mink_dot(Bww, f.Wprime);

  const Vec4 Bzz = g.II(f.ztop, f.ztop);
  const Vec4 Bzw = g.II(f.ztop, f.w);
  const auto [bz, rz] = fit_along(Bzz, f.Zperp);
  const auto [bw, rw] = fit_along(Bzw, f.Zperp);
  const double resid = std::max(rz / std::max(1.0, euclid_norm(Bzz)), rw / std::max(1.0, euclid_norm(Bzw)));
  if (resid > tol) throw BetaResidual(x, y, resid);
  f.betaZ = bz;
  f.betaW = bw;
  return f;
}

Tangent shape_operator(const FirstForm& I, const SecondForm& II, const Vec4& nu, Tangent u) {
  if (!(I.det > kTolSpacelike)) throw NotSpacelike("induced metric is not positive definite", 0.0, 0.0);
  return I.solve(mink_dot(II(u, {1, 0}), nu), mink_dot(II(u, {0, 1}), nu));
}

GeometryReport geometry_report(const SurfaceDef& s, double x, double y, double tol) {
  const LocalGeometry g = local_geometry(s, x, y);
  GeometryReport r;
  r.x = x;
  r.y = y;
  r.I = g.I;
  r.II = g.II;
  r.frame = cnnd_frame(g, s.Z, x, y, tol);
  const CnndFrame& f = r.frame;
  r.Bzz = g.II(f.ztop, f.ztop);
  r.Bzw = g.II(f.ztop, f.w);
  r.Bww = g.II(f.w, f.w);

  // Gauss equation.
  r.K = mink_dot(r.Bzz, r.Bww) - mink_dot(r.Bzw, r.Bzw);

  // Ricci equation: commutator of the shape operators of the orthonormal
  // normal frame, written in the orthonormal tangent frame (Ztop, W).
  const Vec4 n3 = f.n3(), n4 = f.n4();
  auto shape = [&](const Vec4& n) {
    const double zz = mink_dot(r.Bzz, n), zw = mink_dot(r.Bzw, n), ww = mink_dot(r.Bww, n);
    return std::array<std::array<double, 2>, 2>{{{zz, zw}, {zw, ww}}};
  };
  const auto S3 = shape(n3), S4 = shape(n4);
  double C10 = 0.0;
  for (int k = 0; k < 2; ++k) C10 += S3[1][k] * S4[k][0] - S4[1][k] * S3[k][0];
  r.KN = C10;

  r.Hvec = 0.5 * (r.Bzz + r.Bww);
  r.H2 = mink_dot(r.Hvec, r.Hvec);
  r.Hstar = r.Bzz - r.Hvec;
  return r;
}

const char* to_string(ScalarField f) {
  switch (f) {
    case ScalarField::A: return "a";
    case ScalarField::B: return "b";
    case ScalarField::BetaZ: return "betaZ";
    case ScalarField::BetaW: return "betaW";
    case ScalarField::AlphaZtop: return "alpha_ztop";
    case ScalarField::K: return "K";
    case ScalarField::KN: return "KN";
    case ScalarField::CoordX: return "x";
    case ScalarField::CoordY: return "y";
  }
  return "?";
}

double scalar_field(const SurfaceDef& s, ScalarField field, double x, double y) {
  switch (field) {
    case ScalarField::CoordX: return x;
    case ScalarField::CoordY: return y;
    case ScalarField::K: return geometry_report(s, x, y).K;
    case ScalarField::KN: return geometry_report(s, x, y).KN;
    default: break;
  }
  const LocalGeometry g = local_geometry(s, x, y);
  const CnndFrame f = cnnd_frame(g, s.Z, x, y);
  switch (field) {
    case ScalarField::A: return f.a;
    case ScalarField::B: return f.b;
    case ScalarField::BetaZ: return f.betaZ;
    case ScalarField::BetaW: return f.betaW;
    case ScalarField::AlphaZtop: return mink_dot(g.II(f.ztop, f.w), f.Zperp);
    default: return 0.0;
  }
}

double directional_derivative(const SurfaceDef& s, ScalarField f, double x, double y, Tangent u) {
  const double h = kFdStep;
  const double fp = scalar_field(s, f, x + h * u.x, y + h * u.y);
  const double fm = scalar_field(s, f, x - h * u.x, y - h * u.y);
  return (fp - fm) / (2.0 * h);
}

namespace {

using Jet4 = std::array<Jet1, 4>;

Jet1 mdot(const Jet4& a, const Jet4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] - a[3] * b[3]; }

struct MetricJets {
  Jet4 px, py;
  Jet1 E, F, G;
};

MetricJets metric_jets(const SurfaceDef& s, double x, double y) {
  const SurfacePoint p = evaluate(s, x, y);
  MetricJets m;
  for (std::size_t i = 0; i < 4; ++i) {
    m.px[i] = partial_x(p.jet[i]);
    m.py[i] = partial_y(p.jet[i]);
  }
  m.E = mdot(m.px, m.px);
  m.F = mdot(m.px, m.py);
  m.G = mdot(m.py, m.py);
  if (!(m.E.v * m.G.v - m.F.v * m.F.v > kTolSpacelike)) throw NotSpacelike("induced metric is not positive definite", x, y);
  return m;
}

}  // namespace

Connection christoffel(const SurfaceDef& s, double x, double y) {
  const MetricJets m = metric_jets(s, x, y);
  // g[i][j] and its partials d[l][i][j] = d_l g_ij.
  const Jet1 g[2][2] = {{m.E, m.F}, {m.F, m.G}};
  const double det = m.E.v * m.G.v - m.F.v * m.F.v;
  const double inv[2][2] = {{m.G.v / det, -m.F.v / det}, {-m.F.v / det, m.E.v / det}};
  auto d = [&](int l, int i, int j) { return l == 0 ? g[i][j].dx : g[i][j].dy; };
  Connection c;
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double sum = 0.0;
        for (int l = 0; l < 2; ++l) sum += inv[k][l] * (d(i, j, l) + d(j, i, l) - d(l, i, j));
        c.gamma[k][i][j] = 0.5 * sum;
      }
  return c;
}

FrameFields frame_fields(const SurfaceDef& s, double x, double y, int orientation) {
  const MetricJets m = metric_jets(s, x, y);
  const Vec4 Z = unit_z(s.Z);
  Jet4 z;
  for (std::size_t i = 0; i < 4; ++i) z[i] = Jet1::constant(Z[i]);
  const Jet1 r1 = mdot(z, m.px), r2 = mdot(z, m.py);
  const Jet1 det = m.E * m.G - m.F * m.F;
  FrameFields f;
  f.ztop[0] = (m.G * r1 - m.F * r2) / det;
  f.ztop[1] = (m.E * r2 - m.F * r1) / det;
  const Jet1& c1 = f.ztop[0];
  const Jet1& c2 = f.ztop[1];
  const Jet1 n = sqrt(m.E * c1 * c1 + 2.0 * m.F * c1 * c2 + m.G * c2 * c2);
  const Jet1 scale = sqrt(det) * n;
  const double o = orientation < 0 ? -1.0 : 1.0;
  f.w[0] = (-o) * ((m.F * c1 + m.G * c2) / scale);
  f.w[1] = o * ((m.E * c1 + m.F * c2) / scale);
  return f;
}

Tangent covariant_derivative(const Connection& c, const Jet1 X[2], const Jet1 Y[2]) {
  double out[2];
  for (int k = 0; k < 2; ++k) {
    double v = Y[k].along(X[0].v, X[1].v);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) v += c.gamma[k][i][j] * X[i].v * Y[j].v;
    out[k] = v;
  }
  return {out[0], out[1]};
}

Tangent lie_bracket(const Jet1 X[2], const Jet1 Y[2]) {
  return {Y[0].along(X[0].v, X[1].v) - X[0].along(Y[0].v, Y[1].v),
          Y[1].along(X[0].v, X[1].v) - X[1].along(Y[0].v, Y[1].v)};
}

}  // namespace cnnd
