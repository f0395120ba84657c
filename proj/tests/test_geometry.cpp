#include <gtest/gtest.h>

#include <random>

#include "cnnd/battery.hpp"
#include "cnnd/constructions.hpp"
#include "cnnd/errors.hpp"
#include "cnnd/geometry.hpp"

using namespace cnnd;

namespace {

SurfaceDef family1_graph() { return graph_surface(parse("(x+y)^2/2"), parse("(x+y)^2/2")); }

SurfaceDef twisted_cone() {
  return explicit_surface(std::array<std::string, 4>{"x", "(x + 0.3*x^2)*cos(y) + sin(y)",
                                                     "(x + 0.3*x^2)*sin(y) - cos(y)", "x + 0.3*x^2 + y"},
                          Vec4{1, 0, 0, 0});
}

SurfaceDef circle_hyperbola() {
  return explicit_surface(std::array<std::string, 4>{"cos(x)", "sin(x)", "sinh(y)", "cosh(y)"}, Vec4{1, 0, 0, 0});
}

void expect_vec_near(const Vec4& a, const Vec4& b, double tol) {
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(a[i], b[i], tol) << "component " << i;
}

}  // namespace

TEST(FundamentalForms, Family1Graph) {
  const auto [I, II] = fundamental_forms(family1_graph(), 1, 0);
  EXPECT_DOUBLE_EQ(I.E, 1);
  EXPECT_DOUBLE_EQ(I.F, 0);
  EXPECT_DOUBLE_EQ(I.G, 1);
  expect_vec_near(II.Bxx, {0, 0, 1, 1}, 1e-14);
  expect_vec_near(II.Bxy, {0, 0, 1, 1}, 1e-14);
  expect_vec_near(II.Byy, {0, 0, 1, 1}, 1e-14);
}

TEST(FundamentalForms, Plane) {
  const SurfaceDef plane = explicit_surface(std::array<std::string, 4>{"x", "y", "0", "0"}, Vec4{1, 0, 0, 0});
  const auto [I, II] = fundamental_forms(plane, 0.3, -0.7);
  EXPECT_EQ(I.E, 1);
  EXPECT_EQ(I.F, 0);
  EXPECT_EQ(I.G, 1);
  EXPECT_EQ(II.Bxx, Vec4{});
  EXPECT_EQ(II.Bxy, Vec4{});
  EXPECT_EQ(II.Byy, Vec4{});
}

TEST(FundamentalForms, CircleHyperbola) {
  const auto [I, II] = fundamental_forms(circle_hyperbola(), 0.3, 0.2);
  EXPECT_NEAR(I.E, 1, 1e-15);
  EXPECT_NEAR(I.F, 0, 1e-15);
  EXPECT_NEAR(I.G, 1, 1e-14);
}

TEST(FundamentalForms, SecondFormIsNormal) {
  const SurfaceDef s = twisted_cone();
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> ux(0.5, 1.5), uy(0.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    const double x = ux(rng), y = uy(rng);
    const LocalGeometry g = local_geometry(s, x, y);
    for (const Vec4& b : {g.II.Bxx, g.II.Bxy, g.II.Byy}) {
      EXPECT_NEAR(mink_dot(b, g.pt.px), 0, 1e-12);
      EXPECT_NEAR(mink_dot(b, g.pt.py), 0, 1e-12);
    }
  }
}

TEST(FundamentalForms, DegenerateIsNotSpacelike) {
  const SurfaceDef curve = explicit_surface(std::array<std::string, 4>{"x", "0", "0", "0"}, Vec4{1, 0, 0, 0});
  EXPECT_THROW(local_geometry(curve, 0.1, 0.2), NotSpacelike);
  const SurfaceDef timelike = explicit_surface(std::array<std::string, 4>{"x", "0", "0", "y"}, Vec4{1, 0, 0, 0});
  EXPECT_THROW(local_geometry(timelike, 0.1, 0.2), NotSpacelike);
}

TEST(CnndFrame, Family1Graph) {
  const CnndFrame f = cnnd_frame(family1_graph(), 1, 0);
  expect_vec_near(f.Ztop, {1, 0, 1, 1}, 1e-14);
  expect_vec_near(f.Zperp, {0, 0, -1, -1}, 1e-14);
  EXPECT_NEAR(f.a, 0, 1e-14);
  // Bxy is a multiple of Zperp, so both beta coefficients come from the same fit.
  EXPECT_NEAR(f.betaZ, -1, 1e-14);
  EXPECT_NEAR(std::abs(f.betaW), 1, 1e-14);
}

TEST(CnndFrame, PlaneIsDegenerate) {
  const SurfaceDef plane = explicit_surface(std::array<std::string, 4>{"x", "y", "0", "0"}, Vec4{1, 0, 0, 0});
  EXPECT_THROW(cnnd_frame(plane, 0.2, 0.3), DegenerateZperp);
}

TEST(CnndFrame, CircleHyperbolaIsNotCnnd) {
  try {
    cnnd_frame(circle_hyperbola(), 0.3, 0.1);
    FAIL() << "no error";
  } catch (const NotCnnd& e) {
    EXPECT_NEAR(e.zperp_norm2(), std::cos(0.3) * std::cos(0.3), 1e-12);
  }
}

TEST(CnndFrame, FrameProperties) {
  const SurfaceDef s = twisted_cone();
  for (const GridPoint& p : grid(0.5, 1.5, 5, 0.0, 1.0, 5)) {
    const CnndFrame f = cnnd_frame(s, p.x, p.y);
    EXPECT_NEAR(mink_dot(f.Ztop, f.Ztop), 1, 1e-12);
    EXPECT_NEAR(mink_dot(f.W, f.W), 1, 1e-12);
    EXPECT_NEAR(mink_dot(f.Ztop, f.W), 0, 1e-12);
    EXPECT_NEAR(mink_dot(f.Zperp, f.Wprime), 1, 1e-12);
    EXPECT_NEAR(mink_dot(f.Wprime, f.Wprime), 0, 1e-12);
    EXPECT_NEAR(det4(f.Ztop, f.W, f.n3(), f.n4()), 1, 1e-12);
    expect_vec_near(f.Ztop + f.Zperp, s.Z, 1e-12);
  }
}

TEST(CnndFrame, TwistedConeValues) {
  // Frozen from a converged run; a, b and the betas are checked against the
  // identities separately.
  const GeometryReport r = geometry_report(twisted_cone(), 0.7, 0.2);
  EXPECT_NEAR(r.frame.a, 1.6765, 1e-4);
  EXPECT_NEAR(r.frame.b, 0.1569, 1e-4);
  EXPECT_NEAR(r.frame.betaZ, -0.4225, 1e-4);
  EXPECT_NEAR(r.frame.betaW, -1.3939, 1e-4);
  EXPECT_NEAR(r.K, -0.7084, 1e-4);
  EXPECT_NEAR(r.KN, 2.3369, 1e-4);
  EXPECT_NEAR(r.H2, -0.2226, 1e-4);
  EXPECT_EQ(r.frame.orientation, -1);
}

TEST(ShapeOperator, Properties) {
  const SurfaceDef s = twisted_cone();
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> u(-1, 1);
  const LocalGeometry g = local_geometry(s, 0.8, 0.4);
  const CnndFrame f = cnnd_frame(g, s.Z, 0.8, 0.4);
  const Tangent az = shape_operator(g.I, g.II, f.Zperp, f.ztop);
  EXPECT_LE(g.I.norm(az), 1e-12);
  const Tangent zero = shape_operator(g.I, g.II, Vec4{}, Tangent{1, 2});
  EXPECT_EQ(zero.x, 0);
  EXPECT_EQ(zero.y, 0);
  for (int k = 0; k < 50; ++k) {
    const Vec4 nu = g.normal_part(Vec4{u(rng), u(rng), u(rng), u(rng)});
    const Tangent a{u(rng), u(rng)}, b{u(rng), u(rng)};
    EXPECT_NEAR(g.I.dot(shape_operator(g.I, g.II, nu, a), b), g.I.dot(a, shape_operator(g.I, g.II, nu, b)), 1e-9);
    // Weingarten: <A_nu u, v> = <B(u, v), nu>.
    EXPECT_NEAR(g.I.dot(shape_operator(g.I, g.II, nu, a), b), mink_dot(g.II(a, b), nu), 1e-9);
  }
}

TEST(GeometryReport, Family1Graph) {
  const GeometryReport r = geometry_report(family1_graph(), 1, 0);
  EXPECT_NEAR(r.K, 0, 1e-14);
  EXPECT_NEAR(r.KN, 0, 1e-14);
  expect_vec_near(r.Hvec, {0, 0, 1, 1}, 1e-14);
  EXPECT_NEAR(r.H2, 0, 1e-14);
}

TEST(FundamentalForms, GaussEquationMatchesIntrinsicCurvature) {
  // psi = (x, y cos x, y sin x, 0): E = 1 + y^2, F = 0, G = 1, so the
  // intrinsic curvature is -(sqrt E)_yy / sqrt E = -1 / (1 + y^2)^2.
  const SurfaceDef t = explicit_surface(std::array<std::string, 4>{"x", "y*cos(x)", "y*sin(x)", "0"}, Vec4{0, 0, 0, 1});
  const auto [I, II] = fundamental_forms(t, 0.3, 0.5);
  const double K = (mink_dot(II.Bxx, II.Byy) - mink_dot(II.Bxy, II.Bxy)) / I.det;
  EXPECT_NEAR(K, -1.0 / std::pow(1.25, 2), 1e-12);
}

TEST(ScalarFields, Examples) {
  const SurfaceDef s = family1_graph();
  EXPECT_NEAR(scalar_field(s, ScalarField::A, 0.4, 0.3), 0, 1e-14);
  EXPECT_NEAR(directional_derivative(s, ScalarField::CoordX, 0.4, 0.3, Tangent{1, 0}), 1, 1e-8);
  EXPECT_NEAR(directional_derivative(s, ScalarField::CoordY, 0.4, 0.3, Tangent{1, 0}), 0, 1e-8);
}

TEST(ScalarFields, GaussCorollaryOnTwistedCone) {
  const SurfaceDef s = twisted_cone();
  const GeometryReport r = geometry_report(s, 0.9, 0.5);
  const double Za = directional_derivative(s, ScalarField::A, 0.9, 0.5, r.frame.ztop);
  EXPECT_NEAR(Za, -r.K - r.frame.a * r.frame.a, 1e-5);
}

TEST(Connection, ChristoffelOfPolarPlane) {
  // psi = (x cos y, x sin y, 0, 0): E = 1, F = 0, G = x^2.
  const SurfaceDef s = explicit_surface(std::array<std::string, 4>{"x*cos(y)", "x*sin(y)", "0", "0"}, Vec4{0, 0, 1, 0});
  const Connection c = christoffel(s, 2.0, 0.3);
  EXPECT_NEAR(c.gamma[0][1][1], -2.0, 1e-12);  // -x
  EXPECT_NEAR(c.gamma[1][0][1], 0.5, 1e-12);   // 1/x
  EXPECT_NEAR(c.gamma[1][1][0], 0.5, 1e-12);
  EXPECT_NEAR(c.gamma[0][0][0], 0.0, 1e-12);
}

TEST(Battery, Family1OnSymmetricSquare) {
  const BatteryReport rep = identity_battery(family1_graph(), grid(-1, 1, 5, -1, 1, 5), 1e-6);
  EXPECT_TRUE(rep.passed()) << rep.summary();
  // x + y = 0 is where the normal part of e1 vanishes.
  ASSERT_EQ(rep.degenerate.size(), 5u);
  for (const auto& p : rep.degenerate) EXPECT_NEAR(p.x + p.y, 0, 1e-15);
  for (std::size_t i = 0; i < rep.points.size(); ++i) {
    if (std::isnan(rep.residuals[i][0])) continue;
    const GeometryReport r = geometry_report(family1_graph(), rep.points[i].x, rep.points[i].y);
    EXPECT_NEAR(r.frame.a, 0, 1e-12);
    EXPECT_NEAR(r.K, 0, 1e-12);
    EXPECT_NEAR(r.KN, 0, 1e-12);
  }
}

TEST(Battery, TwistedConeAllButLiteralHstar) {
  const BatteryReport rep = identity_battery(twisted_cone(), grid(0.5, 1.5, 4, 0, 1, 4), 1e-5);
  const auto& names = rep.identities;
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (names[k] == "hstar_norm")
      EXPECT_GT(rep.max_residual(k), 0.1);
    else
      EXPECT_LE(rep.max_residual(k), 1e-5) << names[k];
  }
}

TEST(Battery, RuledSurfaceWithNullDirection) {
  // psi = (x, y, sin y, sin y) and Z = e1 + (0, 0, 1, 1): Zperp = (0, 0, 1, 1).
  const CurveExprs alpha = parse_curve({"0", "t", "sin(t)", "sin(t)"});
  const SurfaceDef s = ruled_surface(alpha, Vec4{1, 0, 0, 0}, Vec4{1, 0, 1, 1});
  const BatteryReport rep = identity_battery(s, grid(-1, 1, 5, 0.1, 1.2, 5), 1e-6);
  EXPECT_TRUE(rep.passed()) << rep.summary();
  for (const auto& p : rep.points) {
    const CnndFrame f = cnnd_frame(s, p.x, p.y);
    EXPECT_NEAR(f.a, 0, 1e-12);
    EXPECT_NEAR(f.betaZ, 0, 1e-12);
    EXPECT_NEAR(f.betaW, 0, 1e-12);
  }
}

TEST(Battery, NotCnndAbortsWithPoint) {
  try {
    identity_battery(circle_hyperbola(), grid(0.2, 1.0, 3, 0, 1, 3), 1e-6);
    FAIL() << "no error";
  } catch (const NotCnnd& e) {
    EXPECT_EQ(e.x(), 0.2);
    EXPECT_EQ(e.y(), 0.0);
  }
}

TEST(Battery, CsvIsStable) {
  const BatteryReport rep = identity_battery(family1_graph(), grid(0.25, 1.25, 2, 0.25, 1.25, 2), 1e-6);
  const std::string csv = rep.csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "x,y,identity,residual,pass");
  EXPECT_EQ(csv, identity_battery_serial(family1_graph(), grid(0.25, 1.25, 2, 0.25, 1.25, 2), 1e-6).csv());
}
