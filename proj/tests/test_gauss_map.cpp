#include <gtest/gtest.h>

#include <random>

#include "cnnd/constructions.hpp"
#include "cnnd/errors.hpp"
#include "cnnd/gauss_map.hpp"

using namespace cnnd;

namespace {

SurfaceDef family1_graph() { return graph_surface(parse("(x+y)^2/2"), parse("(x+y)^2/2")); }

SurfaceDef twisted_cone() {
  return explicit_surface(std::array<std::string, 4>{"x", "(x + 0.3*x^2)*cos(y) + sin(y)",
                                                     "(x + 0.3*x^2)*sin(y) - cos(y)", "x + 0.3*x^2 + y"},
                          Vec4{1, 0, 0, 0});
}

// Same construction with a straight profile: flat, a != 0.
SurfaceDef flat_cone() {
  return explicit_surface(std::array<std::string, 4>{"x", "x*cos(y) + sin(y)", "x*sin(y) - cos(y)", "x + y"},
                          Vec4{1, 0, 0, 0});
}

double biv_err(const Bivector& a, const Bivector& b) { return euclid_norm(a - b); }

GeometryReport synthetic(double a, double K, double KN) {
  GeometryReport r;
  r.frame.a = a;
  r.K = K;
  r.KN = KN;
  return r;
}

}  // namespace

TEST(GaussMap, Examples) {
  const SurfaceDef plane = explicit_surface(std::array<std::string, 4>{"x", "y", "0", "0"}, Vec4{0, 0, 1, 0});
  EXPECT_EQ(gauss_map(plane, 0.2, 0.4), Bivector::basis(Bivector::e12));
  const Bivector G = gauss_map(family1_graph(), 1, 0);
  EXPECT_LE(biv_err(G, wedge(Vec4{1, 0, 1, 1}, Vec4{0, 1, 1, 1})), 1e-14);
  EXPECT_NEAR(biv_dot(G, G), 1, 1e-14);
}

TEST(GaussMap, LiesOnGrassmannian) {
  const SurfaceDef s = twisted_cone();
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ux(0.5, 1.5), uy(0, 1);
  for (int k = 0; k < 20; ++k) {
    const double x = ux(rng), y = uy(rng);
    const Bivector G = gauss_map(s, x, y);
    EXPECT_LE(std::abs(h_form(G, G) - 1.0), 1e-12);
    const CnndFrame f = cnnd_frame(s, x, y);
    EXPECT_LE(biv_err(G, wedge(f.Ztop, f.W)), 1e-12);
  }
}

TEST(DGauss, Examples) {
  const SurfaceDef plane = explicit_surface(std::array<std::string, 4>{"x", "y", "0", "0"}, Vec4{0, 0, 1, 0});
  EXPECT_LE(euclid_norm(dgauss(plane, 0.1, 0.2, Tangent{1, -2})), 1e-15);
  const CnndFrame f = cnnd_frame(family1_graph(), 1, 0);
  const Bivector lhs = dgauss(family1_graph(), 1, 0, f.ztop);
  const Bivector rhs = f.betaZ * wedge(f.Zperp, f.W) + f.betaW * wedge(f.Ztop, f.Zperp);
  EXPECT_LE(biv_err(lhs, rhs), 1e-13);
}

TEST(DGauss, MatchesFiniteDifference) {
  const SurfaceDef s = twisted_cone();
  const int o = frame_orientation(s, 0.8, 0.3);
  const double h = 1e-5;
  const Bivector fd = (1.0 / (2 * h)) * (gauss_map(s, 0.8 + h, 0.3 - 2 * h, o) - gauss_map(s, 0.8 - h, 0.3 + 2 * h, o));
  EXPECT_LE(biv_err(dgauss(s, 0.8, 0.3, Tangent{1, -2}), fd), 1e-8);
}

TEST(GStarH, PairingsOnTwistedCone) {
  const SurfaceDef s = twisted_cone();
  for (const GridPoint& p : grid(0.5, 1.5, 3, 0, 1, 3)) {
    const GeometryReport r = geometry_report(s, p.x, p.y);
    const GStarH g = gstar_h_frame(s, p.x, p.y);
    EXPECT_LE(std::abs(g.zz), 1e-12);
    EXPECT_LE(std::abs(g.zw - ComplexScalar(-r.KN, r.K)), 1e-11);
    EXPECT_LE(std::abs(g.ww - ComplexScalar(2 * (2 * r.H2 - r.K), -2 * r.KN)), 1e-11);
    const ComplexScalar kk(r.K, r.KN);
    EXPECT_LE(std::abs(gstar_h_discriminant(s, p.x, p.y) + kk * kk), 1e-10);
    EXPECT_LE(std::abs(gstar_h(s, p.x, p.y, r.frame.ztop, r.frame.w) - g.zw), 1e-13);
  }
}

TEST(GStarH, DiscriminantNeedsNonzeroA) {
  EXPECT_THROW(gstar_h_discriminant(family1_graph(), 0.5, 0.5), AZero);
}

TEST(Delta, FormValues) {
  const SurfaceDef s = twisted_cone();
  const GeometryReport r = geometry_report(s, 0.9, 0.6);
  EXPECT_NEAR(delta_form(s, 0.9, 0.6, r.frame.ztop), 0, 1e-12);
  EXPECT_NEAR(delta_form(s, 0.9, 0.6, r.frame.w), -2 * r.KN, 1e-11);
  EXPECT_EQ(delta_form(s, 0.9, 0.6, Tangent{}), 0);
}

TEST(Delta, Invariant) {
  const DeltaInvariant d0 = delta_invariant(family1_graph(), 0.5, 0.5);
  EXPECT_NEAR(d0.value(), 0, 1e-12);
  const SurfaceDef s = twisted_cone();
  const GeometryReport r = geometry_report(s, 0.9, 0.6);
  const DeltaInvariant d = delta_invariant(s, 0.9, 0.6);
  EXPECT_NEAR(d.value(), r.K * r.K, 1e-10);
  EXPECT_NEAR(d.mixed, r.K, 1e-11);
}

TEST(Directions, AsymptoticKinds) {
  EXPECT_EQ(asymptotic_directions(synthetic(0, 0.3, 0.1)).kind, DirectionKind::All);
  const DirectionSet d = asymptotic_directions(synthetic(1.2, 0, 0.5));
  EXPECT_EQ(d.kind, DirectionKind::Double);
  ASSERT_EQ(d.directions.size(), 1u);
  EXPECT_EQ(d.directions[0][0], 1);
  EXPECT_EQ(d.directions[0][1], 0);
  const DirectionSet t = asymptotic_directions(synthetic(1.2, 2.0, 1.0));
  EXPECT_EQ(t.kind, DirectionKind::TwoDistinct);
  ASSERT_EQ(t.directions.size(), 2u);
  // (KN/K, 1) = (0.5, 1) normalized.
  EXPECT_NEAR(t.directions[1][0], 0.5 / std::sqrt(1.25), 1e-15);
  EXPECT_NEAR(t.directions[1][1], 1 / std::sqrt(1.25), 1e-15);
}

TEST(Directions, AsymptoticSatisfyDelta) {
  const SurfaceDef s = twisted_cone();
  for (const GridPoint& p : grid(0.5, 1.5, 3, 0, 1, 3)) {
    const GeometryReport r = geometry_report(s, p.x, p.y);
    const DirectionSet d = asymptotic_directions(r);
    ASSERT_EQ(d.kind, DirectionKind::TwoDistinct);
    for (const auto& u : d.directions) {
      EXPECT_NEAR(std::hypot(u[0], u[1]), 1, 1e-14);
      EXPECT_LE(std::abs(delta_form(s, p.x, p.y, r.frame.tangent(u[0], u[1]))), 1e-6);
    }
  }
}

TEST(Directions, FlatConeHasDoubleDirection) {
  const GeometryReport r = geometry_report(flat_cone(), 0.9, 0.4);
  ASSERT_GT(std::abs(r.frame.a), 1e-3);
  ASSERT_LT(std::abs(r.K), 1e-10);
  const DirectionSet d = asymptotic_directions(r);
  EXPECT_EQ(d.kind, DirectionKind::Double);
}

TEST(Directions, MeanCurvatureKinds) {
  EXPECT_EQ(mean_curvature_directions(synthetic(0, 1, 1)).kind, DirectionKind::All);
  const DirectionSet k = mean_curvature_directions(synthetic(1, 2, 0));
  ASSERT_EQ(k.directions.size(), 2u);
  for (const auto& u : k.directions) EXPECT_NEAR(std::abs(u[0]), std::abs(u[1]), 1e-15);
  const DirectionSet red = mean_curvature_directions(synthetic(1, 0, 0.7));
  EXPECT_TRUE(red.reduced);
  ASSERT_EQ(red.directions.size(), 2u);
  EXPECT_THROW(mean_curvature_directions(synthetic(1, 0, 0)), DegenerateFormula);
}

TEST(Directions, MeanCurvatureSatisfyMixedProduct) {
  const SurfaceDef s = twisted_cone();
  for (const GridPoint& p : grid(0.5, 1.5, 3, 0, 1, 3)) {
    const GeometryReport r = geometry_report(s, p.x, p.y);
    for (const auto& u : mean_curvature_directions(r).directions)
      EXPECT_LE(std::abs(mixed_product(r.frame, r.Hvec, r.B(u[0], u[1]))), 1e-10);
  }
}

TEST(MixedProduct, Antisymmetric) {
  const CnndFrame f = cnnd_frame(twisted_cone(), 0.7, 0.2);
  EXPECT_NEAR(mixed_product(f, f.Zperp, f.Wprime), -mixed_product(f, f.Wprime, f.Zperp), 1e-14);
  EXPECT_NEAR(mixed_product(f, f.Zperp, f.Zperp), 0, 1e-14);
  EXPECT_NEAR(std::abs(mixed_product(f, f.n3(), f.n4())), 1, 1e-12);
}

TEST(Ellipse, TwistedCone) {
  const GeometryReport r = geometry_report(twisted_cone(), 0.7, 0.2);
  const EllipseData e = curvature_ellipse(r, 64);
  ASSERT_EQ(e.samples.size(), 64u);
  EXPECT_FALSE(e.degenerate);
  EXPECT_NEAR(e.samples[0].formula[0], r.frame.betaZ, 1e-12);
  EXPECT_NEAR(e.samples[0].formula[1], 0, 1e-12);
  double lit = 0;
  for (const auto& s : e.samples) {
    EXPECT_NEAR(s.formula[0], s.direct[0], 1e-12);
    EXPECT_NEAR(s.formula[1], s.direct[1], 1e-12);
    EXPECT_LE(std::abs(s.implicit_corrected), 1e-12);
    lit = std::max(lit, std::abs(s.implicit_literal));
  }
  // The literal equation uses twice the squared norm of Hstar.
  EXPECT_GT(lit, 0.1);
}

TEST(Ellipse, Family1IsDegenerateSegment) {
  const GeometryReport r = geometry_report(family1_graph(), 1, 0);
  const EllipseData e = curvature_ellipse(r, 16);
  EXPECT_TRUE(e.degenerate);
  const auto c = null_coords(r.frame, Vec4{0, 0, 1, 1});
  EXPECT_NEAR(e.center[0], c[0], 1e-14);
  EXPECT_NEAR(e.center[1], c[1], 1e-14);
  for (const auto& s : e.samples) {
    EXPECT_NEAR(s.formula[0], s.direct[0], 1e-12);
    EXPECT_NEAR(s.formula[1], s.direct[1], 1e-12);
    EXPECT_TRUE(std::isnan(s.implicit_literal));
  }
}

TEST(AdaptedBasis, CoordinatesOfGaussMap) {
  const SurfaceDef s = twisted_cone();
  const CnndFrame f = cnnd_frame(s, 0.7, 0.2);
  const AdaptedBasis b = adapted_basis(f);
  for (const Bivector& E : {b.E1, b.E2, b.E3}) EXPECT_LE(std::abs(h_form(E, E) - 1.0), 1e-12);
  EXPECT_LE(std::abs(h_form(b.E1, b.E2)), 1e-12);
  const auto z = e_coords(b, gauss_map(s, 0.7, 0.2));
  EXPECT_LE(std::abs(z[0] * z[0] + z[1] * z[1] + z[2] * z[2] - 1.0), 1e-12);
  EXPECT_LE(std::abs(z[0] - 1.0), 1e-12);
}

TEST(GaussSuite, Passes) {
  for (const SurfaceDef& s : {twisted_cone(), flat_cone()}) {
    const BatteryReport rep = gauss_suite(s, grid(0.5, 1.5, 4, 0, 1, 4), 1e-6);
    EXPECT_TRUE(rep.passed()) << rep.summary();
  }
  const BatteryReport f1 = gauss_suite(family1_graph(), grid(0.25, 1.25, 4, 0.25, 1.25, 4), 1e-6);
  EXPECT_TRUE(f1.passed()) << f1.summary();
}
