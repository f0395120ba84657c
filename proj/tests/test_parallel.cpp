#include <gtest/gtest.h>
#include <omp.h>

#include <cmath>

#include "cnnd/battery.hpp"
#include "cnnd/constructions.hpp"
#include "cnnd/errors.hpp"
#include "cnnd/gauss_map.hpp"
#include "cnnd/pde.hpp"

using namespace cnnd;

namespace {

// Forces a real team even on a single core so scheduling differences show up.
class Parallel : public ::testing::Test {
 protected:
  void SetUp() override {
    saved_ = omp_get_max_threads();
    omp_set_num_threads(4);
  }
  void TearDown() override { omp_set_num_threads(saved_); }

 private:
  int saved_ = 1;
};

SurfaceDef twisted_cone() {
  return explicit_surface(std::array<std::string, 4>{"x", "(x + 0.3*x^2)*cos(y) + sin(y)",
                                                     "(x + 0.3*x^2)*sin(y) - cos(y)", "x + 0.3*x^2 + y"},
                          Vec4{1, 0, 0, 0});
}

// Bitwise equality with NaN == NaN.
void expect_same(const BatteryReport& a, const BatteryReport& b) {
  ASSERT_EQ(a.residuals.size(), b.residuals.size());
  for (std::size_t i = 0; i < a.residuals.size(); ++i)
    for (std::size_t k = 0; k < a.residuals[i].size(); ++k) {
      const double u = a.residuals[i][k], v = b.residuals[i][k];
      EXPECT_TRUE((std::isnan(u) && std::isnan(v)) || u == v) << i << ' ' << k;
    }
  EXPECT_EQ(a.degenerate.size(), b.degenerate.size());
  EXPECT_EQ(a.csv(), b.csv());
}

}  // namespace

TEST_F(Parallel, BatteryMatchesSerial) {
  const auto [f, g] = family1(parse("t^2", ExprContext::Curve), 0.0);
  const SurfaceDef s = graph_surface(f, g);
  const auto pts = grid(-1, 1, 9, -1, 1, 9);
  expect_same(identity_battery(s, pts, 1e-5), identity_battery_serial(s, pts, 1e-5));
  const auto cone = grid(0.5, 1.5, 8, 0, 1, 8);
  expect_same(identity_battery(twisted_cone(), cone, 1e-5), identity_battery_serial(twisted_cone(), cone, 1e-5));
}

TEST_F(Parallel, GaussSuiteMatchesSerial) {
  const auto pts = grid(0.5, 1.5, 8, 0, 1, 8);
  expect_same(gauss_suite(twisted_cone(), pts, 1e-6), gauss_suite_serial(twisted_cone(), pts, 1e-6));
}

TEST_F(Parallel, FirstErrorInPointOrder) {
  const SurfaceDef s = explicit_surface(std::array<std::string, 4>{"cos(x)", "sin(x)", "sinh(y)", "cosh(y)"},
                                        Vec4{1, 0, 0, 0});
  const auto pts = grid(0.2, 3.0, 10, 0, 1, 1);
  std::string par, ser;
  try {
    identity_battery(s, pts, 1e-5);
  } catch (const NotCnnd& e) {
    par = e.what();
  }
  try {
    identity_battery_serial(s, pts, 1e-5);
  } catch (const NotCnnd& e) {
    ser = e.what();
  }
  EXPECT_FALSE(par.empty());
  EXPECT_EQ(par, ser);
}

TEST_F(Parallel, PdeKernelsMatchSerial) {
  GraphPDEProblem p;
  p.f = parse("sin(x) * y + x^2 / 3");
  p.nx = 17;
  p.ny = 13;
  const GraphPdeSystem sys(p);
  std::vector<double> g(static_cast<std::size_t>(p.nx) * p.ny);
  for (std::size_t k = 0; k < g.size(); ++k) g[k] = std::sin(0.37 * k);
  EXPECT_EQ(sys.node_residuals(g, true), sys.node_residuals(g, false));
  EXPECT_EQ(sys.residuals(g, true), sys.residuals(g, false));
  const auto a = sys.jacobian(g, true), b = sys.jacobian(g, false);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].row, b[k].row);
    EXPECT_EQ(a[k].col, b[k].col);
    EXPECT_EQ(a[k].value, b[k].value);
  }
}

TEST_F(Parallel, ResidualGridMatchesSerial) {
  const auto [f, g] = family1(parse("sin(t)", ExprContext::Curve), 1.0);
  const Expr h = parse("x * y");
  const auto pts = grid(-1, 1, 31, -1, 1, 31);
  EXPECT_EQ(residual_grid(f, h, pts, true), residual_grid(f, h, pts, false));
  EXPECT_EQ(residual_grid(f, g, pts, true), residual_grid(f, g, pts, false));
}
