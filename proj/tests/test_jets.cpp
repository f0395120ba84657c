#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "cnnd/errors.hpp"
#include "cnnd/jets.hpp"

using namespace cnnd;

namespace {

struct Fd {
  double dx, dy, dxx, dxy, dyy;
};

// Central differences of a plain function; h = 1e-4 for first and 1e-3 for
// second derivatives keeps truncation and rounding both near 1e-8.
Fd finite_differences(const std::function<double(double, double)>& f, double x, double y) {
  const double h1 = 1e-4, h2 = 1e-3;
  Fd d;
  d.dx = (f(x + h1, y) - f(x - h1, y)) / (2 * h1);
  d.dy = (f(x, y + h1) - f(x, y - h1)) / (2 * h1);
  d.dxx = (f(x + h2, y) - 2 * f(x, y) + f(x - h2, y)) / (h2 * h2);
  d.dyy = (f(x, y + h2) - 2 * f(x, y) + f(x, y - h2)) / (h2 * h2);
  d.dxy = (f(x + h2, y + h2) - f(x + h2, y - h2) - f(x - h2, y + h2) + f(x - h2, y - h2)) / (4 * h2 * h2);
  return d;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

void expect_matches_fd(const Jet2& j, const Fd& d, double tol) {
  EXPECT_LE(rel(j.dx, d.dx), tol);
  EXPECT_LE(rel(j.dy, d.dy), tol);
  EXPECT_LE(rel(j.dxx, d.dxx), tol);
  EXPECT_LE(rel(j.dxy, d.dxy), tol);
  EXPECT_LE(rel(j.dyy, d.dyy), tol);
}

}  // namespace

TEST(Jet2, ProductRule) {
  const Jet2 p = Jet2::var_x(2) * Jet2::var_y(3);
  EXPECT_EQ(p.v, 6);
  EXPECT_EQ(p.dx, 3);
  EXPECT_EQ(p.dy, 2);
  EXPECT_EQ(p.dxy, 1);
  EXPECT_EQ(p.dxx, 0);
  EXPECT_EQ(p.dyy, 0);
}

TEST(Jet2, AddNegIsZero) {
  const Jet2 a = sin(Jet2::var_x(0.3) * Jet2::var_y(1.1));
  const Jet2 z = jet_arith(JetOp::Add, a, jet_arith(JetOp::Neg, a, Jet2{}));
  EXPECT_EQ(z.v, 0);
  EXPECT_EQ(z.dx, 0);
  EXPECT_EQ(z.dy, 0);
  EXPECT_EQ(z.dxx, 0);
  EXPECT_EQ(z.dxy, 0);
  EXPECT_EQ(z.dyy, 0);
}

TEST(Jet2, Reciprocal) {
  const Jet2 r = Jet2::constant(1) / Jet2::var_x(2);
  EXPECT_DOUBLE_EQ(r.v, 0.5);
  EXPECT_DOUBLE_EQ(r.dx, -0.25);
  EXPECT_DOUBLE_EQ(r.dxx, 0.25);
  EXPECT_THROW(Jet2::constant(1) / Jet2::var_x(0), DivisionByZero);
}

TEST(Jet2, ElementaryAtOrigin) {
  const Jet2 s = sin(Jet2::var_x(0));
  EXPECT_EQ(s.v, 0);
  EXPECT_EQ(s.dx, 1);
  EXPECT_EQ(s.dxx, 0);
  const Jet2 c = cosh(Jet2::var_y(0));
  EXPECT_EQ(c.v, 1);
  EXPECT_EQ(c.dy, 0);
  EXPECT_EQ(c.dyy, 1);
  const Jet2 e = exp(Jet2::var_x(1));
  EXPECT_DOUBLE_EQ(e.v, std::exp(1.0));
  EXPECT_DOUBLE_EQ(e.dx, std::exp(1.0));
  EXPECT_DOUBLE_EQ(e.dxx, std::exp(1.0));
}

TEST(Jet2, ElementaryFunctionsMatchFiniteDifferences) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(0.2, 1.5), uy(-1.0, 1.0);
  for (JetFn fn : {JetFn::Sin, JetFn::Cos, JetFn::Sinh, JetFn::Cosh, JetFn::Exp, JetFn::Ln, JetFn::Sqrt}) {
    for (int k = 0; k < 50; ++k) {
      const double x = ux(rng), y = uy(rng);
      // Argument x^2 + x y + 1 is positive on the sample box and mixes both variables.
      auto arg = [](double x, double y) { return x * x + x * y + 1.0; };
      const Jet2 a = Jet2::var_x(x) * Jet2::var_x(x) + Jet2::var_x(x) * Jet2::var_y(y) + Jet2::constant(1);
      const Jet2 j = jet_func(fn, a);
      EXPECT_NEAR(j.v, plain_func(fn, arg(x, y)), 1e-14 * std::max(1.0, std::abs(j.v)));
      expect_matches_fd(j, finite_differences([&](double s, double t) { return plain_func(fn, arg(s, t)); }, x, y), 1e-5);
    }
  }
}

TEST(Jet2, QuotientAndPowersMatchFiniteDifferences) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.3, 2.0);
  for (int k = 0; k < 50; ++k) {
    const double x = u(rng), y = u(rng);
    const Jet2 X = Jet2::var_x(x), Y = Jet2::var_y(y);
    const Jet2 q = sin(X) / (Y * Y + X);
    expect_matches_fd(q, finite_differences([](double s, double t) { return std::sin(s) / (t * t + s); }, x, y), 1e-5);
    const Jet2 p = pow_int(X - Y, 3);
    expect_matches_fd(p, finite_differences([](double s, double t) { return std::pow(s - t, 3); }, x, y), 1e-5);
    const Jet2 n = pow_int(X + Y, -2);
    expect_matches_fd(n, finite_differences([](double s, double t) { return std::pow(s + t, -2); }, x, y), 1e-5);
    const Jet2 r = pow_const(X * Y, 1.5);
    expect_matches_fd(r, finite_differences([](double s, double t) { return std::pow(s * t, 1.5); }, x, y), 1e-5);
  }
}

TEST(Jet2, DomainErrors) {
  EXPECT_THROW(log(Jet2::var_x(-1)), DomainError);
  EXPECT_THROW(sqrt(Jet2::var_x(-1)), DomainError);
}

TEST(Jet1, PartialsOfJet2) {
  const Jet2 f = sin(Jet2::var_x(0.4)) * exp(Jet2::var_y(0.2));
  const Jet1 fx = partial_x(f);
  EXPECT_DOUBLE_EQ(fx.v, f.dx);
  EXPECT_DOUBLE_EQ(fx.dx, f.dxx);
  EXPECT_DOUBLE_EQ(fx.dy, f.dxy);
  EXPECT_DOUBLE_EQ(fx.along(2.0, -1.0), 2.0 * f.dxx - f.dxy);
  const Jet1 q = Jet1{2, 1, 0} / Jet1{4, 0, 1};
  EXPECT_DOUBLE_EQ(q.v, 0.5);
  EXPECT_DOUBLE_EQ(q.dx, 0.25);
  EXPECT_DOUBLE_EQ(q.dy, -0.125);
  const Jet1 s = sqrt(Jet1{4, 1, 2});
  EXPECT_DOUBLE_EQ(s.v, 2);
  EXPECT_DOUBLE_EQ(s.dx, 0.25);
  EXPECT_DOUBLE_EQ(s.dy, 0.5);
}
