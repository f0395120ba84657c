#include <gtest/gtest.h>

#include <random>

#include "cnnd/errors.hpp"
#include "cnnd/expr.hpp"

using namespace cnnd;

namespace {

template <class T>
const T& as(const Expr& e) {
  return std::get<T>(e.node().value);
}

Expr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 7);
  std::uniform_real_distribution<double> val(0.0, 10.0);
  switch (pick(rng)) {
    case 0: return Expr::literal(std::uniform_int_distribution<int>(0, 1)(rng) ? val(rng) : std::round(val(rng)));
    case 1: return Expr::variable(std::uniform_int_distribution<int>(0, 1)(rng) ? Var::X : Var::Y);
    case 2: return Expr::constant(std::uniform_int_distribution<int>(0, 1)(rng) ? NamedConstant::Pi : NamedConstant::E);
    case 3: return Expr::negate(random_expr(rng, depth - 1));
    case 4: return Expr::power(random_expr(rng, depth - 1), std::uniform_int_distribution<int>(-3, 4)(rng));
    case 5: {
      static constexpr JetFn fns[] = {JetFn::Sin, JetFn::Cos, JetFn::Sinh, JetFn::Cosh,
                                      JetFn::Exp, JetFn::Ln,  JetFn::Sqrt};
      return Expr::call(fns[std::uniform_int_distribution<int>(0, 6)(rng)], random_expr(rng, depth - 1));
    }
    default: {
      const auto op = static_cast<BinOp>(std::uniform_int_distribution<int>(0, 3)(rng));
      return Expr::binary(op, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    }
  }
}

}  // namespace

TEST(Parse, Call) {
  const Expr e = parse("cos(x)");
  const auto& c = as<CallNode>(e);
  EXPECT_EQ(c.fn, JetFn::Cos);
  EXPECT_EQ(as<VariableNode>(c.arg).var, Var::X);
}

TEST(Parse, Precedence) {
  const Expr e = parse("(x+y)^2 / 2");
  const auto& div = as<BinaryNode>(e);
  EXPECT_EQ(div.op, BinOp::Div);
  EXPECT_EQ(as<LiteralNode>(div.rhs).value, 2.0);
  const auto& pw = as<PowerNode>(div.lhs);
  EXPECT_EQ(pw.exponent, 2);
  EXPECT_EQ(as<BinaryNode>(pw.base).op, BinOp::Add);
  EXPECT_TRUE(structurally_equal(parse("-x^2"), Expr::negate(Expr::power(Expr::variable(Var::X), 2))));
  EXPECT_TRUE(structurally_equal(parse("x - y - 1"), parse("(x - y) - 1")));
  EXPECT_TRUE(structurally_equal(parse("x / y * 2"), parse("(x / y) * 2")));
}

TEST(Parse, SyntaxErrorOffset) {
  try {
    parse("x + * y");
    FAIL() << "no error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(parse(""), SyntaxError);
  EXPECT_THROW(parse("(x + y"), SyntaxError);
  EXPECT_THROW(parse("x y"), SyntaxError);
  EXPECT_THROW(parse("x^1.5"), SyntaxError);
}

TEST(Parse, UnknownIdentifier) {
  try {
    parse("2 * tan(x)");
    FAIL() << "no error";
  } catch (const UnknownIdentifier& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_EQ(e.name(), "tan");
  }
  EXPECT_THROW(parse("t + 1", ExprContext::Surface), UnknownIdentifier);
  EXPECT_THROW(parse("x + 1", ExprContext::Curve), UnknownIdentifier);
  EXPECT_NO_THROW(parse("t^2 + pi", ExprContext::Curve));
}

TEST(EvalJet, Examples) {
  const Jet2 j = eval_jet(parse("(x+y)^2/2"), 1, 0);
  EXPECT_DOUBLE_EQ(j.v, 0.5);
  EXPECT_DOUBLE_EQ(j.dx, 1);
  EXPECT_DOUBLE_EQ(j.dy, 1);
  EXPECT_DOUBLE_EQ(j.dxx, 1);
  EXPECT_DOUBLE_EQ(j.dxy, 1);
  EXPECT_DOUBLE_EQ(j.dyy, 1);
  const Jet2 x = eval_jet(parse("x"), 0.7, -2);
  EXPECT_EQ(x.v, 0.7);
  EXPECT_EQ(x.dx, 1);
  EXPECT_EQ(x.dy + x.dxx + x.dxy + x.dyy, 0);
  const Jet2 s = eval_jet(parse("sinh(y)"), 0, 0);
  EXPECT_EQ(s.v, 0);
  EXPECT_EQ(s.dy, 1);
  EXPECT_EQ(s.dyy, 0);
}

TEST(EvalJet, CurveChannels) {
  const Jet2 j = eval_curve_jet(parse("t^3", ExprContext::Curve), 2);
  EXPECT_DOUBLE_EQ(j.v, 8);
  EXPECT_DOUBLE_EQ(j.dx, 12);
  EXPECT_DOUBLE_EQ(j.dxx, 12);
  EXPECT_DOUBLE_EQ(eval_curve(parse("cos(t)", ExprContext::Curve), 0), 1);
}

TEST(Eval, DivisionByZero) {
  EXPECT_THROW(eval(parse("1 / (x - y)"), 1, 1), DivisionByZero);
  EXPECT_THROW(eval(parse("ln(x)"), -1, 0), DomainError);
}

TEST(Print, MinimalParentheses) {
  EXPECT_EQ(to_string(parse("(x+y)^2 / 2")), "(x + y)^2 / 2");
  EXPECT_EQ(to_string(parse("x - (y - 1)")), "x - (y - 1)");
  EXPECT_EQ(to_string(parse("((x))*(y)")), "x * y");
  EXPECT_EQ(to_string(parse("-(x+1)")), "-(x + 1)");
  EXPECT_EQ(to_string(parse("x^-2")), "x^-2");
}

TEST(Print, RoundTripRandomTrees) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 100; ++k) {
    const Expr e = random_expr(rng, 5);
    const std::string src = to_string(e);
    const Expr back = parse(src);
    EXPECT_TRUE(structurally_equal(e, back)) << src;
    EXPECT_EQ(to_string(back), src);
  }
}

TEST(Substitute, ReplacesVariable) {
  const Expr a = parse("t^2 + 1", ExprContext::Curve);
  const Expr s = substitute(a, Var::T, parse("x + y"));
  EXPECT_EQ(to_string(s), "(x + y)^2 + 1");
  EXPECT_DOUBLE_EQ(eval(s, 0.5, 1.5), 5.0);
}

TEST(Polynomial, Coefficients) {
  const auto p = as_polynomial(parse("2 + t^2/4 - 3*t", ExprContext::Curve), Var::T);
  ASSERT_TRUE(p);
  ASSERT_GE(p->size(), 3u);
  EXPECT_DOUBLE_EQ((*p)[0], 2);
  EXPECT_DOUBLE_EQ((*p)[1], -3);
  EXPECT_DOUBLE_EQ((*p)[2], 0.25);
  EXPECT_FALSE(as_polynomial(parse("cos(t)", ExprContext::Curve), Var::T));
  EXPECT_FALSE(as_polynomial(parse("1 / t", ExprContext::Curve), Var::T));
  const Expr q = polynomial_expr({1, 0, 3}, Expr::variable(Var::X));
  EXPECT_DOUBLE_EQ(eval(q, 2, 0), 13);
}

TEST(ShortestRepr, RoundTrips) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int k = 0; k < 1000; ++k) {
    const double v = u(rng);
    EXPECT_EQ(std::stod(shortest_repr(v)), v);
  }
  EXPECT_EQ(shortest_repr(0.1), "0.1");
  EXPECT_EQ(shortest_repr(3.0), "3");
}
