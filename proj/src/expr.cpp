#include "cnnd/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cnnd/errors.hpp"
#include "cnnd/lorentz.hpp"
#include "cnnd/spline.hpp"

namespace cnnd {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Expr make(auto node) { return Expr(std::make_shared<const ExprNode>(ExprNode{std::move(node)})); }

struct FunctionName {
  std::string_view name;
  JetFn fn;
};
constexpr std::array<FunctionName, 7> kFunctions{{{"sin", JetFn::Sin},
                                                  {"cos", JetFn::Cos},
                                                  {"sinh", JetFn::Sinh},
                                                  {"cosh", JetFn::Cosh},
                                                  {"exp", JetFn::Exp},
                                                  {"ln", JetFn::Ln},
                                                  {"sqrt", JetFn::Sqrt}}};

std::string_view function_name(JetFn fn) {
  for (const auto& f : kFunctions)
    if (f.fn == fn) return f.name;
  return "?";
}

// ---------------------------------------------------------------- lexer

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
  double number = 0.0;
  bool integral = false;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Number: return "number '" + std::string(t.text) + "'";
    case Tok::Ident: return "identifier '" + std::string(t.text) + "'";
    default: return "'" + std::string(t.text) + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::End, start, {}};
    const char c = src_[pos_];
    auto single = [&](Tok k) {
      ++pos_;
      return Token{k, start, src_.substr(start, 1)};
    };
    switch (c) {
      case '+': return single(Tok::Plus);
      case '-': return single(Tok::Minus);
      case '*': return single(Tok::Star);
      case '/': return single(Tok::Slash);
      case '^': return single(Tok::Caret);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number(start);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      return {Tok::Ident, start, src_.substr(start, pos_ - start)};
    }
    throw SyntaxError(start, {"number", "identifier", "'('", "'-'"},
                      "character '" + std::string(1, c) + "'");
  }

 private:
  bool digit_at(std::size_t i) const {
    return i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]));
  }

  Token number(std::size_t start) {
    bool integral = true;
    while (digit_at(pos_)) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      integral = false;
      ++pos_;
      while (digit_at(pos_)) ++pos_;
    }
    // An exponent is only taken when digits follow; "2e" stays a syntax error
    // rather than silently meaning 2 * e.
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t k = pos_ + 1;
      if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) ++k;
      if (digit_at(k)) {
        integral = false;
        pos_ = k;
        while (digit_at(pos_)) ++pos_;
      }
    }
    const std::string_view text = src_.substr(start, pos_ - start);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw SyntaxError(start, {"number"}, "'" + std::string(text) + "'");
    return {Tok::Number, start, text, value, integral};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- parser

class Parser {
 public:
  Parser(std::string_view src, ExprContext ctx) : lex_(src), ctx_(ctx) { advance(); }

  Expr parse_all() {
    Expr e = expr();
    if (cur_.kind != Tok::End)
      throw SyntaxError(cur_.offset, {"'+'", "'-'", "'*'", "'/'", "end of input"}, describe(cur_));
    return e;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  Expr expr() {
    Expr lhs = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      const BinOp op = cur_.kind == Tok::Plus ? BinOp::Add : BinOp::Sub;
      advance();
      lhs = Expr::binary(op, lhs, term());
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      const BinOp op = cur_.kind == Tok::Star ? BinOp::Mul : BinOp::Div;
      advance();
      lhs = Expr::binary(op, lhs, unary());
    }
    return lhs;
  }

  Expr unary() {
    if (cur_.kind == Tok::Minus) {
      advance();
      return Expr::negate(unary());
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (cur_.kind != Tok::Caret) return base;
    advance();
    bool negative = false;
    if (cur_.kind == Tok::Minus) {
      negative = true;
      advance();
    }
    if (cur_.kind != Tok::Number || !cur_.integral || cur_.number > 1e6)
      throw SyntaxError(cur_.offset, {"integer"}, describe(cur_));
    const int n = static_cast<int>(cur_.number);
    advance();
    return Expr::power(base, negative ? -n : n);
  }

  Expr primary() {
    const Token t = cur_;
    switch (t.kind) {
      case Tok::Number:
        advance();
        return Expr::literal(t.number);
      case Tok::LParen: {
        advance();
        Expr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident: return identifier(t);
      default:
        throw SyntaxError(t.offset, {"number", "identifier", "'('", "'-'"}, describe(t));
    }
  }

  Expr identifier(const Token& t) {
    advance();
    for (const auto& f : kFunctions) {
      if (f.name != t.text) continue;
      expect(Tok::LParen, "'('");
      Expr arg = expr();
      expect(Tok::RParen, "')'");
      return Expr::call(f.fn, arg);
    }
    if (t.text == "pi") return Expr::constant(NamedConstant::Pi);
    if (t.text == "e") return Expr::constant(NamedConstant::E);
    if (ctx_ == ExprContext::Surface) {
      if (t.text == "x") return Expr::variable(Var::X);
      if (t.text == "y") return Expr::variable(Var::Y);
    } else if (t.text == "t") {
      return Expr::variable(Var::T);
    }
    throw UnknownIdentifier(t.offset, std::string(t.text));
  }

  void expect(Tok kind, const char* name) {
    if (cur_.kind != kind) throw SyntaxError(cur_.offset, {name}, describe(cur_));
    advance();
  }

  Lexer lex_;
  ExprContext ctx_;
  Token cur_{Tok::End, 0, {}};
};

// ---------------------------------------------------------------- printer

constexpr int kPrecAdd = 1, kPrecMul = 2, kPrecNeg = 3, kPrecPow = 4, kPrecAtom = 5;

int precedence(const Expr& e) {
  return std::visit(overloaded{[](const BinaryNode& b) {
                                 return (b.op == BinOp::Add || b.op == BinOp::Sub) ? kPrecAdd : kPrecMul;
                               },
                               [](const NegNode&) { return kPrecNeg; },
                               [](const PowerNode&) { return kPrecPow; },
                               [](const LiteralNode& l) { return l.value < 0 ? kPrecNeg : kPrecAtom; },
                               [](const auto&) { return kPrecAtom; }},
                    e.node().value);
}

void print(const Expr& e, std::string& out);

void print_wrapped(const Expr& e, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print(e, out);
  if (wrap) out += ')';
}

void print(const Expr& e, std::string& out) {
  std::visit(overloaded{
                 [&](const LiteralNode& l) { out += shortest_repr(l.value); },
                 [&](const ConstantNode& c) { out += c.which == NamedConstant::Pi ? "pi" : "e"; },
                 [&](const VariableNode& v) { out += v.var == Var::X ? "x" : v.var == Var::Y ? "y" : "t"; },
                 [&](const NegNode& n) {
                   out += '-';
                   print_wrapped(n.operand, precedence(n.operand) < kPrecNeg, out);
                 },
                 [&](const BinaryNode& b) {
                   const int p = (b.op == BinOp::Add || b.op == BinOp::Sub) ? kPrecAdd : kPrecMul;
                   print_wrapped(b.lhs, precedence(b.lhs) < p, out);
                   static constexpr std::array<const char*, 4> sym{" + ", " - ", " * ", " / "};
                   out += sym[static_cast<int>(b.op)];
                   print_wrapped(b.rhs, precedence(b.rhs) <= p, out);
                 },
                 [&](const PowerNode& p) {
                   print_wrapped(p.base, precedence(p.base) < kPrecAtom, out);
                   out += '^';
                   out += std::to_string(p.exponent);
                 },
                 [&](const CallNode& c) {
                   out += function_name(c.fn);
                   out += '(';
                   print(c.arg, out);
                   out += ')';
                 },
                 [&](const TableNode& t) {
                   out += "table(";
                   print(t.arg, out);
                   out += ')';
                 },
             },
             e.node().value);
}

// ---------------------------------------------------------------- evaluation

struct PlainEnv {
  double x, y, t;
};

double evaluate(const Expr& e, const PlainEnv& env) {
  return std::visit(
      overloaded{
          [](const LiteralNode& l) { return l.value; },
          [](const ConstantNode& c) { return c.which == NamedConstant::Pi ? std::numbers::pi : std::numbers::e; },
          [&](const VariableNode& v) { return v.var == Var::X ? env.x : v.var == Var::Y ? env.y : env.t; },
          [&](const NegNode& n) { return -evaluate(n.operand, env); },
          [&](const BinaryNode& b) {
            const double l = evaluate(b.lhs, env), r = evaluate(b.rhs, env);
            switch (b.op) {
              case BinOp::Add: return l + r;
              case BinOp::Sub: return l - r;
              case BinOp::Mul: return l * r;
              case BinOp::Div:
                if (std::abs(r) <= kTolZero) throw DivisionByZero("division by a value near zero");
                return l / r;
            }
            return 0.0;
          },
          [&](const PowerNode& p) {
            const double b = evaluate(p.base, env);
            if (p.exponent < 0 && std::abs(b) <= kTolZero)
              throw DivisionByZero("negative power of a value near zero");
            return std::pow(b, p.exponent);
          },
          [&](const CallNode& c) { return plain_func(c.fn, evaluate(c.arg, env)); },
          [&](const TableNode& t) { return (*t.spline)(evaluate(t.arg, env)).value; },
      },
      e.node().value);
}

struct JetEnv {
  Jet2 x, y, t;
};

Jet2 evaluate(const Expr& e, const JetEnv& env) {
  return std::visit(
      overloaded{
          [](const LiteralNode& l) { return Jet2::constant(l.value); },
          [](const ConstantNode& c) {
            return Jet2::constant(c.which == NamedConstant::Pi ? std::numbers::pi : std::numbers::e);
          },
          [&](const VariableNode& v) { return v.var == Var::X ? env.x : v.var == Var::Y ? env.y : env.t; },
          [&](const NegNode& n) { return -evaluate(n.operand, env); },
          [&](const BinaryNode& b) {
            return jet_arith(static_cast<JetOp>(static_cast<int>(b.op)), evaluate(b.lhs, env),
                             evaluate(b.rhs, env));
          },
          [&](const PowerNode& p) { return pow_int(evaluate(p.base, env), p.exponent); },
          [&](const CallNode& c) { return jet_func(c.fn, evaluate(c.arg, env)); },
          [&](const TableNode& t) {
            const Jet2 a = evaluate(t.arg, env);
            const auto s = (*t.spline)(a.v);
            return chain(a, s.value, s.d1, s.d2);
          },
      },
      e.node().value);
}

// ---------------------------------------------------------------- polynomials

using Poly = std::vector<double>;

Poly poly_add(const Poly& a, const Poly& b, double sign) {
  Poly r(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += sign * b[i];
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

bool is_constant(const Poly& p) {
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] != 0.0) return false;
  return true;
}

std::optional<Poly> to_poly(const Expr& e, Var v) {
  return std::visit(
      overloaded{
          [](const LiteralNode& l) -> std::optional<Poly> { return Poly{l.value}; },
          [](const ConstantNode& c) -> std::optional<Poly> {
            return Poly{c.which == NamedConstant::Pi ? std::numbers::pi : std::numbers::e};
          },
          [&](const VariableNode& n) -> std::optional<Poly> {
            if (n.var == v) return Poly{0.0, 1.0};
            return std::nullopt;
          },
          [&](const NegNode& n) -> std::optional<Poly> {
            auto p = to_poly(n.operand, v);
            if (!p) return std::nullopt;
            for (auto& c : *p) c = -c;
            return p;
          },
          [&](const BinaryNode& b) -> std::optional<Poly> {
            auto l = to_poly(b.lhs, v);
            auto r = to_poly(b.rhs, v);
            if (!l || !r) return std::nullopt;
            switch (b.op) {
              case BinOp::Add: return poly_add(*l, *r, 1.0);
              case BinOp::Sub: return poly_add(*l, *r, -1.0);
              case BinOp::Mul: return poly_mul(*l, *r);
              case BinOp::Div: {
                if (!is_constant(*r) || (*r)[0] == 0.0) return std::nullopt;
                for (auto& c : *l) c /= (*r)[0];
                return l;
              }
            }
            return std::nullopt;
          },
          [&](const PowerNode& p) -> std::optional<Poly> {
            auto base = to_poly(p.base, v);
            if (!base || p.exponent < 0) return std::nullopt;
            Poly r{1.0};
            for (int i = 0; i < p.exponent; ++i) r = poly_mul(r, *base);
            return r;
          },
          [](const auto&) -> std::optional<Poly> { return std::nullopt; },
      },
      e.node().value);
}

}  // namespace

// ---------------------------------------------------------------- public API

Expr Expr::literal(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("expression literal must be finite");
  if (std::signbit(v) && v != 0.0) return negate(make(LiteralNode{-v}));
  return make(LiteralNode{v == 0.0 ? 0.0 : v});
}
Expr Expr::constant(NamedConstant c) { return make(ConstantNode{c}); }
Expr Expr::variable(Var v) { return make(VariableNode{v}); }
Expr Expr::negate(Expr e) { return make(NegNode{std::move(e)}); }
Expr Expr::binary(BinOp op, Expr lhs, Expr rhs) { return make(BinaryNode{op, std::move(lhs), std::move(rhs)}); }
Expr Expr::power(Expr base, int exponent) { return make(PowerNode{std::move(base), exponent}); }
Expr Expr::call(JetFn fn, Expr arg) { return make(CallNode{fn, std::move(arg)}); }
Expr Expr::table(std::shared_ptr<const CubicSpline> spline, Expr arg) {
  return make(TableNode{std::move(spline), std::move(arg)});
}

Expr parse(std::string_view src, ExprContext ctx) { return Parser(src, ctx).parse_all(); }

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

std::string shortest_repr(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw std::runtime_error("float formatting failed");
  return std::string(buf.data(), ptr);
}

bool structurally_equal(const Expr& a, const Expr& b) {
  const auto& va = a.node().value;
  const auto& vb = b.node().value;
  if (va.index() != vb.index()) return false;
  return std::visit(
      overloaded{
          [&](const LiteralNode& l) { return l.value == std::get<LiteralNode>(vb).value; },
          [&](const ConstantNode& c) { return c.which == std::get<ConstantNode>(vb).which; },
          [&](const VariableNode& v) { return v.var == std::get<VariableNode>(vb).var; },
          [&](const NegNode& n) { return structurally_equal(n.operand, std::get<NegNode>(vb).operand); },
          [&](const BinaryNode& n) {
            const auto& o = std::get<BinaryNode>(vb);
            return n.op == o.op && structurally_equal(n.lhs, o.lhs) && structurally_equal(n.rhs, o.rhs);
          },
          [&](const PowerNode& n) {
            const auto& o = std::get<PowerNode>(vb);
            return n.exponent == o.exponent && structurally_equal(n.base, o.base);
          },
          [&](const CallNode& n) {
            const auto& o = std::get<CallNode>(vb);
            return n.fn == o.fn && structurally_equal(n.arg, o.arg);
          },
          [&](const TableNode& n) {
            const auto& o = std::get<TableNode>(vb);
            return n.spline == o.spline && structurally_equal(n.arg, o.arg);
          },
      },
      va);
}

double eval(const Expr& e, double x, double y) { return evaluate(e, PlainEnv{x, y, 0.0}); }
double eval_curve(const Expr& e, double t) { return evaluate(e, PlainEnv{0.0, 0.0, t}); }

Jet2 eval_jet(const Expr& e, double x, double y) {
  return evaluate(e, JetEnv{Jet2::var_x(x), Jet2::var_y(y), Jet2::constant(0.0)});
}

Jet2 eval_curve_jet(const Expr& e, double t) {
  return evaluate(e, JetEnv{Jet2::constant(0.0), Jet2::constant(0.0), Jet2::var_x(t)});
}

Expr substitute(const Expr& e, Var v, const Expr& r) {
  return std::visit(
      overloaded{
          [&](const VariableNode& n) { return n.var == v ? r : e; },
          [&](const NegNode& n) { return Expr::negate(substitute(n.operand, v, r)); },
          [&](const BinaryNode& n) {
            return Expr::binary(n.op, substitute(n.lhs, v, r), substitute(n.rhs, v, r));
          },
          [&](const PowerNode& n) { return Expr::power(substitute(n.base, v, r), n.exponent); },
          [&](const CallNode& n) { return Expr::call(n.fn, substitute(n.arg, v, r)); },
          [&](const TableNode& n) { return Expr::table(n.spline, substitute(n.arg, v, r)); },
          [&](const auto&) { return e; },
      },
      e.node().value);
}

std::optional<std::vector<double>> as_polynomial(const Expr& e, Var v) { return to_poly(e, v); }

Expr polynomial_expr(const std::vector<double>& coeffs, const Expr& arg) {
  Expr sum;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0.0) continue;
    Expr term;
    if (k == 0) {
      term = Expr::literal(std::abs(coeffs[k]));
    } else {
      Expr mono = k == 1 ? arg : Expr::power(arg, static_cast<int>(k));
      term = std::abs(coeffs[k]) == 1.0 ? mono : Expr::literal(std::abs(coeffs[k])) * mono;
    }
    if (sum.empty())
      sum = coeffs[k] < 0 ? -term : term;
    else
      sum = coeffs[k] < 0 ? sum - term : sum + term;
  }
  return sum.empty() ? Expr::literal(0.0) : sum;
}

}  // namespace cnnd
