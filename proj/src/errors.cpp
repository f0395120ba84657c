#include "cnnd/errors.hpp"

#include <sstream>

namespace cnnd {

namespace {

std::string syntax_message(std::size_t offset, const std::vector<std::string>& expected,
                           const std::string& found) {
  std::ostringstream os;
  os << "syntax error at offset " << offset << ": found " << found << ", expected one of {";
  for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
  os << "}";
  return os.str();
}

std::string at_point(const std::string& what, double x, double y) {
  std::ostringstream os;
  os.precision(17);
  os << what << " at (" << x << ", " << y << ")";
  return os.str();
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected,
                         const std::string& found)
    : Error(syntax_message(offset, expected, found)), offset_(offset), expected_(std::move(expected)) {}

UnknownIdentifier::UnknownIdentifier(std::size_t offset, const std::string& name)
    : Error("unknown identifier '" + name + "' at offset " + std::to_string(offset)),
      offset_(offset),
      name_(name) {}

PointError::PointError(const std::string& what, double x, double y)
    : Error(at_point(what, x, y)), x_(x), y_(y) {}

NotCnnd::NotCnnd(double x, double y, double zperp_norm2)
    : PointError("normal part of Z is not lightlike (<Zperp,Zperp> = " + std::to_string(zperp_norm2) + ")",
                 x, y),
      zperp_norm2_(zperp_norm2) {}

DegenerateZperp::DegenerateZperp(double x, double y)
    : PointError("normal part of Z vanishes", x, y) {}

BetaResidual::BetaResidual(double x, double y, double residual)
    : PointError("B(., Ztop) is not parallel to Zperp (residual " + std::to_string(residual) + ")", x, y),
      residual_(residual) {}

SingularJacobian::SingularJacobian(std::size_t node_i, std::size_t node_j)
    : Error("Jacobian lost rank at grid node (" + std::to_string(node_i) + ", " +
            std::to_string(node_j) + ")"),
      i_(node_i),
      j_(node_j) {}

ConfigError::ConfigError(const std::string& what, std::size_t line)
    : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

}  // namespace cnnd
