#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cnnd {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found);
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class UnknownIdentifier : public Error {
 public:
  UnknownIdentifier(std::size_t offset, const std::string& name);
  std::size_t offset() const { return offset_; }
  const std::string& name() const { return name_; }

 private:
  std::size_t offset_;
  std::string name_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Raised by per-point geometry; carries the parameter point.
class PointError : public Error {
 public:
  PointError(const std::string& what, double x, double y);
  double x() const { return x_; }
  double y() const { return y_; }

 private:
  double x_, y_;
};

class NotSpacelike : public PointError {
 public:
  using PointError::PointError;
};

class NotCnnd : public PointError {
 public:
  NotCnnd(double x, double y, double zperp_norm2);
  double zperp_norm2() const { return zperp_norm2_; }

 private:
  double zperp_norm2_;
};

class DegenerateZperp : public PointError {
 public:
  DegenerateZperp(double x, double y);
};

class BetaResidual : public PointError {
 public:
  BetaResidual(double x, double y, double residual);
  double residual() const { return residual_; }

 private:
  double residual_;
};

class AZero : public Error {
 public:
  using Error::Error;
};

class DegenerateFormula : public Error {
 public:
  using Error::Error;
};

class AlphaVanishes : public Error {
 public:
  using Error::Error;
};

class Diverged : public Error {
 public:
  using Error::Error;
};

class SingularJacobian : public Error {
 public:
  SingularJacobian(std::size_t node_i, std::size_t node_j);
  std::size_t node_i() const { return i_; }
  std::size_t node_j() const { return j_; }

 private:
  std::size_t i_, j_;
};

/// Configuration file problems; line is 1-based, 0 when not tied to a line.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, std::size_t line = 0);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cnnd
