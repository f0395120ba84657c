#pragma once

// Run configuration files.
//
//   # comment            ; comment
//   [surface]
//   kind = explicit
//   psi1 = "cos(x)"
//   Z = 1, 0, 0, 0
//
// Values may be quoted; commas outside quotes separate list items and
// comments start at # or ; outside quotes. Every key belongs to exactly one
// section and unknown sections or keys are rejected with their line number.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cnnd/battery.hpp"
#include "cnnd/pde.hpp"
#include "cnnd/surface.hpp"

namespace cnnd {

struct ConfigValue {
  std::string raw;
  std::size_t line = 0;  // 0 for command-line overrides
};

using ConfigSections = std::map<std::string, std::map<std::string, ConfigValue>>;

ConfigSections parse_ini(const std::string& text);

/// Applies "section.key=value"; the section must be known.
void apply_override(ConfigSections& cfg, const std::string& assignment);

/// Items of a comma list with quotes removed.
std::vector<std::string> split_list(const std::string& raw);

enum class Task { Analyze, Verify, Ellipse, Gauss, PdeCheck, PdeSolve };

const char* to_string(Task t);
std::optional<Task> task_from_string(const std::string& name);

struct RunConfig {
  std::string kind;
  SurfaceDef surface;
  /// Graph-type surfaces (graph, family1, family2) keep f and g.
  std::optional<Expr> f, g;

  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  int nx = 7, ny = 7;

  Task task = Task::Analyze;
  double tol = 1e-6;
  std::optional<GridPoint> point;
  int samples = 64;

  /// pde-solve: g(x0, y), initial guess and reference solution.
  std::optional<Expr> boundary, exact;
  int max_iter = 50;
  double damping = 1.0;
  double tol_resid = 1e-10;
  InitialGuess init = InitialGuess::March;

  std::string out_dir = ".";

  std::vector<GridPoint> points() const { return grid(x0, x1, nx, y0, y1, ny); }
};

/// Throws ConfigError, with the line of the offending key when known.
RunConfig build_run_config(const ConfigSections& cfg);

RunConfig load_run_config(const std::string& path, const std::vector<std::string>& overrides);

}  // namespace cnnd
