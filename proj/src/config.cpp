#include "cnnd/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "cnnd/constructions.hpp"
#include "cnnd/errors.hpp"

namespace cnnd {

namespace {

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s{
      {"surface", {"kind", "psi1", "psi2", "psi3", "psi4", "f", "g", "alpha", "delta", "direction", "c", "k", "Z"}},
      {"domain", {"x", "y", "nx", "ny"}},
      {"task", {"name", "tol", "point", "samples", "boundary", "exact", "max_iter", "damping", "tol_resid", "init"}},
      {"output", {"dir"}},
  };
  return s;
}

const std::map<std::string, std::set<std::string>>& kind_keys() {
  static const std::map<std::string, std::set<std::string>> s{
      {"explicit", {"psi1", "psi2", "psi3", "psi4"}},
      {"graph", {"f", "g"}},
      {"family1", {"alpha", "k"}},
      {"family2", {"alpha", "c", "k"}},
      {"translation", {"alpha", "delta"}},
      {"ruled", {"alpha", "direction"}},
  };
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Drops a trailing comment; fails on an unterminated quote.
std::string strip_comment(const std::string& line, std::size_t lineno) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (!quoted && (line[i] == '#' || line[i] == ';')) return line.substr(0, i);
  }
  if (quoted) throw ConfigError("unterminated quote", lineno);
  return line;
}

std::string unquote(const std::string& s) {
  const std::string t = trim(s);
  if (t.size() >= 2 && t.front() == '"' && t.back() == '"') return t.substr(1, t.size() - 2);
  return t;
}

void check_key(const std::string& section, const std::string& key, std::size_t line) {
  const auto& sch = schema();
  const auto it = sch.find(section);
  if (it == sch.end()) throw ConfigError("unknown section [" + section + "]", line);
  if (!it->second.count(key)) throw ConfigError("unknown key '" + key + "' in [" + section + "]", line);
}

class Reader {
 public:
  explicit Reader(const ConfigSections& cfg) : cfg_(cfg) {}

  const ConfigValue* find(const std::string& section, const std::string& key) const {
    const auto s = cfg_.find(section);
    if (s == cfg_.end()) return nullptr;
    const auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
  }

  const ConfigValue& require(const std::string& section, const std::string& key) const {
    const ConfigValue* v = find(section, key);
    if (!v) throw ConfigError("missing " + section + "." + key);
    return *v;
  }

  static double number(const ConfigValue& v, const std::string& what) {
    return parse_number(unquote(v.raw), what, v.line);
  }

  static double parse_number(const std::string& s, const std::string& what, std::size_t line) {
    double out = 0.0;
    const char* end = s.data() + s.size();
    const auto r = std::from_chars(s.data(), end, out);
    if (s.empty() || r.ec != std::errc() || r.ptr != end) throw ConfigError(what + ": not a number: '" + s + "'", line);
    return out;
  }

  static int integer(const ConfigValue& v, const std::string& what) {
    const std::string s = unquote(v.raw);
    int out = 0;
    const char* end = s.data() + s.size();
    const auto r = std::from_chars(s.data(), end, out);
    if (s.empty() || r.ec != std::errc() || r.ptr != end) throw ConfigError(what + ": not an integer: '" + s + "'", v.line);
    return out;
  }

  static std::vector<double> numbers(const ConfigValue& v, const std::string& what, std::size_t count) {
    const auto items = split_list(v.raw);
    if (items.size() != count)
      throw ConfigError(what + ": expected " + std::to_string(count) + " values, got " + std::to_string(items.size()), v.line);
    std::vector<double> out;
    for (const auto& s : items) out.push_back(parse_number(s, what, v.line));
    return out;
  }

  static Expr expr(const std::string& src, ExprContext ctx, const std::string& what, std::size_t line) {
    try {
      return parse(src, ctx);
    } catch (const Error& e) {
      throw ConfigError(what + ": " + e.what(), line);
    }
  }

  Expr expr(const std::string& section, const std::string& key, ExprContext ctx) const {
    const ConfigValue& v = require(section, key);
    return expr(unquote(v.raw), ctx, section + "." + key, v.line);
  }

  CurveExprs curve4(const std::string& key) const {
    const ConfigValue& v = require("surface", key);
    const auto items = split_list(v.raw);
    if (items.size() != 4) throw ConfigError("surface." + key + ": expected 4 components", v.line);
    CurveExprs c;
    for (std::size_t i = 0; i < 4; ++i) c[i] = expr(items[i], ExprContext::Curve, "surface." + key, v.line);
    return c;
  }

 private:
  const ConfigSections& cfg_;
};

void build_surface(const Reader& rd, RunConfig& rc) {
  const ConfigValue& kind = rd.require("surface", "kind");
  rc.kind = unquote(kind.raw);
  const auto kk = kind_keys().find(rc.kind);
  if (kk == kind_keys().end()) throw ConfigError("unknown surface kind '" + rc.kind + "'", kind.line);
  for (const auto& key : schema().at("surface")) {
    if (key == "kind" || key == "Z" || kk->second.count(key)) continue;
    if (const ConfigValue* v = rd.find("surface", key))
      throw ConfigError("key '" + key + "' is not used by kind " + rc.kind, v->line);
  }

  Vec4 Z{1, 0, 0, 0};
  if (const ConfigValue* v = rd.find("surface", "Z")) {
    const auto z = Reader::numbers(*v, "surface.Z", 4);
    Z = Vec4{z[0], z[1], z[2], z[3]};
    if (euclid_norm(Z) <= kTolZero) throw ConfigError("surface.Z must be nonzero", v->line);
  }
  auto k_value = [&] {
    const ConfigValue* v = rd.find("surface", "k");
    return v ? Reader::number(*v, "surface.k") : 0.0;
  };

  if (rc.kind == "explicit") {
    std::array<Expr, 4> psi;
    for (std::size_t i = 0; i < 4; ++i) psi[i] = rd.expr("surface", "psi" + std::to_string(i + 1), ExprContext::Surface);
    rc.surface = explicit_surface(psi, Z);
  } else if (rc.kind == "graph") {
    rc.f = rd.expr("surface", "f", ExprContext::Surface);
    rc.g = rd.expr("surface", "g", ExprContext::Surface);
  } else if (rc.kind == "family1") {
    std::tie(rc.f, rc.g) = family1(rd.expr("surface", "alpha", ExprContext::Curve), k_value());
  } else if (rc.kind == "family2") {
    const Expr alpha = rd.expr("surface", "alpha", ExprContext::Curve);
    const Expr c = rd.find("surface", "c") ? rd.expr("surface", "c", ExprContext::Curve) : Expr::literal(0.0);
    try {
      const Family2 fam = family2(alpha, c, k_value(), Rect{rc.x0, rc.x1, rc.y0, rc.y1});
      rc.f = fam.f;
      rc.g = fam.g;
    } catch (const AlphaVanishes& e) {
      throw ConfigError(std::string("surface.alpha: ") + e.what(), rd.require("surface", "alpha").line);
    }
  } else if (rc.kind == "translation") {
    rc.surface = translation_surface(rd.curve4("alpha"), rd.curve4("delta"), Z);
  } else {
    rc.surface = ruled_surface(rd.curve4("alpha"), rd.curve4("direction"), Z);
  }
  if (rc.f) rc.surface = graph_surface(*rc.f, *rc.g, Z);
}

void read_range(const Reader& rd, const std::string& key, double& lo, double& hi) {
  const ConfigValue* v = rd.find("domain", key);
  if (!v) return;
  const auto r = Reader::numbers(*v, "domain." + key, 2);
  if (!(r[1] > r[0])) throw ConfigError("domain." + key + ": empty range", v->line);
  lo = r[0];
  hi = r[1];
}

void read_count(const Reader& rd, const std::string& key, int& n) {
  const ConfigValue* v = rd.find("domain", key);
  if (!v) return;
  n = Reader::integer(*v, "domain." + key);
  if (n < 1) throw ConfigError("domain." + key + " must be at least 1", v->line);
}

}  // namespace

ConfigSections parse_ini(const std::string& text) {
  ConfigSections cfg;
  std::istringstream in(text);
  std::string line, section;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(strip_comment(line, lineno));
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw ConfigError("malformed section header", lineno);
      section = trim(t.substr(1, t.size() - 2));
      if (!schema().count(section)) throw ConfigError("unknown section [" + section + "]", lineno);
      cfg[section];
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key = value", lineno);
    if (section.empty()) throw ConfigError("key outside of a section", lineno);
    const std::string key = trim(t.substr(0, eq));
    check_key(section, key, lineno);
    if (cfg[section].count(key)) throw ConfigError("duplicate key '" + key + "'", lineno);
    cfg[section][key] = ConfigValue{trim(t.substr(eq + 1)), lineno};
  }
  return cfg;
}

void apply_override(ConfigSections& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  const auto dot = assignment.find('.');
  if (eq == std::string::npos || dot == std::string::npos || dot > eq)
    throw ConfigError("override must look like section.key=value: '" + assignment + "'");
  const std::string section = trim(assignment.substr(0, dot));
  const std::string key = trim(assignment.substr(dot + 1, eq - dot - 1));
  check_key(section, key, 0);
  cfg[section][key] = ConfigValue{trim(assignment.substr(eq + 1)), 0};
}

std::vector<std::string> split_list(const std::string& raw) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char ch : raw) {
    if (ch == '"') quoted = !quoted;
    if (ch == ',' && !quoted) {
      out.push_back(unquote(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(unquote(cur));
  return out;
}

const char* to_string(Task t) {
  switch (t) {
    case Task::Analyze: return "analyze";
    case Task::Verify: return "verify";
    case Task::Ellipse: return "ellipse";
    case Task::Gauss: return "gauss";
    case Task::PdeCheck: return "pde-check";
    case Task::PdeSolve: return "pde-solve";
  }
  return "?";
}

std::optional<Task> task_from_string(const std::string& name) {
  for (Task t : {Task::Analyze, Task::Verify, Task::Ellipse, Task::Gauss, Task::PdeCheck, Task::PdeSolve})
    if (name == to_string(t)) return t;
  return std::nullopt;
}

RunConfig build_run_config(const ConfigSections& cfg) {
  const Reader rd(cfg);
  RunConfig rc;

  read_range(rd, "x", rc.x0, rc.x1);
  read_range(rd, "y", rc.y0, rc.y1);
  read_count(rd, "nx", rc.nx);
  read_count(rd, "ny", rc.ny);

  build_surface(rd, rc);

  const ConfigValue& name = rd.require("task", "name");
  const auto task = task_from_string(unquote(name.raw));
  if (!task) throw ConfigError("unknown task '" + unquote(name.raw) + "'", name.line);
  rc.task = *task;
  if (const ConfigValue* v = rd.find("task", "tol")) {
    rc.tol = Reader::number(*v, "task.tol");
    if (!(rc.tol > 0.0)) throw ConfigError("task.tol must be positive", v->line);
  }
  if (const ConfigValue* v = rd.find("task", "point")) {
    const auto p = Reader::numbers(*v, "task.point", 2);
    rc.point = GridPoint{p[0], p[1]};
  }
  if (const ConfigValue* v = rd.find("task", "samples")) {
    rc.samples = Reader::integer(*v, "task.samples");
    if (rc.samples < 1) throw ConfigError("task.samples must be at least 1", v->line);
  }
  if (rd.find("task", "boundary")) rc.boundary = rd.expr("task", "boundary", ExprContext::Surface);
  if (rd.find("task", "exact")) rc.exact = rd.expr("task", "exact", ExprContext::Surface);
  if (const ConfigValue* v = rd.find("task", "max_iter")) {
    rc.max_iter = Reader::integer(*v, "task.max_iter");
    if (rc.max_iter < 0) throw ConfigError("task.max_iter must be non-negative", v->line);
  }
  if (const ConfigValue* v = rd.find("task", "damping")) {
    rc.damping = Reader::number(*v, "task.damping");
    if (!(rc.damping > 0.0 && rc.damping <= 1.0)) throw ConfigError("task.damping must lie in (0, 1]", v->line);
  }
  if (const ConfigValue* v = rd.find("task", "tol_resid")) {
    rc.tol_resid = Reader::number(*v, "task.tol_resid");
    if (!(rc.tol_resid > 0.0)) throw ConfigError("task.tol_resid must be positive", v->line);
  }
  if (const ConfigValue* v = rd.find("task", "init")) {
    const std::string s = unquote(v->raw);
    if (s == "march")
      rc.init = InitialGuess::March;
    else if (s == "constant")
      rc.init = InitialGuess::Constant;
    else
      throw ConfigError("task.init must be march or constant", v->line);
  }

  const bool graph_task = rc.task == Task::PdeCheck || rc.task == Task::PdeSolve;
  if (graph_task && !rc.f) throw ConfigError(std::string(to_string(rc.task)) + " needs a graph, family1 or family2 surface");
  if (rc.task == Task::PdeSolve && !rc.boundary && !rc.g && !rc.exact)
    throw ConfigError("pde-solve needs task.boundary");
  if (rc.task == Task::PdeSolve && (rc.nx < 3 || rc.ny < 3)) throw ConfigError("pde-solve needs nx, ny >= 3");
  if (rc.task == Task::Ellipse && !rc.point) throw ConfigError("ellipse needs task.point");

  if (const ConfigValue* v = rd.find("output", "dir")) rc.out_dir = unquote(v->raw);
  return rc;
}

RunConfig load_run_config(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  ConfigSections cfg = parse_ini(buf.str());
  for (const auto& o : overrides) apply_override(cfg, o);
  return build_run_config(cfg);
}

}  // namespace cnnd
