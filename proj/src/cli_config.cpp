#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "orthoframes/cli.hpp"
#include "orthoframes/errors.hpp"

namespace orthoframes {

double RunConfig::tol(const std::string& name, double fallback) const {
  const auto it = tolerances.find(name);
  return it == tolerances.end() ? fallback : it->second;
}

std::string canonical_text(const RunConfig& cfg) {
  std::ostringstream os;
  os << "[run]\n";
  os << "command = " << cfg.command << '\n';
  os << "seed = " << cfg.seed_spec << '\n';
  os << "L = " << cfg.L << '\n';
  if (cfg.A) os << "A = " << format_double_exact(*cfg.A) << '\n';
  os << "step = " << format_double_exact(cfg.step) << '\n';
  os << "grid = " << cfg.grid << '\n';
  os << "radius = " << cfg.radius << '\n';
  os << "N = " << cfg.truncation << '\n';
  os << "probe = " << (cfg.probe ? 1 : 0) << '\n';
  os << "svg = " << (cfg.svg ? 1 : 0) << '\n';
  os << "out = " << cfg.out_dir << '\n';
  if (!cfg.tolerances.empty()) {
    os << "[tolerances]\n";
    for (const auto& [k, v] : cfg.tolerances) os << k << " = " << format_double_exact(v) << '\n';
  }
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_line(int line_no, const std::string& what) {
  throw ConfigError("config line " + std::to_string(line_no) + ": " + what);
}

double parse_number(const std::string& v, int line_no, const std::string& key) {
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0')
    bad_line(line_no, "field '" + key + "': not a number: '" + v + "'");
  return x;
}

int parse_int(const std::string& v, int line_no, const std::string& key) {
  const double x = parse_number(v, line_no, key);
  if (x != std::floor(x)) bad_line(line_no, "field '" + key + "': expected an integer");
  return static_cast<int>(x);
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  cfg.tolerances.clear();
  std::istringstream is(text);
  std::string line, section = "run";
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']') bad_line(line_no, "unterminated section header");
      section = t.substr(1, t.size() - 2);
      if (section != "run" && section != "tolerances")
        bad_line(line_no, "unknown section '" + section + "'");
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) bad_line(line_no, "expected key = value");
    const std::string key = trim(t.substr(0, eq));
    const std::string val = trim(t.substr(eq + 1));
    if (section == "tolerances") {
      cfg.tolerances[key] = parse_number(val, line_no, key);
      continue;
    }
    if (key == "command")
      cfg.command = val;
    else if (key == "seed")
      cfg.seed_spec = val;
    else if (key == "L")
      cfg.L = parse_int(val, line_no, key);
    else if (key == "A")
      cfg.A = parse_number(val, line_no, key);
    else if (key == "step")
      cfg.step = parse_number(val, line_no, key);
    else if (key == "grid")
      cfg.grid = parse_int(val, line_no, key);
    else if (key == "radius")
      cfg.radius = parse_int(val, line_no, key);
    else if (key == "N")
      cfg.truncation = parse_int(val, line_no, key);
    else if (key == "probe")
      cfg.probe = parse_int(val, line_no, key) != 0;
    else if (key == "svg")
      cfg.svg = parse_int(val, line_no, key) != 0;
    else if (key == "out")
      cfg.out_dir = val;
    else
      bad_line(line_no, "unknown field '" + key + "'");
  }
  if (cfg.L < 1) throw ConfigError("field 'L': must be >= 1");
  if (cfg.radius < 1) throw ConfigError("field 'radius': must be >= 1");
  if (cfg.truncation < 0) throw ConfigError("field 'N': must be >= 0");
  if (cfg.grid != 0 && cfg.grid < 16) throw ConfigError("field 'grid': 0 (auto) or >= 16");
  for (const auto& [k, v] : cfg.tolerances)
    if (v <= 0.0) throw ConfigError("tolerance '" + k + "' must be positive");
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return parse_config_text(os.str());
}

double parse_scaled_value(const std::string& text, double a) {
  // grammar: [number] ['a'] ['/' number], e.g. 1.2, 3/4, a, 3a/4, 0.75a
  std::string s = trim(text);
  if (s.empty()) throw ConfigError("empty numeric value");
  double num = 1.0;
  std::size_t pos = 0;
  if (s[0] != 'a') {
    char* end = nullptr;
    num = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) throw ConfigError("bad numeric value: '" + text + "'");
    pos = static_cast<std::size_t>(end - s.c_str());
  }
  if (pos < s.size() && s[pos] == 'a') {
    num *= a;
    ++pos;
  }
  if (pos == s.size()) return num;
  if (s[pos] != '/') throw ConfigError("bad numeric value: '" + text + "'");
  const std::string d = s.substr(pos + 1);
  char* end = nullptr;
  const double den = std::strtod(d.c_str(), &end);
  if (end == d.c_str() || *end != '\0' || den == 0.0)
    throw ConfigError("bad denominator in '" + text + "'");
  return num / den;
}

namespace {

SeedFunction load_sampled_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open sampled seed file: " + path);
  std::string line;
  if (!std::getline(f, line)) throw ConfigError("sampled seed file is empty: " + path);
  // header row required
  if (line.find("x") == std::string::npos)
    throw ConfigError("sampled seed CSV needs a header row (x,re[,im]): " + path);
  std::vector<double> xs;
  std::vector<Complex> vs;
  int line_no = 1;
  while (std::getline(f, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    std::istringstream row(t);
    std::string cell;
    std::vector<double> cols;
    while (std::getline(row, cell, ',')) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str())
        throw ConfigError(path + " line " + std::to_string(line_no) + ": bad number");
      cols.push_back(v);
    }
    if (cols.size() < 2 || cols.size() > 3)
      throw ConfigError(path + " line " + std::to_string(line_no) + ": expected x,re[,im]");
    xs.push_back(cols[0]);
    vs.emplace_back(cols[1], cols.size() == 3 ? cols[2] : 0.0);
  }
  if (xs.size() < 2) throw ConfigError("sampled seed needs at least two rows: " + path);
  const double step = xs[1] - xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (std::abs(xs[i] - xs[0] - step * static_cast<double>(i)) > 1e-9 * std::max(1.0, std::abs(step)))
      throw ConfigError("sampled seed grid is not uniform: " + path);
  return SeedFunction::sampled({xs[0], step, xs.size()}, std::move(vs), "sampled:" + path);
}

}  // namespace

SeedFunction make_seed(const std::string& spec, double a) {
  const auto colon = spec.find(':');
  const std::string head = colon == std::string::npos ? spec : spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (head == "rect") {
    if (args == "unit") return SeedFunction::unit_rectangle();
    const auto comma = args.find(',');
    if (comma == std::string::npos)
      throw ConfigError("seed 'rect' needs center,halfwidth (or rect:unit)");
    const double center = parse_scaled_value(args.substr(0, comma), a);
    std::string rest = args.substr(comma + 1);
    const auto comma2 = rest.find(',');
    double height = 0.0;  // 0 = normalize to unit L2 norm
    if (comma2 != std::string::npos) {
      height = parse_scaled_value(rest.substr(comma2 + 1), a);
      rest = rest.substr(0, comma2);
      if (height <= 0.0) throw ConfigError("seed 'rect': height must be positive");
    }
    const double halfwidth = parse_scaled_value(rest, a);
    if (halfwidth <= 0.0) throw ConfigError("seed 'rect': halfwidth must be positive");
    if (height > 0.0) return SeedFunction::rectangle(center, halfwidth, height, "rect:" + args);
    return SeedFunction::normalized_rectangle(center, halfwidth, "rect:" + args);
  }
  if (head == "bump") {
    const double b = args.empty() ? 0.75 * a : parse_scaled_value(args, a);
    if (b <= 0.0) throw ConfigError("seed 'bump': b must be positive");
    return SeedFunction::smooth_bump(b);
  }
  if (head == "coswin") {
    if (!args.empty()) throw ConfigError("seed 'coswin' takes no arguments");
    return SeedFunction::cosine_window(a);
  }
  if (head == "gauss") {
    if (!args.empty()) throw ConfigError("seed 'gauss' takes no arguments");
    return SeedFunction::gaussian();
  }
  if (head == "sampled") {
    if (args.empty()) throw ConfigError("seed 'sampled' needs a CSV path");
    return load_sampled_csv(args);
  }
  throw ConfigError("unknown seed spec: '" + spec + "'");
}

}  // namespace orthoframes
