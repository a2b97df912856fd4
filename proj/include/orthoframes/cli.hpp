#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orthoframes/seedfn.hpp"

namespace orthoframes {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 1,
  kExitSymbolNotPositive = 2,
  kExitNonConvergedQuadrature = 3,
  kExitGridMismatch = 4,
  kExitShapeMismatch = 5,
  kExitDegenerateProbe = 6,
  kExitNonConvergedSum = 7,
  kExitNotAFrame = 8,
  kExitReproductionMismatch = 9,
};

struct RunConfig {
  std::string command = "orthonormalize";
  std::string seed_spec = "gauss";
  int L = 1;
  std::optional<double> A;    // box frequency step; defaults to a
  double step = 0.0;          // > 0 switches to 1D translate mode
  int grid = 0;               // symbol scan / kq box resolution; 0 = module default
  int radius = 8;             // overlap + coefficient truncation radius
  int truncation = 4;         // synthesis N
  bool probe = false;         // kq-check: run the completeness probe
  bool svg = false;           // also emit an SVG line plot
  std::string out_dir = "out";
  std::map<std::string, double> tolerances;  // --tol NAME=VAL

  double tol(const std::string& name, double fallback) const;
  bool operator==(const RunConfig&) const = default;
};

// Flat key=value text with [section] headers, mirrored 1:1 by the CLI flags.
std::string canonical_text(const RunConfig& cfg);
RunConfig parse_config_text(const std::string& text);
RunConfig load_config_file(const std::string& path);

// Seed mini-language: rect:center,halfwidth | rect:unit | bump:b | coswin |
// gauss | sampled:path.csv.  Numeric values accept multiples of the lattice
// constant: "3a/4", "0.75a", "a", "1.2".
SeedFunction make_seed(const std::string& spec, double a);
double parse_scaled_value(const std::string& text, double a);

struct ReproRow {
  std::string name;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool upper_bound = false;  // pass iff computed <= expected + tolerance
  bool pass = false;
};

struct ReproductionReport {
  std::string target;
  std::vector<ReproRow> rows;
  std::vector<std::string> notes;
  bool pass = false;
};

ReproRow make_row(std::string name, double expected, double computed, double tolerance);
ReproRow make_bound_row(std::string name, double bound, double computed, double slack);

// Subcommand drivers; each returns an exit code and writes artifacts under
// cfg.out_dir.
int run_orthonormalize(const RunConfig& cfg);
int run_frame_bounds(const RunConfig& cfg);
int run_kq_check(const RunConfig& cfg);
int run_mra_compare(const RunConfig& cfg);
ReproductionReport reproduce(const std::string& target, const RunConfig& cfg);
int run_reproduce(const std::string& target, const RunConfig& cfg);

std::string report_to_json(const ReproductionReport& rep);
std::string report_to_text(const ReproductionReport& rep);

}  // namespace orthoframes
