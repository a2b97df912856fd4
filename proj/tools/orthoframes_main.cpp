#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "orthoframes/cli.hpp"
#include "orthoframes/errors.hpp"

namespace {

using orthoframes::RunConfig;

struct Flags {
  std::optional<std::string> config_path;
  std::optional<std::string> seed;
  std::optional<int> L;
  std::optional<double> A;
  std::optional<double> step;
  std::optional<int> grid;
  std::optional<int> radius;
  std::optional<int> truncation;
  std::optional<std::string> out;
  std::vector<std::string> tol_kv;
  bool probe = false;
  bool svg = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_path, "config file (key = value, [run]/[tolerances])");
  cmd->add_option("--seed", f.seed,
                  "seed spec: rect:center,halfwidth | rect:unit | bump:b | coswin | gauss | "
                  "sampled:path.csv (values may use the lattice constant, e.g. 3a/4)");
  cmd->add_option("--L", f.L, "lattice integer, a = sqrt(2 pi L)");
  cmd->add_option("--A", f.A, "box frequency step (defaults to a)");
  cmd->add_option("--step", f.step, "translate step; > 0 switches to 1D translate mode");
  cmd->add_option("--grid", f.grid, "grid resolution (symbol scan / kq box); 0 = auto");
  cmd->add_option("--radius", f.radius, "overlap and coefficient truncation radius");
  cmd->add_option("--N", f.truncation, "synthesis truncation N");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--tol", f.tol_kv, "named tolerance NAME=VAL (repeatable)");
}

RunConfig merge(const Flags& f, const std::string& command) {
  RunConfig cfg;
  if (f.config_path) cfg = orthoframes::load_config_file(*f.config_path);
  cfg.command = command;
  if (f.seed) cfg.seed_spec = *f.seed;
  if (f.L) cfg.L = *f.L;
  if (f.A) cfg.A = *f.A;
  if (f.step) cfg.step = *f.step;
  if (f.grid) cfg.grid = *f.grid;
  if (f.radius) cfg.radius = *f.radius;
  if (f.truncation) cfg.truncation = *f.truncation;
  if (f.out) cfg.out_dir = *f.out;
  cfg.probe = cfg.probe || f.probe;
  cfg.svg = cfg.svg || f.svg;
  for (const std::string& kv : f.tol_kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw orthoframes::ConfigError("--tol expects NAME=VAL, got '" + kv + "'");
    char* end = nullptr;
    const double v = std::strtod(kv.c_str() + eq + 1, &end);
    if (end == kv.c_str() + eq + 1 || *end != '\0' || v <= 0.0)
      throw orthoframes::ConfigError("--tol " + kv + ": bad value");
    cfg.tolerances[kv.substr(0, eq)] = v;
  }
  // round-trip through the canonical text so file/flag runs are identical
  return orthoframes::parse_config_text(orthoframes::canonical_text(cfg));
}

}  // namespace

int main(int argc, char** argv) {
  using namespace orthoframes;
  CLI::App app{"orthonormalization of translate and Gabor function systems"};
  app.require_subcommand(1);

  Flags f;
  std::string target;

  CLI::App* c_orth = app.add_subcommand(
      "orthonormalize", "seed -> overlaps -> symbol -> coefficients -> Psi -> Gram");
  add_common(c_orth, f);
  c_orth->add_flag("--svg", f.svg, "also emit an SVG plot of Psi");

  CLI::App* c_repr = app.add_subcommand("reproduce", "recompute published reference values");
  c_repr->add_option("target", target, "translates|example1|example2|example3|coherent")
      ->required();
  add_common(c_repr, f);

  CLI::App* c_frame = app.add_subcommand("frame-bounds", "periodized spectrum and frame bounds");
  add_common(c_frame, f);

  CLI::App* c_kq = app.add_subcommand("kq-check", "(k,q) orthonormality criterion and Parseval");
  add_common(c_kq, f);
  c_kq->add_flag("--probe", f.probe, "run the L=2 completeness probe");

  CLI::App* c_mra = app.add_subcommand("mra-compare",
                                       "compare both translate orthonormalizations");
  add_common(c_mra, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::fprintf(stderr, "%s\n", e.what());
    return kExitConfigError;
  }

  try {
    if (c_orth->parsed()) return run_orthonormalize(merge(f, "orthonormalize"));
    if (c_repr->parsed()) return run_reproduce(target, merge(f, "reproduce"));
    if (c_frame->parsed()) return run_frame_bounds(merge(f, "frame-bounds"));
    if (c_kq->parsed()) return run_kq_check(merge(f, "kq-check"));
    if (c_mra->parsed()) return run_mra_compare(merge(f, "mra-compare"));
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const SymbolNotPositive& e) {
    std::fprintf(stderr, "symbol not positive: %s\n", e.what());
    return kExitSymbolNotPositive;
  } catch (const NonConvergedQuadrature& e) {
    std::fprintf(stderr, "quadrature did not converge: %s\n", e.what());
    return kExitNonConvergedQuadrature;
  } catch (const GridMismatch& e) {
    std::fprintf(stderr, "grid mismatch: %s\n", e.what());
    return kExitGridMismatch;
  } catch (const ShapeMismatch& e) {
    std::fprintf(stderr, "shape mismatch: %s\n", e.what());
    return kExitShapeMismatch;
  } catch (const DegenerateProbe& e) {
    std::fprintf(stderr, "degenerate probe: %s\n", e.what());
    return kExitDegenerateProbe;
  } catch (const NonConvergedSum& e) {
    std::fprintf(stderr, "series did not converge: %s\n", e.what());
    return kExitNonConvergedSum;
  } catch (const NotAFrame& e) {
    std::fprintf(stderr, "not a frame: %s\n", e.what());
    return kExitNotAFrame;
  }
  return kExitConfigError;
}
