#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orthoframes/common.hpp"
#include "orthoframes/quadrature.hpp"

namespace orthoframes {

// Lattice data: integer L >= 1 fixes a = sqrt(2 pi L); A is the frequency
// step of the (k,q) box and defaults to a.
struct LatticeParams {
  int L = 1;
  double a = 0.0;
  double A = 0.0;

  static LatticeParams from_L(int L);
  static LatticeParams from_L(int L, double A);
};

struct UniformGrid {
  double start = 0.0;
  double step = 1.0;
  std::size_t count = 0;
  double at(std::size_t i) const { return start + step * static_cast<double>(i); }
  double back() const { return at(count == 0 ? 0 : count - 1); }
};

// --- seed variants -----------------------------------------------------

struct Rectangle {
  double center = 0.0;
  double halfwidth = 0.5;
  double height = 1.0;
};

// N_b exp(1/(x^2-b^2)) on |x| <= b; the normalization is computed at
// construction time so that the L2 norm is 1.
struct SmoothBump {
  double b = 1.0;
  double normalization = 0.0;
};

// (1/sqrt(a)) cos(pi x / (2a)) on |x| <= a; unit norm by construction.
struct CosineWindow {
  double a = 1.0;
};

// pi^{-1/4} exp(-x^2/2), the harmonic-oscillator ground state.
struct GaussianVacuum {};

// Linear interpolation inside the grid, zero outside.
struct SampledSeed {
  UniformGrid grid;
  std::vector<Complex> values;
};

class SeedFunction {
 public:
  using Variant = std::variant<Rectangle, SmoothBump, CosineWindow, GaussianVacuum, SampledSeed>;

  static SeedFunction rectangle(double center, double halfwidth, double height,
                                std::string label = "rect");
  // height chosen so the L2 norm is 1
  static SeedFunction normalized_rectangle(double center, double halfwidth,
                                           std::string label = "rect");
  static SeedFunction unit_rectangle();  // chi_[0,1)
  static SeedFunction smooth_bump(double b);
  static SeedFunction cosine_window(double a);
  static SeedFunction gaussian();
  static SeedFunction sampled(UniformGrid grid, std::vector<Complex> values,
                              std::string label = "sampled");

  Complex evaluate(double x) const;
  bool is_real() const;

  // Exact compact support, when the variant has one.
  std::optional<Interval> support() const;
  // Truncation window outside which |g| is negligible (quadrature domain).
  Interval effective_support() const;
  // Jump/kink locations, used to align quadrature panels.
  std::vector<double> breakpoints() const;

  const std::string& label() const { return label_; }
  const Variant& variant() const { return v_; }

 private:
  SeedFunction(Variant v, std::string label) : v_(std::move(v)), label_(std::move(label)) {}
  Variant v_;
  std::string label_;
};

// T1^{n1} T2^{n2} g, i.e. x -> e^{i a n1 x} g(x + a n2).
struct GaborAtom {
  const SeedFunction* seed = nullptr;
  int n1 = 0;
  int n2 = 0;
  LatticeParams lattice;

  Complex evaluate(double x) const;
};

Complex evaluate(const SeedFunction& f, double x);
Complex evaluate(const GaborAtom& f, double x);

// Inner products are linear in the second argument: <f,g> = int conj(f) g.
// Disjoint compact supports short-circuit to an exact 0.
Complex inner_product(const SeedFunction& f, const SeedFunction& g,
                      const QuadratureSpec& quad = {});
Complex inner_product(const GaborAtom& f, const SeedFunction& g,
                      const QuadratureSpec& quad = {});
Complex inner_product(const SeedFunction& f, const GaborAtom& g,
                      const QuadratureSpec& quad = {});
Complex inner_product(const GaborAtom& f, const GaborAtom& g,
                      const QuadratureSpec& quad = {});

// Fourier transform, convention ghat(p) = (2 pi)^{-1/2} int g(x) e^{-i p x} dx.
// Closed forms for Rectangle/CosineWindow/Gaussian, quadrature otherwise.
Complex fourier_transform_point(const SeedFunction& f, double omega,
                                const QuadratureSpec& quad = {});
std::vector<Complex> fourier_transform_grid(const SeedFunction& f, const UniformGrid& grid,
                                            const QuadratureSpec& quad = {});

}  // namespace orthoframes
