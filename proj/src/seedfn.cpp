#include "orthoframes/seedfn.hpp"

#include <algorithm>
#include <cmath>

#include "orthoframes/errors.hpp"

namespace orthoframes {

namespace {

constexpr double kGaussCut = 13.0;  // exp(-13^2/2) ~ 2e-37

double bump_raw(double x, double b) {
  if (std::abs(x) >= b) return 0.0;
  return std::exp(1.0 / (x * x - b * b));
}

}  // namespace

LatticeParams LatticeParams::from_L(int L) {
  const double a = std::sqrt(kTwoPi * L);
  return {L, a, a};
}

LatticeParams LatticeParams::from_L(int L, double A) {
  LatticeParams p = from_L(L);
  p.A = A;
  return p;
}

SeedFunction SeedFunction::rectangle(double center, double halfwidth, double height,
                                     std::string label) {
  return SeedFunction(Rectangle{center, halfwidth, height}, std::move(label));
}

SeedFunction SeedFunction::normalized_rectangle(double center, double halfwidth,
                                                std::string label) {
  return SeedFunction(Rectangle{center, halfwidth, 1.0 / std::sqrt(2.0 * halfwidth)},
                      std::move(label));
}

SeedFunction SeedFunction::unit_rectangle() {
  return SeedFunction(Rectangle{0.5, 0.5, 1.0}, "rect:unit");
}

SeedFunction SeedFunction::smooth_bump(double b) {
  // Normalization computed, not assumed.
  const double raw = integrate_real([b](double x) { return bump_raw(x, b) * bump_raw(x, b); },
                                    {-b, b}, {0.0}, 0.0, {1e-14, 16});
  return SeedFunction(SmoothBump{b, 1.0 / std::sqrt(raw)}, "bump");
}

SeedFunction SeedFunction::cosine_window(double a) {
  return SeedFunction(CosineWindow{a}, "coswin");
}

SeedFunction SeedFunction::gaussian() { return SeedFunction(GaussianVacuum{}, "gauss"); }

SeedFunction SeedFunction::sampled(UniformGrid grid, std::vector<Complex> values,
                                   std::string label) {
  if (grid.count != values.size() || grid.count < 2 || grid.step <= 0.0)
    throw ConfigError("sampled seed: grid/value size mismatch or bad step");
  return SeedFunction(SampledSeed{grid, std::move(values)}, std::move(label));
}

Complex SeedFunction::evaluate(double x) const {
  return std::visit(
      [x](const auto& s) -> Complex {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Rectangle>) {
          return std::abs(x - s.center) <= s.halfwidth ? Complex(s.height, 0.0) : Complex(0.0);
        } else if constexpr (std::is_same_v<T, SmoothBump>) {
          return s.normalization * bump_raw(x, s.b);
        } else if constexpr (std::is_same_v<T, CosineWindow>) {
          if (std::abs(x) > s.a) return 0.0;
          return std::cos(kPi * x / (2.0 * s.a)) / std::sqrt(s.a);
        } else if constexpr (std::is_same_v<T, GaussianVacuum>) {
          return std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
        } else {
          const auto& g = s.grid;
          const double t = (x - g.start) / g.step;
          if (t < 0.0 || t > static_cast<double>(g.count - 1)) return 0.0;
          const auto i0 = static_cast<std::size_t>(t);
          if (i0 + 1 >= g.count) return s.values.back();
          const double w = t - static_cast<double>(i0);
          return (1.0 - w) * s.values[i0] + w * s.values[i0 + 1];
        }
      },
      v_);
}

bool SeedFunction::is_real() const {
  if (const auto* s = std::get_if<SampledSeed>(&v_)) {
    for (const Complex& v : s->values)
      if (v.imag() != 0.0) return false;
  }
  return true;
}

std::optional<Interval> SeedFunction::support() const {
  return std::visit(
      [](const auto& s) -> std::optional<Interval> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Rectangle>)
          return Interval{s.center - s.halfwidth, s.center + s.halfwidth};
        else if constexpr (std::is_same_v<T, SmoothBump>)
          return Interval{-s.b, s.b};
        else if constexpr (std::is_same_v<T, CosineWindow>)
          return Interval{-s.a, s.a};
        else if constexpr (std::is_same_v<T, GaussianVacuum>)
          return std::nullopt;
        else
          return Interval{s.grid.start, s.grid.back()};
      },
      v_);
}

Interval SeedFunction::effective_support() const {
  if (auto s = support()) return *s;
  return {-kGaussCut, kGaussCut};
}

std::vector<double> SeedFunction::breakpoints() const {
  return std::visit(
      [](const auto& s) -> std::vector<double> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Rectangle>)
          return {s.center - s.halfwidth, s.center + s.halfwidth};
        else if constexpr (std::is_same_v<T, SmoothBump>)
          return {-s.b, s.b};
        else if constexpr (std::is_same_v<T, CosineWindow>)
          return {-s.a, s.a};
        else if constexpr (std::is_same_v<T, GaussianVacuum>)
          return {};
        else {
          std::vector<double> bp(s.grid.count);
          for (std::size_t i = 0; i < s.grid.count; ++i) bp[i] = s.grid.at(i);
          return bp;
        }
      },
      v_);
}

Complex GaborAtom::evaluate(double x) const {
  return cis(lattice.a * n1 * x) * seed->evaluate(x + lattice.a * n2);
}

Complex evaluate(const SeedFunction& f, double x) { return f.evaluate(x); }
Complex evaluate(const GaborAtom& f, double x) { return f.evaluate(x); }

namespace {

// Uniform handle for "seed or atom" operands of inner products.
struct Operand {
  const SeedFunction* seed;
  int n1 = 0;
  double shift = 0.0;  // a * n2
  double a = 0.0;

  Complex eval(double x) const {
    Complex v = seed->evaluate(x + shift);
    if (n1 != 0) v *= cis(a * n1 * x);
    return v;
  }
  std::optional<Interval> support() const {
    auto s = seed->support();
    if (!s) return std::nullopt;
    return Interval{s->lo - shift, s->hi - shift};
  }
  Interval effective_support() const {
    auto s = seed->effective_support();
    return {s.lo - shift, s.hi - shift};
  }
  std::vector<double> breakpoints() const {
    auto bp = seed->breakpoints();
    for (double& b : bp) b -= shift;
    return bp;
  }
};

Operand as_operand(const SeedFunction& f) { return {&f, 0, 0.0, 0.0}; }
Operand as_operand(const GaborAtom& f) {
  return {f.seed, f.n1, f.lattice.a * f.n2, f.lattice.a};
}

Complex inner_product_impl(const Operand& f, const Operand& g, const QuadratureSpec& quad) {
  const auto sf = f.support();
  const auto sg = g.support();
  if (sf && sg && disjoint(*sf, *sg)) return 0.0;  // exact zero, no quadrature

  const Interval ef = f.effective_support();
  const Interval eg = g.effective_support();
  const Interval dom{std::max(ef.lo, eg.lo), std::min(ef.hi, eg.hi)};
  if (dom.hi <= dom.lo) return 0.0;

  std::vector<double> bp = f.breakpoints();
  const auto bg = g.breakpoints();
  bp.insert(bp.end(), bg.begin(), bg.end());

  const double osc = std::abs(f.a * f.n1 - g.a * g.n1);
  return integrate([&](double x) { return std::conj(f.eval(x)) * g.eval(x); }, dom, bp, osc,
                   quad);
}

}  // namespace

Complex inner_product(const SeedFunction& f, const SeedFunction& g, const QuadratureSpec& quad) {
  return inner_product_impl(as_operand(f), as_operand(g), quad);
}
Complex inner_product(const GaborAtom& f, const SeedFunction& g, const QuadratureSpec& quad) {
  return inner_product_impl(as_operand(f), as_operand(g), quad);
}
Complex inner_product(const SeedFunction& f, const GaborAtom& g, const QuadratureSpec& quad) {
  return inner_product_impl(as_operand(f), as_operand(g), quad);
}
Complex inner_product(const GaborAtom& f, const GaborAtom& g, const QuadratureSpec& quad) {
  return inner_product_impl(as_operand(f), as_operand(g), quad);
}

Complex fourier_transform_point(const SeedFunction& f, double omega, const QuadratureSpec& quad) {
  const double inv_s2pi = 1.0 / std::sqrt(kTwoPi);
  if (const auto* r = std::get_if<Rectangle>(&f.variant())) {
    // h * e^{-i omega c} * 2 sin(omega h_w)/omega / sqrt(2 pi)
    const double hw = r->halfwidth;
    double sinc;
    if (std::abs(omega * hw) < 1e-6) {
      const double t = omega * hw;
      sinc = 2.0 * hw * (1.0 - t * t / 6.0 + t * t * t * t / 120.0);
    } else {
      sinc = 2.0 * std::sin(omega * hw) / omega;
    }
    return inv_s2pi * r->height * cis(-omega * r->center) * sinc;
  }
  if (const auto* c = std::get_if<CosineWindow>(&f.variant())) {
    // (1/sqrt(a)) int_{-a}^a cos(beta x) e^{-i omega x} dx with beta = pi/(2a):
    // real, equal to 2 beta cos(omega a) / (beta^2 - omega^2).
    const double a = c->a;
    const double beta = kPi / (2.0 * a);
    const double delta = std::abs(omega) - beta;
    double val;
    if (std::abs(delta) < 1e-4 * beta) {
      // removable singularity at omega = +-beta:
      // cos(omega a) = -sin(delta a), beta^2 - omega^2 = -delta (2 beta + delta)
      const double t = delta * a;
      const double sinc = std::abs(t) < 1e-8 ? 1.0 - t * t / 6.0 : std::sin(t) / t;
      val = 2.0 * beta * a * sinc / (2.0 * beta + delta);
    } else {
      val = 2.0 * beta * std::cos(omega * a) / (beta * beta - omega * omega);
    }
    return inv_s2pi * val / std::sqrt(a);
  }
  if (std::get_if<GaussianVacuum>(&f.variant())) {
    return std::pow(kPi, -0.25) * std::exp(-0.5 * omega * omega);
  }
  const Interval dom = f.effective_support();
  const Complex v = integrate([&](double x) { return f.evaluate(x) * cis(-omega * x); }, dom,
                              f.breakpoints(), std::abs(omega), quad);
  return inv_s2pi * v;
}

std::vector<Complex> fourier_transform_grid(const SeedFunction& f, const UniformGrid& grid,
                                            const QuadratureSpec& quad) {
  std::vector<Complex> out(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i)
    out[i] = fourier_transform_point(f, grid.at(i), quad);
  return out;
}

}  // namespace orthoframes
