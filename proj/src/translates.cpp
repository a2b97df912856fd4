#include "orthoframes/translates.hpp"

#include <algorithm>
#include <cmath>

#include "orthoframes/errors.hpp"
#include "orthoframes/parallel.hpp"

namespace orthoframes {

namespace {

double freq_ft_sq(const SeedFunction& seed, double nu) {
  // |phihat_freq(nu)|^2 = 2 pi |phihat_angular(2 pi nu)|^2
  const Complex v = fourier_transform_point(seed, kTwoPi * nu);
  return kTwoPi * std::norm(v);
}

// Truncated k-sum with an adaptive window.  The tail certificate
// shell_max * K is the right scale for the >= 1/nu^4 decay of every
// continuous seed; seeds with 1/nu^2 tails (jumps) never certify here and
// must use the closed form.
double spectrum_point_generic(const SeedFunction& seed, double p) {
  const double tol = 1e-9;
  double acc = freq_ft_sq(seed, p);
  int K = 32;
  double covered = 0.0;  // terms |k| <= covered already in acc
  for (int attempt = 0; attempt < 6; ++attempt) {
    double shell_max = 0.0;
    for (int k = static_cast<int>(covered) + 1; k <= K; ++k) {
      const double a = freq_ft_sq(seed, p + k);
      const double b = freq_ft_sq(seed, p - k);
      acc += a + b;
      shell_max = std::max({shell_max, a, b});
    }
    covered = K;
    if (shell_max * K < tol) return acc;
    K *= 4;
  }
  throw NonConvergedSum("periodized spectrum: k-sum tail did not certify");
}

double spectrum_point_rectangle(const Rectangle& r, double p) {
  // Exact lattice sum sum_k h^2 sin^2(pi W (p+k)) / (pi (p+k))^2, evaluated
  // through sum_k e^{i theta k}/(p+k)^2 = pi e^{i p (pi - theta)}
  // [pi cos(pi p) - i (pi - theta) sin(pi p)] / sin^2(pi p) (the derivative of
  // the classical cotangent series), with M = floor(W), theta = 2 pi (W - M).
  // The 1/sin^2 poles cancel; in all-sine form the result is finite everywhere:
  //   Phi = (h^2/2pi^2) [ pi^2 (sin^2(pi p M) + sin^2(pi p (M+1)))
  //                       - pi (pi-theta) sin(pi p) sin(pi p (2M+1)) ] / sin^2(pi p)
  const double W = 2.0 * r.halfwidth;
  const double h2 = r.height * r.height;
  const double M = std::floor(W);
  const double theta = kTwoPi * (W - M);
  const double s = std::sin(kPi * p);
  if (std::abs(s) < 1e-9) {
    // limit at integer p: the sine ratios become M and 2M+1
    return h2 / (2.0 * kPi * kPi) *
           (kPi * kPi * (M * M + (M + 1) * (M + 1)) - kPi * (kPi - theta) * (2 * M + 1));
  }
  const double sM = std::sin(kPi * p * M);
  const double sM1 = std::sin(kPi * p * (M + 1));
  const double s2M1 = std::sin(kPi * p * (2 * M + 1));
  const double num = kPi * kPi * (sM * sM + sM1 * sM1) - kPi * (kPi - theta) * s * s2M1;
  return h2 / (2.0 * kPi * kPi) * num / (s * s);
}

}  // namespace

double PeriodizedSpectrum::min_value() const {
  return *std::min_element(values.begin(), values.end());
}

double PeriodizedSpectrum::max_value() const {
  return *std::max_element(values.begin(), values.end());
}

double periodized_spectrum_point(const SeedFunction& seed, double p) {
  p -= std::floor(p);
  if (const auto* r = std::get_if<Rectangle>(&seed.variant()))
    return spectrum_point_rectangle(*r, p);
  return spectrum_point_generic(seed, p);
}

PeriodizedSpectrum periodized_spectrum(const SeedFunction& seed, int resolution) {
  if (resolution < 2) throw ConfigError("periodized_spectrum: resolution too small");
  PeriodizedSpectrum spec;
  spec.seed_label = seed.label();
  spec.values.resize(resolution);
  parallel_for(resolution, [&](std::size_t i) {
    spec.values[i] = periodized_spectrum_point(seed, static_cast<double>(i) / resolution);
  });
  return spec;
}

FrameBounds frame_bounds(PeriodizedSpectrum& spec) {
  const double mx = spec.max_value();
  if (mx > 1e12) throw NotAFrame("periodized spectrum exceeds the overflow guard");
  const double floor = 1e-8 * mx;
  double mn = mx;
  std::size_t excluded = 0;
  for (double v : spec.values) {
    if (v < floor) {
      ++excluded;
      continue;
    }
    mn = std::min(mn, v);
  }
  spec.zero_set_measure_estimate = static_cast<double>(excluded) / spec.values.size();
  FrameBounds fb;
  fb.A_bound = mn;
  fb.B_bound = mx;
  fb.is_frame = excluded < spec.values.size() && mn > floor;
  return fb;
}

Complex MraGenerator::evaluate(double x) const {
  Complex acc = 0.0;
  for (int k = -radius; k <= radius; ++k) {
    const Complex m = coeffs[static_cast<std::size_t>(k + radius)];
    if (m != Complex(0.0)) acc += m * seed.evaluate(x + k);
  }
  return acc;
}

MraGenerator mra_orthonormalize(const SeedFunction& seed, const UniformGrid& grid,
                                int spectrum_resolution) {
  PeriodizedSpectrum spec = periodized_spectrum(seed, spectrum_resolution);
  const double mx = spec.max_value();
  const double mn = spec.min_value();
  if (mn <= 1e-6 * mx)
    throw SymbolNotPositive("periodized spectrum vanishes; translates are not a Riesz basis",
                            0.0, 0.0, mn);

  MraGenerator gen{seed, {}, 0, grid, {}};

  // Multiplier M(p) = (2 pi)^{-1/2} D(p)^{-1/2} with D(p) = Phi(p/2pi)/(2pi);
  // expand its Fourier series m_k over the stored spectrum grid.
  const int n = static_cast<int>(spec.values.size());
  std::vector<double> mult(n);
  for (int j = 0; j < n; ++j) mult[j] = 1.0 / std::sqrt(spec.values[j]);

  if ((mx - mn) <= 1e-12 * mx) {
    // constant denominator: phitilde is an exact rescaling of the seed
    gen.radius = 0;
    gen.coeffs = {Complex(mult[0])};
  } else {
    const int radius = 48;
    gen.radius = radius;
    gen.coeffs.assign(2 * radius + 1, 0.0);
    for (int k = -radius; k <= radius; ++k) {
      Complex acc = 0.0;
      for (int j = 0; j < n; ++j)
        acc += mult[j] * cis(-kTwoPi * k * j / n);  // p = 2 pi j / n in angular units
      gen.coeffs[static_cast<std::size_t>(k + radius)] = acc / static_cast<double>(n);
    }
  }

  gen.samples.resize(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) gen.samples[i] = gen.evaluate(grid.at(i));
  return gen;
}

Complex mra_overlap(const MraGenerator& gen, int shift, const QuadratureSpec& quad) {
  const Interval s = gen.seed.effective_support();
  const Interval dom{s.lo - gen.radius - std::abs(shift) - 1.0, s.hi + gen.radius + 1.0};
  std::vector<double> bp;
  for (double b : gen.seed.breakpoints())
    for (int k = -gen.radius - std::abs(shift) - 1; k <= gen.radius + std::abs(shift) + 1; ++k)
      bp.push_back(b - k);
  return integrate(
      [&](double x) { return std::conj(gen.evaluate(x + shift)) * gen.evaluate(x); }, dom, bp,
      0.0, quad);
}

}  // namespace orthoframes
