#include "orthoframes/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "orthoframes/errors.hpp"

namespace orthoframes {

namespace {

constexpr int kGlOrder = 32;

struct GlRule {
  std::array<double, kGlOrder> node;
  std::array<double, kGlOrder> weight;
};

// Nodes/weights for Legendre P_32 by Newton iteration on the Chebyshev guess.
GlRule make_rule() {
  GlRule r{};
  const int n = kGlOrder;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        r.node[i] = x;
        r.weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        break;
      }
    }
  }
  return r;
}

const GlRule& rule() {
  static const GlRule r = make_rule();
  return r;
}

Complex panel_sum(const std::function<Complex(double)>& f, double lo, double hi) {
  const GlRule& r = rule();
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  Complex acc = 0.0;
  for (int i = 0; i < kGlOrder; ++i) acc += r.weight[i] * f(mid + half * r.node[i]);
  return acc * half;
}

Complex composite(const std::function<Complex(double)>& f,
                  const std::vector<double>& edges, int splits_per_segment) {
  Complex acc = 0.0;
  for (std::size_t s = 0; s + 1 < edges.size(); ++s) {
    const double lo = edges[s], hi = edges[s + 1];
    const double h = (hi - lo) / splits_per_segment;
    for (int p = 0; p < splits_per_segment; ++p)
      acc += panel_sum(f, lo + p * h, lo + (p + 1) * h);
  }
  return acc;
}

}  // namespace

Complex integrate(const std::function<Complex(double)>& f, Interval domain,
                  const std::vector<double>& breakpoints, double osc_freq,
                  const QuadratureSpec& spec) {
  if (domain.hi <= domain.lo) return 0.0;

  std::vector<double> edges;
  edges.push_back(domain.lo);
  for (double b : breakpoints)
    if (b > domain.lo && b < domain.hi) edges.push_back(b);
  edges.push_back(domain.hi);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-14; }),
              edges.end());

  // A 32-point panel handles several oscillation periods; start with panels
  // no longer than ~6 periods and at least one per segment.
  int splits = 1;
  if (osc_freq > 0.0) {
    double max_seg = 0.0;
    for (std::size_t s = 0; s + 1 < edges.size(); ++s)
      max_seg = std::max(max_seg, edges[s + 1] - edges[s]);
    splits = std::max(1, static_cast<int>(std::ceil(max_seg * osc_freq / (6.0 * kTwoPi))));
  }

  Complex prev = composite(f, edges, splits);
  for (int d = 0; d < spec.max_doublings; ++d) {
    splits *= 2;
    const Complex cur = composite(f, edges, splits);
    if (std::abs(cur - prev) <= spec.abs_tol) return cur;
    prev = cur;
  }
  throw NonConvergedQuadrature("quadrature did not stabilize to requested tolerance");
}

double integrate_real(const std::function<double(double)>& f, Interval domain,
                      const std::vector<double>& breakpoints, double osc_freq,
                      const QuadratureSpec& spec) {
  return integrate([&f](double x) { return Complex(f(x), 0.0); }, domain, breakpoints,
                   osc_freq, spec)
      .real();
}

}  // namespace orthoframes
