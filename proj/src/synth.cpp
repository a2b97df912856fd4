#include "orthoframes/synth.hpp"

#include <algorithm>
#include <cmath>

#include "orthoframes/errors.hpp"

namespace orthoframes {

SynthesizedFunction::SynthesizedFunction(SeedFunction seed, LatticeParams lattice,
                                         CoefficientTable table, int truncation)
    : seed_(std::move(seed)),
      lattice_(lattice),
      table_(std::move(table)),
      truncation_(truncation) {
  if (truncation_ < 0) throw ConfigError("synthesize: truncation must be >= 0");
}

Complex SynthesizedFunction::evaluate(double x) const {
  const int N = truncation_;
  const double a = lattice_.a;
  Complex acc = 0.0;
  if (table_.dims() == 1) {
    for (int k = -N; k <= N; ++k) {
      const Complex ck = table_.c(k);
      if (ck == Complex(0.0)) continue;
      acc += ck * seed_.evaluate(x + a * k);
    }
    return acc;
  }
  for (int k1 = -N; k1 <= N; ++k1) {
    Complex inner = 0.0;
    for (int k2 = -N; k2 <= N; ++k2) {
      const Complex ck = table_.c(k1, k2);
      if (ck == Complex(0.0)) continue;
      inner += ck * seed_.evaluate(x + a * k2);
    }
    if (inner != Complex(0.0)) acc += inner * cis(a * k1 * x);
  }
  return acc;
}

Interval SynthesizedFunction::effective_support() const {
  const Interval s = seed_.effective_support();
  const double pad = lattice_.a * truncation_;
  return {s.lo - pad, s.hi + pad};
}

std::vector<double> SynthesizedFunction::breakpoints() const {
  std::vector<double> bp;
  const auto base = seed_.breakpoints();
  for (int k = -truncation_; k <= truncation_; ++k)
    for (double b : base) bp.push_back(b - lattice_.a * k);
  std::sort(bp.begin(), bp.end());
  return bp;
}

SynthesizedFunction synthesize(const SeedFunction& seed, const LatticeParams& lattice,
                               const CoefficientTable& table, int truncation) {
  return SynthesizedFunction(seed, lattice, table, truncation);
}

Complex gram_example1(const CoefficientTable& table, int truncation, int n1, int n2) {
  if (!table.axis_shaped(1e-12))
    throw ShapeMismatch("gram_example1 needs c_k = delta_{k1,0} chat_{k2}");
  if (n1 != 0) return 0.0;
  const auto chat = [&table](int k) { return table.dims() == 1 ? table.c(k) : table.c(0, k); };
  Complex acc = 0.0;
  for (int l = -truncation; l <= truncation; ++l)
    acc += chat(l) * (chat(l + n2) + (chat(l + n2 + 1) + chat(l + n2 - 1)) / 3.0);
  return acc;
}

Complex gram_example3(const CoefficientTable& table, int L, int truncation, int n1, int n2) {
  if (!table.axis_shaped(1e-12))
    throw ShapeMismatch("gram_example3 needs c_k = delta_{k1,0} chat_{k2}");
  const auto chat = [&table](int k) { return table.dims() == 1 ? table.c(k) : table.c(0, k); };
  Complex diag = 0.0, side = 0.0;
  for (int l = -truncation; l <= truncation; ++l) {
    diag += chat(l) * chat(l - n2);
    side += chat(l) * (chat(l - n2 + 1) + chat(l - n2 - 1));
  }
  Complex acc = side / (kPi * (1.0 - 4.0 * double(n1) * n1 * L * L));
  if (n1 == 0) acc += diag;
  return acc;
}

Complex gram_general(const CoefficientTable& table, const OverlapSequence& overlaps,
                     int truncation, int n1, int n2) {
  const int N = truncation;
  const int k1_lo = table.dims() == 1 ? 0 : -N;
  const int k1_hi = table.dims() == 1 ? 0 : N;
  Complex acc = 0.0;
  for (int k1 = k1_lo; k1 <= k1_hi; ++k1)
    for (int k2 = -N; k2 <= N; ++k2) {
      const Complex ck = std::conj(table.c(k1, k2));
      if (ck == Complex(0.0)) continue;
      for (int j1 = k1_lo; j1 <= k1_hi; ++j1)
        for (int j2 = -N; j2 <= N; ++j2) {
          const Complex cj = table.c(j1, j2);
          if (cj == Complex(0.0)) continue;
          acc += ck * cj * overlaps.at(k1 + n1 - j1, k2 + n2 - j2);
        }
    }
  return acc;
}

Complex gram_oracle(const SynthesizedFunction& psi, int n1, int n2, const QuadratureSpec& quad) {
  const double a = psi.lattice().a;
  const Interval s = psi.effective_support();
  const Interval shifted{s.lo - a * n2, s.hi - a * n2};
  const Interval dom{std::max(s.lo, shifted.lo), std::min(s.hi, shifted.hi)};
  if (dom.hi <= dom.lo) return 0.0;

  std::vector<double> bp = psi.breakpoints();
  {
    const auto more = psi.breakpoints();
    for (double b : more) bp.push_back(b - a * n2);
  }
  const int mod_range = psi.table().dims() == 1 ? 0 : 2 * psi.truncation();
  const double osc = a * (std::abs(n1) + mod_range);

  return integrate(
      [&](double x) {
        const Complex shifted_val = cis(a * n1 * x) * psi.evaluate(x + a * n2);
        return std::conj(shifted_val) * psi.evaluate(x);
      },
      dom, bp, osc, quad);
}

GramReport build_gram_report(int range, const std::function<Complex(int, int)>& entry,
                             std::string method) {
  GramReport rep;
  rep.method = std::move(method);
  rep.range = range;
  for (int n1 = -range; n1 <= range; ++n1)
    for (int n2 = -range; n2 <= range; ++n2) {
      const Complex v = entry(n1, n2);
      rep.entries.push_back({n1, n2, v});
      if (n1 == 0 && n2 == 0)
        rep.norm_sq = v.real();
      else
        rep.max_offdiag = std::max(rep.max_offdiag, std::abs(v));
    }
  return rep;
}

LatticeArray LatticeArray::delta(int dims, int radius) {
  LatticeArray arr;
  arr.dims = dims;
  arr.radius = radius;
  const int side = 2 * radius + 1;
  arr.v.assign(dims == 1 ? side : side * side, 0.0);
  arr.set(0, 0, 1.0);
  return arr;
}

std::size_t LatticeArray::index(int k1, int k2) const {
  const int side = 2 * radius + 1;
  if (dims == 1) return static_cast<std::size_t>(k2 + radius);
  return static_cast<std::size_t>(k1 + radius) * side + static_cast<std::size_t>(k2 + radius);
}

Complex LatticeArray::at(int k1, int k2) const {
  if (dims == 1) {
    if (k1 != 0 || std::abs(k2) > radius) return 0.0;
    return v[index(0, k2)];
  }
  if (std::abs(k1) > radius || std::abs(k2) > radius) return 0.0;
  return v[index(k1, k2)];
}

void LatticeArray::set(int k1, int k2, Complex val) { v[index(k1, k2)] = val; }

LatticeArray apply_XL(const CoefficientTable& table, const LatticeArray& input, bool invert) {
  LatticeArray out;
  out.dims = std::max(table.dims(), input.dims);
  out.radius = table.radius() + input.radius;
  const int side = 2 * out.radius + 1;
  out.v.assign(out.dims == 1 ? side : side * side, 0.0);

  const int t1 = table.dims() == 1 ? 0 : table.radius();
  const auto weight = [&](int k1, int k2) {
    return invert ? table.alpha_hat(k1, k2) : table.c(k1, k2);
  };
  const int i1 = input.dims == 1 ? 0 : input.radius;
  for (int k1 = -t1; k1 <= t1; ++k1)
    for (int k2 = -table.radius(); k2 <= table.radius(); ++k2) {
      const Complex w = weight(k1, k2);
      if (w == Complex(0.0)) continue;
      for (int m1 = -i1; m1 <= i1; ++m1)
        for (int m2 = -input.radius; m2 <= input.radius; ++m2) {
          const Complex x = input.at(m1, m2);
          if (x == Complex(0.0)) continue;
          const int o1 = out.dims == 1 ? 0 : k1 + m1;
          out.set(o1, k2 + m2, out.at(o1, k2 + m2) + w * x);
        }
    }
  return out;
}

}  // namespace orthoframes
