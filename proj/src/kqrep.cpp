#include "orthoframes/kqrep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orthoframes/errors.hpp"
#include "orthoframes/parallel.hpp"

namespace orthoframes {

namespace {

struct LWindow {
  int lo;
  int hi;
  bool exact;  // compact support: window covers every nonzero term
};

LWindow l_window(const SeedFunction& seed, double a, int max_l) {
  if (max_l > 0) return {-max_l, max_l, false};
  if (auto s = seed.support()) {
    // q + l a in [s.lo, s.hi] for q in [0, a)
    const int lo = static_cast<int>(std::floor(s->lo / a)) - 1;
    const int hi = static_cast<int>(std::ceil(s->hi / a)) + 1;
    return {lo, hi, true};
  }
  return {-12, 12, false};
}

}  // namespace

KQBox KQBox::from_lattice(const LatticeParams& lat, int k_count, int q_count) {
  return {lat.A > 0.0 ? lat.A : lat.a, lat.a, k_count, q_count};
}

KQRepresentation::KQRepresentation(KQBox box, std::string seed_label)
    : box_(box), label_(std::move(seed_label)) {
  if (box_.k_count < 16 || box_.q_count < 16)
    throw GridMismatch("kq box needs at least 16 samples per axis");
  values_.assign(std::size_t(box_.k_count) * box_.q_count, 0.0);
}

Complex KQRepresentation::at_half_shift(int i, int j) const {
  if (box_.q_count % 2 != 0) throw GridMismatch("half-box shift needs an even q_count");
  const int half = box_.q_count / 2;
  if (j < half) return at(i, j + half);
  // wrap through g(k, q + a) = e^{i k A} g(k, q)
  return cis(box_.k_at(i) * box_.A) * at(i, j - half);
}

double KQRepresentation::parseval() const {
  double s = 0.0;
  for (const Complex& v : values_) s += std::norm(v);
  return s * box_.dk() * box_.dq();
}

double KQRepresentation::min_modulus() const {
  double m = std::abs(values_[0]);
  for (const Complex& v : values_) m = std::min(m, std::abs(v));
  return m;
}

double KQRepresentation::max_modulus() const {
  double m = 0.0;
  for (const Complex& v : values_) m = std::max(m, std::abs(v));
  return m;
}

Complex kq_point(const SeedFunction& seed, const KQBox& box, double k, double q, int max_l) {
  const LWindow w = l_window(seed, box.a, max_l);
  Complex acc = 0.0;
  for (int l = w.lo; l <= w.hi; ++l) acc += cis(-k * l * box.A) * seed.evaluate(q + l * box.a);
  return std::sqrt(box.A / kTwoPi) * acc;
}

KQRepresentation kq_transform(const SeedFunction& seed, const KQBox& box, int max_l) {
  KQRepresentation rep(box, seed.label());
  const LWindow w = l_window(seed, box.a, max_l);
  const double scale = std::sqrt(box.A / kTwoPi);

  // Per-l seed samples are shared across all k rows.
  const int lq = w.hi - w.lo + 1;
  std::vector<Complex> samples(std::size_t(lq) * box.q_count);
  double tail = 0.0;
  for (int l = w.lo; l <= w.hi; ++l)
    for (int j = 0; j < box.q_count; ++j) {
      const Complex v = seed.evaluate(box.q_at(j) + l * box.a);
      samples[std::size_t(l - w.lo) * box.q_count + j] = v;
      if (l == w.lo || l == w.hi) tail = std::max(tail, std::abs(v));
    }
  if (!w.exact && scale * tail > 1e-12)
    throw NonConvergedSum("kq transform: l-window boundary terms exceed 1e-12");

  parallel_for(box.k_count, [&](std::size_t i) {
    const double kA = box.k_at(static_cast<int>(i)) * box.A;
    for (int l = w.lo; l <= w.hi; ++l) {
      const Complex phase = scale * cis(-kA * l);
      const Complex* src = samples.data() + std::size_t(l - w.lo) * box.q_count;
      for (int j = 0; j < box.q_count; ++j) {
        if (src[j] != Complex(0.0))
          rep.set(static_cast<int>(i), j, rep.at(static_cast<int>(i), j) + phase * src[j]);
      }
    }
  });
  return rep;
}

double orthonormality_criterion(const KQRepresentation& rep, int L) {
  const KQBox& b = rep.box();
  if (L < 1) throw ConfigError("orthonormality criterion: L must be >= 1");
  if (b.q_count % L != 0)
    throw GridMismatch("orthonormality criterion: q_count must be divisible by L");
  const int stride = b.q_count / L;
  const double target = L * b.A / (kTwoPi * b.a);
  double residual = 0.0;
  for (int i = 0; i < b.k_count; ++i)
    for (int j = 0; j < stride; ++j) {
      double s = 0.0;
      for (int t = 0; t < L; ++t) s += std::norm(rep.at(i, j + t * stride));
      residual = std::max(residual, std::abs(s - target));
    }
  return residual;
}

std::vector<Complex> reconstruct(const KQRepresentation& rep, const std::vector<double>& xs) {
  const KQBox& b = rep.box();
  const double scale = std::sqrt(b.A / kTwoPi) * b.dk();
  std::vector<Complex> out(xs.size());

  for (std::size_t m = 0; m < xs.size(); ++m) {
    const double x = xs[m];
    const auto l = static_cast<long>(std::floor(x / b.a));
    const double q = x - static_cast<double>(l) * b.a;
    // locate q on the midpoint grid
    const double t = q / b.dq() - 0.5;
    const auto j0 = static_cast<long>(std::floor(t));
    const double frac = t - static_cast<double>(j0);

    Complex acc = 0.0;
    for (int i = 0; i < b.k_count; ++i) {
      const auto column = [&](long j) -> Complex {
        // wrap across the box edge via g(k, q -+ a) = e^{-+ i k A} g(k, q)
        if (j < 0) return cis(-b.k_at(i) * b.A) * rep.at(i, b.q_count - 1);
        if (j >= b.q_count) return cis(b.k_at(i) * b.A) * rep.at(i, 0);
        return rep.at(i, static_cast<int>(j));
      };
      Complex g;
      if (frac < 1e-9)
        g = column(j0);
      else if (frac > 1.0 - 1e-9)
        g = column(j0 + 1);
      else
        g = (1.0 - frac) * column(j0) + frac * column(j0 + 1);
      acc += cis(b.k_at(i) * static_cast<double>(l) * b.A) * g;
    }
    out[m] = scale * acc;
  }
  return out;
}

ProbeResult completeness_probe(const KQRepresentation& rep, const SeedFunction& s_o, int L) {
  if (L != 2) throw ConfigError("completeness probe implements the L = 2 construction");
  const KQBox& b = rep.box();
  if (b.q_count % 2 != 0) throw GridMismatch("completeness probe needs an even q_count");

  // mu(k,q) = e^{i q a/2} sum_n e^{-i n k A} s_o(q + n a/2);
  // mu(k, q + a/2) = -e^{i k A} mu(k, q).
  const double half = 0.5 * b.a;
  const Interval eff = s_o.effective_support();
  const int n_lo = static_cast<int>(std::floor((eff.lo - b.a) / half)) - 1;
  const int n_hi = static_cast<int>(std::ceil(eff.hi / half)) + 1;

  std::vector<Complex> h(std::size_t(b.k_count) * b.q_count);
  double h_norm_sq = 0.0;
  for (int i = 0; i < b.k_count; ++i) {
    const double k = b.k_at(i);
    for (int j = 0; j < b.q_count; ++j) {
      const double q = b.q_at(j);
      Complex mu = 0.0;
      for (int n = n_lo; n <= n_hi; ++n) mu += cis(-n * k * b.A) * s_o.evaluate(q + n * half);
      mu *= cis(q * half);
      const Complex hv = std::conj(rep.at_half_shift(i, j)) * mu;
      h[std::size_t(i) * b.q_count + j] = hv;
      h_norm_sq += std::norm(hv);
    }
  }
  h_norm_sq *= b.dk() * b.dq();
  if (std::sqrt(h_norm_sq) < 1e-8)
    throw DegenerateProbe("completeness probe: ||h|| below 1e-8");

  double residual = 0.0;
  for (int n1 = -3; n1 <= 3; ++n1)
    for (int n2 = -3; n2 <= 3; ++n2) {
      Complex acc = 0.0;
      for (int i = 0; i < b.k_count; ++i) {
        const double k = b.k_at(i);
        Complex row = 0.0;
        for (int j = 0; j < b.q_count; ++j)
          row += cis(-b.q_at(j) * n1 * b.a) * std::conj(rep.at(i, j)) *
                 h[std::size_t(i) * b.q_count + j];
        acc += cis(-k * n2 * b.A) * row;
      }
      residual = std::max(residual, std::abs(acc) * b.dk() * b.dq());
    }
  return {residual, std::sqrt(h_norm_sq)};
}

OverlapSequence overlaps_from_kq(const KQRepresentation& rep, int radius) {
  const KQBox& b = rep.box();
  OverlapSequence ov(2, radius, rep.seed_label() + " via kq");
  for (int n1 = -radius; n1 <= radius; ++n1)
    for (int n2 = -radius; n2 <= radius; ++n2) {
      Complex acc = 0.0;
      for (int i = 0; i < b.k_count; ++i) {
        Complex row = 0.0;
        for (int j = 0; j < b.q_count; ++j)
          row += cis(-b.q_at(j) * n1 * b.a) * std::norm(rep.at(i, j));
        acc += cis(-b.k_at(i) * n2 * b.A) * row;
      }
      ov.set(n1, n2, acc * b.dk() * b.dq());
    }
  return ov;
}

std::string kq_to_csv(const KQRepresentation& rep) {
  std::ostringstream os;
  os << "k,q,re,im\n";
  const KQBox& b = rep.box();
  for (int i = 0; i < b.k_count; ++i)
    for (int j = 0; j < b.q_count; ++j)
      os << format_double(b.k_at(i)) << ',' << format_double(b.q_at(j)) << ','
         << format_double(rep.at(i, j).real()) << ',' << format_double(rep.at(i, j).imag())
         << '\n';
  return os.str();
}

}  // namespace orthoframes
