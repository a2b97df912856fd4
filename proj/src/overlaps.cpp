#include "orthoframes/overlaps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orthoframes/errors.hpp"

namespace orthoframes {

OverlapSequence::OverlapSequence(int dims, int radius, std::string source)
    : dims_(dims), radius_(radius), side_(2 * radius + 1), source_(std::move(source)) {
  if (dims != 1 && dims != 2) throw ConfigError("overlap sequence dims must be 1 or 2");
  if (radius < 0) throw ConfigError("overlap radius must be >= 0");
  values_.assign(dims == 1 ? side_ : side_ * side_, Complex(0.0));
}

std::size_t OverlapSequence::index(int n1, int n2) const {
  return static_cast<std::size_t>(n1 + radius_) * side_ + static_cast<std::size_t>(n2 + radius_);
}

Complex OverlapSequence::at(int j) const {
  if (dims_ != 1) throw ShapeMismatch("1D access into a 2D overlap sequence");
  if (std::abs(j) > radius_) return 0.0;
  return values_[static_cast<std::size_t>(j + radius_)];
}

void OverlapSequence::set(int j, Complex v) {
  if (dims_ != 1) throw ShapeMismatch("1D access into a 2D overlap sequence");
  values_[static_cast<std::size_t>(j + radius_)] = v;
}

Complex OverlapSequence::at(int n1, int n2) const {
  if (dims_ == 1) {
    if (n1 != 0) return 0.0;
    return at(n2);
  }
  if (std::abs(n1) > radius_ || std::abs(n2) > radius_) return 0.0;
  return values_[index(n1, n2)];
}

void OverlapSequence::set(int n1, int n2, Complex v) {
  if (dims_ == 1) throw ShapeMismatch("2D access into a 1D overlap sequence");
  values_[index(n1, n2)] = v;
}

bool OverlapSequence::in_range(int n1, int n2) const {
  if (dims_ == 1) return n1 == 0 && std::abs(n2) <= radius_;
  return std::abs(n1) <= radius_ && std::abs(n2) <= radius_;
}

double OverlapSequence::tail_bound() const {
  double m = 0.0;
  if (dims_ == 1) {
    m = std::max(std::abs(at(-radius_)), std::abs(at(radius_)));
  } else {
    for (int n = -radius_; n <= radius_; ++n) {
      m = std::max(m, std::abs(at(n, -radius_)));
      m = std::max(m, std::abs(at(n, radius_)));
      m = std::max(m, std::abs(at(-radius_, n)));
      m = std::max(m, std::abs(at(radius_, n)));
    }
  }
  return m;
}

double OverlapSequence::hermitian_error() const {
  double e = 0.0;
  if (dims_ == 1) {
    for (int j = -radius_; j <= radius_; ++j)
      e = std::max(e, std::abs(at(-j) - std::conj(at(j))));
  } else {
    for (int n1 = -radius_; n1 <= radius_; ++n1)
      for (int n2 = -radius_; n2 <= radius_; ++n2)
        e = std::max(e, std::abs(at(-n1, -n2) - std::conj(at(n1, n2))));
  }
  return e;
}

double OverlapSequence::sum_abs() const {
  double s = 0.0;
  for (const Complex& v : values_) s += std::abs(v);
  return s;
}

OverlapSequence translate_overlaps(const SeedFunction& seed, double step, int radius,
                                   const QuadratureSpec& quad) {
  if (radius < 1) throw ConfigError("translate_overlaps: radius must be >= 1");
  OverlapSequence ov(1, radius, seed.label() + " translates step " + format_double(step));

  const auto* rect = std::get_if<Rectangle>(&seed.variant());
  for (int j = -radius; j <= radius; ++j) {
    if (rect) {
      // <T^j g, g> = h^2 * |supp cap (supp - j step)|
      const double w = 2.0 * rect->halfwidth;
      const double olap = std::max(0.0, w - std::abs(j * step));
      ov.set(j, rect->height * rect->height * olap);
    } else {
      // T^j applied through the atom machinery with no modulation
      LatticeParams lat{0, step, step};
      GaborAtom atom{&seed, 0, j, lat};
      ov.set(j, inner_product(atom, seed, quad));
    }
  }
  return ov;
}

OverlapSequence gabor_overlaps(const SeedFunction& seed, const LatticeParams& lattice,
                               int radius, const QuadratureSpec& quad) {
  if (radius < 1) throw ConfigError("gabor_overlaps: radius must be >= 1");
  if (lattice.L < 1) throw ConfigError("gabor_overlaps: lattice L must be >= 1");
  OverlapSequence ov(2, radius,
                     seed.label() + " gabor L=" + std::to_string(lattice.L));

  // |n2| beyond support-width/a gives disjoint supports: exact zero.
  int n2_cut = radius;
  if (auto s = seed.support())
    n2_cut = std::min<int>(radius, static_cast<int>(std::ceil(s->length() / lattice.a)));

  for (int n1 = -radius; n1 <= radius; ++n1) {
    for (int n2 = -radius; n2 <= radius; ++n2) {
      if (std::abs(n2) > n2_cut) {
        ov.set(n1, n2, 0.0);
        continue;
      }
      GaborAtom atom{&seed, n1, n2, lattice};
      ov.set(n1, n2, inner_product(atom, seed, quad));
    }
  }
  return ov;
}

OverlapSequence coherent_overlaps(const LatticeParams& lattice, int radius) {
  if (radius < 1) throw ConfigError("coherent_overlaps: radius must be >= 1");
  OverlapSequence ov(2, radius, "coherent L=" + std::to_string(lattice.L));
  for (int n1 = -radius; n1 <= radius; ++n1) {
    for (int n2 = -radius; n2 <= radius; ++n2) {
      const double sign = (static_cast<long long>(lattice.L) * n1 * n2) % 2 == 0 ? 1.0 : -1.0;
      ov.set(n1, n2,
             sign * std::exp(-0.5 * kPi * lattice.L * (double(n1) * n1 + double(n2) * n2)));
    }
  }
  return ov;
}

std::string overlaps_to_csv(const OverlapSequence& ov) {
  std::ostringstream os;
  os << "n1,n2,re,im\n";
  if (ov.dims() == 1) {
    for (int j = -ov.radius(); j <= ov.radius(); ++j)
      os << 0 << ',' << j << ',' << format_double(ov.at(j).real()) << ','
         << format_double(ov.at(j).imag()) << '\n';
  } else {
    for (int n1 = -ov.radius(); n1 <= ov.radius(); ++n1)
      for (int n2 = -ov.radius(); n2 <= ov.radius(); ++n2)
        os << n1 << ',' << n2 << ',' << format_double(ov.at(n1, n2).real()) << ','
           << format_double(ov.at(n1, n2).imag()) << '\n';
  }
  return os.str();
}

}  // namespace orthoframes
