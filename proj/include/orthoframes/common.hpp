#pragma once

#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace orthoframes {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

// Default absolute tolerance for inner products and quadrature refinement.
inline constexpr double kDefaultQuadTol = 1e-10;

inline Complex cis(double t) { return {std::cos(t), std::sin(t)}; }

// Shortest-ish fixed formatting: 12 significant digits, C locale.  Used by
// every CSV/JSON emitter so identical runs produce byte-identical files.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Lossless variant for config text: 12 digits when that round-trips the
// value exactly, full precision otherwise.
inline std::string format_double_exact(double v) {
  std::string s = format_double(v);
  if (std::strtod(s.c_str(), nullptr) == v) return s;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

inline bool disjoint(const Interval& a, const Interval& b) {
  return a.hi < b.lo || b.hi < a.lo;
}

}  // namespace orthoframes
