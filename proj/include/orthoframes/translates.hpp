#pragma once

#include <string>
#include <vector>

#include "orthoframes/seedfn.hpp"

namespace orthoframes {

// Phi(p) = sum_k |phihat(p+k)|^2 on [0,1), with phihat in the unit-frequency
// convention phihat(nu) = int phi(x) e^{-2 pi i nu x} dx (so that Phi is
// 1-periodic and Phi(p) = alpha(2 pi p), the overlap symbol of the integer
// translates).  Rectangles use an exact lattice-sum identity; other seeds a
// truncated k-sum with a certified tail.
struct PeriodizedSpectrum {
  std::vector<double> values;  // at p_i = i / values.size()
  std::string seed_label;
  double zero_set_measure_estimate = 0.0;

  double min_value() const;
  double max_value() const;
};

PeriodizedSpectrum periodized_spectrum(const SeedFunction& seed, int resolution = 4096);

// Single-point evaluation (p is reduced mod 1).
double periodized_spectrum_point(const SeedFunction& seed, double p);

struct FrameBounds {
  double A_bound = 0.0;
  double B_bound = 0.0;
  bool is_frame = false;
};

// Prop.-1 style bounds: A = min of Phi over the grid excluding the near-zero
// set (Phi < 1e-8 max), B = max.  Throws NotAFrame past the overflow guard.
FrameBounds frame_bounds(PeriodizedSpectrum& spec);

// Fourier-division orthonormalization: phitilde is the inverse transform of
// (2 pi)^{-1/2} (sum_l |phihat(p + 2 pi l)|^2)^{-1/2} phihat(p).  Since the
// multiplier is 2 pi periodic, phitilde = sum_k m_k phi(x + k); the m_k come
// from the spectrum periodization, never from overlap quadrature, so the two
// orthonormalization routes stay independent.
struct MraGenerator {
  SeedFunction seed;
  std::vector<Complex> coeffs;  // m_k for k in [-radius, radius]
  int radius = 0;
  UniformGrid grid;
  std::vector<Complex> samples;

  Complex evaluate(double x) const;
};

// Throws SymbolNotPositive when the periodized spectrum vanishes (no Riesz
// basis to orthonormalize).
MraGenerator mra_orthonormalize(const SeedFunction& seed, const UniformGrid& grid,
                                int spectrum_resolution = 4096);

// <phitilde(.+shift), phitilde> by quadrature on the exact piecewise form.
Complex mra_overlap(const MraGenerator& gen, int shift, const QuadratureSpec& quad = {});

}  // namespace orthoframes
