#pragma once

#include <string>
#include <vector>

#include "orthoframes/common.hpp"
#include "orthoframes/seedfn.hpp"

namespace orthoframes {

// Truncated overlap sequence: a_j = <A^j f0, f0> in one dimension or
// I_{n1,n2} = <g_n, g> on the Gabor lattice.  Values are stored densely on
// [-radius, radius]^dims; tail_bound records the largest modulus on the
// outermost index shell.
class OverlapSequence {
 public:
  OverlapSequence(int dims, int radius, std::string source);

  int dims() const { return dims_; }
  int radius() const { return radius_; }
  const std::string& source() const { return source_; }

  // 1D access
  Complex at(int j) const;
  void set(int j, Complex v);
  // 2D access
  Complex at(int n1, int n2) const;
  void set(int n1, int n2, Complex v);

  bool in_range(int n1, int n2) const;
  double tail_bound() const;             // max modulus on the outer shell
  double hermitian_error() const;        // max |value(-n) - conj(value(n))|
  double sum_abs() const;

  const std::vector<Complex>& raw() const { return values_; }

 private:
  std::size_t index(int n1, int n2) const;
  int dims_;
  int radius_;
  int side_;
  std::string source_;
  std::vector<Complex> values_;
};

// a_j = <T^j g, g> with (T g)(x) = g(x + step).  Rectangles use the exact
// piecewise-linear interval-overlap formula; everything else is quadrature.
OverlapSequence translate_overlaps(const SeedFunction& seed, double step, int radius,
                                   const QuadratureSpec& quad = {});

// I_n = <g_n, g> with the atom convention g_n = e^{i a n1 x} g(x + a n2),
// computed in x-space.  Entries whose supports cannot meet are exact zeros.
OverlapSequence gabor_overlaps(const SeedFunction& seed, const LatticeParams& lattice,
                               int radius, const QuadratureSpec& quad = {});

// Closed form for the Gaussian vacuum:
// I_n = (-1)^{L n1 n2} exp(-(pi/2) L (n1^2 + n2^2)).
OverlapSequence coherent_overlaps(const LatticeParams& lattice, int radius);

// CSV emission: columns n1,n2,re,im (n2=0 column kept for 1D sequences).
std::string overlaps_to_csv(const OverlapSequence& ov);

}  // namespace orthoframes
