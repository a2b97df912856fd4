#pragma once

#include <functional>
#include <vector>

#include "orthoframes/common.hpp"

namespace orthoframes {

struct QuadratureSpec {
  double abs_tol = kDefaultQuadTol;
  int max_doublings = 12;
};

// Composite 32-point Gauss-Legendre quadrature over [domain.lo, domain.hi].
// Panel edges are aligned to the supplied breakpoints (support edges, sample
// nodes, kinks) and the initial panel count resolves the oscillation hint
// osc_freq (the |omega| of any e^{i omega x} factor in the integrand).
// Panels are doubled until two successive passes agree to spec.abs_tol;
// otherwise NonConvergedQuadrature is thrown.
Complex integrate(const std::function<Complex(double)>& f, Interval domain,
                  const std::vector<double>& breakpoints, double osc_freq,
                  const QuadratureSpec& spec = {});

double integrate_real(const std::function<double(double)>& f, Interval domain,
                      const std::vector<double>& breakpoints, double osc_freq,
                      const QuadratureSpec& spec = {});

}  // namespace orthoframes
