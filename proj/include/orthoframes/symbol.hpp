#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orthoframes/overlaps.hpp"

namespace orthoframes {

// Trigonometric-polynomial symbol F(P) = sum_m I_m e^{i P.m} built from an
// overlap sequence.  Holds the scan of its values on an equispaced grid of
// grid_resolution points per dimension (min/max and how real it evaluated).
class SymbolFunction {
 public:
  int dims() const { return coeffs_.dims(); }
  const OverlapSequence& coeffs() const { return coeffs_; }
  int grid_resolution() const { return grid_resolution_; }

  double min_value() const { return min_value_; }
  double max_value() const { return max_value_; }
  double min_p1() const { return min_p1_; }
  double min_p2() const { return min_p2_; }
  double realness_error() const { return realness_error_; }

  // Direct evaluation of the coefficient sum (small radii; test oracle path).
  Complex value(double p) const;
  Complex value(double p1, double p2) const;

  // Real part of F sampled on the equispaced grid row P1 = p1 (2D) or the
  // full grid (1D); used by the coefficient quadrature.
  std::vector<double> grid_row(double p1, int resolution) const;

 private:
  friend SymbolFunction build_symbol(const OverlapSequence&, int);
  OverlapSequence coeffs_{1, 1, ""};
  int grid_resolution_ = 0;
  double min_value_ = 0.0, max_value_ = 0.0;
  double min_p1_ = 0.0, min_p2_ = 0.0;
  double realness_error_ = 0.0;
};

// Default scan grid: 4096 points per dimension; pass an explicit resolution
// to trade accuracy for speed (the 2D scan is quadratic in it).
SymbolFunction build_symbol(const OverlapSequence& ov, int grid_resolution = 0);

struct PositivityReport {
  bool ok = false;
  double min_p1 = 0.0;
  double min_p2 = 0.0;
  double min_value = 0.0;
};

// OK iff the grid minimum exceeds floor_rel * max_value.  check_positive()
// reports; require_positive() throws SymbolNotPositive instead.
PositivityReport check_positive(const SymbolFunction& sym, double floor_rel = 1e-6);
void require_positive(const SymbolFunction& sym, double floor_rel = 1e-6);

// Fourier coefficients of F^{-1/2} (c) and F^{+1/2} (alpha_hat) by equispaced
// trapezoid quadrature, which is exact to spectral accuracy on the periodic
// domain.  The positive square root is taken throughout.
class CoefficientTable {
 public:
  CoefficientTable(int dims, int radius);

  int dims() const { return dims_; }
  int radius() const { return radius_; }
  Complex c(int k) const;
  Complex c(int k1, int k2) const;
  Complex alpha_hat(int k) const;
  Complex alpha_hat(int k1, int k2) const;
  void set(int k1, int k2, Complex cv, Complex av);

  double decay_certificate() const;  // max |c| on the outer shell
  // true when c(k1,k2) vanishes for all k1 != 0 (Example-1-shaped tables)
  bool axis_shaped(double eps = 1e-12) const;
  double sum_rule() const;  // sum conj(alpha_hat_k) c_k (real part)

 private:
  std::size_t index(int k1, int k2) const;
  int dims_, radius_, side_;
  std::vector<Complex> c_, alpha_hat_;
};

// Throws SymbolNotPositive if the symbol fails the positivity floor and
// NonConvergedQuadrature if doubling the grid moves any entry by more than
// 1e-10.
CoefficientTable coefficients(const SymbolFunction& sym, int radius,
                              double positivity_floor_rel = 1e-6);

// (sum |c_k|^2, (2pi)^{-dims} int F^{-1} dP): the two routes to the Parseval
// sum; the caller compares.
std::pair<double, double> parseval_sum(const CoefficientTable& table,
                                       const SymbolFunction& sym);

std::string coefficients_to_csv(const CoefficientTable& table);

}  // namespace orthoframes
