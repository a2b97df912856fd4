#pragma once

#include <functional>
#include <string>
#include <vector>

#include "orthoframes/overlaps.hpp"
#include "orthoframes/symbol.hpp"

namespace orthoframes {

// Truncated orthonormalized generator Psi_N = sum_{|k| <= N} c_k g_k, where
// g_k = T1^{k1} T2^{k2} g for 2D tables and g_k = T^k g (pure translates,
// step = lattice.a) for 1D tables.
class SynthesizedFunction {
 public:
  SynthesizedFunction(SeedFunction seed, LatticeParams lattice, CoefficientTable table,
                      int truncation);

  Complex evaluate(double x) const;
  const SeedFunction& seed() const { return seed_; }
  const LatticeParams& lattice() const { return lattice_; }
  const CoefficientTable& table() const { return table_; }
  int truncation() const { return truncation_; }

  Interval effective_support() const;
  std::vector<double> breakpoints() const;

 private:
  SeedFunction seed_;
  LatticeParams lattice_;
  CoefficientTable table_;
  int truncation_;
};

SynthesizedFunction synthesize(const SeedFunction& seed, const LatticeParams& lattice,
                               const CoefficientTable& table, int truncation);

// <Psi_n, Psi> for an Example-1-shaped table (c_k = delta_{k1,0} chat_{k2},
// seed overlaps 1, 1/3, 1/3):
//   delta_{n1,0} sum_{l=-N..N} chat_l ( chat_{l+n2} + (chat_{l+n2+1} + chat_{l+n2-1})/3 )
// Coefficients referenced beyond the table radius count as zero.
// Throws ShapeMismatch when the table has k1-dependence above 1e-12.
Complex gram_example1(const CoefficientTable& table, int truncation, int n1, int n2);

// <Psi_n, Psi> for an Example-3-shaped table:
//   delta_{n1,0} sum_l chat_l chat_{l-n2}
//   + (1/(pi (1 - 4 n1^2 L^2))) sum_l chat_l ( chat_{l-n2+1} + chat_{l-n2-1} )
Complex gram_example3(const CoefficientTable& table, int L, int truncation, int n1, int n2);

// Exact truncated Gram from an arbitrary overlap sequence:
//   <Psi_n, Psi> = sum_{k,k'} conj(c_k) c_{k'} I_{(k+n)-k'}
// (the symbol-algebra route; works for any seed whose overlaps are known).
Complex gram_general(const CoefficientTable& table, const OverlapSequence& overlaps,
                     int truncation, int n1, int n2);

// Brute-force quadrature of <T1^{n1} T2^{n2} Psi, Psi>; the independent check
// of the analytic formulas.
Complex gram_oracle(const SynthesizedFunction& psi, int n1, int n2,
                    const QuadratureSpec& quad = {});

struct GramEntry {
  int n1;
  int n2;
  Complex value;
};

struct GramReport {
  std::string method;  // analytic_rectangle, analytic_window, symbol_algebra, quadrature_oracle
  int range = 0;
  std::vector<GramEntry> entries;
  double norm_sq = 0.0;
  double max_offdiag = 0.0;
};

GramReport build_gram_report(int range, const std::function<Complex(int, int)>& entry,
                             std::string method);

// Lattice-indexed coefficient vector for the X_L action.
struct LatticeArray {
  int dims = 1;
  int radius = 0;
  std::vector<Complex> v;

  static LatticeArray delta(int dims, int radius);
  Complex at(int k1, int k2 = 0) const;
  void set(int k1, int k2, Complex val);
  std::size_t index(int k1, int k2) const;
};

// X_L as a discrete convolution with c (or with alpha_hat when invert is
// set): realizes Psi_n = X_L g_n and g_n = X_L^{-1} Psi_n at the coefficient
// level.  Output radius grows by the table radius.
LatticeArray apply_XL(const CoefficientTable& table, const LatticeArray& input, bool invert);

}  // namespace orthoframes
