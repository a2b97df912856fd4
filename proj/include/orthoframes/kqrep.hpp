#pragma once

#include <string>
#include <vector>

#include "orthoframes/overlaps.hpp"
#include "orthoframes/seedfn.hpp"

namespace orthoframes {

// Discretization of the box [0, 2pi/A) x [0, a).  k samples sit on the DFT
// grid i*dk; q samples sit on midpoints (j+1/2)*dq so that jump
// discontinuities of rectangular seeds never land on a sample.
struct KQBox {
  double A = 0.0;
  double a = 0.0;
  int k_count = 256;
  int q_count = 256;

  double dk() const { return kTwoPi / (A * k_count); }
  double dq() const { return a / q_count; }
  double k_at(int i) const { return i * dk(); }
  double q_at(int j) const { return (j + 0.5) * dq(); }

  static KQBox from_lattice(const LatticeParams& lat, int k_count = 256, int q_count = 256);
};

// g(k,q) = sqrt(A/2pi) sum_l e^{-i k l A} g(q + l a), the pairing of the
// Dirac-comb eigenfunctions with g.  Quasi-periodic: g(k, q+a) = e^{ikA} g(k,q).
class KQRepresentation {
 public:
  KQRepresentation(KQBox box, std::string seed_label);

  const KQBox& box() const { return box_; }
  const std::string& seed_label() const { return label_; }
  Complex at(int i, int j) const { return values_[std::size_t(i) * box_.q_count + j]; }
  void set(int i, int j, Complex v) { values_[std::size_t(i) * box_.q_count + j] = v; }

  // g at (k, q + a/2) with q + a/2 wrapped through the boundary condition.
  Complex at_half_shift(int i, int j) const;

  double parseval() const;      // sum |g|^2 dk dq
  double min_modulus() const;
  double max_modulus() const;

 private:
  KQBox box_;
  std::string label_;
  std::vector<Complex> values_;
};

// Direct single-point evaluation of the transform series (used by the
// boundary-condition tests and by off-grid reconstruction).
Complex kq_point(const SeedFunction& seed, const KQBox& box, double k, double q, int max_l = 0);

// max_l = 0 picks the l-window automatically: exact for compact supports,
// |l| <= 12 for the Gaussian.  Throws NonConvergedSum when the boundary terms
// of the window still exceed 1e-12.
KQRepresentation kq_transform(const SeedFunction& seed, const KQBox& box, int max_l = 0);

// max over the reduced box of | sum_{t=0..L-1} |g(k, q + t a/L)|^2 - LA/(2 pi a) |.
// Zero residual certifies that the generated Gabor family is orthonormal.
double orthonormality_criterion(const KQRepresentation& rep, int L);

// Inverse transform on an x grid; exact (up to aliasing distance
// k_count * a) when x lands on stored q columns, linear in q otherwise.
std::vector<Complex> reconstruct(const KQRepresentation& rep, const std::vector<double>& xs);

struct ProbeResult {
  double residual = 0.0;  // max_{|n| <= 3} |<g_n, h>|
  double h_norm = 0.0;
};

// Incompleteness probe for L = 2: mu(k,q) = e^{i q a/2} sum_n e^{-i n k A}
// s_o(q + n a/2), h = conj(g(k, q+a/2)) mu(k,q).  A small residual with
// nonzero ||h|| certifies that h is orthogonal to the whole family, i.e. the
// family cannot be complete in L2(R).
ProbeResult completeness_probe(const KQRepresentation& rep, const SeedFunction& s_o, int L = 2);

// Fourier coefficients of |g(k,q)|^2 over the box; must reproduce the
// x-space overlaps I_n.
OverlapSequence overlaps_from_kq(const KQRepresentation& rep, int radius);

std::string kq_to_csv(const KQRepresentation& rep);

}  // namespace orthoframes
