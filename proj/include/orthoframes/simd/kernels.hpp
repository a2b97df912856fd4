#pragma once

#include <cstddef>

#include "orthoframes/common.hpp"

// Data-parallel inner loops used by the symbol/coefficient machinery.
// Scalar reference kernels live in simd::ref; an AVX2+FMA variant is selected
// at runtime when the CPU supports it.  ORTHOFRAMES_SIMD=scalar|avx2 forces a
// path (used by the equivalence tests).

namespace orthoframes::simd {

enum class Isa { scalar, avx2 };

Isa active_isa();
const char* isa_name(Isa isa);

// sum_j a[j] * b[j]
double dot(const double* a, const double* b, std::size_t n);

// out[j] = 1/sqrt(in[j]);  in[j] > 0
void rsqrt_array(const double* in, double* out, std::size_t n);

// out[j] = sqrt(in[j])
void sqrt_array(const double* in, double* out, std::size_t n);

// Trigonometric series on a precomputed unit-angle table:
//   out[j] = c0 + sum_{m=1..M} ( p_m cos(m t_j) + r_m sin(m t_j) )
// with cos1[j] = cos t_j, sin1[j] = sin t_j; p, r complex as split arrays of
// length M.  cos/sin of multiples are generated by the angle-addition
// recurrence, which is exact in the table values (no accumulated phase step).
void trig_series_eval(Complex c0, const double* p_re, const double* p_im,
                      const double* r_re, const double* r_im, int m_count,
                      const double* cos1, const double* sin1, std::size_t n,
                      double* out_re, double* out_im);

// Fourier projections on an equispaced angle table:
//   out[k] = sum_j v[j] e^{-i k t_j},  k = 0..kmax
// v_im may be null for real input.
void fourier_project(const double* v_re, const double* v_im, std::size_t n,
                     const double* cos1, const double* sin1, int kmax,
                     Complex* out);

// Reference (scalar) entry points, always available.
namespace ref {
double dot(const double* a, const double* b, std::size_t n);
void rsqrt_array(const double* in, double* out, std::size_t n);
void sqrt_array(const double* in, double* out, std::size_t n);
void trig_series_eval(Complex c0, const double* p_re, const double* p_im,
                      const double* r_re, const double* r_im, int m_count,
                      const double* cos1, const double* sin1, std::size_t n,
                      double* out_re, double* out_im);
void fourier_project(const double* v_re, const double* v_im, std::size_t n,
                     const double* cos1, const double* sin1, int kmax,
                     Complex* out);
}  // namespace ref

}  // namespace orthoframes::simd
