#include <cmath>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "orthoframes/simd/kernels.hpp"

namespace orthoframes::simd {

namespace ref {

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) s += a[j] * b[j];
  return s;
}

void rsqrt_array(const double* in, double* out, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) out[j] = 1.0 / std::sqrt(in[j]);
}

void sqrt_array(const double* in, double* out, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) out[j] = std::sqrt(in[j]);
}

void trig_series_eval(Complex c0, const double* p_re, const double* p_im,
                      const double* r_re, const double* r_im, int m_count,
                      const double* cos1, const double* sin1, std::size_t n,
                      double* out_re, double* out_im) {
  for (std::size_t j = 0; j < n; ++j) {
    double cm = cos1[j], sm = sin1[j];
    double acc_re = c0.real(), acc_im = c0.imag();
    for (int m = 0; m < m_count; ++m) {
      acc_re += p_re[m] * cm + r_re[m] * sm;
      acc_im += p_im[m] * cm + r_im[m] * sm;
      const double cn = cm * cos1[j] - sm * sin1[j];
      sm = sm * cos1[j] + cm * sin1[j];
      cm = cn;
    }
    out_re[j] = acc_re;
    if (out_im) out_im[j] = acc_im;
  }
}

void fourier_project(const double* v_re, const double* v_im, std::size_t n,
                     const double* cos1, const double* sin1, int kmax,
                     Complex* out) {
  // Running cos(k t_j), sin(k t_j) tables, rotated once per k.
  std::vector<double> ck(n, 1.0), sk(n, 0.0);
  for (int k = 0; k <= kmax; ++k) {
    double acc_re = 0.0, acc_im = 0.0;
    if (v_im) {
      for (std::size_t j = 0; j < n; ++j) {
        acc_re += v_re[j] * ck[j] + v_im[j] * sk[j];
        acc_im += v_im[j] * ck[j] - v_re[j] * sk[j];
      }
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        acc_re += v_re[j] * ck[j];
        acc_im -= v_re[j] * sk[j];
      }
    }
    out[k] = {acc_re, acc_im};
    if (k == kmax) break;
    for (std::size_t j = 0; j < n; ++j) {
      const double cn = ck[j] * cos1[j] - sk[j] * sin1[j];
      sk[j] = sk[j] * cos1[j] + ck[j] * sin1[j];
      ck[j] = cn;
    }
  }
}

}  // namespace ref

#if defined(__x86_64__)
namespace avx2 {
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
}  // namespace avx2
#endif

namespace {

Isa detect_isa() {
  Isa isa = Isa::scalar;
#if defined(__x86_64__)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) isa = Isa::avx2;
#endif
  if (const char* env = std::getenv("ORTHOFRAMES_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) isa = Isa::scalar;
#if defined(__x86_64__)
    if (std::strcmp(env, "avx2") == 0 && __builtin_cpu_supports("avx2") &&
        __builtin_cpu_supports("fma"))
      isa = Isa::avx2;
#endif
  }
  return isa;
}

}  // namespace

Isa active_isa() {
  static const Isa isa = detect_isa();
  return isa;
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

double dot(const double* a, const double* b, std::size_t n) {
#if defined(__x86_64__)
  if (active_isa() == Isa::avx2) return avx2::dot(a, b, n);
#endif
  return ref::dot(a, b, n);
}

void rsqrt_array(const double* in, double* out, std::size_t n) {
#if defined(__x86_64__)
  if (active_isa() == Isa::avx2) return avx2::rsqrt_array(in, out, n);
#endif
  ref::rsqrt_array(in, out, n);
}

void sqrt_array(const double* in, double* out, std::size_t n) {
#if defined(__x86_64__)
  if (active_isa() == Isa::avx2) return avx2::sqrt_array(in, out, n);
#endif
  ref::sqrt_array(in, out, n);
}

void trig_series_eval(Complex c0, const double* p_re, const double* p_im,
                      const double* r_re, const double* r_im, int m_count,
                      const double* cos1, const double* sin1, std::size_t n,
                      double* out_re, double* out_im) {
#if defined(__x86_64__)
  if (active_isa() == Isa::avx2)
    return avx2::trig_series_eval(c0, p_re, p_im, r_re, r_im, m_count, cos1, sin1, n, out_re,
                                  out_im);
#endif
  ref::trig_series_eval(c0, p_re, p_im, r_re, r_im, m_count, cos1, sin1, n, out_re, out_im);
}

void fourier_project(const double* v_re, const double* v_im, std::size_t n,
                     const double* cos1, const double* sin1, int kmax,
                     Complex* out) {
#if defined(__x86_64__)
  if (active_isa() == Isa::avx2)
    return avx2::fourier_project(v_re, v_im, n, cos1, sin1, kmax, out);
#endif
  ref::fourier_project(v_re, v_im, n, cos1, sin1, kmax, out);
}

}  // namespace orthoframes::simd
