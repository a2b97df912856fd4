// AVX2+FMA kernel variants.  This translation unit is compiled with
// -mavx2 -mfma; callers reach it only after the runtime dispatch check.
#if defined(__x86_64__)

#include <immintrin.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "orthoframes/simd/kernels.hpp"

namespace orthoframes::simd::avx2 {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j), acc);
  double s = hsum(acc);
  for (; j < n; ++j) s += a[j] * b[j];
  return s;
}

void rsqrt_array(const double* in, double* out, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4)
    _mm256_storeu_pd(out + j, _mm256_div_pd(one, _mm256_sqrt_pd(_mm256_loadu_pd(in + j))));
  for (; j < n; ++j) out[j] = 1.0 / std::sqrt(in[j]);
}

void sqrt_array(const double* in, double* out, std::size_t n) {
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4)
    _mm256_storeu_pd(out + j, _mm256_sqrt_pd(_mm256_loadu_pd(in + j)));
  for (; j < n; ++j) out[j] = std::sqrt(in[j]);
}

void trig_series_eval(Complex c0, const double* p_re, const double* p_im,
                      const double* r_re, const double* r_im, int m_count,
                      const double* cos1, const double* sin1, std::size_t n,
                      double* out_re, double* out_im) {
  const __m256d c0re = _mm256_set1_pd(c0.real());
  const __m256d c0im = _mm256_set1_pd(c0.imag());
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d c1 = _mm256_loadu_pd(cos1 + j);
    const __m256d s1 = _mm256_loadu_pd(sin1 + j);
    __m256d cm = c1, sm = s1;
    __m256d are = c0re, aim = c0im;
    for (int m = 0; m < m_count; ++m) {
      are = _mm256_fmadd_pd(_mm256_set1_pd(p_re[m]), cm, are);
      are = _mm256_fmadd_pd(_mm256_set1_pd(r_re[m]), sm, are);
      aim = _mm256_fmadd_pd(_mm256_set1_pd(p_im[m]), cm, aim);
      aim = _mm256_fmadd_pd(_mm256_set1_pd(r_im[m]), sm, aim);
      const __m256d cn = _mm256_fmsub_pd(cm, c1, _mm256_mul_pd(sm, s1));
      sm = _mm256_fmadd_pd(sm, c1, _mm256_mul_pd(cm, s1));
      cm = cn;
    }
    _mm256_storeu_pd(out_re + j, are);
    if (out_im) _mm256_storeu_pd(out_im + j, aim);
  }
  if (j < n)
    ref::trig_series_eval(c0, p_re, p_im, r_re, r_im, m_count, cos1 + j, sin1 + j, n - j,
                          out_re + j, out_im ? out_im + j : nullptr);
}

void fourier_project(const double* v_re, const double* v_im, std::size_t n,
                     const double* cos1, const double* sin1, int kmax,
                     Complex* out) {
  std::vector<double> ck(n, 1.0), sk(n, 0.0);
  for (int k = 0; k <= kmax; ++k) {
    __m256d accr = _mm256_setzero_pd(), acci = _mm256_setzero_pd();
    double tr = 0.0, ti = 0.0;
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      const __m256d vr = _mm256_loadu_pd(v_re + j);
      const __m256d c = _mm256_loadu_pd(ck.data() + j);
      const __m256d s = _mm256_loadu_pd(sk.data() + j);
      accr = _mm256_fmadd_pd(vr, c, accr);
      acci = _mm256_fnmadd_pd(vr, s, acci);
      if (v_im) {
        const __m256d vi = _mm256_loadu_pd(v_im + j);
        accr = _mm256_fmadd_pd(vi, s, accr);
        acci = _mm256_fmadd_pd(vi, c, acci);
      }
    }
    for (; j < n; ++j) {
      tr += v_re[j] * ck[j];
      ti -= v_re[j] * sk[j];
      if (v_im) {
        tr += v_im[j] * sk[j];
        ti += v_im[j] * ck[j];
      }
    }
    out[k] = {hsum(accr) + tr, hsum(acci) + ti};
    if (k == kmax) break;
    j = 0;
    for (; j + 4 <= n; j += 4) {
      const __m256d c1 = _mm256_loadu_pd(cos1 + j);
      const __m256d s1 = _mm256_loadu_pd(sin1 + j);
      const __m256d c = _mm256_loadu_pd(ck.data() + j);
      const __m256d s = _mm256_loadu_pd(sk.data() + j);
      _mm256_storeu_pd(ck.data() + j, _mm256_fmsub_pd(c, c1, _mm256_mul_pd(s, s1)));
      _mm256_storeu_pd(sk.data() + j, _mm256_fmadd_pd(s, c1, _mm256_mul_pd(c, s1)));
    }
    for (; j < n; ++j) {
      const double cn = ck[j] * cos1[j] - sk[j] * sin1[j];
      sk[j] = sk[j] * cos1[j] + ck[j] * sin1[j];
      ck[j] = cn;
    }
  }
}

}  // namespace orthoframes::simd::avx2

#endif  // __x86_64__
