// AVX2+FMA lane. Compiled with -mavx2 -mfma; only ever called after the
// dispatcher has checked CPU support. The core is a 4-wide port of the
// fdlibm/musl log1p argument reduction, valid for inputs >= 0 (all arguments
// here are a*x^2 with a > 0).

#if defined(__x86_64__)

#include <cmath>
#include <cstdint>
#include <immintrin.h>

#include "svarkit/kernels.hpp"

namespace svarkit::kernels {

namespace {

constexpr double kLn2Hi = 6.93147180369123816490e-01;
constexpr double kLn2Lo = 1.90821492927058770002e-10;
constexpr double kLg1 = 6.666666666666735130e-01;
constexpr double kLg2 = 3.999999999940941908e-01;
constexpr double kLg3 = 2.857142874366239149e-01;
constexpr double kLg4 = 2.222219843214978396e-01;
constexpr double kLg5 = 1.818357216161805012e-01;
constexpr double kLg6 = 1.531383769920937332e-01;
constexpr double kLg7 = 1.479819860511658591e-01;
// sqrt(2)-1; below this 1+z needs no exponent reduction.
constexpr double kSqrt2M1 = 0.414213562373095048801688724209698;

// log1p(z) for z >= 0, four lanes at a time.
inline __m256d log1p_nonneg(__m256d z) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d u = _mm256_add_pd(one, z);

  // Exponent extraction with the sqrt(2)/2 offset trick: after adding
  // 0x95f62 to the high word, the biased exponent splits mantissas at sqrt(2).
  const __m256i iu = _mm256_castpd_si256(u);
  const __m256i adj = _mm256_add_epi64(iu, _mm256_set1_epi64x(0x0009'5f62'0000'0000LL));
  const __m256i k64 = _mm256_sub_epi64(_mm256_srli_epi64(adj, 52), _mm256_set1_epi64x(1023));
  const __m128i k32 = _mm256_castsi256_si128(
      _mm256_permutevar8x32_epi32(k64, _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0)));
  __m256d dk = _mm256_cvtepi32_pd(k32);

  // Rebuild the mantissa in [sqrt(2)/2, sqrt(2)).
  const __m256i mant =
      _mm256_add_epi64(_mm256_and_si256(adj, _mm256_set1_epi64x(0x000f'ffff'ffff'ffffLL)),
                       _mm256_set1_epi64x(0x3fe6'a09e'0000'0000LL));
  __m256d f = _mm256_sub_pd(_mm256_castsi256_pd(mant), one);

  // Correction for the rounding of u = 1+z: c = (k>=2 ? 1-(u-z) : z-(u-1))/u,
  // zeroed for k >= 54.
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d c_hi = _mm256_sub_pd(one, _mm256_sub_pd(u, z));
  const __m256d c_lo = _mm256_sub_pd(z, _mm256_sub_pd(u, one));
  const __m256d use_hi = _mm256_cmp_pd(dk, two, _CMP_GE_OQ);
  __m256d c = _mm256_div_pd(_mm256_blendv_pd(c_lo, c_hi, use_hi), u);
  const __m256d k_small = _mm256_cmp_pd(dk, _mm256_set1_pd(54.0), _CMP_LT_OQ);
  c = _mm256_and_pd(c, k_small);

  // Small arguments skip the reduction entirely (k = 0, c = 0, f = z).
  const __m256d small = _mm256_cmp_pd(z, _mm256_set1_pd(kSqrt2M1), _CMP_LT_OQ);
  f = _mm256_blendv_pd(f, z, small);
  dk = _mm256_andnot_pd(small, dk);
  c = _mm256_andnot_pd(small, c);

  const __m256d hfsq = _mm256_mul_pd(_mm256_set1_pd(0.5), _mm256_mul_pd(f, f));
  const __m256d s = _mm256_div_pd(f, _mm256_add_pd(two, f));
  const __m256d z2 = _mm256_mul_pd(s, s);
  const __m256d w = _mm256_mul_pd(z2, z2);
  __m256d t1 = _mm256_fmadd_pd(w, _mm256_set1_pd(kLg6), _mm256_set1_pd(kLg4));
  t1 = _mm256_mul_pd(w, _mm256_fmadd_pd(w, t1, _mm256_set1_pd(kLg2)));
  __m256d t2 = _mm256_fmadd_pd(w, _mm256_set1_pd(kLg7), _mm256_set1_pd(kLg5));
  t2 = _mm256_fmadd_pd(w, t2, _mm256_set1_pd(kLg3));
  t2 = _mm256_mul_pd(z2, _mm256_fmadd_pd(w, t2, _mm256_set1_pd(kLg1)));
  const __m256d r = _mm256_add_pd(t2, t1);

  // s*(hfsq+R) + (dk*ln2_lo + c) - hfsq + f + dk*ln2_hi
  __m256d res = _mm256_mul_pd(s, _mm256_add_pd(hfsq, r));
  res = _mm256_add_pd(res, _mm256_fmadd_pd(dk, _mm256_set1_pd(kLn2Lo), c));
  res = _mm256_sub_pd(res, hfsq);
  res = _mm256_add_pd(res, f);
  res = _mm256_fmadd_pd(dk, _mm256_set1_pd(kLn2Hi), res);

  // 1+z overflowed: answer is +inf.
  const __m256d inf = _mm256_set1_pd(HUGE_VAL);
  const __m256d u_inf = _mm256_cmp_pd(u, inf, _CMP_EQ_OQ);
  return _mm256_blendv_pd(res, inf, u_inf);
}

inline __m256d load_scaled_sq(const double* x, double a) {
  const __m256d av = _mm256_set1_pd(a);
  const __m256d xv = _mm256_loadu_pd(x);
  return _mm256_mul_pd(av, _mm256_mul_pd(xv, xv));
}

}  // namespace

double sum_log1p_sq_avx2(const double* x, std::size_t n, double a) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, log1p_nonneg(load_scaled_sq(x + i, a)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) {
    total += std::log1p(a * x[i] * x[i]);
  }
  return total;
}

void log1p_sq_avx2(const double* x, std::size_t n, double a, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, log1p_nonneg(load_scaled_sq(x + i, a)));
  }
  for (; i < n; ++i) {
    out[i] = std::log1p(a * x[i] * x[i]);
  }
}

}  // namespace svarkit::kernels

#endif  // __x86_64__
