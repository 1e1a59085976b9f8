// AVX2 lanes for the statevector kernels. Compiled only on x86 targets with
// -mavx2 -mfma; selected at runtime when the CPU reports AVX2.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace iqmis::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline double* as_dbl(std::complex<double>* a) { return reinterpret_cast<double*>(a); }
inline const double* as_dbl(const std::complex<double>* a) { return reinterpret_cast<const double*>(a); }

void mixer_avx2(std::complex<double>* a, std::size_t m, int target, double c, double s) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set_pd(s, -s, s, -s);  // [-s, s, -s, s]
  double* d = as_dbl(a);
  if (target == 0) {
    for (std::size_t i = 0; i < 2 * m; i += 4) {
      __m256d v = _mm256_loadu_pd(d + i);
      __m256d sw = _mm256_permute_pd(_mm256_permute2f128_pd(v, v, 0x01), 0b0101);
      _mm256_storeu_pd(d + i, _mm256_fmadd_pd(vs, sw, _mm256_mul_pd(vc, v)));
    }
    return;
  }
  const std::size_t stride = std::size_t{1} << target;  // complex units, >= 2
  for (std::size_t base = 0; base < m; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; i += 2) {
      double* pa = d + 2 * i;
      double* pb = d + 2 * (i + stride);
      __m256d va = _mm256_loadu_pd(pa);
      __m256d vb = _mm256_loadu_pd(pb);
      __m256d vb_sw = _mm256_permute_pd(vb, 0b0101);
      __m256d va_sw = _mm256_permute_pd(va, 0b0101);
      _mm256_storeu_pd(pa, _mm256_fmadd_pd(vs, vb_sw, _mm256_mul_pd(vc, va)));
      _mm256_storeu_pd(pb, _mm256_fmadd_pd(vs, va_sw, _mm256_mul_pd(vc, vb)));
    }
  }
}

void phase_apply_coded_avx2(std::complex<double>* a, const std::uint16_t* code, std::size_t m,
                            const std::complex<double>* table) {
  double* d = as_dbl(a);
  for (std::size_t i = 0; i < m; i += 2) {
    const std::complex<double> t0 = table[code[i]];
    const std::complex<double> t1 = table[code[i + 1]];
    __m256d vt = _mm256_set_pd(t1.imag(), t1.real(), t0.imag(), t0.real());
    __m256d va = _mm256_loadu_pd(d + 2 * i);
    __m256d t_re = _mm256_movedup_pd(vt);
    __m256d t_im = _mm256_permute_pd(vt, 0b1111);
    __m256d va_sw = _mm256_permute_pd(va, 0b0101);
    _mm256_storeu_pd(d + 2 * i, _mm256_fmaddsub_pd(va, t_re, _mm256_mul_pd(va_sw, t_im)));
  }
}

double norm_sq_avx2(const std::complex<double>* a, std::size_t m) {
  const double* d = as_dbl(a);
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < 2 * m; i += 4) {
    __m256d v = _mm256_loadu_pd(d + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  return hsum(acc);
}

void probabilities_avx2(const std::complex<double>* a, double* p, std::size_t m) {
  if (m < 4) {
    scalar_ops.probabilities(a, p, m);
    return;
  }
  const double* d = as_dbl(a);
  for (std::size_t i = 0; i < m; i += 4) {
    __m256d v1 = _mm256_loadu_pd(d + 2 * i);
    __m256d v2 = _mm256_loadu_pd(d + 2 * i + 4);
    __m256d h = _mm256_hadd_pd(_mm256_mul_pd(v1, v1), _mm256_mul_pd(v2, v2));
    // hadd interleaves the two sources; restore index order
    _mm256_storeu_pd(p + i, _mm256_permute4x64_pd(h, _MM_SHUFFLE(3, 1, 2, 0)));
  }
}

// per-element sign pattern of a 4-block for a low bit (+1 where bit clear)
inline __m256d low_bit_pattern(int bit) {
  return bit == 0 ? _mm256_set_pd(-1.0, 1.0, -1.0, 1.0) : _mm256_set_pd(-1.0, -1.0, 1.0, 1.0);
}

double signed_sum_bit_avx2(const double* p, std::size_t m, int bit) {
  if (m < 4) return scalar_ops.signed_sum_bit(p, m, bit);
  __m256d acc = _mm256_setzero_pd();
  if (bit < 2) {
    // sign flips inside a 4-vector: fold the pattern in, then negate (bit clear means -)
    const __m256d pat = low_bit_pattern(bit);
    for (std::size_t i = 0; i < m; i += 4) acc = _mm256_fmadd_pd(_mm256_loadu_pd(p + i), pat, acc);
    return -hsum(acc);
  }
  const std::size_t stride = std::size_t{1} << bit;
  __m256d plus = _mm256_setzero_pd(), minus = _mm256_setzero_pd();
  for (std::size_t base = 0; base < m; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; i += 4) minus = _mm256_add_pd(minus, _mm256_loadu_pd(p + i));
    for (std::size_t i = base + stride; i < base + 2 * stride; i += 4)
      plus = _mm256_add_pd(plus, _mm256_loadu_pd(p + i));
  }
  return hsum(plus) - hsum(minus);
}

double signed_sum_pair_avx2(const double* p, std::size_t m, int b1, int b2) {
  if (m < 4) return scalar_ops.signed_sum_pair(p, m, b1, b2);
  __m256d acc = _mm256_setzero_pd();
  if (b1 == 0 && b2 == 1) {
    const __m256d pat = _mm256_set_pd(1.0, -1.0, -1.0, 1.0);  // [+,-,-,+]
    for (std::size_t i = 0; i < m; i += 4) acc = _mm256_fmadd_pd(_mm256_loadu_pd(p + i), pat, acc);
    return hsum(acc);
  }
  if (b1 < 2) {
    // sign = +pattern(b1) when the b2 bit is clear, flipped when set
    const __m256d pat = low_bit_pattern(b1);
    const __m256d npat = _mm256_sub_pd(_mm256_setzero_pd(), pat);
    for (std::size_t i = 0; i < m; i += 4) {
      const bool hi = (i >> b2) & 1u;
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(p + i), hi ? npat : pat, acc);
    }
    return hsum(acc);
  }
  const std::size_t stride = std::size_t{1} << b1;
  __m256d plus = _mm256_setzero_pd(), minus = _mm256_setzero_pd();
  for (std::size_t base = 0; base < m; base += stride) {
    const bool agree = (((base >> b1) ^ (base >> b2)) & 1u) == 0;
    __m256d blk = _mm256_setzero_pd();
    for (std::size_t i = base; i < base + stride; i += 4) blk = _mm256_add_pd(blk, _mm256_loadu_pd(p + i));
    if (agree)
      plus = _mm256_add_pd(plus, blk);
    else
      minus = _mm256_add_pd(minus, blk);
  }
  return hsum(plus) - hsum(minus);
}

double dot_avx2(const double* x, const double* y, std::size_t m) {
  if (m < 4) return scalar_ops.dot(x, y, m);
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < m; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  return hsum(acc);
}

void diag_field_avx2(double* d, std::size_t m, int bit, double h) {
  if (m < 4) {
    scalar_ops.diag_field(d, m, bit, h);
    return;
  }
  if (bit < 2) {
    const __m256d add = _mm256_mul_pd(_mm256_set1_pd(-h), low_bit_pattern(bit));
    for (std::size_t i = 0; i < m; i += 4)
      _mm256_storeu_pd(d + i, _mm256_add_pd(_mm256_loadu_pd(d + i), add));
    return;
  }
  const std::size_t stride = std::size_t{1} << bit;
  const __m256d vplus = _mm256_set1_pd(h);
  const __m256d vminus = _mm256_set1_pd(-h);
  for (std::size_t base = 0; base < m; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; i += 4)
      _mm256_storeu_pd(d + i, _mm256_add_pd(_mm256_loadu_pd(d + i), vminus));
    for (std::size_t i = base + stride; i < base + 2 * stride; i += 4)
      _mm256_storeu_pd(d + i, _mm256_add_pd(_mm256_loadu_pd(d + i), vplus));
  }
}

void diag_coupling_avx2(double* d, std::size_t m, int b1, int b2, double J) {
  if (m < 4) {
    scalar_ops.diag_coupling(d, m, b1, b2, J);
    return;
  }
  if (b1 == 0 && b2 == 1) {
    const __m256d add = _mm256_mul_pd(_mm256_set1_pd(J), _mm256_set_pd(1.0, -1.0, -1.0, 1.0));
    for (std::size_t i = 0; i < m; i += 4)
      _mm256_storeu_pd(d + i, _mm256_add_pd(_mm256_loadu_pd(d + i), add));
    return;
  }
  if (b1 < 2) {
    const __m256d lo = _mm256_mul_pd(_mm256_set1_pd(J), low_bit_pattern(b1));
    const __m256d hi = _mm256_sub_pd(_mm256_setzero_pd(), lo);
    for (std::size_t i = 0; i < m; i += 4) {
      const __m256d add = ((i >> b2) & 1u) ? hi : lo;
      _mm256_storeu_pd(d + i, _mm256_add_pd(_mm256_loadu_pd(d + i), add));
    }
    return;
  }
  const std::size_t stride = std::size_t{1} << b1;
  const __m256d vplus = _mm256_set1_pd(J);
  const __m256d vminus = _mm256_set1_pd(-J);
  for (std::size_t base = 0; base < m; base += stride) {
    const bool agree = (((base >> b1) ^ (base >> b2)) & 1u) == 0;
    const __m256d add = agree ? vplus : vminus;
    for (std::size_t i = base; i < base + stride; i += 4)
      _mm256_storeu_pd(d + i, _mm256_add_pd(_mm256_loadu_pd(d + i), add));
  }
}

}  // namespace

const Ops avx2_ops = {
    mixer_avx2,          scalar_ops.phase_apply,  // sincos-bound, no vector win
    phase_apply_coded_avx2,
    norm_sq_avx2,        probabilities_avx2,
    signed_sum_bit_avx2, signed_sum_pair_avx2,
    dot_avx2,            diag_field_avx2,         diag_coupling_avx2,
};

}  // namespace iqmis::kernels
