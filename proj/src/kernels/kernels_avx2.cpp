// Copyright 2026 The seqpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <immintrin.h>

#include "seqpt/error.hpp"
#include "seqpt/kernels.hpp"

#if !defined(__AVX2__) || !defined(__FMA__)
#error "kernels_avx2.cpp must be compiled with -mavx2 -mfma"
#endif

// Complex doubles are stored interleaved [re, im], so one __m256d holds two
// elements. Tails of odd length fall through to a scalar step.

namespace seqpt::kernels::avx2 {

namespace {

inline const double* as_doubles(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

cplx dotc(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw DimensionError("dotc: length mismatch");
  const std::size_t n = a.size();
  const double* pa = as_doubles(a.data());
  const double* pb = as_doubles(b.data());
  // re terms accumulate a*b = [ar br, ai bi]; im terms a*swap(b) = [ar bi, ai br].
  __m256d re0 = _mm256_setzero_pd(), re1 = _mm256_setzero_pd();
  __m256d im0 = _mm256_setzero_pd(), im1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * i), a1 = _mm256_loadu_pd(pa + 2 * i + 4);
    const __m256d b0 = _mm256_loadu_pd(pb + 2 * i), b1 = _mm256_loadu_pd(pb + 2 * i + 4);
    re0 = _mm256_fmadd_pd(a0, b0, re0);
    re1 = _mm256_fmadd_pd(a1, b1, re1);
    im0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), im0);
    im1 = _mm256_fmadd_pd(a1, _mm256_permute_pd(b1, 0b0101), im1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * i), b0 = _mm256_loadu_pd(pb + 2 * i);
    re0 = _mm256_fmadd_pd(a0, b0, re0);
    im0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), im0);
  }
  const __m256d re = _mm256_add_pd(re0, re1);
  // Flip the sign of the odd lanes (ai br) before the horizontal sum.
  const __m256d im = _mm256_mul_pd(_mm256_add_pd(im0, im1), _mm256_setr_pd(1.0, -1.0, 1.0, -1.0));
  double sre = hsum(re), sim = hsum(im);
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag(), br = b[i].real(), bi = b[i].imag();
    sre += ar * br + ai * bi;
    sim += ar * bi - ai * br;
  }
  return {sre, sim};
}

void gemv(const cplx* a, std::size_t rows, std::size_t cols, std::span<const cplx> x, std::span<cplx> y) {
  if (x.size() != cols || y.size() != rows) throw DimensionError("gemv: shape mismatch");
  double* py = as_doubles(y.data());
  for (std::size_t r = 0; r < rows; ++r) y[r] = 0.0;
  for (std::size_t c = 0; c < cols; ++c) {
    const double xr = x[c].real(), xi = x[c].imag();
    const __m256d vr = _mm256_set1_pd(xr), vi = _mm256_set1_pd(xi);
    const double* col = as_doubles(a + c * rows);
    std::size_t r = 0;
    for (; r + 2 <= rows; r += 2) {
      const __m256d m = _mm256_loadu_pd(col + 2 * r);
      __m256d acc = _mm256_fmadd_pd(vr, m, _mm256_loadu_pd(py + 2 * r));
      // addsub gives [acc_re - xi*ci, acc_im + xi*cr].
      acc = _mm256_addsub_pd(acc, _mm256_mul_pd(vi, _mm256_permute_pd(m, 0b0101)));
      _mm256_storeu_pd(py + 2 * r, acc);
    }
    for (; r < rows; ++r) {
      const double cr = col[2 * r], ci = col[2 * r + 1];
      y[r] = cplx(y[r].real() + xr * cr - xi * ci, y[r].imag() + xr * ci + xi * cr);
    }
  }
}

double norm2(std::span<const cplx> a) {
  const std::size_t n = a.size();
  const double* pa = as_doubles(a.data());
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v0 = _mm256_loadu_pd(pa + 2 * i), v1 = _mm256_loadu_pd(pa + 2 * i + 4);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d v0 = _mm256_loadu_pd(pa + 2 * i);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return s;
}

}  // namespace seqpt::kernels::avx2
