/*
 * Copyright 2026 The supjcir authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// AVX2/FMA kernel variants. This translation unit is the only one compiled
// with -mavx2 -mfma; it must stay behind the runtime dispatch in kernels.cpp.

#include <cmath>
#include <cstddef>
#include <immintrin.h>

#include "kernels_impl.hpp"

namespace supjcir::kernels::detail {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

// exp on 4 doubles: Cody-Waite range reduction plus a degree-13 Taylor
// polynomial on |r| <= ln(2)/2, scaled by 2^n through exponent-field insertion.
inline __m256d exp_pd(__m256d x) {
    const __m256d log2e   = _mm256_set1_pd(1.44269504088896340736);
    const __m256d ln2_hi  = _mm256_set1_pd(6.93147180369123816490e-01);
    const __m256d ln2_lo  = _mm256_set1_pd(1.90821492927058770002e-10);
    const __m256d max_arg = _mm256_set1_pd(709.0);
    const __m256d min_arg = _mm256_set1_pd(-709.0);

    __m256d over  = _mm256_cmp_pd(x, max_arg, _CMP_GT_OQ);
    __m256d under = _mm256_cmp_pd(x, min_arg, _CMP_LT_OQ);
    __m256d xc = _mm256_min_pd(_mm256_max_pd(x, min_arg), max_arg);

    __m256d n = _mm256_round_pd(_mm256_mul_pd(xc, log2e),
                                _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, ln2_hi, xc);
    r = _mm256_fnmadd_pd(n, ln2_lo, r);

    const double inv_fact[] = {
        1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0,
        1.0 / 362880.0,     1.0 / 40320.0,     1.0 / 5040.0,     1.0 / 720.0,
        1.0 / 120.0,        1.0 / 24.0,        1.0 / 6.0,        0.5,
    };
    __m256d p = _mm256_set1_pd(inv_fact[0]);
    for (int i = 1; i < 12; ++i)
        p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(inv_fact[i]));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));

    __m128i n32 = _mm256_cvtpd_epi32(n);
    __m256i n64 = _mm256_cvtepi32_epi64(n32);
    __m256i bias = _mm256_add_epi64(n64, _mm256_set1_epi64x(1023));
    __m256d scale = _mm256_castsi256_pd(_mm256_slli_epi64(bias, 52));
    __m256d res = _mm256_mul_pd(p, scale);

    res = _mm256_blendv_pd(res, _mm256_setzero_pd(), under);
    res = _mm256_blendv_pd(res, _mm256_set1_pd(HUGE_VAL), over);
    return res;
}

} // namespace

double sum_avx2(const double* v, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(v + i));
        acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(v + i + 4));
    }
    for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(v + i));
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += v[i];
    return acc;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double weighted_exp_sum_avx2(const double* w, const double* rate, std::size_t n, double h) {
    const __m256d neg_h = _mm256_set1_pd(-h);
    __m256d acc4 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d e = exp_pd(_mm256_mul_pd(_mm256_loadu_pd(rate + i), neg_h));
        acc4 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), e, acc4);
    }
    double acc = hsum(acc4);
    for (; i < n; ++i) acc += w[i] * std::exp(-rate[i] * h);
    return acc;
}

} // namespace supjcir::kernels::detail
