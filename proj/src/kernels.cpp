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

#include "supjcir/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>

#include "kernels_impl.hpp"

namespace supjcir::kernels {

namespace detail {

double sum_scalar(const double* v, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += v[i];
    return acc;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double weighted_exp_sum_scalar(const double* w, const double* rate, std::size_t n, double h) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += w[i] * std::exp(-rate[i] * h);
    return acc;
}

} // namespace detail

namespace {

Isa detect_isa() {
    if (const char* env = std::getenv("ORLICZ_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Isa::Scalar;
#if defined(SUPJCIR_WITH_AVX2)
        if (std::strcmp(env, "avx2") == 0) return Isa::Avx2;
#endif
    }
#if defined(SUPJCIR_WITH_AVX2)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::Avx2;
#endif
    return Isa::Scalar;
}

std::atomic<int> g_forced{-1}; // -1 = auto

} // namespace

Isa active_isa() {
    int f = g_forced.load(std::memory_order_relaxed);
    if (f >= 0) return static_cast<Isa>(f);
    static const Isa detected = detect_isa();
    return detected;
}

void force_isa(Isa isa) { g_forced.store(static_cast<int>(isa), std::memory_order_relaxed); }

void reset_isa() { g_forced.store(-1, std::memory_order_relaxed); }

double sum(std::span<const double> v) {
#if defined(SUPJCIR_WITH_AVX2)
    if (active_isa() == Isa::Avx2) return detail::sum_avx2(v.data(), v.size());
#endif
    return detail::sum_scalar(v.data(), v.size());
}

double dot(std::span<const double> a, std::span<const double> b) {
#if defined(SUPJCIR_WITH_AVX2)
    if (active_isa() == Isa::Avx2) return detail::dot_avx2(a.data(), b.data(), a.size());
#endif
    return detail::dot_scalar(a.data(), b.data(), a.size());
}

double weighted_exp_sum(std::span<const double> w, std::span<const double> rate, double h) {
#if defined(SUPJCIR_WITH_AVX2)
    if (active_isa() == Isa::Avx2)
        return detail::weighted_exp_sum_avx2(w.data(), rate.data(), w.size(), h);
#endif
    return detail::weighted_exp_sum_scalar(w.data(), rate.data(), w.size(), h);
}

} // namespace supjcir::kernels
