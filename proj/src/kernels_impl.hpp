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

#ifndef SUPJCIR_KERNELS_IMPL_HPP
#define SUPJCIR_KERNELS_IMPL_HPP

#include <cstddef>

namespace supjcir::kernels::detail {

double sum_scalar(const double* v, std::size_t n);
double dot_scalar(const double* a, const double* b, std::size_t n);
double weighted_exp_sum_scalar(const double* w, const double* rate, std::size_t n, double h);

#if defined(SUPJCIR_WITH_AVX2)
double sum_avx2(const double* v, std::size_t n);
double dot_avx2(const double* a, const double* b, std::size_t n);
double weighted_exp_sum_avx2(const double* w, const double* rate, std::size_t n, double h);
#endif

} // namespace supjcir::kernels::detail

#endif
