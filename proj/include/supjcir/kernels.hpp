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

//! Data-parallel reduction kernels: scalar reference implementations plus
//! AVX2 variants selected at runtime. The scalar path is the semantic
//! reference; SIMD variants must agree with it to floating-point
//! reassociation accuracy (see kernels_test).

#ifndef SUPJCIR_KERNELS_HPP
#define SUPJCIR_KERNELS_HPP

#include <cstddef>
#include <span>

namespace supjcir::kernels {

enum class Isa {
    Scalar,
    Avx2,
};

//! Instruction set used by the kernels below. Detected once from CPUID;
//! the ORLICZ_KERNELS environment variable ("scalar" or "avx2") overrides.
Isa active_isa();

//! Test hook: pin the dispatch to one implementation.
void force_isa(Isa isa);

//! Test hook: return to automatic detection.
void reset_isa();

//! sum_i v[i]
double sum(std::span<const double> v);

//! sum_i a[i] * b[i]; spans must have equal length.
double dot(std::span<const double> a, std::span<const double> b);

//! sum_i w[i] * exp(-rate[i] * h); spans must have equal length.
double weighted_exp_sum(std::span<const double> w, std::span<const double> rate, double h);

} // namespace supjcir::kernels

#endif
