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

//! Bundled water-quality reference models used by the validation suite and
//! shipped under data/. TN: a weekly total-nitrogen series with a jump-heavy
//! fit (95% of the mean from the diffusive part). SO4: a weekly sulfate
//! series, diffusion-only.

#ifndef SUPJCIR_REFERENCE_HPP
#define SUPJCIR_REFERENCE_HPP

#include "supjcir/process.hpp"

namespace supjcir::reference {

process::SupJcirModel tn_model();
process::SupJcirModel so4_model();

//! y values the bundled models were identified with (mean split for TN,
//! jump-free for SO4).
inline constexpr double tn_y = 0.95;
inline constexpr double so4_y = 1.0;

} // namespace supjcir::reference

#endif
