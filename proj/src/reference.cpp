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

#include "supjcir/reference.hpp"

namespace supjcir::reference {

process::SupJcirModel tn_model() {
    return process::SupJcirModel(0.0819997, 0.034641,
                                 jumps::JumpMeasure::exponential(0.000298144, 0.0690824),
                                 mixing::MixingMeasure::gamma(1.55, 0.03));
}

process::SupJcirModel so4_model() {
    return process::SupJcirModel(0.051786, 0.12, jumps::JumpMeasure::none(),
                                 mixing::MixingMeasure::gamma(1.9, 0.012));
}

} // namespace supjcir::reference
