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

//! Built-in analytic cross-checks: the closed forms are recomputed through
//! independent numerical routes and the maximum discrepancies are reported.

#ifndef SUPJCIR_VALIDATION_HPP
#define SUPJCIR_VALIDATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "supjcir/process.hpp"

namespace supjcir::validation {

struct CheckResult {
    std::string name;
    double max_error;
    double tolerance;
    bool pass;
};

//! Runs every registered cross-check. When a model is supplied, the
//! model-specific checks run on it in addition to the built-in models.
//! tol_override, when set, replaces each check's own tolerance.
std::vector<CheckResult> run_validation(
    const std::optional<process::SupJcirModel>& model = std::nullopt,
    std::optional<double> tol_override = std::nullopt);

} // namespace supjcir::validation

#endif
