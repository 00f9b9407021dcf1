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

//! Shared quadrature over semi-infinite domains and explicit ODE integration.

#ifndef SUPJCIR_NUMERICS_HPP
#define SUPJCIR_NUMERICS_HPP

#include <cstdint>
#include <functional>

#include "supjcir/errors.hpp"

namespace supjcir::numerics {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double initial_truncation = 16.0;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw ParameterOutOfRange("QuadratureSpec: tolerances must be strictly positive");
        if (!(initial_truncation > 0.0))
            throw ParameterOutOfRange("QuadratureSpec: truncation point must be strictly positive");
    }
};

struct OdeSpec {
    double initial_step = 1e-2;
    double error_control = 1e-10;
    std::int64_t max_steps = 100000000;

    void validate() const {
        if (!(initial_step > 0.0))
            throw ParameterOutOfRange("OdeSpec: initial step must be strictly positive");
        if (!(error_control > 0.0))
            throw ParameterOutOfRange("OdeSpec: error control must be strictly positive");
        if (max_steps < 1) throw ParameterOutOfRange("OdeSpec: max_steps must be >= 1");
    }
};

//! Integral of f over (0, inf) by adaptive composite midpoint on dyadic
//! brackets, with tail doubling. f may have an integrable singularity at 0
//! (for example O(z^-alpha), alpha < 1); the midpoint rule never evaluates
//! f at the endpoint.
//! Throws NonConvergent when refinement or truncation budgets are exhausted.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               const QuadratureSpec& spec = {});

//! y(t1) for y' = rhs(t, y), y(t0) = y0, by the classical 4th-order one-step
//! scheme; the whole march is repeated with halved steps until two successive
//! solutions agree within error_control (relative to max(1, |y|)).
//! Throws NonConvergent when max_steps would be exceeded.
double solve_ode(const std::function<double(double, double)>& rhs, double y0, double t0,
                 double t1, const OdeSpec& spec = {});

} // namespace supjcir::numerics

#endif
