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

//! The superposed jump-CIR model: Riccati exponent, stationary log moment
//! generating function, stationary moments, and the model autocorrelation.

#ifndef SUPJCIR_PROCESS_HPP
#define SUPJCIR_PROCESS_HPP

#include <optional>

#include "supjcir/jumps.hpp"
#include "supjcir/mixing.hpp"
#include "supjcir/numerics.hpp"

namespace supjcir::process {

//! Full model: dX = (a c_i - r_i X) dt + sigma sqrt(r_i X) dB + dL_i summed
//! over a mixing measure of reversion speeds.
struct SupJcirModel {
    double a;
    double sigma;
    jumps::JumpMeasure jump;
    mixing::MixingMeasure mix;

    SupJcirModel(double a_, double sigma_, jumps::JumpMeasure jump_, mixing::MixingMeasure mix_)
        : a(a_), sigma(sigma_), jump(std::move(jump_)), mix(std::move(mix_)) {
        if (!(a > 0.0)) throw ParameterOutOfRange("SupJcirModel: a must be > 0");
        if (!(sigma > 0.0)) throw ParameterOutOfRange("SupJcirModel: sigma must be > 0");
    }

    double inverse_moment() const { return mixing::inverse_moment(mix); }
};

struct Moments {
    double mean;
    double variance;
    double skewness;
};

//! u(s) = 1/(A + (1/p - A) e^{r s}) with A = sigma2_half; the closed-form
//! solution of du/ds = -r u + A r u^2, u(0) = p. Requires 1/p > A.
//! Lies in (0, p], equals p at s = 0, and decays to 0.
double riccati_exponent(double p, double r, double sigma2_half, double s);

//! Stationary log E[exp(p Y)] = R * integral over s of
//! { a u1(s) + integral (e^{u1(s) z} - 1) nu(dz) }, u1 = riccati at r = 1.
//! Domain: 0 <= p < min{2/sigma^2, beta}; p = 0 returns 0 exactly.
double log_mgf(const SupJcirModel& model, double p, const numerics::QuadratureSpec& spec = {});

//! Closed-form stationary mean, variance, and skewness.
Moments stationary_moments(const SupJcirModel& model,
                           const numerics::QuadratureSpec& spec = {});

//! Stationary ACF at lag h; delegates to the mixing measure.
double model_acf(const SupJcirModel& model, double h);

//! One (possibly distorted) square-root component:
//!   dX = (drift_const - reversion X) dt + sqrt(diffusion_factor X) dW + dJ,
//! where J has Levy measure jump_weight * multiplier(z) * nu(dz).
struct JcirComponent {
    double drift_const;
    double reversion;
    double diffusion_factor;
    jumps::JumpMeasure jump;
    double jump_weight = 1.0;
    jumps::JumpMultiplier multiplier = {};

    //! A = diffusion_factor / (2 reversion), the Riccati curvature.
    double riccati_curvature() const { return diffusion_factor / (2.0 * reversion); }
};

//! log E[exp(p X)] of one component: integral over s in (0, horizon) of
//! drift_const * u(s) + jump_weight * integral (e^{u(s) z} - 1) g(z) nu(dz),
//! where u solves du/ds = -reversion u + (diffusion_factor/2) u^2.
//! horizon = nullopt means the stationary (infinite) limit.
double component_log_mgf(const JcirComponent& component, double p,
                         std::optional<double> horizon = std::nullopt,
                         const numerics::QuadratureSpec& spec = {});

//! Closed-form stationary mean of one component:
//! (drift_const + jump_weight * M1') / reversion.
double component_mean(const JcirComponent& component,
                      const numerics::QuadratureSpec& spec = {});

//! Closed-form stationary variance of one component:
//! (A (drift_const + w M1') + w M2' / 2) / reversion, A the Riccati curvature.
double component_variance(const JcirComponent& component,
                          const numerics::QuadratureSpec& spec = {});

} // namespace supjcir::process

#endif
