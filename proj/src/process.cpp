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

#include "supjcir/process.hpp"

#include <cmath>

namespace supjcir::process {

double riccati_exponent(double p, double r, double sigma2_half, double s) {
    if (!(p > 0.0)) throw ParameterOutOfRange("riccati_exponent: p must be > 0");
    if (!(r > 0.0)) throw ParameterOutOfRange("riccati_exponent: r must be > 0");
    if (!(s >= 0.0)) throw ParameterOutOfRange("riccati_exponent: s must be >= 0");
    if (!(1.0 / p - sigma2_half > 0.0))
        throw ParameterOutOfRange("riccati_exponent: requires 1/p > sigma2_half");
    return 1.0 / (sigma2_half + (1.0 / p - sigma2_half) * std::exp(r * s));
}

double log_mgf(const SupJcirModel& model, double p, const numerics::QuadratureSpec& spec) {
    if (p == 0.0) return 0.0;
    const double a_half = 0.5 * model.sigma * model.sigma;
    if (!(p > 0.0) || !(p < 1.0 / a_half) || !(p < model.jump.tail_rate()))
        throw ParameterOutOfRange("log_mgf: requires 0 < p < min{2/sigma^2, beta}");
    const double r_inv = model.inverse_moment();
    auto integrand = [&](double s) {
        const double u = riccati_exponent(p, 1.0, a_half, s);
        return model.a * u + jumps::exp_compensator(model.jump, u, spec);
    };
    return r_inv * numerics::integrate_semi_infinite(integrand, spec);
}

Moments stationary_moments(const SupJcirModel& model, const numerics::QuadratureSpec& spec) {
    const double r_inv = model.inverse_moment();
    const double s2 = model.sigma * model.sigma;
    const double m1 = jumps::jump_moment(model.jump, 1, spec);
    const double m2 = jumps::jump_moment(model.jump, 2, spec);
    const double m3 = jumps::jump_moment(model.jump, 3, spec);
    Moments out;
    out.mean = r_inv * (model.a + m1);
    out.variance = r_inv * (0.5 * m2 + 0.5 * s2 * (model.a + m1));
    const double third = r_inv * (0.5 * s2 * s2 * (model.a + m1) + 0.5 * s2 * m2 + m3 / 3.0);
    out.skewness = third / std::pow(out.variance, 1.5);
    return out;
}

double model_acf(const SupJcirModel& model, double h) { return mixing::mixed_acf(model.mix, h); }

namespace {

double component_jump_term(const JcirComponent& comp, double u,
                           const numerics::QuadratureSpec& spec) {
    if (comp.jump.is_none() || comp.jump_weight == 0.0) return 0.0;
    if (comp.multiplier.is_identity())
        return comp.jump_weight * jumps::exp_compensator(comp.jump, u, spec);
    return comp.jump_weight *
           jumps::weighted_integral(
               comp.jump, [&](double z) { return std::expm1(u * z) * comp.multiplier(z); },
               spec);
}

void check_component(const JcirComponent& comp, double p) {
    if (!(comp.reversion > 0.0) || !(comp.diffusion_factor > 0.0))
        throw ParameterOutOfRange("JcirComponent: reversion and diffusion_factor must be > 0");
    if (!(p > 0.0) || !(p < 1.0 / comp.riccati_curvature()) || !(p < comp.jump.tail_rate()))
        throw ParameterOutOfRange(
            "component_log_mgf: requires 0 < p < min{2 reversion / diffusion_factor, beta}");
}

} // namespace

double component_log_mgf(const JcirComponent& comp, double p, std::optional<double> horizon,
                         const numerics::QuadratureSpec& spec) {
    if (p == 0.0) return 0.0;
    check_component(comp, p);
    const double curvature = comp.riccati_curvature();
    auto integrand = [&](double s) {
        const double u = riccati_exponent(p, comp.reversion, curvature, s);
        return comp.drift_const * u + component_jump_term(comp, u, spec);
    };
    if (!horizon) return numerics::integrate_semi_infinite(integrand, spec);
    if (!(*horizon >= 0.0)) throw ParameterOutOfRange("component_log_mgf: horizon must be >= 0");
    if (*horizon == 0.0) return 0.0;
    return numerics::solve_ode([&](double s, double) { return integrand(s); }, 0.0, 0.0,
                               *horizon, {});
}

double component_mean(const JcirComponent& comp, const numerics::QuadratureSpec& spec) {
    if (!(comp.reversion > 0.0))
        throw ParameterOutOfRange("component_mean: reversion must be > 0");
    double m1 = 0.0;
    if (!comp.jump.is_none() && comp.jump_weight != 0.0) {
        m1 = comp.multiplier.is_identity()
                 ? jumps::jump_moment(comp.jump, 1, spec)
                 : jumps::weighted_integral(
                       comp.jump, [&](double z) { return z * comp.multiplier(z); }, spec);
        m1 *= comp.jump_weight;
    }
    return (comp.drift_const + m1) / comp.reversion;
}

double component_variance(const JcirComponent& comp, const numerics::QuadratureSpec& spec) {
    if (!(comp.reversion > 0.0) || !(comp.diffusion_factor > 0.0))
        throw ParameterOutOfRange("component_variance: reversion and diffusion_factor must be > 0");
    double m1 = 0.0, m2 = 0.0;
    if (!comp.jump.is_none() && comp.jump_weight != 0.0) {
        if (comp.multiplier.is_identity()) {
            m1 = jumps::jump_moment(comp.jump, 1, spec);
            m2 = jumps::jump_moment(comp.jump, 2, spec);
        } else {
            m1 = jumps::weighted_integral(
                comp.jump, [&](double z) { return z * comp.multiplier(z); }, spec);
            m2 = jumps::weighted_integral(
                comp.jump, [&](double z) { return z * z * comp.multiplier(z); }, spec);
        }
        m1 *= comp.jump_weight;
        m2 *= comp.jump_weight;
    }
    const double curvature = comp.riccati_curvature();
    return (curvature * (comp.drift_const + m1) + 0.5 * m2) / comp.reversion;
}

} // namespace supjcir::process
