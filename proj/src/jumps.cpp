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

#include "supjcir/jumps.hpp"

#include <cmath>
#include <limits>

namespace supjcir::jumps {

double JumpMeasure::tail_rate() const {
    if (const auto* e = std::get_if<ExponentialJump>(&variant_)) return e->beta;
    if (const auto* t = std::get_if<TemperedStable>(&variant_)) return t->beta;
    return std::numeric_limits<double>::infinity();
}

double JumpMeasure::density(double z) const {
    if (const auto* e = std::get_if<ExponentialJump>(&variant_))
        return e->mu * e->beta * std::exp(-e->beta * z);
    if (const auto* t = std::get_if<TemperedStable>(&variant_))
        return t->gamma * std::pow(z, -(1.0 + t->alpha)) * std::exp(-t->beta * z);
    return 0.0;
}

namespace {

// integral of g(z) nu(dz) without the growth precheck; the quadrature scale
// is set from the measure's decay length 1/beta.
double nu_integral(const JumpMeasure& measure, const std::function<double(double)>& g,
                   const numerics::QuadratureSpec& spec) {
    const double beta = std::get_if<ExponentialJump>(&measure.variant())
                            ? std::get<ExponentialJump>(measure.variant()).beta
                            : std::get<TemperedStable>(measure.variant()).beta;
    numerics::QuadratureSpec s = spec;
    s.initial_truncation = spec.initial_truncation / beta;
    return numerics::integrate_semi_infinite(
        [&](double z) { return g(z) * measure.density(z); }, s);
}

} // namespace

double jump_moment(const JumpMeasure& measure, int k, const numerics::QuadratureSpec& spec) {
    if (k < 0) throw ParameterOutOfRange("jump_moment: k must be >= 0");
    if (measure.is_none()) return 0.0;
    if (const auto* e = std::get_if<ExponentialJump>(&measure.variant())) {
        double v = e->mu;
        for (int i = 1; i <= k; ++i) v *= static_cast<double>(i) / e->beta;
        return v;
    }
    const auto& t = std::get<TemperedStable>(measure.variant());
    if (k == 0 && t.alpha >= 0.0)
        throw UnsupportedMoment("jump_moment: k = 0 has infinite mass for alpha >= 0");
    return nu_integral(measure, [k](double z) { return std::pow(z, k); }, spec);
}

double exp_compensator(const JumpMeasure& measure, double u,
                       const numerics::QuadratureSpec& spec) {
    if (measure.is_none() || u == 0.0) return 0.0;
    if (!(u < measure.tail_rate()))
        throw ParameterOutOfRange("exp_compensator: u must be < beta");
    if (const auto* e = std::get_if<ExponentialJump>(&measure.variant()))
        return e->mu * u / (e->beta - u);
    return nu_integral(measure, [u](double z) { return std::expm1(u * z); }, spec);
}

double weighted_integral(const JumpMeasure& measure, const std::function<double(double)>& g,
                         const numerics::QuadratureSpec& spec) {
    if (measure.is_none()) return 0.0;
    const double beta = measure.tail_rate();

    // Growth precheck: least-squares slope of log g at z = 10/beta, 20/beta,
    // 40/beta; an exponential growth rate at or beyond the measure's decay
    // rate means the integral cannot converge. Skipped when any sample is
    // nonpositive (a bounded or sign-changing integrand cannot outgrow the
    // exponential tail).
    const double z1 = 10.0 / beta, z2 = 20.0 / beta, z3 = 40.0 / beta;
    const double g1 = g(z1), g2 = g(z2), g3 = g(z3);
    if (g1 > 0.0 && g2 > 0.0 && g3 > 0.0) {
        const double zs[3] = {z1, z2, z3};
        const double ys[3] = {std::log(g1), std::log(g2), std::log(g3)};
        const double zbar = (zs[0] + zs[1] + zs[2]) / 3.0;
        const double ybar = (ys[0] + ys[1] + ys[2]) / 3.0;
        double num = 0.0, den = 0.0;
        for (int i = 0; i < 3; ++i) {
            num += (zs[i] - zbar) * (ys[i] - ybar);
            den += (zs[i] - zbar) * (zs[i] - zbar);
        }
        const double rate = num / den;
        if (rate >= 0.999 * beta)
            throw Divergent("weighted_integral: integrand grows at exponential rate >= beta");
    }
    return nu_integral(measure, g, spec);
}

} // namespace supjcir::jumps
