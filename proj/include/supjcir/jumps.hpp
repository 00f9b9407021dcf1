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

//! The subordinator's Levy measure nu and its moments and weighted integrals.
//!
//! Two parametric families are supported plus the zero measure:
//!   ExponentialJump:  nu(dz) = mu * beta * exp(-beta z) dz
//!   TemperedStable:   nu(dz) = gamma * z^{-(1+alpha)} * exp(-beta z) dz, alpha < 1
//! Both have finite moments of every order k >= 1.

#ifndef SUPJCIR_JUMPS_HPP
#define SUPJCIR_JUMPS_HPP

#include <functional>
#include <variant>

#include "supjcir/errors.hpp"
#include "supjcir/numerics.hpp"

namespace supjcir::jumps {

struct NoJumps {};

struct ExponentialJump {
    double mu;   // jump intensity, 1/time
    double beta; // inverse mean jump size
};

struct TemperedStable {
    double gamma;
    double beta;
    double alpha; // < 1; alpha < 0 gives compound-Poisson (finite activity)
};

class JumpMeasure {
public:
    JumpMeasure() : variant_(NoJumps{}) {}

    static JumpMeasure none() { return JumpMeasure(); }

    static JumpMeasure exponential(double mu, double beta) {
        if (!(mu > 0.0) || !(beta > 0.0))
            throw ParameterOutOfRange("ExponentialJump requires mu > 0 and beta > 0");
        JumpMeasure m;
        m.variant_ = ExponentialJump{mu, beta};
        return m;
    }

    static JumpMeasure tempered_stable(double gamma, double beta, double alpha) {
        if (!(gamma > 0.0) || !(beta > 0.0) || !(alpha < 1.0))
            throw ParameterOutOfRange(
                "TemperedStable requires gamma > 0, beta > 0, alpha < 1");
        JumpMeasure m;
        m.variant_ = TemperedStable{gamma, beta, alpha};
        return m;
    }

    const std::variant<NoJumps, ExponentialJump, TemperedStable>& variant() const {
        return variant_;
    }

    bool is_none() const { return std::holds_alternative<NoJumps>(variant_); }

    //! Exponential tail rate of nu: integrals of e^{uz} against nu converge
    //! for u < tail_rate(). Infinite for the zero measure.
    double tail_rate() const;

    //! Density of nu with respect to Lebesgue measure at z > 0.
    double density(double z) const;

private:
    std::variant<NoJumps, ExponentialJump, TemperedStable> variant_;
};

//! Positive multiplier g(z) applied to nu(dz), e.g. a worst-case jump
//! distortion. Identity when empty.
struct JumpMultiplier {
    std::function<double(double)> fn;

    double operator()(double z) const { return fn ? fn(z) : 1.0; }
    bool is_identity() const { return !fn; }
};

//! M_k = integral of z^k nu(dz). k >= 1 always; k = 0 (total activity) only
//! where finite (ExponentialJump, or TemperedStable with alpha < 0).
//! Closed form for ExponentialJump (mu k! / beta^k), quadrature otherwise.
double jump_moment(const JumpMeasure& measure, int k,
                   const numerics::QuadratureSpec& spec = {});

//! integral of (e^{uz} - 1) nu(dz) for u < tail_rate(). Strictly increasing
//! and convex in u, zero at u = 0.
double exp_compensator(const JumpMeasure& measure, double u,
                       const numerics::QuadratureSpec& spec = {});

//! integral of g(z) nu(dz) through the shared quadrature path.
//! Precondition: g continuous with g(z) = O(z) near 0.
//! Throws Divergent when the sampled tail growth rate of g reaches the
//! measure's exponential decay rate.
double weighted_integral(const JumpMeasure& measure, const std::function<double(double)>& g,
                         const numerics::QuadratureSpec& spec = {});

} // namespace supjcir::jumps

#endif
