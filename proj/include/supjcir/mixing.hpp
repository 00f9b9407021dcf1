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

//! The reversion-speed probability measure pi: Gamma form or discrete atoms,
//! its inverse moment R, quantile discretization, and the mixed-exponential
//! autocorrelation function.

#ifndef SUPJCIR_MIXING_HPP
#define SUPJCIR_MIXING_HPP

#include <variant>
#include <vector>

#include "supjcir/errors.hpp"

namespace supjcir::mixing {

//! pi(dr) ~ r^{omega-1} exp(-r/theta) dr (shape omega, scale theta).
//! omega > 1 is required for the inverse moment R to be finite.
struct GammaMixing {
    double omega;
    double theta;
};

struct Atom {
    double weight; // c_i > 0, weights sum to 1
    double speed;  // r_i > 0, strictly increasing across atoms
};

struct DiscreteMixing {
    std::vector<Atom> atoms;
};

class MixingMeasure {
public:
    static MixingMeasure gamma(double omega, double theta) {
        if (!(omega > 1.0) || !(theta > 0.0))
            throw ParameterOutOfRange("GammaMixing requires omega > 1 and theta > 0");
        MixingMeasure m;
        m.variant_ = GammaMixing{omega, theta};
        return m;
    }

    static MixingMeasure discrete(std::vector<Atom> atoms);

    const std::variant<GammaMixing, DiscreteMixing>& variant() const { return variant_; }

    bool is_gamma() const { return std::holds_alternative<GammaMixing>(variant_); }

private:
    MixingMeasure() = default;
    std::variant<GammaMixing, DiscreteMixing> variant_;
};

//! R = integral of pi(dr)/r: 1/(theta (omega - 1)) for Gamma, sum c_i/r_i
//! for discrete atoms.
double inverse_moment(const MixingMeasure& mixing);

//! n-atom quantile discretization of a Gamma mixing measure: equal weights
//! 1/n with speeds at the quantiles of probability (i - 1/2)/n.
MixingMeasure quantile_discretize(const GammaMixing& g, int n);

//! ACF(h): (1 + theta h)^{-(omega-1)} for Gamma; the R-normalized mixture of
//! exponentials for discrete atoms. Equals 1 at h = 0.
double mixed_acf(const MixingMeasure& mixing, double h);

namespace detail {

//! Regularized lower incomplete gamma P(a, x), by series for x < a + 1 and
//! continued fraction otherwise.
double regularized_gamma_p(double a, double x);

//! Quantile of the Gamma(shape, scale) distribution by bisection on P.
double gamma_quantile(double shape, double scale, double prob);

} // namespace detail

} // namespace supjcir::mixing

#endif
