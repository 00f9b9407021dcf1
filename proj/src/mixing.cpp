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

#include "supjcir/mixing.hpp"

#include <cmath>

#include "supjcir/kernels.hpp"

namespace supjcir::mixing {

MixingMeasure MixingMeasure::discrete(std::vector<Atom> atoms) {
    if (atoms.empty()) throw ParameterOutOfRange("DiscreteMixing requires at least one atom");
    double wsum = 0.0;
    double prev = 0.0;
    for (const Atom& a : atoms) {
        if (!(a.weight > 0.0)) throw ParameterOutOfRange("DiscreteMixing: weights must be > 0");
        if (!(a.speed > prev) || !std::isfinite(a.speed))
            throw ParameterOutOfRange(
                "DiscreteMixing: speeds must be strictly increasing, positive, and bounded");
        prev = a.speed;
        wsum += a.weight;
    }
    if (std::abs(wsum - 1.0) > 1e-12)
        throw ParameterOutOfRange("DiscreteMixing: weights must sum to 1 within 1e-12");
    MixingMeasure m;
    m.variant_ = DiscreteMixing{std::move(atoms)};
    return m;
}

double inverse_moment(const MixingMeasure& mixing) {
    if (const auto* g = std::get_if<GammaMixing>(&mixing.variant()))
        return 1.0 / (g->theta * (g->omega - 1.0));
    const auto& d = std::get<DiscreteMixing>(mixing.variant());
    double r = 0.0;
    for (const Atom& a : d.atoms) r += a.weight / a.speed;
    return r;
}

MixingMeasure quantile_discretize(const GammaMixing& g, int n) {
    if (n < 1) throw ParameterOutOfRange("quantile_discretize: n must be >= 1");
    std::vector<Atom> atoms;
    atoms.reserve(static_cast<std::size_t>(n));
    const double w = 1.0 / static_cast<double>(n);
    for (int i = 1; i <= n; ++i) {
        const double prob = (static_cast<double>(i) - 0.5) / static_cast<double>(n);
        atoms.push_back({w, detail::gamma_quantile(g.omega, g.theta, prob)});
    }
    return MixingMeasure::discrete(std::move(atoms));
}

double mixed_acf(const MixingMeasure& mixing, double h) {
    if (!(h >= 0.0)) throw ParameterOutOfRange("mixed_acf: h must be >= 0");
    if (const auto* g = std::get_if<GammaMixing>(&mixing.variant()))
        return std::pow(1.0 + g->theta * h, -(g->omega - 1.0));
    const auto& d = std::get<DiscreteMixing>(mixing.variant());
    std::vector<double> w(d.atoms.size()), rate(d.atoms.size());
    double rsum = 0.0;
    for (std::size_t i = 0; i < d.atoms.size(); ++i) {
        w[i] = d.atoms[i].weight / d.atoms[i].speed;
        rate[i] = d.atoms[i].speed;
        rsum += w[i];
    }
    return kernels::weighted_exp_sum(w, rate, h) / rsum;
}

namespace detail {

double regularized_gamma_p(double a, double x) {
    if (!(a > 0.0)) throw ParameterOutOfRange("regularized_gamma_p: a must be > 0");
    if (x <= 0.0) return 0.0;
    const double lg = std::lgamma(a);
    if (x < a + 1.0) {
        // series: P(a,x) = x^a e^{-x} / Gamma(a) * sum x^n / (a (a+1) ... (a+n))
        double ap = a;
        double term = 1.0 / a;
        double sum = term;
        for (int i = 0; i < 1000; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-16)
                return sum * std::exp(-x + a * std::log(x) - lg);
        }
        throw NonConvergent("regularized_gamma_p: series did not converge");
    }
    // continued fraction for Q(a,x) (modified Lentz)
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double frac = d;
    for (int i = 1; i <= 1000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        frac *= delta;
        if (std::abs(delta - 1.0) < 1e-16)
            return 1.0 - frac * std::exp(-x + a * std::log(x) - lg);
    }
    throw NonConvergent("regularized_gamma_p: continued fraction did not converge");
}

double gamma_quantile(double shape, double scale, double prob) {
    if (!(prob > 0.0) || !(prob < 1.0))
        throw ParameterOutOfRange("gamma_quantile: prob must be in (0, 1)");
    double hi = shape + 1.0;
    while (regularized_gamma_p(shape, hi) < prob) {
        hi *= 2.0;
        if (hi > 1e300) throw NonConvergent("gamma_quantile: bracket expansion failed");
    }
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (regularized_gamma_p(shape, mid) < prob)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-15 * hi) break;
    }
    return scale * 0.5 * (lo + hi);
}

} // namespace detail

} // namespace supjcir::mixing
