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

#include "supjcir/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "supjcir/kernels.hpp"
#include "supjcir/optim.hpp"

namespace supjcir::estimation {

void validate(const TimeSeries& series) {
    if (series.times.size() != series.values.size())
        throw ParameterOutOfRange("TimeSeries: times and values lengths differ");
    if (series.times.size() < 8)
        throw ParameterOutOfRange("TimeSeries: at least 8 observations required");
    for (std::size_t i = 1; i < series.times.size(); ++i)
        if (!(series.times[i] > series.times[i - 1]))
            throw ParameterOutOfRange("TimeSeries: times must be strictly increasing");
}

namespace {

double median_increment(const std::vector<double>& times) {
    std::vector<double> d(times.size() - 1);
    for (std::size_t i = 1; i < times.size(); ++i) d[i - 1] = times[i] - times[i - 1];
    std::sort(d.begin(), d.end());
    const std::size_t n = d.size();
    return n % 2 == 1 ? d[n / 2] : 0.5 * (d[n / 2 - 1] + d[n / 2]);
}

} // namespace

std::vector<AcfPoint> empirical_acf(const TimeSeries& series, int max_lag_steps) {
    validate(series);
    const long n = static_cast<long>(series.times.size());
    if (max_lag_steps < 1 || max_lag_steps >= n / 2)
        throw ParameterOutOfRange("empirical_acf: max_lag_steps must be in [1, length/2)");

    const double step = median_increment(series.times);
    const double t0 = series.times.front();

    // Snap observations to the nominal grid; drop those more than 25%
    // off-grid, and on index collisions keep the closer one.
    long max_idx = 0;
    std::vector<long> idx(series.times.size(), -1);
    for (std::size_t i = 0; i < series.times.size(); ++i) {
        const double pos = (series.times[i] - t0) / step;
        const long k = std::lround(pos);
        if (std::abs(pos - static_cast<double>(k)) > 0.25) continue;
        idx[i] = k;
        max_idx = std::max(max_idx, k);
    }
    std::vector<double> grid(static_cast<std::size_t>(max_idx + 1),
                             std::numeric_limits<double>::quiet_NaN());
    std::vector<double> offset(static_cast<std::size_t>(max_idx + 1), 0.0);
    for (std::size_t i = 0; i < series.times.size(); ++i) {
        if (idx[i] < 0) continue;
        const double off =
            std::abs((series.times[i] - t0) / step - static_cast<double>(idx[i]));
        auto& cell = grid[static_cast<std::size_t>(idx[i])];
        if (std::isnan(cell) || off < offset[static_cast<std::size_t>(idx[i])]) {
            cell = series.values[i];
            offset[static_cast<std::size_t>(idx[i])] = off;
        }
    }

    double mean = 0.0;
    long m = 0;
    for (double v : grid)
        if (!std::isnan(v)) {
            mean += v;
            ++m;
        }
    mean /= static_cast<double>(m);

    // Gap cells are zero after centering, so they drop out of every lagged
    // product: the sums below run over the available pairs only.
    std::vector<double> centered(grid.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (!std::isnan(grid[i])) centered[i] = grid[i] - mean;

    const double denom = kernels::dot(centered, centered);
    if (!(denom > 0.0)) throw ZeroVariance("empirical_acf: series has zero variance");

    std::vector<AcfPoint> out;
    out.reserve(static_cast<std::size_t>(max_lag_steps) + 1);
    const std::size_t g = grid.size();
    for (int k = 0; k <= max_lag_steps; ++k) {
        const double num =
            kernels::dot(std::span<const double>(centered.data(), g - k),
                         std::span<const double>(centered.data() + k, g - k));
        out.push_back({static_cast<double>(k) * step, k == 0 ? 1.0 : num / denom});
    }
    return out;
}

EmpiricalMoments empirical_moments(const TimeSeries& series) {
    validate(series);
    const auto& x = series.values;
    const double n = static_cast<double>(x.size());
    const double mean = kernels::sum(x) / n;
    double m2 = 0.0, m3 = 0.0;
    for (double v : x) {
        const double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;
    EmpiricalMoments out;
    out.mean = mean;
    out.variance = m2;
    if (m2 > 0.0) out.skewness = m3 / std::pow(m2, 1.5);
    return out;
}

AcfFit fit_acf(std::span<const AcfPoint> points, double residual_ceiling) {
    std::vector<AcfPoint> lags;
    int positive = 0;
    for (const AcfPoint& p : points) {
        if (p.lag <= 0.0) continue;
        lags.push_back(p);
        if (p.value > 0.0) ++positive;
    }
    if (positive < 3)
        throw ParameterOutOfRange("fit_acf: needs at least 3 positive-lag points with value > 0");
    if (residual_ceiling < 0.0) residual_ceiling = 0.25 * static_cast<double>(lags.size());

    std::vector<double> lag_values;
    for (const AcfPoint& p : lags) lag_values.push_back(p.lag);
    std::sort(lag_values.begin(), lag_values.end());
    const double median_lag = lag_values[lag_values.size() / 2];

    auto residual = [&](std::span<const double> x) {
        const double theta = std::exp(x[0]);
        const double omega = 1.0 + std::exp(x[1]);
        double r = 0.0;
        for (const AcfPoint& p : lags) {
            const double model = std::pow(1.0 + theta * p.lag, -(omega - 1.0));
            r += (p.value - model) * (p.value - model);
        }
        return r;
    };

    const double theta_starts[] = {0.01 / median_lag, 0.1 / median_lag, 1.0 / median_lag};
    const double omega_starts[] = {1.2, 2.0, 4.0};
    optim::NelderMeadResult best;
    best.value = std::numeric_limits<double>::infinity();
    for (double th : theta_starts) {
        for (double om : omega_starts) {
            const double x0[] = {std::log(th), std::log(om - 1.0)};
            optim::NelderMeadResult r = optim::nelder_mead(residual, x0, 0.5);
            if (r.value < best.value) best = r;
        }
    }
    if (!(best.value <= residual_ceiling))
        throw FitFailed("fit_acf: all starts ended above the residual ceiling");
    return {std::exp(best.x[0]), 1.0 + std::exp(best.x[1]), best.value};
}

double moment_error(const process::Moments& model_stats, const EmpiricalMoments& emp,
                    bool include_skew) {
    if (emp.mean == 0.0 || emp.variance == 0.0)
        throw DegenerateEmpirical("moment_error: empirical mean and variance must be nonzero");
    const double em = (model_stats.mean - emp.mean) / emp.mean;
    const double ev = (model_stats.variance - emp.variance) / emp.variance;
    double total = em * em + ev * ev;
    if (include_skew) {
        if (!emp.skewness || *emp.skewness == 0.0)
            throw DegenerateEmpirical("moment_error: empirical skewness must be nonzero");
        const double es = (model_stats.skewness - *emp.skewness) / *emp.skewness;
        total += es * es;
    }
    return total;
}

namespace {

process::Moments model_moments(double r_inv, double a, double sigma, double mu, double beta) {
    const double m1 = beta > 0.0 ? mu / beta : 0.0;
    const double m2 = beta > 0.0 ? 2.0 * mu / (beta * beta) : 0.0;
    const double m3 = beta > 0.0 ? 6.0 * mu / (beta * beta * beta) : 0.0;
    const double s2 = sigma * sigma;
    process::Moments out;
    out.mean = r_inv * (a + m1);
    out.variance = r_inv * (0.5 * m2 + 0.5 * s2 * (a + m1));
    out.skewness = r_inv * (0.5 * s2 * s2 * (a + m1) + 0.5 * s2 * m2 + m3 / 3.0) /
                   std::pow(out.variance, 1.5);
    return out;
}

} // namespace

FitResult fit_moments(const EmpiricalMoments& emp, double theta, double omega, double y,
                      bool include_skew) {
    if (!(theta > 0.0) || !(omega > 1.0))
        throw ParameterOutOfRange("fit_moments: requires theta > 0 and omega > 1");
    if (!(y > 0.0) || !(y > 0.0 && y <= 1.0))
        throw ParameterOutOfRange("fit_moments: requires 0 < y <= 1");
    if (!(emp.mean > 0.0) || !(emp.variance > 0.0))
        throw DegenerateEmpirical("fit_moments: empirical mean and variance must be positive");
    if (include_skew && (!emp.skewness || *emp.skewness == 0.0))
        throw DegenerateEmpirical("fit_moments: empirical skewness must be nonzero");

    const double r_inv = 1.0 / (theta * (omega - 1.0));
    const bool jump_free = y == 1.0;
    const double jump_ratio = (1.0 - y) / y; // mu = jump_ratio * beta * a

    auto objective = [&](std::span<const double> x) {
        double beta = 0.0, sigma, a;
        if (jump_free) {
            sigma = std::exp(x[0]);
            a = std::exp(x[1]);
        } else {
            beta = std::exp(x[0]);
            sigma = std::exp(x[1]);
            a = std::exp(x[2]);
        }
        const double mu = jump_free ? 0.0 : jump_ratio * beta * a;
        return moment_error(model_moments(r_inv, a, sigma, mu, beta), emp, include_skew);
    };

    const double a_base = y * emp.mean / r_inv;
    const double sigma_base = std::sqrt(2.0 * emp.variance / emp.mean);
    const double factors[] = {0.3, 1.0, 3.0};
    const double beta_bases[] = {1.0 / emp.mean, 5.0 / emp.mean, 25.0 / emp.mean};

    optim::NelderMeadResult best;
    best.value = std::numeric_limits<double>::infinity();
    double best_beta = std::numeric_limits<double>::infinity();
    auto consider = [&](const optim::NelderMeadResult& r, double beta) {
        const bool tie = std::abs(r.value - best.value) <= 1e-12 * (1.0 + best.value);
        if ((tie && beta < best_beta) || (!tie && r.value < best.value)) {
            best = r;
            best_beta = beta;
        }
    };

    if (jump_free) {
        for (double fs : factors)
            for (double fa : factors) {
                const double x0[] = {std::log(sigma_base * fs), std::log(a_base * fa)};
                optim::NelderMeadResult r = optim::nelder_mead(objective, x0, 0.7);
                consider(r, 0.0);
            }
    } else {
        for (double bb : beta_bases)
            for (double fs : factors)
                for (double fa : factors) {
                    const double x0[] = {std::log(bb), std::log(sigma_base * fs),
                                         std::log(a_base * fa)};
                    optim::NelderMeadResult r = optim::nelder_mead(objective, x0, 0.7);
                    consider(r, std::exp(r.x[0]));
                }
    }
    if (!std::isfinite(best.value)) throw FitFailed("fit_moments: no start converged");

    double beta = 0.0, sigma, a;
    if (jump_free) {
        sigma = std::exp(best.x[0]);
        a = std::exp(best.x[1]);
    } else {
        beta = std::exp(best.x[0]);
        sigma = std::exp(best.x[1]);
        a = std::exp(best.x[2]);
    }
    const double mu = jump_free ? 0.0 : jump_ratio * beta * a;

    process::SupJcirModel model(
        a, sigma, jump_free ? jumps::JumpMeasure::none() : jumps::JumpMeasure::exponential(mu, beta),
        mixing::MixingMeasure::gamma(omega, theta));

    const process::Moments fitted = model_moments(r_inv, a, sigma, mu, beta);
    FitResult out{std::move(model), y, best.value, include_skew, {}};
    out.diagnostics["rel_err_mean"] = (fitted.mean - emp.mean) / emp.mean;
    out.diagnostics["rel_err_variance"] = (fitted.variance - emp.variance) / emp.variance;
    if (emp.skewness && *emp.skewness != 0.0)
        out.diagnostics["rel_err_skewness"] = (fitted.skewness - *emp.skewness) / *emp.skewness;
    return out;
}

} // namespace supjcir::estimation
