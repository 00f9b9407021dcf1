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

//! Empirical statistics from time series and the two-step parameter
//! identification: fit (theta, omega) to the empirical ACF, then fit
//! (beta, sigma, a) to the empirical moments with the jump intensity tied
//! by the mean split mu = ((1-y)/y) beta a.

#ifndef SUPJCIR_ESTIMATION_HPP
#define SUPJCIR_ESTIMATION_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "supjcir/process.hpp"

namespace supjcir::estimation {

struct TimeSeries {
    std::vector<double> times; // days, strictly increasing
    std::vector<double> values;
    std::string name;
};

//! Throws ParameterOutOfRange unless times are strictly increasing, lengths
//! match, and there are at least 8 observations.
void validate(const TimeSeries& series);

struct AcfPoint {
    double lag; // days
    double value;
};

struct EmpiricalMoments {
    double mean;
    double variance;
    std::optional<double> skewness; // absent for a constant series
};

//! Biased sample autocorrelation on the nominal (median-increment) grid;
//! observations more than 25% off-grid are excluded. Lag k is reported as
//! k * step days; lag 0 is always 1.
std::vector<AcfPoint> empirical_acf(const TimeSeries& series, int max_lag_steps);

//! Population (divide-by-n) moments; skewness = m3 / m2^{3/2}.
EmpiricalMoments empirical_moments(const TimeSeries& series);

struct AcfFit {
    double theta;
    double omega;
    double residual; // sum of squared errors over the fitted lags
};

//! Least squares of (1 + theta h)^{-(omega-1)} over the lag-h > 0 points by
//! multi-start downhill simplex in (log theta, log(omega-1)) space.
AcfFit fit_acf(std::span<const AcfPoint> points, double residual_ceiling = -1.0);

//! Sum of squared relative errors over mean and variance, plus the skewness
//! term when include_skew.
double moment_error(const process::Moments& model_stats, const EmpiricalMoments& emp,
                    bool include_skew);

struct FitResult {
    process::SupJcirModel model;
    double y;
    double error_metric;
    bool include_skew;
    std::map<std::string, double> diagnostics; // per-statistic relative errors
};

//! Second estimation step: with R = 1/(theta(omega-1)) fixed, minimize
//! moment_error over (beta, sigma, a) in log space, mu eliminated by the
//! mean split; y = 1 fits a jump-free model over (sigma, a).
FitResult fit_moments(const EmpiricalMoments& emp, double theta, double omega, double y,
                      bool include_skew);

} // namespace supjcir::estimation

#endif
