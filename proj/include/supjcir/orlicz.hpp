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

//! The Orlicz risk engine: worst-case upper/lower exponential disutilities of
//! the supJCIR model under entropy-penalized drift and jump distortions, with
//! the induced worst-case model, its ACF/moments, and entropy-rate diagnostics.

#ifndef SUPJCIR_ORLICZ_HPP
#define SUPJCIR_ORLICZ_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "supjcir/process.hpp"

namespace supjcir::orlicz {

enum class Bound { Upper, Lower };

//! Normalizing function of the risk functional: increasing with
//! Phi(0) = 0, Phi(1) = 1. Convex variants serve the upper (pessimistic)
//! bound, concave-or-affine variants the lower (optimistic) bound.
class OrliczFunction {
public:
    enum class Kind { Identity, PowerConvex, PowerConcave, ExponentialOrlicz };

    static OrliczFunction identity();
    static OrliczFunction power_convex(double m);    // Phi(x) = x^m, m > 1
    static OrliczFunction power_concave(double m);   // Phi(x) = x^(1/m), m > 1
    static OrliczFunction exponential(double m);     // Phi(x) = (e^{mx}-1)/(e^m-1), m > 0

    Kind kind() const { return kind_; }
    double param() const { return m_; }

    double value(double x) const;
    //! Phi(e^y), evaluated without forming e^y where possible.
    double value_of_exp(double y) const;
    double d1_at_1() const;
    double d2_at_1() const;
    bool convex() const { return kind_ != Kind::PowerConcave; }
    bool concave_or_affine() const {
        return kind_ == Kind::Identity || kind_ == Kind::PowerConcave;
    }
    //! Growth rate g with Phi(e^y) = O(e^{g y}); empty when superexponential.
    std::optional<double> exp_growth() const;

    std::string describe() const;

private:
    OrliczFunction(Kind kind, double m);
    Kind kind_;
    double m_;
};

//! q-exponential: (1 + (1-q) z)^{1/(1-q)} for q != 1, e^z for q = 1.
double q_exp(double z, double q);

//! One risk evaluation request.
struct RiskQuery {
    double p;               // disutility exponent, > 0
    OrliczFunction phi;
    double q;               // Tsallis order: (0,1) for Upper, >= 1 for Lower
    double lambda_diff;     // diffusion uncertainty aversion, >= 0
    double lambda_jump;     // jump uncertainty aversion, >= 0
    Bound bound;
};

//! Effective diffusion shift: (Phi'(1)^2 lambda + Phi''(1)) / Phi'(1) for the
//! upper bound, (Phi'(1)^2 lambda - Phi''(1)) / Phi'(1) for the lower bound.
//! Nonnegative under the bound/Phi pairing rules.
double aversion_shift(const OrliczFunction& phi, double lambda_diff, Bound bound);

enum class AdmissibilityReason {
    Ok,
    WrongQ,
    WrongPhiShape,
    POutOfRange,
    JumpIntegrabilityFail,
};

struct Admissibility {
    AdmissibilityReason reason = AdmissibilityReason::Ok;
    std::string message;

    bool ok() const { return reason == AdmissibilityReason::Ok; }
};

const char* to_string(AdmissibilityReason reason);

//! Validates bound/q pairing, bound/Phi shape pairing, the p-range for the
//! requested bound, and jump-tail integrability of the distorted measure.
//! Returns the first violated condition.
Admissibility admissibility_check(const process::SupJcirModel& model, const RiskQuery& query);

//! Time-dependent exponent coefficient of the bound solution:
//! riccati_exponent(p, r, sigma^2 (1 +- shift)/2, time_to_horizon).
double rho(const RiskQuery& query, const process::SupJcirModel& model, double r,
           double time_to_horizon);

//! Stationary log disutility tau(-inf). Gamma mixing evaluates the
//! R-factored single integral by quadrature; discrete mixing integrates the
//! backward coefficient equation (time-rescaled to speed 1) to convergence.
//! lambda_jump = 0 uses the analytic limit of the jump term.
double stationary_log_disutility(const process::SupJcirModel& model, const RiskQuery& query,
                                 const numerics::QuadratureSpec& spec = {});

//! log Psi(t, state) = sum_i rho_i(T-t) x_i + tau_t for a discrete-mixing
//! model, with tau integrated backward from tau_T = 0.
double finite_horizon_log_disutility(const process::SupJcirModel& model,
                                     const RiskQuery& query, double t, double horizon_time,
                                     std::span<const double> state,
                                     const numerics::QuadratureSpec& spec = {});

//! Worst-case distortion at stationarity (rho = p): the constant drift-tilt
//! factor xi = lambda_diff Phi'(1) sigma^2 p and the jump density multiplier
//! g(z) = q_exp(+-lambda_jump (Phi(e^{p z}) - 1), q).
struct Distortion {
    double xi;
    jumps::JumpMultiplier multiplier;
};

Distortion worst_case_distortion(const process::SupJcirModel& model, const RiskQuery& query);

//! Parameters of the distorted ACF when the mixing is Gamma:
//! ACF(h) = (1 + theta_eff h)^{-(omega-1)}.
struct DistortedGammaAcf {
    double theta_eff;
    double omega;
};

//! The worst-case-distorted model as mean-reverting components: reversion
//! r (1 - xi) for the upper bound, r (1 + xi) for the lower bound, diffusion
//! factor sigma^2 r unchanged, jump measure g(z) nu(dz).
//! Gamma mixing is quantile-discretized at gamma_atoms first (and also
//! reported as the equivalent scale change theta -> theta (1 -+ xi)).
struct DistortedModel {
    double xi;
    std::vector<process::JcirComponent> components;
    std::optional<DistortedGammaAcf> gamma_equivalent;
};

DistortedModel distorted_model(const process::SupJcirModel& model, const RiskQuery& query,
                               int gamma_atoms = 1000);

//! Distorted stationary ACF for Gamma mixing. Upper >= nominal >= Lower
//! pointwise for h > 0; the algebraic decay power omega - 1 is unchanged.
double distorted_acf(const process::SupJcirModel& model, const RiskQuery& query, double h);

//! Stationary mean and variance of the distorted model divided by the
//! nominal ones, computed from the per-component cumulant closed forms on a
//! common discretization.
struct MomentRatios {
    double normalized_a;
    double normalized_v;
};

MomentRatios distorted_moment_ratios(const process::SupJcirModel& model,
                                     const RiskQuery& query, int gamma_atoms = 1000,
                                     const numerics::QuadratureSpec& spec = {});

//! Relative-entropy rates per unit time at the stationary worst-case
//! controls, for a discrete-mixing model in the given state.
struct EntropyRates {
    double diff_rate; // Kullback-Leibler rate of the drift tilt
    double jump_rate; // Tsallis rate of the jump modulation
};

EntropyRates entropy_rates(const process::SupJcirModel& model, const RiskQuery& query,
                           std::span<const double> state,
                           const numerics::QuadratureSpec& spec = {});

//! Full normalized-disutility report: tau with the query's aversion weights,
//! the lambda -> 0 baseline (same Phi), U = exp(tau - tau0), and the
//! worst-case distortion summary. normalized_a / normalized_v and the ACF
//! parameters are absent when the upper-bound distortion is degenerate
//! (xi >= 1).
struct RiskReport {
    double log_disutility;
    double disutility;
    double baseline_log_disutility;
    double baseline_disutility;
    double normalized_u;
    double xi;
    bool distortion_degenerate;
    std::optional<DistortedGammaAcf> acf_params;
    std::optional<std::vector<mixing::Atom>> acf_atoms;
    std::optional<double> normalized_a;
    std::optional<double> normalized_v;
};

RiskReport normalized_disutility(const process::SupJcirModel& model, const RiskQuery& query,
                                 const numerics::QuadratureSpec& spec = {});

} // namespace supjcir::orlicz

#endif
