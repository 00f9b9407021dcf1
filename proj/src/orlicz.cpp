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

#include "supjcir/orlicz.hpp"

#include <cmath>
#include <sstream>

namespace supjcir::orlicz {

OrliczFunction::OrliczFunction(Kind kind, double m) : kind_(kind), m_(m) {
    // Phi(0) = 0 and Phi(1) = 1 for every member of the family.
    if (std::abs(value(0.0)) > 1e-12 || std::abs(value(1.0) - 1.0) > 1e-12)
        throw ParameterOutOfRange("OrliczFunction: Phi(0) = 0 and Phi(1) = 1 violated");
}

OrliczFunction OrliczFunction::identity() { return {Kind::Identity, 1.0}; }

OrliczFunction OrliczFunction::power_convex(double m) {
    if (!(m > 1.0)) throw ParameterOutOfRange("power_convex requires m > 1");
    return {Kind::PowerConvex, m};
}

OrliczFunction OrliczFunction::power_concave(double m) {
    if (!(m > 1.0)) throw ParameterOutOfRange("power_concave requires m > 1");
    return {Kind::PowerConcave, m};
}

OrliczFunction OrliczFunction::exponential(double m) {
    if (!(m > 0.0)) throw ParameterOutOfRange("exponential Orlicz function requires m > 0");
    return {Kind::ExponentialOrlicz, m};
}

double OrliczFunction::value(double x) const {
    switch (kind_) {
        case Kind::Identity: return x;
        case Kind::PowerConvex: return std::pow(x, m_);
        case Kind::PowerConcave: return std::pow(x, 1.0 / m_);
        case Kind::ExponentialOrlicz: return std::expm1(m_ * x) / std::expm1(m_);
    }
    return 0.0;
}

double OrliczFunction::value_of_exp(double y) const {
    switch (kind_) {
        case Kind::Identity: return std::exp(y);
        case Kind::PowerConvex: return std::exp(m_ * y);
        case Kind::PowerConcave: return std::exp(y / m_);
        case Kind::ExponentialOrlicz: return std::expm1(m_ * std::exp(y)) / std::expm1(m_);
    }
    return 0.0;
}

double OrliczFunction::d1_at_1() const {
    switch (kind_) {
        case Kind::Identity: return 1.0;
        case Kind::PowerConvex: return m_;
        case Kind::PowerConcave: return 1.0 / m_;
        case Kind::ExponentialOrlicz: return m_ * std::exp(m_) / std::expm1(m_);
    }
    return 0.0;
}

double OrliczFunction::d2_at_1() const {
    switch (kind_) {
        case Kind::Identity: return 0.0;
        case Kind::PowerConvex: return m_ * (m_ - 1.0);
        case Kind::PowerConcave: return (1.0 / m_) * (1.0 / m_ - 1.0);
        case Kind::ExponentialOrlicz: return m_ * m_ * std::exp(m_) / std::expm1(m_);
    }
    return 0.0;
}

std::optional<double> OrliczFunction::exp_growth() const {
    switch (kind_) {
        case Kind::Identity: return 1.0;
        case Kind::PowerConvex: return m_;
        case Kind::PowerConcave: return 1.0 / m_;
        case Kind::ExponentialOrlicz: return std::nullopt;
    }
    return std::nullopt;
}

std::string OrliczFunction::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Identity: os << "identity"; break;
        case Kind::PowerConvex: os << "pow:" << m_; break;
        case Kind::PowerConcave: os << "powinv:" << m_; break;
        case Kind::ExponentialOrlicz: os << "exp:" << m_; break;
    }
    return os.str();
}

double q_exp(double z, double q) {
    if (!(q > 0.0)) throw ParameterOutOfRange("q_exp: q must be > 0");
    if (q == 1.0) return std::exp(z);
    const double base = 1.0 + (1.0 - q) * z;
    if (!(base > 0.0)) throw DomainError("q_exp: 1 + (1-q) z must be > 0");
    return std::exp(std::log1p((1.0 - q) * z) / (1.0 - q));
}

double aversion_shift(const OrliczFunction& phi, double lambda_diff, Bound bound) {
    if (!(lambda_diff >= 0.0)) throw ParameterOutOfRange("lambda_diff must be >= 0");
    const double d1 = phi.d1_at_1();
    const double d2 = phi.d2_at_1();
    return bound == Bound::Upper ? (d1 * d1 * lambda_diff + d2) / d1
                                 : (d1 * d1 * lambda_diff - d2) / d1;
}

const char* to_string(AdmissibilityReason reason) {
    switch (reason) {
        case AdmissibilityReason::Ok: return "Ok";
        case AdmissibilityReason::WrongQ: return "WrongQ";
        case AdmissibilityReason::WrongPhiShape: return "WrongPhiShape";
        case AdmissibilityReason::POutOfRange: return "POutOfRange";
        case AdmissibilityReason::JumpIntegrabilityFail: return "JumpIntegrabilityFail";
    }
    return "Ok";
}

Admissibility admissibility_check(const process::SupJcirModel& model, const RiskQuery& query) {
    std::ostringstream os;
    if (query.bound == Bound::Upper) {
        if (!(query.q > 0.0 && query.q < 1.0)) {
            os << "upper bound requires 0 < q < 1, got q = " << query.q;
            return {AdmissibilityReason::WrongQ, os.str()};
        }
        if (!query.phi.convex()) {
            os << "upper bound requires a convex Phi, got " << query.phi.describe();
            return {AdmissibilityReason::WrongPhiShape, os.str()};
        }
    } else {
        if (!(query.q >= 1.0)) {
            os << "lower bound requires q >= 1, got q = " << query.q;
            return {AdmissibilityReason::WrongQ, os.str()};
        }
        if (!query.phi.concave_or_affine()) {
            os << "lower bound requires a concave or affine Phi, got " << query.phi.describe();
            return {AdmissibilityReason::WrongPhiShape, os.str()};
        }
    }
    if (!(query.lambda_diff >= 0.0) || !(query.lambda_jump >= 0.0)) {
        os << "aversion weights must be >= 0";
        return {AdmissibilityReason::POutOfRange, os.str()};
    }

    const double s2 = model.sigma * model.sigma;
    const double beta = model.jump.tail_rate();
    const double diff_cap =
        query.bound == Bound::Upper
            ? 2.0 / (s2 * (1.0 + aversion_shift(query.phi, query.lambda_diff, Bound::Upper)))
            : 2.0 / s2;
    if (!(query.p > 0.0) || !(query.p < diff_cap) || !(query.p < beta)) {
        os << "requires 0 < p < min{" << diff_cap << " (diffusion cap), " << beta
           << " (jump tail rate)}, got p = " << query.p;
        return {AdmissibilityReason::POutOfRange, os.str()};
    }

    if (query.bound == Bound::Upper && !model.jump.is_none()) {
        const std::optional<double> growth = query.phi.exp_growth();
        if (!growth) {
            os << "doubly-exponential integrand: " << query.phi.describe()
               << " with jumps has no integrable distorted measure";
            return {AdmissibilityReason::JumpIntegrabilityFail, os.str()};
        }
        if (query.lambda_jump > 0.0) {
            const double cap = (beta / query.p) * (1.0 - query.q);
            if (!(*growth < cap)) {
                os << "distorted jump tail grows at rate " << *growth * query.p / (1.0 - query.q)
                   << " >= beta = " << beta << " (requires growth exponent < (beta/p)(1-q) = "
                   << cap << ")";
                return {AdmissibilityReason::JumpIntegrabilityFail, os.str()};
            }
        } else if (!(*growth * query.p < beta)) {
            os << "baseline jump integrand grows at rate " << *growth * query.p
               << " >= beta = " << beta;
            return {AdmissibilityReason::JumpIntegrabilityFail, os.str()};
        }
    }
    return {AdmissibilityReason::Ok, ""};
}

namespace {

void require_admissible(const process::SupJcirModel& model, const RiskQuery& query) {
    const Admissibility adm = admissibility_check(model, query);
    if (adm.ok()) return;
    if (adm.reason == AdmissibilityReason::JumpIntegrabilityFail) throw Divergent(adm.message);
    throw ParameterOutOfRange(adm.message);
}

double bound_sign(Bound bound) { return bound == Bound::Upper ? 1.0 : -1.0; }

double riccati_curvature(const process::SupJcirModel& model, const RiskQuery& query) {
    const double shift = aversion_shift(query.phi, query.lambda_diff, query.bound);
    const double s2 = model.sigma * model.sigma;
    return query.bound == Bound::Upper ? 0.5 * s2 * (1.0 + shift) : 0.5 * s2 * (1.0 - shift);
}

// integral of [q_exp(+-lambda (Phi(e^{u z}) - 1)) - 1] nu(dz) / (lambda Phi'(1)),
// with the lambda -> 0 limit (Phi(e^{u z}) - 1)/Phi'(1) taken analytically.
double jump_term(const process::SupJcirModel& model, const RiskQuery& query, double u,
                 const numerics::QuadratureSpec& spec) {
    if (model.jump.is_none() || u == 0.0) return 0.0;
    const OrliczFunction& phi = query.phi;
    const double d1 = phi.d1_at_1();
    if (query.lambda_jump == 0.0) {
        switch (phi.kind()) {
            case OrliczFunction::Kind::Identity:
                return jumps::exp_compensator(model.jump, u, spec);
            case OrliczFunction::Kind::PowerConvex:
                return jumps::exp_compensator(model.jump, phi.param() * u, spec) / phi.param();
            case OrliczFunction::Kind::PowerConcave:
                return phi.param() * jumps::exp_compensator(model.jump, u / phi.param(), spec);
            case OrliczFunction::Kind::ExponentialOrlicz:
                return jumps::weighted_integral(
                    model.jump,
                    [&](double z) { return (phi.value_of_exp(u * z) - 1.0) / d1; }, spec);
        }
    }
    const double lam = query.lambda_jump;
    const double q = query.q;
    const double sgn = bound_sign(query.bound);
    return jumps::weighted_integral(
        model.jump,
        [&](double z) {
            const double arg = sgn * lam * (phi.value_of_exp(u * z) - 1.0);
            return sgn * (q_exp(arg, q) - 1.0) / (lam * d1);
        },
        spec);
}

// Integrand of the stationary backward coefficient equation at unit
// reversion speed. Values below the decay floor are truncated to zero; the
// remainder is O(1e-14) relative.
double stationary_integrand(const process::SupJcirModel& model, const RiskQuery& query,
                            double curvature, double s,
                            const numerics::QuadratureSpec& spec) {
    const double u = process::riccati_exponent(query.p, 1.0, curvature, s);
    if (u < 1e-14) return 0.0;
    return model.a * u + jump_term(model, query, u, spec);
}

} // namespace

double rho(const RiskQuery& query, const process::SupJcirModel& model, double r,
           double time_to_horizon) {
    require_admissible(model, query);
    return process::riccati_exponent(query.p, r, riccati_curvature(model, query),
                                     time_to_horizon);
}

double stationary_log_disutility(const process::SupJcirModel& model, const RiskQuery& query,
                                 const numerics::QuadratureSpec& spec) {
    require_admissible(model, query);
    const double curvature = riccati_curvature(model, query);
    const double r_inv = model.inverse_moment();
    auto f = [&](double s) { return stationary_integrand(model, query, curvature, s, spec); };

    if (model.mix.is_gamma()) return r_inv * numerics::integrate_semi_infinite(f, spec);

    // Discrete atoms: integrate the backward coefficient equation, which in
    // time rescaled by each atom's speed collapses to one unit-speed run.
    numerics::OdeSpec ode;
    ode.initial_step = 0.25;
    ode.error_control = std::max(1e-12, spec.rel_tol);
    auto rhs = [&](double s, double) { return f(s); };
    double horizon = 64.0;
    double g = numerics::solve_ode(rhs, 0.0, 0.0, horizon, ode);
    for (int i = 0; i < 6; ++i) {
        const double g2 = numerics::solve_ode(rhs, 0.0, 0.0, 2.0 * horizon, ode);
        if (std::abs(g2 - g) <= std::max(spec.abs_tol, spec.rel_tol * std::abs(g2))) {
            g = g2;
            break;
        }
        horizon *= 2.0;
        g = g2;
    }
    return r_inv * g;
}

double finite_horizon_log_disutility(const process::SupJcirModel& model,
                                     const RiskQuery& query, double t, double horizon_time,
                                     std::span<const double> state,
                                     const numerics::QuadratureSpec& spec) {
    require_admissible(model, query);
    if (model.mix.is_gamma())
        throw ParameterOutOfRange(
            "finite_horizon_log_disutility: requires a discrete mixing measure");
    if (!(t <= horizon_time))
        throw ParameterOutOfRange("finite_horizon_log_disutility: t must be <= horizon");
    const auto& atoms = std::get<mixing::DiscreteMixing>(model.mix.variant()).atoms;
    if (state.size() != atoms.size())
        throw ParameterOutOfRange(
            "finite_horizon_log_disutility: state length must match the atom count");
    for (double x : state)
        if (!(x >= 0.0))
            throw ParameterOutOfRange("finite_horizon_log_disutility: state must be >= 0");

    const double curvature = riccati_curvature(model, query);
    const double ttm = horizon_time - t;
    auto rhs = [&](double s, double) {
        return stationary_integrand(model, query, curvature, s, spec);
    };

    double value = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        value += process::riccati_exponent(query.p, atoms[i].speed, curvature, ttm) * state[i];
        if (ttm > 0.0) {
            numerics::OdeSpec ode;
            ode.initial_step = 0.25;
            ode.error_control = std::max(1e-12, spec.rel_tol);
            const double w = atoms[i].speed * ttm;
            value += atoms[i].weight / atoms[i].speed * numerics::solve_ode(rhs, 0.0, 0.0, w, ode);
        }
    }
    return value;
}

Distortion worst_case_distortion(const process::SupJcirModel& model, const RiskQuery& query) {
    require_admissible(model, query);
    Distortion d;
    d.xi = query.lambda_diff * query.phi.d1_at_1() * model.sigma * model.sigma * query.p;
    if (query.lambda_jump == 0.0 || model.jump.is_none()) {
        d.multiplier = {};
        return d;
    }
    const OrliczFunction phi = query.phi;
    const double lam = query.lambda_jump;
    const double q = query.q;
    const double p = query.p;
    const double sgn = bound_sign(query.bound);
    d.multiplier.fn = [phi, lam, q, p, sgn](double z) {
        return q_exp(sgn * lam * (phi.value_of_exp(p * z) - 1.0), q);
    };
    return d;
}

DistortedModel distorted_model(const process::SupJcirModel& model, const RiskQuery& query,
                               int gamma_atoms) {
    const Distortion dist = worst_case_distortion(model, query);
    const double factor =
        query.bound == Bound::Upper ? 1.0 - dist.xi : 1.0 + dist.xi;
    if (query.bound == Bound::Upper && !(dist.xi < 1.0))
        throw DegenerateDistortion(
            "distorted_model: xi >= 1, the upper-bound distorted process loses mean reversion");

    DistortedModel out;
    out.xi = dist.xi;
    const double s2 = model.sigma * model.sigma;
    std::vector<mixing::Atom> atoms;
    if (const auto* g = std::get_if<mixing::GammaMixing>(&model.mix.variant())) {
        out.gamma_equivalent = DistortedGammaAcf{g->theta * factor, g->omega};
        atoms = std::get<mixing::DiscreteMixing>(
                    mixing::quantile_discretize(*g, gamma_atoms).variant())
                    .atoms;
    } else {
        atoms = std::get<mixing::DiscreteMixing>(model.mix.variant()).atoms;
    }
    out.components.reserve(atoms.size());
    for (const mixing::Atom& a : atoms) {
        process::JcirComponent c;
        c.drift_const = model.a * a.weight;
        c.reversion = a.speed * factor;
        c.diffusion_factor = s2 * a.speed;
        c.jump = model.jump;
        c.jump_weight = a.weight;
        c.multiplier = dist.multiplier;
        out.components.push_back(std::move(c));
    }
    return out;
}

double distorted_acf(const process::SupJcirModel& model, const RiskQuery& query, double h) {
    if (!(h >= 0.0)) throw ParameterOutOfRange("distorted_acf: h must be >= 0");
    const auto* g = std::get_if<mixing::GammaMixing>(&model.mix.variant());
    if (!g) throw ParameterOutOfRange("distorted_acf: requires Gamma mixing");
    const Distortion dist = worst_case_distortion(model, query);
    const double factor = query.bound == Bound::Upper ? 1.0 - dist.xi : 1.0 + dist.xi;
    if (query.bound == Bound::Upper && !(dist.xi < 1.0))
        throw DegenerateDistortion("distorted_acf: xi >= 1");
    return std::pow(1.0 + g->theta * factor * h, -(g->omega - 1.0));
}

MomentRatios distorted_moment_ratios(const process::SupJcirModel& model,
                                     const RiskQuery& query, int gamma_atoms,
                                     const numerics::QuadratureSpec& spec) {
    const DistortedModel dm = distorted_model(model, query, gamma_atoms);
    const double s2 = model.sigma * model.sigma;
    const double factor = query.bound == Bound::Upper ? 1.0 - dm.xi : 1.0 + dm.xi;

    double m1n = 0.0, m2n = 0.0, m1d = 0.0, m2d = 0.0;
    if (!model.jump.is_none()) {
        m1n = jumps::jump_moment(model.jump, 1, spec);
        m2n = jumps::jump_moment(model.jump, 2, spec);
        if (dm.components.front().multiplier.is_identity()) {
            m1d = m1n;
            m2d = m2n;
        } else {
            const auto& g = dm.components.front().multiplier;
            m1d = jumps::weighted_integral(model.jump, [&](double z) { return z * g(z); }, spec);
            m2d = jumps::weighted_integral(model.jump, [&](double z) { return z * z * g(z); },
                                           spec);
        }
    }

    // Per-component cumulants summed over the common atom set; the
    // R^(n) factor cancels in the ratios.
    double mean_n = 0.0, var_n = 0.0, mean_d = 0.0, var_d = 0.0;
    for (const process::JcirComponent& c : dm.components) {
        const double w = c.jump_weight;
        const double r_nominal = c.reversion / factor;
        mean_n += (model.a * w + w * m1n) / r_nominal;
        var_n += (0.5 * s2 * (model.a * w + w * m1n) + 0.5 * w * m2n) / r_nominal;
        mean_d += (model.a * w + w * m1d) / c.reversion;
        var_d += (0.5 * s2 / factor * (model.a * w + w * m1d) + 0.5 * w * m2d) / c.reversion;
    }
    return {mean_d / mean_n, var_d / var_n};
}

EntropyRates entropy_rates(const process::SupJcirModel& model, const RiskQuery& query,
                           std::span<const double> state,
                           const numerics::QuadratureSpec& spec) {
    require_admissible(model, query);
    const auto* d = std::get_if<mixing::DiscreteMixing>(&model.mix.variant());
    if (!d) throw ParameterOutOfRange("entropy_rates: requires a discrete mixing measure");
    if (state.size() != d->atoms.size())
        throw ParameterOutOfRange("entropy_rates: state length must match the atom count");

    EntropyRates rates{0.0, 0.0};
    const double tilt = query.lambda_diff * query.phi.d1_at_1() * model.sigma * query.p;
    for (std::size_t i = 0; i < d->atoms.size(); ++i) {
        if (!(state[i] >= 0.0)) throw ParameterOutOfRange("entropy_rates: state must be >= 0");
        const double phi_star_sq = tilt * tilt * d->atoms[i].speed * state[i];
        rates.diff_rate += 0.5 * phi_star_sq;
    }

    if (query.lambda_jump > 0.0 && !model.jump.is_none()) {
        const Distortion dist = worst_case_distortion(model, query);
        const double q = query.q;
        auto divergence = [&](double z) {
            const double g = dist.multiplier(z);
            if (q == 1.0) return g * std::log(g) - g + 1.0;
            return (1.0 - q - std::pow(g, q) + q * g) / (1.0 - q);
        };
        // weights sum to 1, so the per-atom Tsallis rates collapse to one integral
        rates.jump_rate = jumps::weighted_integral(model.jump, divergence, spec);
    }
    return rates;
}

RiskReport normalized_disutility(const process::SupJcirModel& model, const RiskQuery& query,
                                 const numerics::QuadratureSpec& spec) {
    require_admissible(model, query);
    RiskReport report;
    report.log_disutility = stationary_log_disutility(model, query, spec);
    RiskQuery baseline = query;
    baseline.lambda_diff = 0.0;
    baseline.lambda_jump = 0.0;
    report.baseline_log_disutility = stationary_log_disutility(model, baseline, spec);
    report.disutility = std::exp(report.log_disutility);
    report.baseline_disutility = std::exp(report.baseline_log_disutility);
    double u = std::exp(report.log_disutility - report.baseline_log_disutility);
    // tau >= tau0 (upper) / tau <= tau0 (lower) holds analytically; absorb
    // quadrature noise at the boundary.
    if (query.bound == Bound::Upper && u < 1.0 && u > 1.0 - 1e-9) u = 1.0;
    if (query.bound == Bound::Lower && u > 1.0 && u < 1.0 + 1e-9) u = 1.0;
    report.normalized_u = u;

    const Distortion dist = worst_case_distortion(model, query);
    report.xi = dist.xi;
    report.distortion_degenerate = query.bound == Bound::Upper && !(dist.xi < 1.0);
    if (!report.distortion_degenerate) {
        const double factor = query.bound == Bound::Upper ? 1.0 - dist.xi : 1.0 + dist.xi;
        if (const auto* g = std::get_if<mixing::GammaMixing>(&model.mix.variant())) {
            report.acf_params = DistortedGammaAcf{g->theta * factor, g->omega};
        } else {
            const auto& atoms = std::get<mixing::DiscreteMixing>(model.mix.variant()).atoms;
            std::vector<mixing::Atom> distorted;
            distorted.reserve(atoms.size());
            for (const mixing::Atom& a : atoms) distorted.push_back({a.weight, a.speed * factor});
            report.acf_atoms = std::move(distorted);
        }
        const MomentRatios ratios = distorted_moment_ratios(model, query, 1000, spec);
        report.normalized_a = ratios.normalized_a;
        report.normalized_v = ratios.normalized_v;
    }
    return report;
}

} // namespace supjcir::orlicz
