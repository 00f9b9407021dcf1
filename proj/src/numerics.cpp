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

#include "supjcir/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "supjcir/kernels.hpp"

namespace supjcir::numerics {

namespace {

struct Panel {
    double lo, width;
    double fq1, fc, fq3; // f at the quarter, center, and three-quarter nodes
    double estimate;     // two-panel midpoint value
    double err;          // Richardson error estimate
    int depth;

    bool operator<(const Panel& other) const { return err < other.err; }
};

Panel make_panel(const std::function<double(double)>& f, double lo, double width, double fc,
                 int depth) {
    Panel p;
    p.lo = lo;
    p.width = width;
    p.fc = fc;
    p.fq1 = f(lo + 0.25 * width);
    p.fq3 = f(lo + 0.75 * width);
    const double m1 = width * fc;
    p.estimate = 0.5 * width * (p.fq1 + p.fq3);
    p.err = std::abs(p.estimate - m1) / 3.0;
    p.depth = depth;
    if (!std::isfinite(m1) || !std::isfinite(p.estimate))
        throw NonConvergent("quadrature: integrand not finite");
    return p;
}

// Globally adaptive midpoint on [lo, lo+width]: the panel with the largest
// Richardson error estimate is bisected until the summed estimate meets tol.
// The left endpoint is never evaluated, so integrable singularities at 0
// (O(z^-alpha), alpha < 1) refine geometrically instead of failing.
double adaptive_midpoint(const std::function<double(double)>& f, double lo, double width,
                         double tol) {
    std::priority_queue<Panel> heap;
    double total = 0.0;
    double err_sum = 0.0;
    const int initial = 8;
    for (int j = 0; j < initial; ++j) {
        const double plo = lo + width * static_cast<double>(j) / initial;
        const double pw = width / initial;
        Panel p = make_panel(f, plo, pw, f(plo + 0.5 * pw), 0);
        total += p.estimate;
        err_sum += p.err;
        heap.push(p);
    }
    long splits = 0;
    while (err_sum > tol) {
        Panel p = heap.top();
        heap.pop();
        if (p.depth >= 100 || ++splits > 200000)
            throw NonConvergent("quadrature: panel refinement cap reached");
        total -= p.estimate;
        err_sum -= p.err;
        Panel left = make_panel(f, p.lo, 0.5 * p.width, p.fq1, p.depth + 1);
        Panel right = make_panel(f, p.lo + 0.5 * p.width, 0.5 * p.width, p.fq3, p.depth + 1);
        total += left.estimate + right.estimate;
        err_sum += left.err + right.err;
        heap.push(left);
        heap.push(right);
    }
    return total;
}

// Composite midpoint on [lo, hi], panel count tripled (old nodes stay on the
// grid) until the Richardson estimate |I_3n - I_n| / 8 meets tol. The node
// values are buffered and reduced with the SIMD sum kernel.
double midpoint_bracket(const std::function<double(double)>& f, double lo, double hi,
                        double tol, std::vector<double>& buf) {
    const double width = hi - lo;
    long n = 1;
    double prev = width * f(lo + 0.5 * width);
    if (!std::isfinite(prev)) throw NonConvergent("quadrature: integrand not finite");
    for (int level = 0; level < 14; ++level) {
        n *= 3;
        const double h = width / static_cast<double>(n);
        buf.resize(static_cast<std::size_t>(n));
        for (long j = 0; j < n; ++j)
            buf[static_cast<std::size_t>(j)] = f(lo + (static_cast<double>(j) + 0.5) * h);
        const double cur = h * kernels::sum(buf);
        if (!std::isfinite(cur)) throw NonConvergent("quadrature: integrand not finite");
        if (std::abs(cur - prev) <= 8.0 * tol) return cur + (cur - prev) / 8.0;
        prev = cur;
    }
    throw NonConvergent("quadrature: panel refinement cap reached");
}

} // namespace

double integrate_semi_infinite(const std::function<double(double)>& f,
                               const QuadratureSpec& spec) {
    spec.validate();
    std::vector<double> buf;
    const double base = spec.initial_truncation;

    // Coarse seed for the relative-tolerance scale of the head region.
    double seed = 0.0;
    {
        const double h = base / 64.0;
        buf.resize(64);
        for (int j = 0; j < 64; ++j) buf[j] = f((j + 0.5) * h);
        seed = h * kernels::sum(buf);
        if (!std::isfinite(seed)) throw NonConvergent("quadrature: integrand not finite");
    }

    const double head_tol = std::max(spec.abs_tol / 4.0, spec.rel_tol * std::abs(seed) / 4.0);
    double total = adaptive_midpoint(f, 0.0, base, head_tol);

    // Tail: doubling brackets [base*2^k, base*2^(k+1)] until two consecutive
    // contributions fall below the absolute budget.
    double lo = base;
    int quiet = 0;
    for (int k = 0;; ++k) {
        if (k > 60) throw NonConvergent("quadrature: tail doubling cap reached");
        const double hi = 2.0 * lo;
        const double btol = std::max(spec.abs_tol / 16.0, spec.rel_tol * std::abs(total) / 8.0);
        const double c = midpoint_bracket(f, lo, hi, btol, buf);
        total += c;
        lo = hi;
        if (std::abs(c) < spec.abs_tol / 8.0) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
    }

    return total;
}

double solve_ode(const std::function<double(double, double)>& rhs, double y0, double t0,
                 double t1, const OdeSpec& spec) {
    spec.validate();
    if (t1 == t0) return y0;
    if (t1 < t0) throw ParameterOutOfRange("solve_ode: t1 must be >= t0");

    auto march = [&](std::int64_t steps) {
        const double h = (t1 - t0) / static_cast<double>(steps);
        double y = y0;
        double t = t0;
        for (std::int64_t i = 0; i < steps; ++i) {
            const double k1 = rhs(t, y);
            const double k2 = rhs(t + 0.5 * h, y + 0.5 * h * k1);
            const double k3 = rhs(t + 0.5 * h, y + 0.5 * h * k2);
            const double k4 = rhs(t + h, y + h * k3);
            y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            t = t0 + (t1 - t0) * static_cast<double>(i + 1) / static_cast<double>(steps);
        }
        if (!std::isfinite(y)) throw NonConvergent("solve_ode: trajectory not finite");
        return y;
    };

    std::int64_t n = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::ceil((t1 - t0) / spec.initial_step)));
    if (n > spec.max_steps) throw NonConvergent("solve_ode: max_steps exceeded");
    double prev = march(n);
    for (;;) {
        if (n > spec.max_steps / 2) throw NonConvergent("solve_ode: max_steps exceeded");
        n *= 2;
        const double cur = march(n);
        if (std::abs(cur - prev) <= spec.error_control * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
}

} // namespace supjcir::numerics
