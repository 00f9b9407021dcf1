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

#include "supjcir/optim.hpp"

#include <algorithm>
#include <cmath>

namespace supjcir::optim {

namespace {

struct Vertex {
    std::vector<double> x;
    double f;
};

NelderMeadResult run_once(const std::function<double(std::span<const double>)>& f,
                          std::span<const double> x0, double scale, long max_iter) {
    const std::size_t n = x0.size();
    std::vector<Vertex> simplex(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        simplex[i].x.assign(x0.begin(), x0.end());
        if (i > 0) simplex[i].x[i - 1] += scale;
        simplex[i].f = f(simplex[i].x);
    }

    auto order = [&] {
        std::stable_sort(simplex.begin(), simplex.end(),
                         [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    };
    order();

    std::vector<double> centroid(n), trial(n);
    long iter = 0;
    for (; iter < max_iter; ++iter) {
        const double fbest = simplex.front().f;
        const double fworst = simplex.back().f;
        double xspread = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            xspread = std::max(xspread,
                               std::abs(simplex.back().x[j] - simplex.front().x[j]));
        if (std::abs(fworst - fbest) <= 1e-14 * (1.0 + std::abs(fbest)) && xspread <= 1e-12)
            break;

        for (std::size_t j = 0; j < n; ++j) {
            centroid[j] = 0.0;
            for (std::size_t i = 0; i < n; ++i) centroid[j] += simplex[i].x[j];
            centroid[j] /= static_cast<double>(n);
        }

        auto mix = [&](double coef) {
            for (std::size_t j = 0; j < n; ++j)
                trial[j] = centroid[j] + coef * (simplex.back().x[j] - centroid[j]);
            return f(trial);
        };

        const double fr = mix(-1.0); // reflection
        if (fr < simplex.front().f) {
            const double fe = mix(-2.0); // expansion
            if (fe < fr) {
                simplex.back().x = trial; // trial holds the expansion point
                simplex.back().f = fe;
            } else {
                for (std::size_t j = 0; j < n; ++j)
                    trial[j] = centroid[j] - (simplex.back().x[j] - centroid[j]);
                simplex.back().x = trial;
                simplex.back().f = fr;
            }
        } else if (fr < simplex[n - 1].f) {
            for (std::size_t j = 0; j < n; ++j)
                trial[j] = centroid[j] - (simplex.back().x[j] - centroid[j]);
            simplex.back().x = trial;
            simplex.back().f = fr;
        } else {
            const double fc = mix(fr < simplex.back().f ? -0.5 : 0.5); // contraction
            if (fc < std::min(fr, simplex.back().f)) {
                simplex.back().x = trial;
                simplex.back().f = fc;
            } else {
                // shrink towards the best vertex
                for (std::size_t i = 1; i <= n; ++i) {
                    for (std::size_t j = 0; j < n; ++j)
                        simplex[i].x[j] =
                            simplex[0].x[j] + 0.5 * (simplex[i].x[j] - simplex[0].x[j]);
                    simplex[i].f = f(simplex[i].x);
                }
            }
        }
        order();
    }
    return {simplex.front().x, simplex.front().f, iter};
}

} // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> x0, double scale, long max_iter) {
    NelderMeadResult best = run_once(f, x0, scale, max_iter);
    for (int restart = 0; restart < 2; ++restart) {
        NelderMeadResult next = run_once(f, best.x, scale * 0.1, max_iter);
        next.iterations += best.iterations;
        if (next.value < best.value) best = next;
        else { best.iterations = next.iterations; break; }
    }
    return best;
}

} // namespace supjcir::optim
