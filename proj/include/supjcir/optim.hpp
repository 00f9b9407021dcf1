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

#ifndef SUPJCIR_OPTIM_HPP
#define SUPJCIR_OPTIM_HPP

#include <functional>
#include <span>
#include <vector>

namespace supjcir::optim {

struct NelderMeadResult {
    std::vector<double> x;
    double value;
    long iterations;
};

//! Deterministic downhill simplex. The initial simplex is x0 plus scale
//! along each coordinate; the search restarts twice from the incumbent to
//! escape simplex collapse.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> x0, double scale, long max_iter = 4000);

} // namespace supjcir::optim

#endif
