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

#ifndef SUPJCIR_ERRORS_HPP
#define SUPJCIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace supjcir {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

//! A parameter violates a mathematical precondition of the operation.
class ParameterOutOfRange : public Error {
public:
    using Error::Error;
};

//! Quadrature or ODE stepping exhausted its refinement budget.
class NonConvergent : public Error {
public:
    using Error::Error;
};

//! An integral is provably (or by precheck) infinite.
class Divergent : public Error {
public:
    using Error::Error;
};

//! The q-exponential argument left its domain.
class DomainError : public Error {
public:
    using Error::Error;
};

//! Moment of a jump measure that has no finite value (k = 0, infinite activity).
class UnsupportedMoment : public Error {
public:
    using Error::Error;
};

//! Upper-bound distortion with xi >= 1: the distorted process loses mean reversion.
class DegenerateDistortion : public Error {
public:
    using Error::Error;
};

//! A constant series where a variance-normalized statistic is requested.
class ZeroVariance : public Error {
public:
    using Error::Error;
};

//! Empirical statistic used as a denominator is zero.
class DegenerateEmpirical : public Error {
public:
    using Error::Error;
};

//! Every optimizer start ended above the residual ceiling.
class FitFailed : public Error {
public:
    using Error::Error;
};

//! Malformed input file (CSV or model file).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace supjcir

#endif
