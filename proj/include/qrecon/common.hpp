// Copyright 2026 The qrecon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Shared vocabulary for qrecon: Eigen aliases, angle helpers, the error
 * hierarchy and the default tolerances used across modules.
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qrecon {

using complex = std::complex<double>;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Default tolerances. Every operation that uses one also accepts an override.
namespace tol {
inline constexpr double normalization = 1e-12;
inline constexpr double polarity = 1e-12;
inline constexpr double orthogonality = 1e-10;
inline constexpr double block_fit = 1e-10;
inline constexpr double witness = 1e-9;
inline constexpr double basis = 1e-10;
inline constexpr double turning_point = 1e-10;
} // namespace tol

/// Base of all errors thrown by qrecon.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operands of incompatible dimension.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// A value violates a type invariant (normalization, sign, unitarity, ...).
class InvariantError : public Error {
  public:
    using Error::Error;
};

/// The operation is undefined at the given point (metric singularity,
/// infinite evidence, degenerate embedding function, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

inline void require_same_size(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" +
                             std::to_string(a) + " vs " + std::to_string(b) +
                             ")");
    }
}

/// Reduces an angle to [0, 2pi).
inline double wrap_angle(double phi) {
    double r = std::fmod(phi, two_pi);
    if (r < 0.0) {
        r += two_pi;
    }
    // fmod of a tiny negative number can round up to exactly 2pi
    return r >= two_pi ? 0.0 : r;
}

/// Smallest absolute difference between two angles modulo 2pi, in [0, pi].
inline double angle_distance(double a, double b) {
    const double d = wrap_angle(a - b);
    return d > pi ? two_pi - d : d;
}

} // namespace qrecon
