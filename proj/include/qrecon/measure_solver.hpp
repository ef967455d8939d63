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
 * Embedding functions F = f^2 for the outcome amplitudes, the measure they
 * induce on chi, and a solver for the invariance ODE
 *
 *     dF/dchi = +/- 2a sqrt(F (1 - F)),
 *
 * whose solutions are F(chi) = cos^2(a chi + b).
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "qrecon/common.hpp"

namespace qrecon {

/// F on [lo, hi] together with its derivative.
struct EmbeddingFunction {
    std::function<double(double)> value;
    std::function<double(double)> derivative;
    double lo = 0.0;
    double hi = 0.0;

    [[nodiscard]] bool interior(double chi) const {
        return chi > lo && chi < hi;
    }

    /**
     * Checks 0 <= F <= 1 on the grid and that the supplied derivative agrees
     * with a central difference (step `h`) to `tolerance` at interior points.
     */
    [[nodiscard]] bool consistent(std::span<const double> grid,
                                  double tolerance = 1e-6,
                                  double h = 1e-5) const {
        for (double chi : grid) {
            const double f = value(chi);
            if (!(f >= 0.0 && f <= 1.0)) {
                return false;
            }
            if (chi - h > lo && chi + h < hi) {
                const double fd = (value(chi + h) - value(chi - h)) / (2.0 * h);
                if (std::abs(fd - derivative(chi)) > tolerance) {
                    return false;
                }
            }
        }
        return true;
    }
};

/// F(chi) = cos^2(a chi + b) on [lo, hi].
inline EmbeddingFunction cos2_embedding(double a, double b, double lo,
                                        double hi) {
    return {[a, b](double x) {
                const double c = std::cos(a * x + b);
                return c * c;
            },
            [a, b](double x) { return -a * std::sin(2.0 * (a * x + b)); }, lo,
            hi};
}

/// The canonical amplitude pair f = cos(a chi + b), f~ = sin(a chi + b).
struct AmplitudePair {
    double a = 1.0;
    double b = 0.0;
    [[nodiscard]] double f(double chi) const { return std::cos(a * chi + b); }
    [[nodiscard]] double f_tilde(double chi) const {
        return std::sin(a * chi + b);
    }
};

/**
 * Unnormalized marginal density |F'| / sqrt(F (1 - F)) over chi.
 *
 * The overall constant is dropped. Throws DomainError outside the open
 * domain or where F touches 0 or 1.
 */
inline double induced_measure_density(const EmbeddingFunction &fn,
                                      double chi) {
    if (!fn.interior(chi)) {
        throw DomainError("induced_measure_density: point outside the open "
                          "domain");
    }
    const double f = fn.value(chi);
    const double w = f * (1.0 - f);
    if (!(w > 0.0)) {
        throw DomainError("induced_measure_density: F reaches 0 or 1 (measure "
                          "is singular)");
    }
    return std::abs(fn.derivative(chi)) / std::sqrt(w);
}

struct DensityRange {
    double min = 0.0;
    double max = 0.0;

    /// (max - min) / max
    [[nodiscard]] double relative_variation() const {
        return max > 0.0 ? (max - min) / max : 0.0;
    }
};

inline DensityRange induced_density_range(const EmbeddingFunction &fn,
                                          std::span<const double> grid) {
    if (grid.empty()) {
        throw DomainError("induced_density_range: empty grid");
    }
    DensityRange r{std::numeric_limits<double>::infinity(),
                   -std::numeric_limits<double>::infinity()};
    for (double chi : grid) {
        const double d = induced_measure_density(fn, chi);
        r.min = std::min(r.min, d);
        r.max = std::max(r.max, d);
    }
    return r;
}

/**
 * True iff the induced density varies by less than `tolerance` (max - min)
 * over the grid.
 *
 * A density that vanishes somewhere means F is locally constant, which no
 * admissible embedding is; that throws DomainError rather than reporting a
 * trivially flat density.
 */
inline bool is_translation_invariant(const EmbeddingFunction &fn,
                                     std::span<const double> grid,
                                     double tolerance) {
    const DensityRange r = induced_density_range(fn, grid);
    if (!(r.min > 0.0)) {
        throw DomainError("is_translation_invariant: F' vanishes, F is not an "
                          "admissible (non-constant) embedding");
    }
    return r.max - r.min < tolerance;
}

struct OdeOptions {
    double step = 1e-4;
    /// Sign of dF/dchi at chi0; defaults to -sign(a).
    std::optional<int> branch;
    /// Inside min(F, 1-F) < turning_band the regular second-order form is
    /// stepped instead of the square-root form.
    double turning_band = 1e-3;
};

/// The offset b of the closed-form solution through (chi0, F0) on the
/// branch with dF/dchi sign `branch`.
inline double closed_form_offset(double a, double f0, double chi0,
                                 int branch) {
    const double theta = std::acos(std::sqrt(std::clamp(f0, 0.0, 1.0)));
    // d/dchi cos^2(a chi + b) = -a sin(2(a chi + b)); theta in [0, pi/2]
    // gives sign -sign(a), and -theta gives the opposite branch
    const int natural = a > 0.0 ? -1 : 1;
    return (branch == natural ? theta : -theta) - a * chi0;
}

namespace detail {

struct OdePoint {
    double f = 0.0;
    int branch = -1;
};

inline double ode_speed(double a, double f) {
    return 2.0 * std::abs(a) * std::sqrt(std::max(f * (1.0 - f), 0.0));
}

// Advances (F, branch) by a signed step `dx`.
inline OdePoint ode_step(double a, OdePoint p, double dx, double band) {
    if (std::min(p.f, 1.0 - p.f) > band) {
        const auto rhs = [&](double f) { return p.branch * ode_speed(a, f); };
        const double k1 = rhs(p.f);
        const double k2 = rhs(p.f + 0.5 * dx * k1);
        const double k3 = rhs(p.f + 0.5 * dx * k2);
        const double k4 = rhs(p.f + dx * k3);
        p.f = std::clamp(p.f + dx / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4), 0.0,
                         1.0);
        return p;
    }
    // Near a turning point: F'' = 2a^2 (1 - 2F) with F' taken from the branch.
    const double a2 = 2.0 * a * a;
    const auto acc = [&](double f) { return a2 * (1.0 - 2.0 * f); };
    const double f0 = p.f;
    const double g0 = p.branch * ode_speed(a, f0);
    const double kf1 = g0, kg1 = acc(f0);
    const double kf2 = g0 + 0.5 * dx * kg1, kg2 = acc(f0 + 0.5 * dx * kf1);
    const double kf3 = g0 + 0.5 * dx * kg2, kg3 = acc(f0 + 0.5 * dx * kf2);
    const double kf4 = g0 + dx * kg3, kg4 = acc(f0 + dx * kf3);
    const double f1 = f0 + dx / 6.0 * (kf1 + 2.0 * kf2 + 2.0 * kf3 + kf4);
    const double g1 = g0 + dx / 6.0 * (kg1 + 2.0 * kg2 + 2.0 * kg3 + kg4);
    p.f = std::clamp(f1, 0.0, 1.0);
    if (g1 != 0.0) {
        p.branch = g1 > 0.0 ? 1 : -1;
    }
    return p;
}

} // namespace detail

/**
 * Integrates dF/dchi = branch * 2|a| sqrt(F (1 - F)) from (chi0, F0) with
 * classical RK4 and returns F at every grid point. The branch flips at the
 * turning points F in {0, 1}, so the result follows cos^2(a chi + b) through
 * whole periods. The grid must be ascending; points on either side of chi0
 * are reached by integrating in that direction.
 */
inline std::vector<double> solve_F_ode(double a, double f0, double chi0,
                                       std::span<const double> grid,
                                       const OdeOptions &opts = {}) {
    if (a == 0.0 || !std::isfinite(a)) {
        throw DomainError("solve_F_ode: a must be finite and nonzero");
    }
    if (!(f0 >= 0.0 && f0 <= 1.0)) {
        throw DomainError("solve_F_ode: F0 outside [0, 1]");
    }
    if (!std::is_sorted(grid.begin(), grid.end())) {
        throw DomainError("solve_F_ode: grid must be ascending");
    }
    // a single step may not jump over the turning band
    const double h = std::min(opts.step, opts.turning_band / (2.0 * std::abs(a)));
    if (!(h > std::numeric_limits<double>::epsilon() * 16.0) ||
        !std::isfinite(h)) {
        throw DomainError("solve_F_ode: step size underflow");
    }
    const int start_branch = opts.branch.value_or(a > 0.0 ? -1 : 1);
    if (start_branch != 1 && start_branch != -1) {
        throw DomainError("solve_F_ode: branch must be +1 or -1");
    }

    std::vector<double> out(grid.size());
    const auto split = static_cast<std::size_t>(
        std::lower_bound(grid.begin(), grid.end(), chi0) - grid.begin());

    const auto march = [&](std::size_t idx, detail::OdePoint &p, double &x) {
        const double target = grid[idx];
        while (std::abs(target - x) > 0.0) {
            const double remaining = target - x;
            const double dx =
                std::abs(remaining) <= h ? remaining : std::copysign(h, remaining);
            p = detail::ode_step(a, p, dx, opts.turning_band);
            x = std::abs(remaining) <= h ? target : x + dx;
        }
        out[idx] = p.f;
    };

    detail::OdePoint fwd{f0, start_branch};
    double x = chi0;
    for (std::size_t i = split; i < grid.size(); ++i) {
        march(i, fwd, x);
    }
    detail::OdePoint bwd{f0, start_branch};
    x = chi0;
    for (std::size_t i = split; i-- > 0;) {
        march(i, bwd, x);
    }
    return out;
}

} // namespace qrecon
