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
 * Stationary-state evolution (p_i; chi_i) -> (p_i; chi_i - E dt / alpha) and
 * the discretized Hamilton-Jacobi ensemble (P(x, t), S(x, t)) that anchors it:
 *
 *     dP/dt + d/dx (P S_x / m) = 0,     dS/dt + S_x^2 / 2m + V = 0.
 *
 * Units: E energy, alpha and S action, m mass, h length, dt time. All plain
 * doubles.
 */
#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrecon/classifier.hpp"
#include "qrecon/common.hpp"
#include "qrecon/qspace.hpp"
#include "qrecon/simplex.hpp"

namespace qrecon {

/// Definite-energy evolution parameters.
struct StationaryEvolution {
    double energy = 0.0;
    double alpha = 1.0;

    StationaryEvolution(double e, double action) : energy(e), alpha(action) {
        if (alpha == 0.0 || !std::isfinite(alpha) || !std::isfinite(energy)) {
            throw InvariantError("StationaryEvolution: alpha must be finite "
                                 "and nonzero");
        }
    }

    /// Change of phi = a chi + b over dt.
    [[nodiscard]] double phase_shift(double a, double dt) const {
        return -a * energy * dt / alpha;
    }
};

/// Shifts every present phase by -a E dt / alpha; probabilities untouched.
inline PhaseRep evolve_stationary(const PhaseRep &rep,
                                  const StationaryEvolution &ev, double dt) {
    const double shift = ev.phase_shift(rep.a(), dt);
    std::vector<std::optional<double>> phi = rep.phases();
    for (auto &x : phi) {
        if (x) {
            *x += shift;
        }
    }
    return PhaseRep(rep.probs(), std::move(phi), rep.a(), rep.b());
}

/// The same evolution as a map on complex states: e^{-i a E dt / alpha} I.
inline GaugeMap stationary_gauge_map(Eigen::Index n, double a,
                                     const StationaryEvolution &ev, double dt) {
    return GaugeMap::unitary(std::polar(1.0, ev.phase_shift(a, dt)) *
                             ComplexMatrix::Identity(n, n));
}

/// Discretized Hamilton-Jacobi ensemble on x_l = x0 + l h.
struct HJGridState {
    double h = 1.0;
    double x0 = 0.0;
    double mass = 1.0;
    ProbVec p;             // probability per site
    std::vector<double> s; // action per site
    std::vector<double> v; // potential per site; empty means V = 0

    void validate() const {
        if (!(h > 0.0) || !(mass > 0.0)) {
            throw InvariantError("HJGridState: spacing and mass must be "
                                 "positive");
        }
        require_same_size(p.size(), s.size(), "HJGridState");
        if (!v.empty()) {
            require_same_size(p.size(), v.size(), "HJGridState");
        }
    }

    [[nodiscard]] std::size_t sites() const { return p.size(); }
    [[nodiscard]] double x(std::size_t l) const {
        return x0 + static_cast<double>(l) * h;
    }
    [[nodiscard]] double density(std::size_t l) const { return p[l] / h; }
    [[nodiscard]] double potential(std::size_t l) const {
        return v.empty() ? 0.0 : v[l];
    }
};

using HJProvider = std::function<HJGridState(double)>;

struct HJResidual {
    double continuity = 0.0;
    double hamilton_jacobi = 0.0;
};

/**
 * Max-norm residuals of both equations at time t over interior sites, using
 * central differences in t (t +/- dt) and x. The flux divergence uses the
 * compact form [rho_{l+1/2} (S_{l+1} - S_l) - rho_{l-1/2} (S_l - S_{l-1})] / m h^2
 * with midpoint densities, so only nearest neighbours enter.
 */
inline HJResidual hj_residual(const HJProvider &state_at, double t, double dt) {
    if (!(dt > 0.0)) {
        throw DomainError("hj_residual: dt must be positive");
    }
    const HJGridState prev = state_at(t - dt);
    const HJGridState now = state_at(t);
    const HJGridState next = state_at(t + dt);
    for (const HJGridState *g : {&prev, &now, &next}) {
        g->validate();
    }
    if (prev.sites() != now.sites() || next.sites() != now.sites()) {
        throw DimensionError("hj_residual: grids differ between time slices");
    }
    if (now.sites() < 5) {
        throw DomainError("hj_residual: grid needs at least 3 interior points");
    }
    const double h = now.h;
    const double m = now.mass;
    HJResidual r;
    for (std::size_t l = 1; l + 1 < now.sites(); ++l) {
        const double drho = (next.density(l) - prev.density(l)) / (2.0 * dt);
        const double rho_up = 0.5 * (now.density(l) + now.density(l + 1));
        const double rho_dn = 0.5 * (now.density(l - 1) + now.density(l));
        const double flux = (rho_up * (now.s[l + 1] - now.s[l]) -
                             rho_dn * (now.s[l] - now.s[l - 1])) /
                            (m * h * h);
        r.continuity = std::max(r.continuity, std::abs(drho + flux));

        const double ds_dt = (next.s[l] - prev.s[l]) / (2.0 * dt);
        const double sx = (now.s[l + 1] - now.s[l - 1]) / (2.0 * h);
        r.hamilton_jacobi = std::max(
            r.hamilton_jacobi, std::abs(ds_dt + sx * sx / (2.0 * m) + now.potential(l)));
    }
    return r;
}

/// (P, S) -> (P, S - E dt) for a state with time-independent observables.
inline HJGridState hj_stationary_step(HJGridState state, double energy,
                                      double dt) {
    for (double &s : state.s) {
        s -= energy * dt;
    }
    return state;
}

/// Site layout shared by the analytic families.
struct HJGrid {
    std::size_t sites = 64;
    double h = 0.1;
    double x0 = -3.2;
    double mass = 1.0;
};

/**
 * Analytic solutions of the continuum equations sampled on a grid. Known
 * names:
 *
 *  - "free-particle": V = 0, an ensemble released from the origin at
 *    tau = t + 1, S = m x^2 / 2 tau, P Gaussian of width sigma tau.
 *  - "plane-wave": V = 0, S = p x - p^2 t / 2m, P uniform.
 *  - "stationary-wave": S = W(x) - E t with W' = p0 + eps sin(k x),
 *    V = E - W'^2 / 2m, P proportional to 1 / W'.
 */
inline HJProvider hj_family(std::string_view name, const HJGrid &grid) {
    const auto fill = [grid](auto density, auto action,
                             auto potential) -> HJProvider {
        return [=](double t) {
            std::vector<double> w(grid.sites), s(grid.sites), v(grid.sites);
            for (std::size_t l = 0; l < grid.sites; ++l) {
                const double x = grid.x0 + static_cast<double>(l) * grid.h;
                w[l] = density(x, t);
                s[l] = action(x, t);
                v[l] = potential(x, t);
            }
            // site probabilities: density * h, renormalized on the window
            HJGridState st{grid.h, grid.x0, grid.mass,
                           ProbVec::renormalized(std::move(w)), std::move(s),
                           std::move(v)};
            return st;
        };
    };
    const double m = grid.mass;
    if (name == "free-particle") {
        constexpr double sigma = 0.3;
        return fill(
            [](double x, double t) {
                const double tau = t + 1.0;
                const double w = sigma * tau;
                return std::exp(-0.5 * x * x / (w * w)) / w;
            },
            [m](double x, double t) { return m * x * x / (2.0 * (t + 1.0)); },
            [](double, double) { return 0.0; });
    }
    if (name == "plane-wave") {
        constexpr double p = 0.7;
        return fill([](double, double) { return 1.0; },
                    [m](double x, double t) { return p * x - p * p * t / (2.0 * m); },
                    [](double, double) { return 0.0; });
    }
    if (name == "stationary-wave") {
        constexpr double p0 = 1.5, eps = 0.4, k = 1.3, energy = 2.0;
        return fill(
            [](double x, double) { return 1.0 / (p0 + eps * std::sin(k * x)); },
            [](double x, double t) {
                return p0 * x - eps / k * std::cos(k * x) - energy * t;
            },
            [m](double x, double) {
                const double g = p0 + eps * std::sin(k * x);
                return energy - g * g / (2.0 * m);
            });
    }
    throw DomainError("hj_family: unknown family '" + std::string(name) + "'");
}

} // namespace qrecon
