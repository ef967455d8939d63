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
 * Composite systems. Two subsystems with N and N' results compose into one
 * with N N' results, indexed l = N' i + j (0-based), with p''_l = p_i p'_j and
 * chi''_l = chi_i + chi'_j; in complex form this is the tensor product.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qrecon/common.hpp"
#include "qrecon/dynamics.hpp"
#include "qrecon/measurement.hpp"
#include "qrecon/qspace.hpp"

namespace qrecon {

/// (i, j) <-> l = N' i + j.
class CompositeIndex {
  public:
    CompositeIndex(std::size_t first, std::size_t second)
        : n_(first), n_prime_(second) {
        if (first == 0 || second == 0) {
            throw DimensionError("CompositeIndex: empty subsystem");
        }
    }

    [[nodiscard]] std::size_t first() const { return n_; }
    [[nodiscard]] std::size_t second() const { return n_prime_; }
    [[nodiscard]] std::size_t size() const { return n_ * n_prime_; }

    [[nodiscard]] std::size_t combine(std::size_t i, std::size_t j) const {
        if (i >= n_ || j >= n_prime_) {
            throw DimensionError("CompositeIndex: index out of range");
        }
        return n_prime_ * i + j;
    }

    [[nodiscard]] std::pair<std::size_t, std::size_t> split(std::size_t l) const {
        if (l >= size()) {
            throw DimensionError("CompositeIndex: index out of range");
        }
        return {l / n_prime_, l % n_prime_};
    }

  private:
    std::size_t n_;
    std::size_t n_prime_;
};

/**
 * p''_l = p_i p'_j, phi''_l = phi_i + phi'_j (mod 2pi).
 *
 * Entries with p''_l = 0 carry no phase. The constants a, b of the first
 * factor are kept.
 */
inline PhaseRep compose_phase_reps(const PhaseRep &s1, const PhaseRep &s2) {
    const CompositeIndex idx(s1.size(), s2.size());
    std::vector<double> p(idx.size());
    std::vector<std::optional<double>> phi(idx.size());
    for (std::size_t i = 0; i < s1.size(); ++i) {
        for (std::size_t j = 0; j < s2.size(); ++j) {
            const std::size_t l = idx.combine(i, j);
            p[l] = s1.probs()[i] * s2.probs()[j];
            if (p[l] > 0.0) {
                phi[l] = *s1.phase(i) + *s2.phase(j);
            }
        }
    }
    return PhaseRep(ProbVec::renormalized(std::move(p)), std::move(phi), s1.a(),
                    s1.b());
}

/// v''_l = v1_i v2_j.
inline PureState tensor(const PureState &v1, const PureState &v2) {
    const CompositeIndex idx(v1.size(), v2.size());
    ComplexVector out(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < v1.size(); ++i) {
        for (std::size_t j = 0; j < v2.size(); ++j) {
            out(static_cast<Eigen::Index>(idx.combine(i, j))) = v1[i] * v2[j];
        }
    }
    return PureState(std::move(out), 1e-11);
}

/// Left-associated v1 (x) v2 (x) ... (x) vd.
inline PureState fold(std::span<const PureState> states) {
    if (states.empty()) {
        throw DimensionError("fold: empty list of states");
    }
    PureState acc = states.front();
    for (std::size_t k = 1; k < states.size(); ++k) {
        acc = tensor(acc, states[k]);
    }
    return acc;
}

/// Kronecker product with the same index convention as `tensor`.
inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

enum class SubsystemPosition { first, second };

/**
 * A (x) I on the composite (or I (x) A for position `second`), as the
 * degenerate observable with basis vectors v_i (x) e_j and values a_i.
 */
inline Observable subsystem_observable(const Observable &obs,
                                       std::size_t other_dim,
                                       SubsystemPosition position) {
    const auto m = static_cast<Eigen::Index>(other_dim);
    if (m == 0) {
        throw DimensionError("subsystem_observable: empty partner system");
    }
    const ComplexMatrix id = ComplexMatrix::Identity(m, m);
    const bool first = position == SubsystemPosition::first;
    ComplexMatrix basis = first ? kron(obs.basis().matrix(), id)
                                : kron(id, obs.basis().matrix());
    const std::size_t n = static_cast<std::size_t>(obs.size());
    std::vector<double> values(n * other_dim);
    for (std::size_t l = 0; l < values.size(); ++l) {
        values[l] = first ? obs.values()[l / other_dim] : obs.values()[l % n];
    }
    return Observable(MeasurementBasis(std::move(basis)), std::move(values));
}

/**
 * Evolves two full-support subsystems with energies E1, E2 and composes,
 * versus composing first and evolving with E1 + E2. Returns the largest
 * phase discrepancy (mod 2pi) over composite entries.
 */
inline double energy_additivity_check(const PhaseRep &s1, const PhaseRep &s2,
                                      double e1, double e2, double dt,
                                      double alpha) {
    for (const PhaseRep *s : {&s1, &s2}) {
        for (std::size_t i = 0; i < s->size(); ++i) {
            if (!(s->probs()[i] > 0.0)) {
                throw DomainError("energy_additivity_check: states need full "
                                  "support");
            }
        }
    }
    const PhaseRep separate =
        compose_phase_reps(evolve_stationary(s1, StationaryEvolution(e1, alpha), dt),
                           evolve_stationary(s2, StationaryEvolution(e2, alpha), dt));
    const PhaseRep joint = evolve_stationary(compose_phase_reps(s1, s2),
                                             StationaryEvolution(e1 + e2, alpha), dt);
    double worst = 0.0;
    for (std::size_t l = 0; l < joint.size(); ++l) {
        worst = std::max(worst, angle_distance(*separate.phase(l), *joint.phase(l)));
    }
    return worst;
}

/// Same check on fixed reference states with full support and distinct phases.
inline double energy_additivity_check(double e1, double e2, double dt,
                                      double alpha) {
    const PhaseRep s1 = PhaseRep::from_phases(ProbVec({0.2, 0.8}), {0.3, 2.1});
    const PhaseRep s2 =
        PhaseRep::from_phases(ProbVec({0.5, 0.25, 0.25}), {1.0, 4.0, 5.5});
    return energy_additivity_check(s1, s2, e1, e2, dt, alpha);
}

} // namespace qrecon
