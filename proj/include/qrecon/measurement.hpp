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
 * Measurements: orthonormal measurement bases, the Born rule, the U-A-V
 * arrangement that simulates an arbitrary measurement A' with the standard
 * measurement A, Hermitian observables and degenerate measurements.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "qrecon/common.hpp"
#include "qrecon/qspace.hpp"
#include "qrecon/random.hpp"

namespace qrecon {

/// Orthonormal basis v'_1..v'_N, stored as the columns of an N x N matrix.
class MeasurementBasis {
  public:
    MeasurementBasis() = default;

    explicit MeasurementBasis(ComplexMatrix columns,
                              double tolerance = tol::basis)
        : cols_(std::move(columns)) {
        if (cols_.rows() != cols_.cols() || cols_.rows() == 0) {
            throw DimensionError("MeasurementBasis: need N vectors of "
                                 "dimension N");
        }
        const ComplexMatrix gram = cols_.adjoint() * cols_;
        const ComplexMatrix id = ComplexMatrix::Identity(cols_.cols(), cols_.cols());
        if (!((gram - id).cwiseAbs().maxCoeff() < tolerance)) {
            throw InvariantError("MeasurementBasis: vectors are not "
                                 "orthonormal");
        }
    }

    explicit MeasurementBasis(const std::vector<PureState> &vectors,
                              double tolerance = tol::basis)
        : MeasurementBasis(stack(vectors), tolerance) {}

    static MeasurementBasis standard(Eigen::Index n) {
        return MeasurementBasis(ComplexMatrix::Identity(n, n));
    }

    [[nodiscard]] Eigen::Index size() const { return cols_.cols(); }
    [[nodiscard]] const ComplexMatrix &matrix() const { return cols_; }
    [[nodiscard]] PureState vector(Eigen::Index i) const {
        return PureState::normalized(cols_.col(i));
    }

  private:
    static ComplexMatrix stack(const std::vector<PureState> &vectors) {
        const auto n = static_cast<Eigen::Index>(vectors.size());
        ComplexMatrix m(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            if (static_cast<Eigen::Index>(vectors[static_cast<std::size_t>(i)].size()) != n) {
                throw DimensionError("MeasurementBasis: need N vectors of "
                                     "dimension N");
            }
            m.col(i) = vectors[static_cast<std::size_t>(i)].vec();
        }
        return m;
    }

    ComplexMatrix cols_;
};

/// Born probabilities p'_i = |<v'_i, v>|^2.
inline ProbVec born_probs(const PureState &v, const MeasurementBasis &basis) {
    require_same_size(v.size(), static_cast<std::size_t>(basis.size()),
                      "born_probs");
    const ComplexVector c = basis.matrix().adjoint() * v.vec();
    std::vector<double> p(static_cast<std::size_t>(c.size()));
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        p[static_cast<std::size_t>(i)] = std::norm(c(i));
    }
    return ProbVec(std::move(p));
}

/// sum_i a'_i v'_i v'_i^dagger.
class Observable {
  public:
    Observable(MeasurementBasis basis, std::vector<double> values,
               bool nondegenerate = false)
        : basis_(std::move(basis)), values_(std::move(values)) {
        require_same_size(values_.size(), static_cast<std::size_t>(basis_.size()),
                          "Observable");
        if (nondegenerate) {
            std::vector<double> sorted = values_;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                throw InvariantError("Observable: repeated value in a "
                                     "non-degenerate observable");
            }
        }
        const ComplexMatrix a = matrix();
        if (!((a - a.adjoint()).norm() < 1e-12 * std::max(1.0, a.norm()))) {
            throw InvariantError("Observable: reconstructed matrix is not "
                                 "Hermitian");
        }
    }

    [[nodiscard]] const MeasurementBasis &basis() const { return basis_; }
    [[nodiscard]] const std::vector<double> &values() const { return values_; }
    [[nodiscard]] Eigen::Index size() const { return basis_.size(); }

    [[nodiscard]] ComplexMatrix matrix() const {
        const ComplexMatrix &b = basis_.matrix();
        Eigen::VectorXd vals = Eigen::Map<const Eigen::VectorXd>(
            values_.data(), static_cast<Eigen::Index>(values_.size()));
        return b * vals.cast<complex>().asDiagonal() * b.adjoint();
    }

  private:
    MeasurementBasis basis_;
    std::vector<double> values_;
};

/// <A'> = sum a'_i p'_i.
inline double expected_value(const PureState &v, const Observable &obs) {
    const ProbVec p = born_probs(v, obs.basis());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += obs.values()[i] * p[i];
    }
    return acc;
}

/// <A'> = v^dagger A' v from the operator.
inline double expected_value_operator(const PureState &v, const Observable &obs) {
    require_same_size(v.size(), static_cast<std::size_t>(obs.size()),
                      "expected_value_operator");
    return v.vec().dot(obs.matrix() * v.vec()).real();
}

/**
 * U, V with U v'_i = e^{i theta_i} v_i and V v_i = e^{i theta'_i} v'_i, where
 * v_i is the standard basis of the reference measurement A.
 */
class SimulationArrangement {
  public:
    SimulationArrangement(MeasurementBasis target, ComplexMatrix u,
                          ComplexMatrix v, double tolerance = tol::basis)
        : target_(std::move(target)), u_(std::move(u)), v_(std::move(v)) {
        const Eigen::Index n = target_.size();
        if (u_.rows() != n || u_.cols() != n || v_.rows() != n || v_.cols() != n) {
            throw DimensionError("SimulationArrangement: size mismatch");
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            const complex cu = (u_ * target_.matrix().col(i))(i);
            const complex cv = target_.matrix().col(i).dot(v_.col(i));
            if (std::abs(std::abs(cu) - 1.0) > tolerance ||
                std::abs(std::abs(cv) - 1.0) > tolerance) {
                throw InvariantError("SimulationArrangement: U or V does not "
                                     "map the bases onto each other");
            }
        }
    }

    [[nodiscard]] const MeasurementBasis &target() const { return target_; }
    [[nodiscard]] const ComplexMatrix &u() const { return u_; }
    [[nodiscard]] const ComplexMatrix &v() const { return v_; }
    [[nodiscard]] Eigen::Index size() const { return target_.size(); }

  private:
    MeasurementBasis target_;
    ComplexMatrix u_;
    ComplexMatrix v_;
};

/// U = sum e^{i theta_i} v_i v'_i^dagger, V = sum e^{i theta'_i} v'_i v_i^dagger.
inline SimulationArrangement
build_simulation(const MeasurementBasis &basis,
                 const std::vector<double> &theta = {},
                 const std::vector<double> &theta_prime = {}) {
    const Eigen::Index n = basis.size();
    const auto phase = [](const std::vector<double> &t, Eigen::Index i) {
        if (t.empty()) {
            return complex(1.0);
        }
        return std::polar(1.0, t[static_cast<std::size_t>(i)]);
    };
    if ((!theta.empty() && static_cast<Eigen::Index>(theta.size()) != n) ||
        (!theta_prime.empty() && static_cast<Eigen::Index>(theta_prime.size()) != n)) {
        throw DimensionError("build_simulation: need N phases");
    }
    ComplexMatrix u = ComplexMatrix::Zero(n, n);
    ComplexMatrix v = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        // v_i is e_i, so v_i v'_i^dagger puts conj(v'_i) into row i
        u.row(i) = phase(theta, i) * basis.matrix().col(i).adjoint();
        v.col(i) = phase(theta_prime, i) * basis.matrix().col(i);
    }
    return SimulationArrangement(basis, std::move(u), std::move(v));
}

/// Exact result distribution of the arrangement: |<v_i, U v>|^2.
inline ProbVec simulation_distribution(const SimulationArrangement &arr,
                                       const PureState &v) {
    require_same_size(v.size(), static_cast<std::size_t>(arr.size()),
                      "simulation_distribution");
    const ComplexVector w = arr.u() * v.vec();
    std::vector<double> p(static_cast<std::size_t>(w.size()));
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        p[static_cast<std::size_t>(i)] = std::norm(w(i));
    }
    return ProbVec(std::move(p));
}

/// Inverse-CDF draw of an index from `p` using one uniform variate.
template <class Generator> std::size_t sample_index(const ProbVec &p, Generator &rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double u = unif(rng);
    double cum = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) {
            last_positive = i;
        }
        cum += p[i];
        if (u < cum) {
            return i;
        }
    }
    return last_positive;
}

struct MeasurementOutcome {
    std::size_t result = 0;
    PureState output;
};

/// Runs A on U v, then prepares V v_i. The output equals v'_i up to phase.
template <class Generator>
MeasurementOutcome simulate_measurement(const SimulationArrangement &arr,
                                        const PureState &v, Generator &rng) {
    const std::size_t i = sample_index(simulation_distribution(arr, v), rng);
    return {i, PureState::normalized(arr.v().col(static_cast<Eigen::Index>(i)))};
}

/// Values b_i per result index; equal values are indistinguishable results.
struct DegenerateGrouping {
    std::vector<double> values;
};

/// Born probabilities summed over results that share a value (exact match).
inline std::map<double, double> degenerate_probs(const PureState &v,
                                                 const MeasurementBasis &basis,
                                                 const DegenerateGrouping &g) {
    require_same_size(g.values.size(), static_cast<std::size_t>(basis.size()),
                      "degenerate_probs");
    const ProbVec p = born_probs(v, basis);
    std::map<double, double> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[g.values[i]] += p[i];
    }
    return out;
}

} // namespace qrecon
