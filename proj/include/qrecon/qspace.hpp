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
 * Q-space states. A state of an N-result system is a unit vector Q in R^{2N}
 * whose squared entries are the 2N outcome probabilities; result i covers
 * outcomes 2i and 2i+1 (0-based). The same state has a phase representation
 * (p_i; phi_i) and a complex form v_i = Q_{2i} + i Q_{2i+1} = sqrt(p_i) e^{i phi_i}.
 */
#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "qrecon/common.hpp"
#include "qrecon/simplex.hpp"

namespace qrecon {

/// Unit vector in R^{2N}; Q_q^2 are the outcome probabilities.
class QVector {
  public:
    QVector() = default;

    explicit QVector(std::vector<double> q,
                     double tolerance = tol::normalization)
        : q_(std::move(q)) {
        if (q_.empty() || q_.size() % 2 != 0) {
            throw InvariantError("QVector: length must be a positive even "
                                 "number");
        }
        double norm2 = 0.0;
        for (double x : q_) {
            if (!std::isfinite(x) || std::abs(x) > 1.0 + tolerance) {
                throw InvariantError("QVector: entry outside [-1, 1]");
            }
            norm2 += x * x;
        }
        if (std::abs(norm2 - 1.0) > tolerance) {
            throw InvariantError("QVector: not a unit vector");
        }
    }

    /// Number of measurement results N (half the real dimension).
    [[nodiscard]] std::size_t results() const { return q_.size() / 2; }
    [[nodiscard]] std::size_t size() const { return q_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return q_[i]; }
    [[nodiscard]] std::span<const double> entries() const { return q_; }

    [[nodiscard]] RealVector as_eigen() const {
        return Eigen::Map<const RealVector>(q_.data(),
                                            static_cast<Eigen::Index>(q_.size()));
    }

    /// The 2N outcome probabilities P_q = Q_q^2.
    [[nodiscard]] ProbVec outcome_probs() const {
        std::vector<double> out(q_.size());
        double sum = 0.0;
        for (std::size_t i = 0; i < q_.size(); ++i) {
            out[i] = q_[i] * q_[i];
            sum += out[i];
        }
        for (double &x : out) {
            x /= sum;
        }
        return ProbVec(std::move(out));
    }

  private:
    std::vector<double> q_;
};

/// N-dimensional complex unit vector.
class PureState {
  public:
    PureState() = default;

    explicit PureState(ComplexVector v, double tolerance = tol::normalization)
        : v_(std::move(v)) {
        if (v_.size() == 0) {
            throw InvariantError("PureState: empty");
        }
        if (std::abs(v_.squaredNorm() - 1.0) > tolerance) {
            throw InvariantError("PureState: not normalized");
        }
    }

    /// Rescales any nonzero vector to unit norm.
    static PureState normalized(const ComplexVector &v) {
        const double n = v.norm();
        if (!(n > 0.0)) {
            throw InvariantError("PureState: zero vector");
        }
        return PureState(v / n);
    }

    /// The i-th standard basis vector of C^n.
    static PureState basis(Eigen::Index n, Eigen::Index i) {
        ComplexVector v = ComplexVector::Zero(n);
        v(i) = 1.0;
        return PureState(std::move(v));
    }

    [[nodiscard]] std::size_t size() const {
        return static_cast<std::size_t>(v_.size());
    }
    [[nodiscard]] const ComplexVector &vec() const { return v_; }
    [[nodiscard]] complex operator[](std::size_t i) const {
        return v_(static_cast<Eigen::Index>(i));
    }

  private:
    ComplexVector v_;
};

/**
 * (p_i; phi_i) with phi_i = a chi_i + b.
 *
 * Phases are stored reduced to [0, 2pi) and are absent exactly where p_i = 0.
 */
class PhaseRep {
  public:
    PhaseRep() = default;

    PhaseRep(ProbVec p, std::vector<std::optional<double>> phi, double a = 1.0,
             double b = 0.0)
        : p_(std::move(p)), phi_(std::move(phi)), a_(a), b_(b) {
        if (phi_.size() != p_.size()) {
            throw DimensionError("PhaseRep: phase count differs from N");
        }
        if (a_ == 0.0 || !std::isfinite(a_) || !std::isfinite(b_)) {
            throw InvariantError("PhaseRep: a must be finite and nonzero");
        }
        for (std::size_t i = 0; i < phi_.size(); ++i) {
            if (p_[i] > 0.0) {
                if (!phi_[i] || !std::isfinite(*phi_[i])) {
                    throw InvariantError("PhaseRep: missing phase at a "
                                         "nonzero probability");
                }
                phi_[i] = wrap_angle(*phi_[i]);
            } else if (phi_[i]) {
                throw InvariantError("PhaseRep: phase given at zero "
                                     "probability");
            }
        }
    }

    /// Takes a phase for every entry and drops those at zero probability.
    static PhaseRep from_phases(ProbVec p, const std::vector<double> &phases,
                                double a = 1.0, double b = 0.0) {
        require_same_size(p.size(), phases.size(), "PhaseRep::from_phases");
        std::vector<std::optional<double>> phi(phases.size());
        for (std::size_t i = 0; i < phases.size(); ++i) {
            if (p[i] > 0.0) {
                phi[i] = phases[i];
            }
        }
        return PhaseRep(std::move(p), std::move(phi), a, b);
    }

    [[nodiscard]] std::size_t size() const { return p_.size(); }
    [[nodiscard]] const ProbVec &probs() const { return p_; }
    [[nodiscard]] const std::vector<std::optional<double>> &phases() const {
        return phi_;
    }
    [[nodiscard]] std::optional<double> phase(std::size_t i) const {
        return phi_[i];
    }
    [[nodiscard]] double a() const { return a_; }
    [[nodiscard]] double b() const { return b_; }

    /// chi_i = (phi_i - b) / a, from the reduced phase.
    [[nodiscard]] std::optional<double> chi(std::size_t i) const {
        if (!phi_[i]) {
            return std::nullopt;
        }
        return (*phi_[i] - b_) / a_;
    }

  private:
    ProbVec p_;
    std::vector<std::optional<double>> phi_;
    double a_ = 1.0;
    double b_ = 0.0;
};

inline QVector from_phase_rep(const PhaseRep &rep) {
    std::vector<double> q(2 * rep.size(), 0.0);
    for (std::size_t i = 0; i < rep.size(); ++i) {
        if (const auto phi = rep.phase(i)) {
            const double r = std::sqrt(rep.probs()[i]);
            q[2 * i] = r * std::cos(*phi);
            q[2 * i + 1] = r * std::sin(*phi);
        }
    }
    return QVector(std::move(q));
}

/// Result probabilities p_i = Q_{2i}^2 + Q_{2i+1}^2 (coarse-graining of
/// outcome pairs).
inline ProbVec result_probs(const QVector &q) {
    std::vector<double> p(q.results());
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = q[2 * i] * q[2 * i] + q[2 * i + 1] * q[2 * i + 1];
        sum += p[i];
    }
    for (double &x : p) {
        x /= sum;
    }
    return ProbVec(std::move(p));
}

inline PhaseRep to_phase_rep(const QVector &q, double a = 1.0, double b = 0.0) {
    ProbVec p = result_probs(q);
    std::vector<std::optional<double>> phi(q.results());
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (p[i] > 0.0) {
            phi[i] = std::atan2(q[2 * i + 1], q[2 * i]);
        }
    }
    return PhaseRep(std::move(p), std::move(phi), a, b);
}

/// sign(Q_q) as +1/-1 where |Q_q| exceeds `threshold`, absent otherwise.
inline std::vector<std::optional<int>>
polarities(const QVector &q, double threshold = tol::polarity) {
    std::vector<std::optional<int>> out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (std::abs(q[i]) > threshold) {
            out[i] = q[i] > 0.0 ? 1 : -1;
        }
    }
    return out;
}

inline PureState to_complex(const QVector &q) {
    ComplexVector v(static_cast<Eigen::Index>(q.results()));
    for (std::size_t i = 0; i < q.results(); ++i) {
        v(static_cast<Eigen::Index>(i)) = complex(q[2 * i], q[2 * i + 1]);
    }
    return PureState(std::move(v));
}

inline QVector from_complex(const PureState &v) {
    std::vector<double> q(2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        q[2 * i] = v[i].real();
        q[2 * i + 1] = v[i].imag();
    }
    return QVector(std::move(q));
}

/// Global phase e^{i phi0} v. Leaves every |v_i|^2 unchanged.
inline PureState gauge_shift(const PureState &v, double phi0) {
    return PureState(v.vec() * std::polar(1.0, phi0));
}

/// |v_i|^2 as a ProbVec.
inline ProbVec moduli_squared(const PureState &v) {
    std::vector<double> p(v.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        p[i] = std::norm(v[i]);
        sum += p[i];
    }
    for (double &x : p) {
        x /= sum;
    }
    return ProbVec(std::move(p));
}

} // namespace qrecon
