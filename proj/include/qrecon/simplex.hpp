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
 * Discrete probability distributions on the simplex, the information metric
 * ds^2 = 1/4 sum dp_i^2 / p_i, the square-root embedding that flattens it,
 * and the coin-discrimination log Bayes factor whose small-displacement
 * expansion produces the metric.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qrecon/common.hpp"

namespace qrecon {

/// A point on the M-outcome probability simplex.
class ProbVec {
  public:
    ProbVec() = default;

    /// Validates: entries nonnegative and summing to 1 within `tolerance`.
    explicit ProbVec(std::vector<double> entries,
                     double tolerance = tol::normalization)
        : entries_(std::move(entries)) {
        if (entries_.empty()) {
            throw InvariantError("ProbVec: empty");
        }
        double sum = 0.0;
        for (double e : entries_) {
            if (!(e >= 0.0) || !std::isfinite(e)) {
                throw InvariantError("ProbVec: negative or non-finite entry");
            }
            sum += e;
        }
        if (std::abs(sum - 1.0) > tolerance) {
            throw InvariantError("ProbVec: entries sum to " +
                                 std::to_string(sum) + ", not 1");
        }
    }

    /// Accepts any nonnegative weights with positive total and rescales them.
    static ProbVec renormalized(std::vector<double> weights) {
        double sum = 0.0;
        for (double w : weights) {
            if (!(w >= 0.0) || !std::isfinite(w)) {
                throw InvariantError("ProbVec: negative or non-finite weight");
            }
            sum += w;
        }
        if (!(sum > 0.0)) {
            throw InvariantError("ProbVec: weights sum to zero");
        }
        for (double &w : weights) {
            w /= sum;
        }
        return ProbVec(std::move(weights));
    }

    static ProbVec uniform(std::size_t m) {
        return ProbVec(std::vector<double>(m, 1.0 / static_cast<double>(m)));
    }

    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] std::span<const double> entries() const { return entries_; }
    [[nodiscard]] const std::vector<double> &vec() const { return entries_; }

    friend bool operator==(const ProbVec &, const ProbVec &) = default;

  private:
    std::vector<double> entries_;
};

/// A displacement dp that keeps a point on the simplex (entries sum to 0).
class TangentVec {
  public:
    TangentVec() = default;

    explicit TangentVec(std::vector<double> entries,
                        double tolerance = tol::normalization)
        : entries_(std::move(entries)) {
        const double sum =
            std::accumulate(entries_.begin(), entries_.end(), 0.0);
        if (std::abs(sum) > tolerance) {
            throw InvariantError("TangentVec: entries sum to " +
                                 std::to_string(sum) + ", not 0");
        }
    }

    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] std::span<const double> entries() const { return entries_; }

  private:
    std::vector<double> entries_;
};

/// p + dp, validated as a new ProbVec.
inline ProbVec displace(const ProbVec &p, const TangentVec &dp) {
    require_same_size(p.size(), dp.size(), "displace");
    std::vector<double> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] = p[i] + dp[i];
    }
    return ProbVec(std::move(out));
}

/**
 * Squared information-metric length 1/4 sum dp_i^2 / p_i.
 *
 * Entries with p_i = 0 and dp_i = 0 are skipped; a nonzero displacement at a
 * zero-probability entry is a boundary singularity and throws DomainError.
 */
inline double info_metric_ds2(const ProbVec &p, const TangentVec &dp) {
    require_same_size(p.size(), dp.size(), "info_metric_ds2");
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) {
            if (dp[i] != 0.0) {
                throw DomainError("info_metric_ds2: displacement at a "
                                  "zero-probability entry");
            }
            continue;
        }
        acc += dp[i] * dp[i] / p[i];
    }
    return 0.25 * acc;
}

/// (sqrt p_1, ..., sqrt p_M): a unit vector whose Euclidean metric is the
/// information metric.
inline std::vector<double> sqrt_embedding(const ProbVec &p) {
    std::vector<double> out(p.size());
    std::transform(p.entries().begin(), p.entries().end(), out.begin(),
                   [](double x) { return std::sqrt(x); });
    return out;
}

/// Great-circle distance between the square-root embeddings, in radians.
inline double geodesic_distance(const ProbVec &p, const ProbVec &q) {
    require_same_size(p.size(), q.size(), "geodesic_distance");
    double overlap = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        overlap += std::sqrt(p[i] * q[i]);
    }
    return std::acos(std::clamp(overlap, -1.0, 1.0));
}

/**
 * Expected log of P_A/P_B after n tosses of coin A, equal priors:
 * n sum p_i ln(p_i / p'_i).
 *
 * Throws DomainError when p_i > 0 but p'_i = 0 (a single toss would give
 * infinite evidence).
 */
inline double log_bayes_factor(const ProbVec &p, const ProbVec &p_alt,
                               std::uint64_t n) {
    require_same_size(p.size(), p_alt.size(), "log_bayes_factor");
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) {
            continue;
        }
        if (p_alt[i] == 0.0) {
            throw DomainError("log_bayes_factor: infinite evidence (support "
                              "of p not contained in support of p')");
        }
        // ln(p/p') = -log1p((p'-p)/p) keeps precision for nearby coins
        acc -= p[i] * std::log1p((p_alt[i] - p[i]) / p[i]);
    }
    return static_cast<double>(n) * acc;
}

/**
 * One simulated dataset: toss coin `p` n times and return the realised
 * ln(P_A/P_B) = sum_i k_i ln(p_i / p'_i) for the observed counts k.
 *
 * Independent of log_bayes_factor; its mean over datasets converges to it.
 */
template <class Rng>
double sampled_log_likelihood_ratio(const ProbVec &p, const ProbVec &p_alt,
                                    std::uint64_t n, Rng &rng) {
    require_same_size(p.size(), p_alt.size(), "sampled_log_likelihood_ratio");
    // multinomial draw as a chain of conditional binomials
    std::uint64_t remaining = n;
    double remaining_mass = 1.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size() && remaining > 0; ++i) {
        std::uint64_t k = remaining;
        if (i + 1 < p.size()) {
            const double prob =
                remaining_mass > 0.0
                    ? std::clamp(p[i] / remaining_mass, 0.0, 1.0)
                    : 0.0;
            std::binomial_distribution<std::uint64_t> draw(remaining, prob);
            k = draw(rng);
        }
        if (k > 0) {
            if (p_alt[i] == 0.0) {
                throw DomainError("sampled_log_likelihood_ratio: infinite "
                                  "evidence");
            }
            acc += static_cast<double>(k) * std::log(p[i] / p_alt[i]);
        }
        remaining -= k;
        remaining_mass -= p[i];
    }
    return acc;
}

} // namespace qrecon
