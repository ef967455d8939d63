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
 * The uniform measure over pure states and its invariance. States are drawn
 * by normalizing 2N independent standard normals, which is uniform on
 * S^{2N-1}; the flat metric ds^2 = |dv|^2 and this measure are both
 * preserved by unitary and antiunitary maps.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "qrecon/classifier.hpp"
#include "qrecon/common.hpp"
#include "qrecon/qspace.hpp"
#include "qrecon/random.hpp"

namespace qrecon {

/// Owns its generator; one sampler per thread.
class StateSampler {
  public:
    StateSampler(Eigen::Index dimension, std::uint64_t seed)
        : n_(dimension), seed_(seed), rng_(seed) {
        if (dimension <= 0) {
            throw DimensionError("StateSampler: dimension must be positive");
        }
    }

    [[nodiscard]] Eigen::Index dimension() const { return n_; }
    [[nodiscard]] std::uint64_t seed() const { return seed_; }

    PureState next() { return random_state(rng_, n_); }
    Rng &rng() { return rng_; }

  private:
    Eigen::Index n_;
    std::uint64_t seed_;
    Rng rng_;
};

inline std::vector<PureState> sample_uniform(StateSampler &s, std::size_t count) {
    if (count == 0) {
        throw DomainError("sample_uniform: count must be at least 1");
    }
    std::vector<PureState> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(s.next());
    }
    return out;
}

/**
 * Largest relative change of |dv|^2 under g over random nearby pairs
 * (v, normalize(v + dv)), |dv| = `step`. Both points are mapped, so an
 * antiunitary g conjugates base and displaced point alike.
 */
inline double metric_invariance_check(const GaugeMap &g, std::size_t pairs,
                                      std::uint64_t seed, double step = 1e-3) {
    if (!g.is_gauge_map()) {
        throw Error("metric_invariance_check: map is not gauge invariant");
    }
    StateSampler sampler(g.matrix().cols(), seed);
    double worst = 0.0;
    for (std::size_t k = 0; k < pairs; ++k) {
        const PureState v = sampler.next();
        const PureState dir = sampler.next();
        const PureState w = PureState::normalized(v.vec() + step * dir.vec());
        const double before = (w.vec() - v.vec()).squaredNorm();
        const double after = (apply(g, w).vec() - apply(g, v).vec()).squaredNorm();
        worst = std::max(worst, std::abs(after - before) / before);
    }
    return worst;
}

struct ChiSquaredResult {
    std::string statistic;
    double value = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

/// Pearson chi-squared against the uniform distribution on [0, 1) bins.
inline ChiSquaredResult chi_squared_uniform(std::string name,
                                            const std::vector<double> &u,
                                            int bins) {
    if (bins < 2 || u.empty()) {
        throw DomainError("chi_squared_uniform: need >= 2 bins and data");
    }
    std::vector<double> counts(static_cast<std::size_t>(bins), 0.0);
    for (double x : u) {
        const auto b = std::clamp(static_cast<int>(x * bins), 0, bins - 1);
        counts[static_cast<std::size_t>(b)] += 1.0;
    }
    const double expected = static_cast<double>(u.size()) / bins;
    double chi2 = 0.0;
    for (double c : counts) {
        chi2 += (c - expected) * (c - expected) / expected;
    }
    const boost::math::chi_squared dist(bins - 1);
    return {std::move(name), chi2, bins - 1,
            boost::math::cdf(boost::math::complement(dist, chi2))};
}

struct MeasureInvarianceResult {
    std::vector<ChiSquaredResult> tests;
    double significance = 1e-3;
    bool passed = false;

    [[nodiscard]] double min_p_value() const {
        double p = 1.0;
        for (const auto &t : tests) {
            p = std::min(p, t.p_value);
        }
        return p;
    }
    [[nodiscard]] double max_statistic() const {
        double s = 0.0;
        for (const auto &t : tests) {
            s = std::max(s, t.value);
        }
        return s;
    }
};

using StateMap = std::function<PureState(const PureState &)>;

/**
 * Pushes `samples` uniform states through `map` and chi-squared tests the
 * images against the uniform measure, on the statistics |v_i|^2 (probability
 * integral transform 1 - (1 - x)^{N-1}) and the relative phases
 * arg(v_i v_j^*) / 2pi. The verdict holds the family-wise significance
 * (Bonferroni over the statistics).
 */
inline MeasureInvarianceResult
measure_invariance_check(const StateMap &map, Eigen::Index n,
                         std::size_t samples, int bins, std::uint64_t seed,
                         double significance = 1e-3) {
    StateSampler sampler(n, seed);
    const auto un = static_cast<std::size_t>(n);
    std::vector<std::vector<double>> moduli(n > 1 ? un : 0);
    std::vector<std::vector<double>> phases(un * (un - 1) / 2);
    for (std::size_t k = 0; k < samples; ++k) {
        const PureState w = map(sampler.next());
        if (w.size() != un) {
            throw DimensionError("measure_invariance_check: map changed the "
                                 "dimension");
        }
        for (std::size_t i = 0; i < moduli.size(); ++i) {
            const double x = std::clamp(std::norm(w[i]), 0.0, 1.0);
            moduli[i].push_back(1.0 - std::pow(1.0 - x, static_cast<double>(n - 1)));
        }
        std::size_t pair = 0;
        for (std::size_t i = 0; i < un; ++i) {
            for (std::size_t j = i + 1; j < un; ++j) {
                phases[pair++].push_back(
                    wrap_angle(std::arg(w[i] * std::conj(w[j]))) / two_pi);
            }
        }
    }
    MeasureInvarianceResult r;
    r.significance = significance;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        r.tests.push_back(chi_squared_uniform("modulus_" + std::to_string(i),
                                              moduli[i], bins));
    }
    std::size_t pair = 0;
    for (std::size_t i = 0; i < un; ++i) {
        for (std::size_t j = i + 1; j < un; ++j) {
            r.tests.push_back(chi_squared_uniform(
                "phase_" + std::to_string(i) + "_" + std::to_string(j),
                phases[pair++], bins));
        }
    }
    if (r.tests.empty()) {
        // N = 1 with only a global phase: check the phase itself
        StateSampler again(n, seed);
        std::vector<double> u;
        for (std::size_t k = 0; k < samples; ++k) {
            u.push_back(wrap_angle(std::arg(map(again.next())[0])) / two_pi);
        }
        r.tests.push_back(chi_squared_uniform("phase_0", u, bins));
    }
    r.passed = r.min_p_value() >=
               significance / static_cast<double>(r.tests.size());
    return r;
}

inline MeasureInvarianceResult
measure_invariance_check(const GaugeMap &g, std::size_t samples, int bins,
                         std::uint64_t seed, double significance = 1e-3) {
    if (!g.is_gauge_map()) {
        throw Error("measure_invariance_check: map is not gauge invariant");
    }
    return measure_invariance_check(
        [&g](const PureState &v) { return apply(g, v); }, g.matrix().cols(),
        samples, bins, seed, significance);
}

/// Componentwise squaring followed by renormalization: a map that does not
/// preserve the uniform measure.
inline PureState square_and_renormalize(const PureState &v) {
    return PureState::normalized(v.vec().cwiseProduct(v.vec()));
}

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

/// Asymptotic Kolmogorov distribution survival function Q(lambda).
inline double kolmogorov_survival(double lambda) {
    if (lambda < 1e-3) {
        return 1.0;
    }
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 200; ++k) {
        const double term = sign * std::exp(-2.0 * k * k * lambda * lambda);
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) {
            break;
        }
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

/// Two-sample Kolmogorov-Smirnov test.
inline KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) {
        throw DomainError("ks_two_sample: empty sample");
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) {
            ++i;
        }
        while (j < b.size() && b[j] <= x) {
            ++j;
        }
        d = std::max(d, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
    }
    const double ne = std::sqrt(na * nb / (na + nb));
    return {d, kolmogorov_survival((ne + 0.12 + 0.11 / ne) * d)};
}

/// Projections <u, Q> of uniform samples, for rotation-invariance tests.
inline std::vector<double> projections(const RealVector &u, Eigen::Index n,
                                       std::size_t samples, std::uint64_t seed) {
    if (u.size() != 2 * n) {
        throw DimensionError("projections: direction must live in R^{2N}");
    }
    StateSampler sampler(n, seed);
    std::vector<double> out;
    out.reserve(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        out.push_back(from_complex(sampler.next()).as_eigen().dot(u));
    }
    return out;
}

} // namespace qrecon
