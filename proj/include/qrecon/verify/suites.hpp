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
 * The verification suites behind `qrecon verify <suite>`. Each suite is a
 * list of named checks; every check draws from its own seeded stream.
 *
 *   metric          information metric vs. its square-root and Q-space forms
 *   coin            Bayes-factor expansion and the Monte-Carlo coin oracle
 *   measure-solver  induced measure, invariance test and the F ODE
 *   classify        Wigner reproduction on realified and generic maps
 *   born            Born rule vs. the simulated arrangement, observables
 *   simulate        sampled measurements and repeatability
 *   compose         composite rule, subsystem and degenerate measurements
 *   dynamics        stationary evolution and Hamilton-Jacobi residuals
 *   haar            invariant metric and uniform measure
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "qrecon.hpp"
#include "qrecon/verify/harness.hpp"

namespace qrecon::verify {

namespace detail {

inline ProbVec random_full_support(Rng &rng, std::size_t n) {
    std::uniform_real_distribution<double> w(0.05, 1.0);
    std::vector<double> p(n);
    for (double &x : p) {
        x = w(rng);
    }
    return ProbVec::renormalized(std::move(p));
}

inline PhaseRep random_phase_rep(Rng &rng, std::size_t n) {
    std::uniform_real_distribution<double> angle(0.0, two_pi);
    std::vector<double> phi(n);
    for (double &x : phi) {
        x = angle(rng);
    }
    return PhaseRep::from_phases(random_full_support(rng, n), phi);
}

inline std::vector<double> random_phases(Rng &rng, std::size_t n) {
    std::uniform_real_distribution<double> angle(0.0, two_pi);
    std::vector<double> phi(n);
    for (double &x : phi) {
        x = angle(rng);
    }
    return phi;
}

inline MeasurementBasis random_basis(Rng &rng, Eigen::Index n) {
    return MeasurementBasis(haar_unitary(rng, n));
}

inline std::vector<double> linspace(double lo, double hi, std::size_t count) {
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        out[k] = lo + (hi - lo) * static_cast<double>(k) /
                          static_cast<double>(count - 1);
    }
    return out;
}

/// required / observed: below 1 exactly when a lower bound is met.
inline double shortfall(double required, double observed) {
    return observed > 0.0 ? required / observed
                          : std::numeric_limits<double>::infinity();
}

inline double max_abs_diff(const ProbVec &a, const ProbVec &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

/// Smallest |a - e^{i t} b| over global phases t (entrywise max).
inline double distance_mod_phase(const ComplexVector &a, const ComplexVector &b) {
    const complex overlap = b.dot(a);
    const complex phase =
        std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : complex(1.0);
    return (a - phase * b).cwiseAbs().maxCoeff();
}

} // namespace detail

// ---------------------------------------------------------------- metric

inline std::vector<CheckReport> suite_metric(const Config &cfg) {
    std::vector<CheckReport> out;
    const auto dims = cfg.dims({3});

    out.push_back(run_check(cfg, "metric.sqrt_pullback", [&](std::uint64_t seed) {
        Rng rng(seed);
        const double tolerance = cfg.tol("metric.sqrt_pullback", 1e-12);
        const std::int64_t trials = cfg.count("metric.sqrt_pullback", 1000);
        std::normal_distribution<double> normal;
        double worst = 0.0;
        for (int n : dims) {
            const auto m = static_cast<std::size_t>(std::max(n, 2));
            for (std::int64_t t = 0; t < trials; ++t) {
                const ProbVec p = detail::random_full_support(rng, m);
                std::vector<double> dp(m);
                double mean = 0.0;
                for (double &x : dp) {
                    x = 1e-3 * normal(rng);
                    mean += x;
                }
                for (double &x : dp) {
                    x -= mean / static_cast<double>(m);
                }
                const TangentVec tv(dp);
                const std::vector<double> r = sqrt_embedding(p);
                double euclid = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    const double dq = dp[i] / (2.0 * r[i]);
                    euclid += dq * dq;
                }
                worst = std::max(worst, std::abs(info_metric_ds2(p, tv) - euclid));
            }
        }
        return Outcome{worst < tolerance, worst, tolerance,
                       trials * static_cast<std::int64_t>(dims.size())};
    }));

    out.push_back(run_check(cfg, "metric.qspace_euclidean", [&](std::uint64_t seed) {
        Rng rng(seed);
        const double tolerance = cfg.tol("metric.qspace_euclidean", 1e-8);
        const std::int64_t trials = cfg.count("metric.qspace_euclidean", 1000);
        constexpr double eps = 1e-5;
        double worst = 0.0;
        for (int n : dims) {
            for (std::int64_t t = 0; t < trials; ++t) {
                const RealVector q = random_unit_vector(rng, 2 * n);
                if (q.cwiseAbs().minCoeff() < 1e-2) {
                    continue; // keep every P_q away from 0
                }
                const RealVector w = random_unit_vector(rng, 2 * n);
                const auto path = [&](double s) -> RealVector {
                    const RealVector x = q + s * w;
                    return x / x.norm();
                };
                const RealVector dq = (path(eps) - path(-eps)) / (2.0 * eps);
                const RealVector dp = (path(eps).cwiseAbs2() - path(-eps).cwiseAbs2()) /
                                      (2.0 * eps);
                const RealVector p = q.cwiseAbs2();
                const double info = 0.25 * (dp.cwiseAbs2().cwiseQuotient(p)).sum();
                const double euclid = dq.squaredNorm();
                worst = std::max(worst, std::abs(info - euclid) / euclid);
            }
        }
        return Outcome{worst < tolerance, worst, tolerance,
                       trials * static_cast<std::int64_t>(dims.size())};
    }));

    out.push_back(run_check(cfg, "metric.geodesic_limit", [&](std::uint64_t) {
        const double tolerance = cfg.tol("metric.geodesic_limit", 1e-5);
        const ProbVec p({0.5, 0.5});
        double worst = 0.0;
        json ratios = json::array();
        for (double d : {1e-2, 1e-3, 1e-4}) {
            const TangentVec dp({d, -d});
            const double g = geodesic_distance(p, displace(p, dp));
            const double ratio = g * g / info_metric_ds2(p, dp);
            ratios.push_back(ratio);
            if (d <= 1e-3) {
                worst = std::max(worst, std::abs(ratio - 1.0));
            }
        }
        return Outcome{worst < tolerance, worst, tolerance, 3, {{"ratios", ratios}}};
    }));

    out.push_back(run_check(cfg, "metric.triangle_inequality", [&](std::uint64_t seed) {
        Rng rng(seed);
        const std::int64_t trials = cfg.count("metric.triangle_inequality", 1000);
        double worst = 0.0;
        for (int n : dims) {
            const auto m = static_cast<std::size_t>(std::max(n, 2));
            for (std::int64_t t = 0; t < trials; ++t) {
                const ProbVec a = detail::random_full_support(rng, m);
                const ProbVec b = detail::random_full_support(rng, m);
                const ProbVec c = detail::random_full_support(rng, m);
                const double excess = geodesic_distance(a, c) -
                                      geodesic_distance(a, b) -
                                      geodesic_distance(b, c);
                worst = std::max(worst, excess);
            }
        }
        const double tolerance = cfg.tol("metric.triangle_inequality", 1e-12);
        return Outcome{worst < tolerance, std::max(worst, 0.0), tolerance,
                       trials * static_cast<std::int64_t>(dims.size())};
    }));
    return out;
}

// ---------------------------------------------------------------- coin

inline std::vector<CheckReport> suite_coin(const Config &cfg) {
    std::vector<CheckReport> out;

    out.push_back(run_check(cfg, "coin.metric_expansion", [&](std::uint64_t) {
        const double at_1e3 = cfg.tol("coin.metric_expansion", 0.02);
        const ProbVec p({0.5, 0.5});
        constexpr std::uint64_t n = 200;
        std::vector<double> errors;
        for (double d : {1e-2, 1e-3, 1e-4}) {
            const TangentVec dp({d, -d});
            const double ratio = log_bayes_factor(p, displace(p, dp), n) /
                                 (2.0 * static_cast<double>(n) * info_metric_ds2(p, dp));
            errors.push_back(std::abs(ratio - 1.0));
        }
        // at least first order: shrinking |dp| tenfold cuts the error by >= ~10x
        const bool linear = errors[1] <= 0.15 * errors[0] && errors[2] <= 0.15 * errors[1];
        return Outcome{linear && errors[1] < at_1e3, errors[1], at_1e3, 3,
                       {{"relative_errors", errors}, {"at_least_linear", linear}}};
    }));

    out.push_back(run_check(cfg, "coin.monte_carlo", [&](std::uint64_t seed) {
        Rng rng(seed);
        const std::int64_t datasets = cfg.count("coin.monte_carlo", 100000);
        const ProbVec p({0.5, 0.5});
        const ProbVec q({0.55, 0.45});
        constexpr std::uint64_t n = 200;
        double sum = 0.0, sum2 = 0.0;
        for (std::int64_t k = 0; k < datasets; ++k) {
            const double x = sampled_log_likelihood_ratio(p, q, n, rng);
            sum += x;
            sum2 += x * x;
        }
        const double count = static_cast<double>(datasets);
        const double mean = sum / count;
        const double var = (sum2 - count * mean * mean) / (count - 1.0);
        const double se = std::sqrt(var / count);
        const double analytic = log_bayes_factor(p, q, n);
        const double z = std::abs(mean - analytic) / se;
        return Outcome{z < 3.0, z, 3.0, datasets,
                       {{"empirical_mean", mean},
                        {"analytic", analytic},
                        {"standard_error", se}}};
    }));
    return out;
}

// ---------------------------------------------------------------- measure-solver

inline std::vector<CheckReport> suite_measure_solver(const Config &cfg) {
    std::vector<CheckReport> out;

    out.push_back(run_check(cfg, "ode.closed_form", [&](std::uint64_t) {
        const double tolerance = cfg.tol("ode.closed_form", 1e-6);
        struct Case {
            double a, f0, chi0;
            int branch;
        };
        const std::vector<Case> cases{{1.0, 1.0, 0.0, -1},
                                      {1.0, 0.5, pi / 4, -1},
                                      {2.5, 0.3, 0.2, 1},
                                      {-1.5, 0.8, -0.4, 1}};
        double worst = 0.0;
        std::int64_t points = 0;
        for (const Case &c : cases) {
            const double period = pi / std::abs(c.a);
            const auto grid = detail::linspace(c.chi0 - 0.5 * period,
                                               c.chi0 + period, 1000);
            OdeOptions opts;
            opts.step = 1e-4;
            opts.branch = c.branch;
            const auto f = solve_F_ode(c.a, c.f0, c.chi0, grid, opts);
            const double b = closed_form_offset(c.a, c.f0, c.chi0, c.branch);
            for (std::size_t k = 0; k < grid.size(); ++k) {
                const double exact = std::pow(std::cos(c.a * grid[k] + b), 2);
                worst = std::max(worst, std::abs(f[k] - exact));
            }
            points += static_cast<std::int64_t>(grid.size());
        }
        return Outcome{worst < tolerance, worst, tolerance, points};
    }));

    out.push_back(run_check(cfg, "ode.fourth_order", [&](std::uint64_t) {
        // cos^2(chi) on [0.2, 1.3] stays clear of 0 and 1; the wide band keeps the
        // step cap above the tested step sizes
        const auto grid = detail::linspace(0.2, 1.3, 12);
        const double f0 = std::pow(std::cos(0.2), 2);
        std::vector<double> errs;
        for (double h : {0.04, 0.02, 0.01}) {
            OdeOptions opts;
            opts.step = h;
            opts.turning_band = 0.2;
            const auto f = solve_F_ode(1.0, f0, 0.2, grid, opts);
            double e = 0.0;
            for (std::size_t k = 0; k < grid.size(); ++k) {
                e = std::max(e, std::abs(f[k] - std::pow(std::cos(grid[k]), 2)));
            }
            errs.push_back(e);
        }
        const double r1 = errs[0] / errs[1];
        const double r2 = errs[1] / errs[2];
        const double gap = detail::shortfall(8.0, std::min(r1, r2));
        return Outcome{gap < 1.0, gap, 1.0, 3,
                       {{"max_errors", errs}, {"ratios", {r1, r2}}}};
    }));

    out.push_back(run_check(cfg, "measure.cos2_constant", [&](std::uint64_t) {
        const double tolerance = cfg.tol("measure.cos2_constant", 1e-9);
        double worst = 0.0;
        for (const auto &[a, b] : std::vector<std::pair<double, double>>{
                 {1.0, 0.0}, {3.0, 0.0}, {1.0, 0.3}, {-2.0, 1.1}}) {
            // a quarter period strictly between zeros of sin * cos
            const double lo = (0.0 - b) / a, hi = (pi / 2 - b) / a;
            const double x0 = std::min(lo, hi), x1 = std::max(lo, hi);
            const double margin = 1e-3 * (x1 - x0);
            const auto grid = detail::linspace(x0 + margin, x1 - margin, 1000);
            const EmbeddingFunction fn = cos2_embedding(a, b, x0, x1);
            const DensityRange r = induced_density_range(fn, grid);
            worst = std::max({worst, r.max - r.min,
                              std::abs(r.max - 2.0 * std::abs(a))});
        }
        return Outcome{worst < tolerance, worst, tolerance, 4000};
    }));

    out.push_back(run_check(cfg, "measure.non_sinusoidal_rejected", [&](std::uint64_t) {
        const double min_variation = cfg.tol("measure.non_sinusoidal_rejected", 0.10);
        const EmbeddingFunction square{[](double x) { return x * x; },
                                       [](double x) { return 2.0 * x; }, 0.0, 1.0};
        const EmbeddingFunction logistic{
            [](double x) { return 0.5 * (1.0 + std::tanh(x)); },
            [](double x) { return 0.5 / std::pow(std::cosh(x), 2); }, -pi, pi};
        const auto g1 = detail::linspace(0.1, 0.9, 1000);
        const auto g2 = detail::linspace(-pi / 2, pi / 2, 1000);
        const double v1 = induced_density_range(square, g1).relative_variation();
        const double v2 = induced_density_range(logistic, g2).relative_variation();
        const bool rejected = !is_translation_invariant(square, g1, 1e-9) &&
                              !is_translation_invariant(logistic, g2, 1e-9);
        const double least = std::min(v1, v2);
        const double gap = detail::shortfall(min_variation, least);
        return Outcome{rejected && gap < 1.0, gap, 1.0, 2,
                       {{"square_variation", v1}, {"tanh_variation", v2}}};
    }));

    out.push_back(run_check(cfg, "measure.pair_identity", [&](std::uint64_t) {
        const double tolerance = cfg.tol("measure.pair_identity", 1e-12);
        const AmplitudePair pair{1.7, 0.4};
        double worst = 0.0;
        for (double x : detail::linspace(-2 * pi, 2 * pi, 1000)) {
            worst = std::max(worst, std::abs(pair.f(x) * pair.f(x) +
                                             pair.f_tilde(x) * pair.f_tilde(x) - 1.0));
        }
        return Outcome{worst < tolerance, worst, tolerance, 1000};
    }));
    return out;
}

// ---------------------------------------------------------------- classify

inline std::vector<CheckReport> suite_classify(const Config &cfg) {
    std::vector<CheckReport> out;
    const auto dims = cfg.dims({2, 3, 4, 5});
    const std::int64_t corpus = cfg.count("classify.corpus", 1000);
    const double witness_tol = cfg.tol("classify.witness", tol::witness);
    constexpr int witness_trials = 128;

    const auto roundtrip = [&](const std::string &name, bool anti) {
        return run_check(cfg, name, [&, anti](std::uint64_t seed) {
            Rng rng(seed);
            const double tolerance = cfg.tol(name, 1e-9);
            double worst = 0.0;
            std::int64_t wrong_kind = 0;
            for (int n : dims) {
                for (std::int64_t t = 0; t < corpus; ++t) {
                    const ComplexMatrix v = haar_unitary(rng, n);
                    const GaugeMap g = classify(anti ? realify_antiunitary(v)
                                                     : realify_unitary(v));
                    if (g.kind() != (anti ? MapKind::antiunitary : MapKind::unitary)) {
                        ++wrong_kind;
                        continue;
                    }
                    worst = std::max(worst, (g.matrix() - v).cwiseAbs().maxCoeff());
                }
            }
            return Outcome{wrong_kind == 0 && worst < tolerance, worst, tolerance,
                           corpus * static_cast<std::int64_t>(dims.size()),
                           {{"misclassified", wrong_kind}}};
        });
    };
    out.push_back(roundtrip("classify.unitary_roundtrip", false));
    out.push_back(roundtrip("classify.antiunitary_roundtrip", true));

    out.push_back(run_check(cfg, "classify.generic_rejected", [&](std::uint64_t seed) {
        Rng rng(seed);
        const double min_dev = cfg.tol("classify.generic_rejected", 1e-2);
        std::int64_t accepted = 0, witness_passed = 0;
        double least = std::numeric_limits<double>::infinity();
        for (int n : dims) {
            for (std::int64_t t = 0; t < corpus; ++t) {
                const OrthogonalMap m(haar_orthogonal(rng, 2 * n));
                if (classify(m).is_gauge_map()) {
                    ++accepted;
                }
                const auto w = gauge_invariance_witness(m, witness_trials,
                                                        witness_tol, rng);
                least = std::min(least, w.max_deviation);
                if (w.passed || w.max_deviation <= min_dev) {
                    ++witness_passed;
                }
            }
        }
        const double gap = detail::shortfall(min_dev, least);
        return Outcome{accepted == 0 && witness_passed == 0 && gap < 1.0, gap, 1.0,
                       corpus * static_cast<std::int64_t>(dims.size()),
                       {{"accepted_by_classify", accepted},
                        {"not_failing_witness", witness_passed},
                        {"smallest_witness_deviation", least}}};
    }));

    out.push_back(run_check(cfg, "classify.witness_agreement", [&](std::uint64_t seed) {
        Rng rng(seed);
        std::int64_t disagreements = 0, total = 0;
        double worst_gauge = 0.0;
        for (int n : dims) {
            for (std::int64_t t = 0; t < corpus; ++t) {
                const ComplexMatrix v = haar_unitary(rng, n);
                const std::vector<OrthogonalMap> maps{
                    realify_unitary(v), realify_antiunitary(v),
                    OrthogonalMap(haar_orthogonal(rng, 2 * n))};
                for (const OrthogonalMap &m : maps) {
                    const bool gauge = classify(m).is_gauge_map();
                    const auto w = gauge_invariance_witness(m, witness_trials,
                                                            witness_tol, rng);
                    if (gauge) {
                        worst_gauge = std::max(worst_gauge, w.max_deviation);
                    }
                    disagreements += gauge != w.passed ? 1 : 0;
                    ++total;
                }
            }
        }
        return Outcome{disagreements == 0, static_cast<double>(disagreements), 1.0,
                       total,
                       {{"max_witness_deviation_on_gauge_maps", worst_gauge}}};
    }));

    out.push_back(run_check(cfg, "classify.group_structure", [&](std::uint64_t seed) {
        Rng rng(seed);
        const double tolerance = cfg.tol("classify.group_structure", 1e-9);
        const std::int64_t trials = cfg.count("classify.group_structure", 200);
        double worst = 0.0;
        std::int64_t kind_errors = 0;
        for (int n : dims) {
            for (std::int64_t t = 0; t < trials; ++t) {
                const ComplexMatrix v1 = haar_unitary(rng, n);
                const ComplexMatrix v2 = haar_unitary(rng, n);
                for (bool a1 : {false, true}) {
                    for (bool a2 : {false, true}) {
                        const GaugeMap g1 = a1 ? GaugeMap::antiunitary(v1)
                                               : GaugeMap::unitary(v1);
                        const GaugeMap g2 = a2 ? GaugeMap::antiunitary(v2)
                                               : GaugeMap::unitary(v2);
                        const GaugeMap product = classify(OrthogonalMap(
                            realify(g1).matrix() * realify(g2).matrix(), 1e-9));
                        const GaugeMap expected = compose(g1, g2);
                        if (product.kind() != expected.kind()) {
                            ++kind_errors;
                            continue;
                        }
                        worst = std::max(worst, (product.matrix() - expected.matrix())
                                                    .cwiseAbs()
                                                    .maxCoeff());
                        // M^T realises the inverse map
                        const GaugeMap inv = classify(
                            OrthogonalMap(realify(g1).matrix().transpose(), 1e-9));
                        const GaugeMap inv_expected = inverse(g1);
                        if (inv.kind() != inv_expected.kind()) {
                            ++kind_errors;
                            continue;
                        }
                        worst = std::max(worst, (inv.matrix() - inv_expected.matrix())
                                                    .cwiseAbs()
                                                    .maxCoeff());
                    }
                }
            }
        }
        return Outcome{kind_errors == 0 && worst < tolerance, worst, tolerance,
                       4 * trials * static_cast<std::int64_t>(dims.size()),
                       {{"kind_errors", kind_errors}}};
    }));

    out.push_back(run_check(cfg, "classify.real_complex_action", [&](std::uint64_t seed) {
        Rng rng(seed);
        const double tolerance = cfg.tol("classify.real_complex_action", 1e-10);
        const std::int64_t trials = cfg.count("classify.real_complex_action", 200);
        double worst = 0.0;
        for (int n : dims) {
            for (std::int64_t t = 0; t < trials; ++t) {
                const ComplexMatrix v = haar_unitary(rng, n);
                const PureState s = random_state(rng, n);
                for (bool anti : {false, true}) {
                    const GaugeMap g = anti ? GaugeMap::antiunitary(v)
                                            : GaugeMap::unitary(v);
                    const PureState complex_path = apply(g, s);
                    const PureState real_path =
                        to_complex(apply(realify(g), from_complex(s)));
                    worst = std::max(worst, (complex_path.vec() - real_path.vec())
                                                .cwiseAbs()
                                                .maxCoeff());
                }
            }
        }
        return Outcome{worst < tolerance, worst, tolerance,
                       2 * trials * static_cast<std::int64_t>(dims.size())};
    }));

    out.push_back(run_check(cfg, "classify.antiunitary_separation", [&](std::uint64_t seed) {
        // ||M - I||_F of a realified antiunitary map is 2 sqrt(N): never near I
        Rng rng(seed);
        const std::int64_t trials = cfg.count("classify.antiunitary_separation", 200);
        double least_ratio = std::numeric_limits<double>::infinity();
        for (int n : dims) {
            const RealMatrix id = RealMatrix::Identity(2 * n, 2 * n);
            for (std::int64_t t = 0; t < trials; ++t) {
                const double d =
                    (realify_antiunitary(haar_unitary(rng, n)).matrix() - id).norm();
                least_ratio = std::min(least_ratio, d / (2.0 * std::sqrt(n)));
            }
        }
        const double dev = std::abs(least_ratio - 1.0);
        return Outcome{dev < 1e-9, dev, 1e-9,
                       trials * static_cast<std::int64_t>(dims.size()),
                       {{"smallest_distance_over_2sqrtN", least_ratio}}};
    }));

    out.push_back(run_check(cfg, "classify.unitarity_bridge", [&](std::uint64_t seed) {
        Rng rng(seed);
        const std::int64_t trials = cfg.count("classify.unitarity_bridge", 1000);
        const double verdict_tol = 1e-10;
        std::int64_t disagreements = 0;
        double worst_factor = 0.0;
        std::normal_distribution<double> normal;
        for (std::int64_t t = 0; t < trials; ++t) {
            const int n = dims[static_cast<std::size_t>(t) % dims.size()];
            ComplexMatrix v = haar_unitary(rng, n);
            if (t % 2 == 1) {
                for (Eigen::Index i = 0; i < v.size(); ++i) {
                    v(i) += 1e-3 * complex(normal(rng), normal(rng));
                }
            }
            const auto r = unitarity_orthogonality_bridge(v);
            disagreements += (r.orthogonality < verdict_tol) != (r.unitarity < verdict_tol);
            if (r.unitarity > 1e-12) {
                worst_factor = std::max(worst_factor,
                                        std::abs(r.orthogonality / r.unitarity -
                                                 std::sqrt(2.0)));
            }
        }
        return Outcome{disagreements == 0 && worst_factor < 1e-9, worst_factor, 1e-9,
                       trials, {{"verdict_disagreements", disagreements}}};
    }));
    return out;
}

// ---------------------------------------------------------------- born

inline std::vector<CheckReport> suite_born(const Config &cfg) {
    std::vector<CheckReport> out;
    const auto dims = cfg.dims({2, 3, 5});

    out.push_back(run_check(cfg, "born.simulation_equals_born", [&](std::uint64_t seed) {
        Rng rng(seed);
        const double tolerance = cfg.tol("born.simulation_equals_born", 1e-12);
        const std::int64_t trials = cfg.count("born.simulation_equals_born", 1000);
        double worst = 0.0;
        for (int n : dims) {
            const auto un = static_cast<std::size_t>(n);
            for (std::int64_t t = 0; t < trials; ++t) {
                const MeasurementBasis basis = detail::random_basis(rng, n);
                const PureState v = random_state(rng, n);
                const ProbVec born = born_probs(v, basis);
                // default phases and two random choices of the free phases
                const SimulationArrangement plain = build_simulation(basis);
                const SimulationArrangement rotated = build_simulation(
                    basis, detail::random_phases(rng, un), detail::random_phases(rng, un));
                worst = std::max({worst,
                                  detail::max_abs_diff(simulation_distribution(plain, v), born),
                                  detail::max_abs_diff(simulation_distribution(rotated, v), born)});
            }
        }
        return Outcome{worst < tolerance, worst, tolerance,
                       trials * static_cast<std::int64_t>(dims.size())};
    }));

    out.push_back(run_check(cfg, "born.basis_reproducibility", [&](std::uint64_t seed) {
        Rng rng(seed);
        const double tolerance = cfg.tol("born.basis_reproducibility", 1e-12);
        double worst = 0.0;
        for (int n : dims) {
            for (int t = 0; t < 100; ++t) {
                const MeasurementBasis basis = detail::random_basis(rng, n);
                for (Eigen::Index j = 0; j < n; ++j) {
                    const ProbVec p = born_probs(basis.vector(j), basis);
                    for (Eigen::Index i = 0; i < n; ++i) {
                        const double expected = i == j ? 1.0 : 0.0;
                        worst = std::max(worst, std::abs(p[static_cast<std::size_t>(i)] - expected));
                    }
                }
            }
        }
        return Outcome{worst < tolerance, worst, tolerance,
                       100 * static_cast<std::int64_t>(dims.size())};
    }));

    out.push_back(run_check(cfg, "born.expected_value_paths", [&](std::uint64_t seed) {
        Rng rng(seed);
        const double tolerance = cfg.tol("born.expected_value_paths", 1e-12);
        const std::int64_t trials = cfg.count("born.expected_value_paths", 1000);
        std::normal_distribution<double> normal;
        double worst = 0.0, worst_rotation = 0.0;
        for (int n : dims) {
            for (std::int64_t t = 0; t < trials; ++t) {
                std::vector<double> values(static_cast<std::size_t>(n));
                for (double &x : values) {
                    x = normal(rng);
                }
                const Observable obs(detail::random_basis(rng, n), values);
                const PureState v = random_state(rng, n);
                const double ev = expected_value(v, obs);
                worst = std::max(worst, std::abs(ev - expected_value_operator(v, obs)));
                // rotate state and basis together
                const ComplexMatrix w = haar_unitary(rng, n);
                const Observable rotated(MeasurementBasis(w * obs.basis().matrix()), values);
                const PureState rv = PureState::normalized(w * v.vec());
                worst_rotation = std::max(worst_rotation,
                                          std::abs(expected_value(rv, rotated) - ev));
            }
        }
        const double r = std::max(worst, worst_rotation);
        return Outcome{r < tolerance, r, tolerance,
                       trials * static_cast<std::int64_t>(dims.size()),
                       {{"dual_path", worst}, {"basis_rotation", worst_rotation}}};
    }));

    out.push_back(run_check(cfg, "born.observable_spectrum", [&](std::uint64_t seed) {
        Rng rng(seed);
        const double tolerance = cfg.tol("born.observable_spectrum", 1e-9);
        std::normal_distribution<double> normal;
        double worst = 0.0;
        for (int n : dims) {
            for (int t = 0; t < 200; ++t) {
                std::vector<double> values(static_cast<std::size_t>(n));
                for (double &x : values) {
                    x = normal(rng);
                }
                const Observable obs(detail::random_basis(rng, n), values, true);
                Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(obs.matrix());
                std::vector<double> sorted = values;
                std::sort(sorted.begin(), sorted.end());
                for (Eigen::Index i = 0; i < n; ++i) {
                    worst = std::max(worst, std::abs(es.eigenvalues()(i) -
                                                     sorted[static_cast<std::size_t>(i)]));
                    // eigenvector matches the basis vector carrying that value
                    const auto k = static_cast<Eigen::Index>(
                        std::find(values.begin(), values.end(),
                                  sorted[static_cast<std::size_t>(i)]) -
                        values.begin());
                    worst = std::max(worst, detail::distance_mod_phase(
                                                es.eigenvectors().col(i),
                                                obs.basis().matrix().col(k)));
                }
            }
        }
        return Outcome{worst < tolerance, worst, tolerance,
                       200 * static_cast<std::int64_t>(dims.size())};
    }));
    return out;
}

// ---------------------------------------------------------------- simulate

inline std::vector<CheckReport> suite_simulate(const Config &cfg) {
    std::vector<CheckReport> out;
    const auto dims = cfg.dims({2, 3, 5});

    out.push_back(run_check(cfg, "simulate.frequencies", [&](std::uint64_t seed) {
        Rng rng(seed);
        const std::int64_t trials = cfg.count("simulate.frequencies", 100000);
        double worst_z = 0.0;
        json per_dim = json::array();
        for (int n : dims) {
            const MeasurementBasis basis = detail::random_basis(rng, n);
            const PureState v = random_state(rng, n);
            const auto un = static_cast<std::size_t>(n);
            const SimulationArrangement arr = build_simulation(
                basis, detail::random_phases(rng, un), detail::random_phases(rng, un));
            const ProbVec born = born_probs(v, basis);
            std::vector<std::int64_t> counts(un, 0);
            for (std::int64_t t = 0; t < trials; ++t) {
                ++counts[simulate_measurement(arr, v, rng).result];
            }
            for (std::size_t i = 0; i < un; ++i) {
                const double nt = static_cast<double>(trials);
                const double sigma = std::sqrt(nt * born[i] * (1.0 - born[i]));
                const double dev = std::abs(static_cast<double>(counts[i]) - nt * born[i]);
                worst_z = std::max(worst_z, sigma > 0.0 ? dev / sigma : dev);
            }
            per_dim.push_back({{"N", n}, {"counts", counts}, {"born", born}});
        }
        return Outcome{worst_z < 3.0, worst_z, 3.0,
                       trials * static_cast<std::int64_t>(dims.size()),
                       {{"runs", per_dim}}};
    }));

    out.push_back(run_check(cfg, "simulate.repeatability", [&](std::uint64_t seed) {
        Rng rng(seed);
        const std::int64_t trials = cfg.count("simulate.repeatability", 100000);
        std::int64_t mismatches = 0;
        double worst_state = 0.0;
        const int n = dims[dims.size() / 2];
        const MeasurementBasis basis = detail::random_basis(rng, n);
        const auto un = static_cast<std::size_t>(n);
        const SimulationArrangement arr = build_simulation(
            basis, detail::random_phases(rng, un), detail::random_phases(rng, un));
        for (std::int64_t t = 0; t < trials; ++t) {
            const PureState v = random_state(rng, n);
            const MeasurementOutcome first = simulate_measurement(arr, v, rng);
            const MeasurementOutcome second = simulate_measurement(arr, first.output, rng);
            mismatches += first.result != second.result ? 1 : 0;
            worst_state = std::max(worst_state, detail::distance_mod_phase(
                first.output.vec(),
                basis.matrix().col(static_cast<Eigen::Index>(first.result))));
        }
        return Outcome{mismatches == 0 && worst_state < 1e-12,
                       static_cast<double>(mismatches), 1.0, trials,
                       {{"N", n}, {"output_vs_basis_mod_phase", worst_state}}};
    }));

    out.push_back(run_check(cfg, "simulate.phase_independence", [&](std::uint64_t seed) {
        // identical random streams through two arrangements that differ only
        // in the free phases must give identical result sequences
        Rng setup(seed);
        const int n = dims.back();
        const auto un = static_cast<std::size_t>(n);
        const MeasurementBasis basis = detail::random_basis(setup, n);
        const PureState v = random_state(setup, n);
        const SimulationArrangement a = build_simulation(basis);
        const SimulationArrangement b = build_simulation(
            basis, detail::random_phases(setup, un), detail::random_phases(setup, un));
        const std::int64_t trials = cfg.count("simulate.phase_independence", 100000);
        Rng ra(derive_seed(seed, "stream")), rb(derive_seed(seed, "stream"));
        std::int64_t differ = 0;
        for (std::int64_t t = 0; t < trials; ++t) {
            differ += simulate_measurement(a, v, ra).result !=
                              simulate_measurement(b, v, rb).result
                          ? 1
                          : 0;
        }
        // rounding can move an inverse-CDF boundary by ~1e-16
        const double rate = static_cast<double>(differ) / static_cast<double>(trials);
        return Outcome{rate < 1e-4, rate, 1e-4, trials};
    }));
    return out;
}

// ---------------------------------------------------------------- compose

inline std::vector<CheckReport> suite_compose(const Config &cfg) {
    std::vector<CheckReport> out;
    const auto dims = cfg.dims({2, 3});

    out.push_back(run_check(cfg, "compose.tensor_vs_phase_reps", [&](std::uint64_t seed) {
        Rng rng(seed);
        const double tolerance = cfg.tol("compose.tensor_vs_phase_reps", 1e-12);
        const std::int64_t trials = cfg.count("compose.tensor_vs_phase_reps", 1000);
        double worst = 0.0;
        std::int64_t total = 0;
        for (int n : dims) {
            for (int m : dims) {
                for (std::int64_t t = 0; t < trials; ++t) {
                    const PhaseRep s1 = detail::random_phase_rep(rng, static_cast<std::size_t>(n));
                    const PhaseRep s2 = detail::random_phase_rep(rng, static_cast<std::size_t>(m));
                    const PureState via_reps = to_complex(from_phase_rep(compose_phase_reps(s1, s2)));
                    const PureState via_tensor = tensor(to_complex(from_phase_rep(s1)),
                                                        to_complex(from_phase_rep(s2)));
                    worst = std::max(worst, (via_reps.vec() - via_tensor.vec())
                                                .cwiseAbs()
                                                .maxCoeff());
                    ++total;
                }
            }
        }
        return Outcome{worst < tolerance, worst, tolerance, total};
    }));

    out.push_back(run_check(cfg, "compose.born_factorization", [&](std::uint64_t seed) {
        Rng rng(seed);
        const double tolerance = cfg.tol("compose.born_factorization", 1e-12);
        const std::int64_t trials = cfg.count("compose.born_factorization", 1000);
        double worst = 0.0;
        for (int n : dims) {
            for (int m : dims) {
                for (std::int64_t t = 0; t < trials; ++t) {
                    const MeasurementBasis b1 = detail::random_basis(rng, n);
                    const MeasurementBasis b2 = detail::random_basis(rng, m);
                    const PureState v1 = random_state(rng, n);
                    const PureState v2 = random_state(rng, m);
                    const ProbVec joint = born_probs(
                        tensor(v1, v2), MeasurementBasis(kron(b1.matrix(), b2.matrix())));
                    const ProbVec p1 = born_probs(v1, b1);
                    const ProbVec p2 = born_probs(v2, b2);
                    const CompositeIndex idx(p1.size(), p2.size());
                    for (std::size_t l = 0; l < joint.size(); ++l) {
                        const auto [i, j] = idx.split(l);
                        worst = std::max(worst, std::abs(joint[l] - p1[i] * p2[j]));
                    }
                }
            }
        }
        return Outcome{worst < tolerance, worst, tolerance,
                       trials * static_cast<std::int64_t>(dims.size() * dims.size())};
    }));

    out.push_back(run_check(cfg, "compose.energy_additivity", [&](std::uint64_t seed) {
        Rng rng(seed);
        const double tolerance = cfg.tol("compose.energy_additivity", 1e-12);
        const std::int64_t trials = cfg.count("compose.energy_additivity", 1000);
        std::uniform_real_distribution<double> energy(-5.0, 5.0), time(0.0, 3.0),
            action(0.5, 2.0);
        double worst = 0.0;
        for (std::int64_t t = 0; t < trials; ++t) {
            const PhaseRep s1 = detail::random_phase_rep(rng, 2);
            const PhaseRep s2 = detail::random_phase_rep(rng, 3);
            worst = std::max(worst, energy_additivity_check(s1, s2, energy(rng), energy(rng),
                                                            time(rng), action(rng)));
        }
        return Outcome{worst < tolerance, worst, tolerance, trials};
    }));

    out.push_back(run_check(cfg, "compose.gauge_compatibility", [&](std::uint64_t seed) {
        Rng rng(seed);
        std::uniform_real_distribution<double> angle(0.0, two_pi);
        double worst = 0.0;
        for (int t = 0; t < 1000; ++t) {
            const PureState v1 = random_state(rng, 2);
            const PureState v2 = random_state(rng, 3);
            const double phi0 = angle(rng);
            const PureState target = gauge_shift(tensor(v1, v2), phi0);
            worst = std::max({worst,
                              (tensor(gauge_shift(v1, phi0), v2).vec() - target.vec())
                                  .cwiseAbs()
                                  .maxCoeff(),
                              (tensor(v1, gauge_shift(v2, phi0)).vec() - target.vec())
                                  .cwiseAbs()
                                  .maxCoeff()});
        }
        return Outcome{worst < 1e-12, worst, 1e-12, 1000};
    }));

    out.push_back(run_check(cfg, "compose.subsystem_expectation", [&](std::uint64_t seed) {
        Rng rng(seed);
        const double tolerance = cfg.tol("compose.subsystem_expectation", 1e-12);
        const std::int64_t trials = cfg.count("compose.subsystem_expectation", 1000);
        std::normal_distribution<double> normal;
        double worst = 0.0;
        for (int n : dims) {
            for (int m : dims) {
                for (std::int64_t t = 0; t < trials; ++t) {
                    std::vector<double> values(static_cast<std::size_t>(n));
                    for (double &x : values) {
                        x = normal(rng);
                    }
                    const Observable a(detail::random_basis(rng, n), values);
                    const PureState v1 = random_state(rng, n);
                    const PureState v2 = random_state(rng, m);
                    const double single = expected_value(v1, a);
                    const Observable first =
                        subsystem_observable(a, static_cast<std::size_t>(m),
                                             SubsystemPosition::first);
                    const Observable second =
                        subsystem_observable(a, static_cast<std::size_t>(m),
                                             SubsystemPosition::second);
                    worst = std::max({worst,
                                      std::abs(expected_value(tensor(v1, v2), first) - single),
                                      std::abs(expected_value(tensor(v2, v1), second) - single)});
                }
            }
        }
        return Outcome{worst < tolerance, worst, tolerance,
                       trials * static_cast<std::int64_t>(dims.size() * dims.size())};
    }));

    out.push_back(run_check(cfg, "compose.degenerate_grouping", [&](std::uint64_t) {
        // N = 3 results, values (b1, b2, b2): p' = (p1, p2 + p3)
        const PureState v(ComplexVector{{std::sqrt(0.2), std::sqrt(0.3), std::sqrt(0.5)}});
        const MeasurementBasis basis = MeasurementBasis::standard(3);
        const ProbVec p = born_probs(v, basis);
        const auto grouped = degenerate_probs(v, basis, {{-1.0, 2.0, 2.0}});
        const bool exact = grouped.size() == 2 && grouped.at(-1.0) == p[0] &&
                           grouped.at(2.0) == p[1] + p[2];
        const double dev = std::max(std::abs(grouped.at(-1.0) - 0.2),
                                    std::abs(grouped.at(2.0) - 0.8));
        return Outcome{exact && dev < 1e-12, dev, 1e-12, 1,
                       {{"grouped", {grouped.at(-1.0), grouped.at(2.0)}},
                        {"exact_sum", exact}}};
    }));
    return out;
}

// ---------------------------------------------------------------- dynamics

inline std::vector<CheckReport> suite_dynamics(const Config &cfg) {
    std::vector<CheckReport> out;

    out.push_back(run_check(cfg, "dynamics.hj_correspondence", [&](std::uint64_t seed) {
        Rng rng(seed);
        const double tolerance = cfg.tol("dynamics.hj_correspondence", 1e-12);
        const std::int64_t trials = cfg.count("dynamics.hj_correspondence", 1000);
        std::uniform_real_distribution<double> energy(-5.0, 5.0), time(0.0, 3.0),
            action(0.5, 2.0);
        double worst = 0.0;
        for (std::int64_t t = 0; t < trials; ++t) {
            const PhaseRep rep = detail::random_phase_rep(rng, 4);
            const double e = energy(rng), dt = time(rng), alpha = action(rng);
            const PhaseRep evolved = evolve_stationary(rep, StationaryEvolution(e, alpha), dt);
            HJGridState hj{1.0, 0.0, 1.0, rep.probs(), {}, {}};
            for (std::size_t i = 0; i < rep.size(); ++i) {
                hj.s.push_back(alpha * *rep.chi(i));
            }
            const HJGridState stepped = hj_stationary_step(hj, e, dt);
            for (std::size_t i = 0; i < rep.size(); ++i) {
                worst = std::max(worst, angle_distance(stepped.s[i] / alpha, *evolved.chi(i)));
                worst = std::max(worst, std::abs(stepped.p[i] - evolved.probs()[i]));
            }
        }
        return Outcome{worst < tolerance, worst, tolerance, trials};
    }));

    const auto convergence = [&](const std::string &check, const std::string &family) {
        return run_check(cfg, check, [&, family](std::uint64_t) {
            const double min_ratio = cfg.tol(check, 3.5);
            constexpr double t = 0.5;
            const HJGrid coarse{65, 0.1, -3.2, 1.0};
            const HJGrid fine{129, 0.05, -3.2, 1.0};
            const HJResidual rc = hj_residual(hj_family(family, coarse), t, 0.02);
            const HJResidual rf = hj_residual(hj_family(family, fine), t, 0.01);
            const double c_ratio = rc.continuity / rf.continuity;
            const double h_ratio = rc.hamilton_jacobi / rf.hamilton_jacobi;
            const double gap = detail::shortfall(min_ratio, std::min(c_ratio, h_ratio));
            return Outcome{gap < 1.0, gap, 1.0, 2,
                           {{"coarse", {rc.continuity, rc.hamilton_jacobi}},
                            {"fine", {rf.continuity, rf.hamilton_jacobi}},
                            {"ratios", {c_ratio, h_ratio}}}};
        });
    };
    out.push_back(convergence("dynamics.hj_free_particle_convergence", "free-particle"));
    out.push_back(convergence("dynamics.hj_stationary_convergence", "stationary-wave"));

    out.push_back(run_check(cfg, "dynamics.plane_wave_exact", [&](std::uint64_t) {
        const HJResidual r = hj_residual(hj_family("plane-wave", HJGrid{}), 0.3, 0.01);
        const double worst = std::max(r.continuity, r.hamilton_jacobi);
        return Outcome{worst < 1e-9, worst, 1e-9, 1};
    }));

    out.push_back(run_check(cfg, "dynamics.evolution_is_unitary", [&](std::uint64_t seed) {
        Rng rng(seed);
        std::uniform_real_distribution<double> energy(-5.0, 5.0), time(0.0, 3.0);
        std::int64_t not_unitary = 0;
        double worst = 0.0;
        for (int t = 0; t < 200; ++t) {
            const PhaseRep rep = detail::random_phase_rep(rng, 3);
            const StationaryEvolution ev(energy(rng), 1.0);
            const double dt = time(rng);
            const GaugeMap g = classify(realify(stationary_gauge_map(3, rep.a(), ev, dt)));
            not_unitary += g.kind() == MapKind::unitary ? 0 : 1;
            const ProbVec before = rep.probs();
            const ProbVec after = evolve_stationary(rep, ev, dt).probs();
            worst = std::max(worst, detail::max_abs_diff(before, after));
            // complex-form agreement
            const PureState a = apply(g, to_complex(from_phase_rep(rep)));
            const PureState b = to_complex(from_phase_rep(evolve_stationary(rep, ev, dt)));
            worst = std::max(worst, (a.vec() - b.vec()).cwiseAbs().maxCoeff());
        }
        return Outcome{not_unitary == 0 && worst < 1e-12, worst, 1e-12, 200,
                       {{"not_unitary", not_unitary}}};
    }));
    return out;
}

// ---------------------------------------------------------------- haar

inline std::vector<CheckReport> suite_haar(const Config &cfg) {
    std::vector<CheckReport> out;
    const auto dims = cfg.dims({3});
    const int n = dims.front();

    const auto metric = [&](const std::string &name, bool anti) {
        return run_check(cfg, name, [&, anti](std::uint64_t seed) {
            Rng rng(seed);
            const double tolerance = cfg.tol(name, 1e-10);
            const std::int64_t maps = cfg.count(name + ".maps", 100);
            const std::int64_t pairs = cfg.count(name + ".pairs", 10000);
            double worst = 0.0;
            for (std::int64_t k = 0; k < maps; ++k) {
                const ComplexMatrix v = haar_unitary(rng, n);
                const GaugeMap g = anti ? GaugeMap::antiunitary(v) : GaugeMap::unitary(v);
                worst = std::max(worst, metric_invariance_check(
                                            g, static_cast<std::size_t>(pairs), rng()));
            }
            return Outcome{worst < tolerance, worst, tolerance, maps * pairs};
        });
    };
    out.push_back(metric("haar.metric_unitary", false));
    out.push_back(metric("haar.metric_antiunitary", true));

    const std::int64_t samples = cfg.count("haar.measure.samples", 100000);
    constexpr int bins = 20;
    const auto measure = [&](const std::string &name, auto make_map, bool expect_pass) {
        return run_check(cfg, name, [&, make_map, expect_pass](std::uint64_t seed) {
            Rng rng(seed);
            const StateMap map = make_map(rng);
            const auto r = measure_invariance_check(map, n, static_cast<std::size_t>(samples),
                                                    bins, rng());
            json tests = json::array();
            for (const auto &t : r.tests) {
                tests.push_back({{"statistic", t.statistic},
                                 {"value", t.value},
                                 {"dof", t.dof},
                                 {"p_value", t.p_value}});
            }
            // per-test level after Bonferroni
            const double level = r.significance / static_cast<double>(r.tests.size());
            const double gap = expect_pass ? detail::shortfall(level, r.min_p_value())
                                           : r.min_p_value() / level;
            return Outcome{r.passed == expect_pass && gap < 1.0, gap, 1.0, samples,
                           {{"tests", tests},
                            {"min_p_value", r.min_p_value()},
                            {"verdict", r.passed ? "uniform" : "not_uniform"}}};
        });
    };
    out.push_back(measure("haar.measure_identity", [n](Rng &) -> StateMap {
        return [](const PureState &v) { return v; };
    }, true));
    out.push_back(measure("haar.measure_unitary", [n](Rng &rng) -> StateMap {
        const GaugeMap g = GaugeMap::unitary(haar_unitary(rng, n));
        return [g](const PureState &v) { return apply(g, v); };
    }, true));
    out.push_back(measure("haar.measure_antiunitary", [n](Rng &rng) -> StateMap {
        const GaugeMap g = GaugeMap::antiunitary(haar_unitary(rng, n));
        return [g](const PureState &v) { return apply(g, v); };
    }, true));
    out.push_back(measure("haar.negative_control", [](Rng &) -> StateMap {
        return square_and_renormalize;
    }, false));

    out.push_back(run_check(cfg, "haar.moments", [&](std::uint64_t seed) {
        const std::int64_t count = cfg.count("haar.moments", 100000);
        double worst_z = 0.0;
        json means = json::array();
        for (int dim : {1, 4}) {
            StateSampler sampler(dim, derive_seed(seed, static_cast<std::uint64_t>(dim)));
            // N = 1: cos^2 of the phase; N = 4: |v_0|^2
            double sum = 0.0, sum2 = 0.0;
            for (std::int64_t k = 0; k < count; ++k) {
                const PureState v = sampler.next();
                const double x = dim == 1 ? std::pow(std::cos(std::arg(v[0])), 2)
                                          : std::norm(v[0]);
                sum += x;
                sum2 += x * x;
            }
            const double c = static_cast<double>(count);
            const double mean = sum / c;
            const double se = std::sqrt((sum2 / c - mean * mean) / c);
            const double expected = dim == 1 ? 0.5 : 0.25;
            worst_z = std::max(worst_z, std::abs(mean - expected) / se);
            means.push_back({{"N", dim}, {"mean", mean}, {"expected", expected}});
        }
        return Outcome{worst_z < 3.0, worst_z, 3.0, 2 * count, {{"means", means}}};
    }));

    out.push_back(run_check(cfg, "haar.rotation_invariance", [&](std::uint64_t seed) {
        const std::int64_t count = cfg.count("haar.rotation_invariance", 20000);
        Rng rng(seed);
        const RealVector u1 = RealVector::Unit(2 * n, 0);
        const RealVector u2 = random_unit_vector(rng, 2 * n);
        const auto r = ks_two_sample(
            projections(u1, n, static_cast<std::size_t>(count), derive_seed(seed, "a")),
            projections(u2, n, static_cast<std::size_t>(count), derive_seed(seed, "b")));
        const double gap = detail::shortfall(1e-3, r.p_value);
        return Outcome{gap < 1.0, gap, 1.0, 2 * count,
                       {{"ks_statistic", r.statistic}, {"p_value", r.p_value}}};
    }));
    return out;
}

// ---------------------------------------------------------------- registry

using SuiteFn = std::vector<CheckReport> (*)(const Config &);

inline const std::vector<std::pair<std::string, SuiteFn>> &suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> table{
        {"metric", suite_metric},         {"coin", suite_coin},
        {"measure-solver", suite_measure_solver},
        {"classify", suite_classify},     {"born", suite_born},
        {"simulate", suite_simulate},     {"compose", suite_compose},
        {"dynamics", suite_dynamics},     {"haar", suite_haar},
    };
    return table;
}

/// Runs one suite by name, or every suite for "all".
inline std::vector<CheckReport> run_suite(std::string_view name, const Config &cfg) {
    std::vector<CheckReport> out;
    bool found = false;
    for (const auto &[suite, fn] : suites()) {
        if (name == "all" || name == suite) {
            found = true;
            auto r = fn(cfg);
            out.insert(out.end(), std::make_move_iterator(r.begin()),
                       std::make_move_iterator(r.end()));
        }
    }
    if (!found) {
        throw InvariantError("unknown suite '" + std::string(name) + "'");
    }
    return out;
}

} // namespace qrecon::verify
