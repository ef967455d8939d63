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


#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "qrecon/measure_solver.hpp"

namespace qrecon {
namespace {

std::vector<double> grid(double lo, double hi, int count) {
    std::vector<double> g(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        g[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / (count - 1);
    }
    return g;
}

const EmbeddingFunction square{[](double x) { return x * x; },
                               [](double x) { return 2.0 * x; }, 0.0, 1.0};

TEST(InducedMeasure, CosSquaredIsTwo) {
    EXPECT_NEAR(induced_measure_density(cos2_embedding(1.0, 0.0, 0.0, pi / 2), pi / 5),
                2.0, 1e-12);
}

TEST(InducedMeasure, ChainRuleScalesWithA) {
    const EmbeddingFunction fn = cos2_embedding(3.0, 0.0, 0.0, pi / 6);
    for (double x : {0.05, 0.2, 0.4, 0.5}) {
        EXPECT_NEAR(induced_measure_density(fn, x), 6.0, 1e-11);
    }
}

TEST(InducedMeasure, Square) {
    EXPECT_NEAR(induced_measure_density(square, 0.5), 2.0 / std::sqrt(0.75), 1e-14);
    EXPECT_NEAR(induced_measure_density(square, 0.5), 2.3094, 1e-4);
}

TEST(InducedMeasure, Errors) {
    EXPECT_THROW(induced_measure_density(square, 0.0), DomainError);
    EXPECT_THROW(induced_measure_density(square, 1.0), DomainError);
    EXPECT_THROW(induced_measure_density(square, 1.5), DomainError);
}

TEST(TranslationInvariance, CosSquaredOverAPeriod) {
    // one period of cos^2(chi + 0.3) sampled away from the turning points
    std::vector<double> g;
    for (double x : grid(-0.3 + 1e-3, -0.3 + pi - 1e-3, 2001)) {
        if (std::abs(std::remainder(x + 0.3, pi / 2)) > 1e-3) {
            g.push_back(x);
        }
    }
    EXPECT_TRUE(is_translation_invariant(cos2_embedding(1.0, 0.3, -0.3, pi - 0.3), g, 1e-9));
}

TEST(TranslationInvariance, SquareFails) {
    const auto g = grid(0.1, 0.9, 1000);
    EXPECT_FALSE(is_translation_invariant(square, g, 1e-9));
    EXPECT_GT(induced_density_range(square, g).relative_variation(), 0.2);
}

TEST(TranslationInvariance, ConstantIsRejected) {
    const EmbeddingFunction constant{[](double) { return 0.5; },
                                     [](double) { return 0.0; }, 0.0, 1.0};
    EXPECT_THROW(is_translation_invariant(constant, grid(0.1, 0.9, 10), 1e-9), DomainError);
}

TEST(EmbeddingFunction, DerivativeConsistency) {
    EXPECT_TRUE(cos2_embedding(2.0, 0.1, 0.0, 1.0).consistent(grid(0.1, 0.9, 50)));
    const EmbeddingFunction wrong{[](double x) { return x * x; },
                                  [](double x) { return x; }, 0.0, 1.0};
    EXPECT_FALSE(wrong.consistent(grid(0.1, 0.9, 50)));
}

TEST(AmplitudePair, SumsToOne) {
    const AmplitudePair pair{0.7, -1.2};
    for (double x : grid(-5, 5, 101)) {
        EXPECT_NEAR(pair.f(x) * pair.f(x) + pair.f_tilde(x) * pair.f_tilde(x), 1.0, 1e-15);
    }
}

TEST(SolveFOde, StartsAtATurningPoint) {
    const std::vector<double> g{0.0, pi / 3};
    const auto f = solve_F_ode(1.0, 1.0, 0.0, g);
    EXPECT_EQ(f[0], 1.0);
    EXPECT_NEAR(f[1], 0.25, 1e-9);
}

TEST(SolveFOde, IntegratesBackwardToPeak) {
    const std::vector<double> g{0.0, pi / 4};
    const auto f = solve_F_ode(1.0, 0.5, pi / 4, g);
    EXPECT_NEAR(f[0], 1.0, 1e-9);
    EXPECT_EQ(f[1], 0.5);
}

TEST(SolveFOde, FollowsClosedFormAcrossTurningPoints) {
    for (int branch : {-1, 1}) {
        for (double a : {1.0, -2.0, 0.5}) {
            OdeOptions opts;
            opts.branch = branch;
            const double chi0 = 0.3, f0 = 0.4;
            const auto g = grid(chi0 - pi / std::abs(a), chi0 + 2 * pi / std::abs(a), 400);
            const auto f = solve_F_ode(a, f0, chi0, g, opts);
            const double b = closed_form_offset(a, f0, chi0, branch);
            EXPECT_NEAR(std::pow(std::cos(a * chi0 + b), 2), f0, 1e-15);
            // branch sign: derivative of cos^2(a chi + b) at chi0
            EXPECT_GT(-branch * a * std::sin(2 * (a * chi0 + b)), 0.0);
            for (std::size_t k = 0; k < g.size(); ++k) {
                EXPECT_NEAR(f[k], std::pow(std::cos(a * g[k] + b), 2), 1e-6);
            }
        }
    }
}

TEST(SolveFOde, Errors) {
    const std::vector<double> g{0.0, 1.0};
    EXPECT_THROW(solve_F_ode(0.0, 0.5, 0.0, g), DomainError);
    EXPECT_THROW(solve_F_ode(1.0, 1.5, 0.0, g), DomainError);
    const std::vector<double> descending{1.0, 0.0};
    EXPECT_THROW(solve_F_ode(1.0, 0.5, 0.0, descending), DomainError);
    OdeOptions bad;
    bad.branch = 0;
    EXPECT_THROW(solve_F_ode(1.0, 0.5, 0.0, g, bad), DomainError);
}

} // namespace
} // namespace qrecon
