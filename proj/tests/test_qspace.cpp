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

#include <gtest/gtest.h>

#include "qrecon/qspace.hpp"
#include "qrecon/random.hpp"

namespace qrecon {
namespace {

const double r2 = std::sqrt(0.5);

TEST(QVector, Validation) {
    EXPECT_THROW(QVector({1.0, 0.0, 0.0}), InvariantError);
    EXPECT_THROW(QVector({1.0, 1.0}), InvariantError);
    EXPECT_THROW(QVector(std::vector<double>{}), InvariantError);
    EXPECT_EQ(QVector({0.6, 0.0, 0.0, 0.8}).results(), 2u);
}

TEST(PhaseRep, AbsentPhaseRules) {
    EXPECT_THROW(PhaseRep(ProbVec({1.0, 0.0}), {0.0, 1.0}), InvariantError);
    EXPECT_THROW(PhaseRep(ProbVec({0.5, 0.5}), {0.0, std::nullopt}), InvariantError);
    EXPECT_THROW(PhaseRep(ProbVec({0.5, 0.5}), {0.0, 0.0}, 0.0), InvariantError);
    const PhaseRep r(ProbVec({0.5, 0.5}), {-pi / 2, 7.0});
    EXPECT_NEAR(*r.phase(0), 3 * pi / 2, 1e-15);
    EXPECT_NEAR(*r.phase(1), 7.0 - two_pi, 1e-15);
}

TEST(PhaseRep, ChiFromConstants) {
    const PhaseRep r = PhaseRep::from_phases(ProbVec({0.5, 0.5}), {1.0, 2.0}, 2.0, 0.5);
    EXPECT_DOUBLE_EQ(*r.chi(0), 0.25);
    EXPECT_DOUBLE_EQ(*r.chi(1), 0.75);
}

TEST(FromPhaseRep, Examples) {
    const QVector a = from_phase_rep(PhaseRep(ProbVec({1.0, 0.0}), {0.0, std::nullopt}));
    EXPECT_EQ(std::vector<double>(a.entries().begin(), a.entries().end()),
              (std::vector<double>{1.0, 0.0, 0.0, 0.0}));
    const QVector b = from_phase_rep(PhaseRep::from_phases(ProbVec({0.5, 0.5}), {0.0, pi / 2}));
    EXPECT_NEAR(b[0], r2, 1e-15);
    EXPECT_NEAR(b[1], 0.0, 1e-15);
    EXPECT_NEAR(b[2], 0.0, 1e-15);
    EXPECT_NEAR(b[3], r2, 1e-15);
}

TEST(ToPhaseRep, Examples) {
    const PhaseRep a = to_phase_rep(QVector({1.0, 0.0, 0.0, 0.0}));
    EXPECT_EQ(a.probs(), ProbVec({1.0, 0.0}));
    EXPECT_EQ(*a.phase(0), 0.0);
    EXPECT_FALSE(a.phase(1));
    const PhaseRep b = to_phase_rep(QVector({0.6, 0.0, 0.0, 0.8}));
    EXPECT_NEAR(b.probs()[0], 0.36, 1e-15);
    EXPECT_NEAR(b.probs()[1], 0.64, 1e-15);
    EXPECT_NEAR(*b.phase(1), pi / 2, 1e-15);
}

TEST(ResultProbs, Examples) {
    EXPECT_EQ(result_probs(QVector({1.0, 0.0, 0.0, 0.0})), ProbVec({1.0, 0.0}));
    const ProbVec p = result_probs(QVector({0.5, 0.5, 0.5, 0.5}));
    EXPECT_DOUBLE_EQ(p[0], 0.5);
    EXPECT_DOUBLE_EQ(p[1], 0.5);
}

TEST(Polarities, Examples) {
    const auto a = polarities(QVector({1.0, 0.0, 0.0, 0.0}));
    EXPECT_EQ(a[0], 1);
    EXPECT_FALSE(a[1] || a[2] || a[3]);
    const auto b = polarities(QVector({-r2, 0.0, 0.0, r2}));
    EXPECT_EQ(b[0], -1);
    EXPECT_FALSE(b[1] || b[2]);
    EXPECT_EQ(b[3], 1);
    EXPECT_FALSE(polarities(QVector({1.0, 1e-13, 0.0, 0.0}))[1]);
}

TEST(ComplexForm, Examples) {
    const PureState a = to_complex(QVector({1.0, 0.0, 0.0, 0.0}));
    EXPECT_EQ(a[0], complex(1.0, 0.0));
    EXPECT_EQ(a[1], complex(0.0, 0.0));
    const PureState b = to_complex(QVector({0.0, 1.0, 0.0, 0.0}));
    EXPECT_EQ(b[0], complex(0.0, 1.0));
    const QVector back = from_complex(b);
    EXPECT_EQ(back[1], 1.0);
}

TEST(ComplexForm, RoundTripsExactly) {
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        const PureState v = random_state(rng, 4);
        EXPECT_EQ(to_complex(from_complex(v)).vec(), v.vec());
        const ProbVec p = result_probs(from_complex(v));
        for (std::size_t i = 0; i < 4; ++i) {
            EXPECT_NEAR(std::norm(v[i]), p[i], 1e-15);
        }
    }
}

TEST(PhaseRepRoundTrip, BothDirections) {
    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
        const QVector q = from_complex(random_state(rng, 3));
        const QVector back = from_phase_rep(to_phase_rep(q));
        for (std::size_t k = 0; k < q.size(); ++k) {
            EXPECT_NEAR(back[k], q[k], 1e-14);
        }
        const PhaseRep rep = to_phase_rep(q);
        const PhaseRep again = to_phase_rep(from_phase_rep(rep));
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_LT(angle_distance(*again.phase(i), *rep.phase(i)), 1e-13);
        }
    }
}

TEST(GaugeShift, IdentityPeriodicityAndGroup) {
    Rng rng(9);
    const PureState v = random_state(rng, 3);
    EXPECT_EQ(gauge_shift(v, 0.0).vec(), v.vec());
    EXPECT_LT((gauge_shift(v, two_pi).vec() - v.vec()).cwiseAbs().maxCoeff(), 1e-12);
    const PureState twice = gauge_shift(gauge_shift(v, 0.4), 1.9);
    EXPECT_LT((twice.vec() - gauge_shift(v, 2.3).vec()).cwiseAbs().maxCoeff(), 1e-12);
    const ProbVec before = result_probs(from_complex(v));
    const ProbVec after = result_probs(from_complex(gauge_shift(v, 1.234)));
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NEAR(before[i], after[i], 1e-15);
    }
}

TEST(QSpaceMetric, OutcomeProbabilityPullbackIsEuclidean) {
    Rng rng(21);
    const double eps = 1e-5;
    int tested = 0;
    for (int t = 0; t < 200; ++t) {
        const RealVector q = random_unit_vector(rng, 6);
        if (q.cwiseAbs().minCoeff() < 1e-2) {
            continue;
        }
        const RealVector w = random_unit_vector(rng, 6);
        const auto normalized = [&](double s) -> RealVector {
            const RealVector x = q + s * w;
            return x / x.norm();
        };
        const RealVector dq = (normalized(eps) - normalized(-eps)) / (2 * eps);
        const RealVector dp =
            (normalized(eps).cwiseAbs2() - normalized(-eps).cwiseAbs2()) / (2 * eps);
        const double info = 0.25 * dp.cwiseAbs2().cwiseQuotient(q.cwiseAbs2()).sum();
        EXPECT_NEAR(info / dq.squaredNorm(), 1.0, 1e-8);
        ++tested;
    }
    EXPECT_GT(tested, 100);
}

} // namespace
} // namespace qrecon
