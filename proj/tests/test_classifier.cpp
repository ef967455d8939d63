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

#include "qrecon/classifier.hpp"
#include "qrecon/random.hpp"

namespace qrecon {
namespace {

RealMatrix block_diag(const std::vector<Eigen::Matrix2d> &blocks) {
    const auto n = static_cast<Eigen::Index>(blocks.size());
    RealMatrix m = RealMatrix::Zero(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m.block<2, 2>(2 * i, 2 * i) = blocks[static_cast<std::size_t>(i)];
    }
    return m;
}

double max_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

TEST(OrthogonalMap, Validation) {
    EXPECT_THROW(OrthogonalMap(RealMatrix::Identity(3, 3)), DimensionError);
    EXPECT_THROW(OrthogonalMap(2.0 * RealMatrix::Identity(4, 4)), InvariantError);
}

TEST(Classify, Identity) {
    const GaugeMap g = classify(RealMatrix::Identity(6, 6));
    ASSERT_EQ(g.kind(), MapKind::unitary);
    EXPECT_LT(max_diff(g.matrix(), ComplexMatrix::Identity(3, 3)), 1e-15);
}

TEST(Classify, BlockRotations) {
    const GaugeMap g = classify(block_diag({rotation(0.3), rotation(2.0)}));
    ASSERT_EQ(g.kind(), MapKind::unitary);
    ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
    expected(0, 0) = std::polar(1.0, 0.3);
    expected(1, 1) = std::polar(1.0, 2.0);
    EXPECT_LT(max_diff(g.matrix(), expected), 1e-15);
}

TEST(Classify, PureConjugation) {
    const GaugeMap g = classify(block_diag({reflection(), reflection()}));
    ASSERT_EQ(g.kind(), MapKind::antiunitary);
    EXPECT_LT(max_diff(g.matrix(), ComplexMatrix::Identity(2, 2)), 1e-15);
}

TEST(Classify, MixedBlockKindsAreRejected) {
    const GaugeMap g = classify(block_diag({rotation(0.1), reflection()}));
    ASSERT_EQ(g.kind(), MapKind::not_gauge_invariant);
    EXPECT_EQ(g.diagnostic()->condition, Violation::mixed_block_kinds);
    EXPECT_THROW((void)g.matrix(), Error);
}

TEST(Classify, ZeroBlocksAreWildcards) {
    // permutation of results: off-diagonal blocks carry everything
    RealMatrix m = RealMatrix::Zero(4, 4);
    m.block<2, 2>(0, 2) = rotation(0.5) * reflection();
    m.block<2, 2>(2, 0) = rotation(-1.0) * reflection();
    const GaugeMap g = classify(m);
    ASSERT_EQ(g.kind(), MapKind::antiunitary);
    EXPECT_NEAR(std::abs(g.matrix()(0, 1)), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(g.matrix()(0, 0)), 0.0, 1e-15);
}

TEST(Classify, GenericOrthogonalIsRejected) {
    Rng rng(17);
    for (int t = 0; t < 1000; ++t) {
        EXPECT_FALSE(classify(haar_orthogonal(rng, 4)).is_gauge_map());
    }
}

TEST(Classify, DiagnosticNamesACondition) {
    // rotates the real parts of results 0 and 1 and leaves imaginary parts
    RealMatrix m = RealMatrix::Identity(4, 4);
    const double c = std::cos(0.4), s = std::sin(0.4);
    m.block<2, 2>(0, 0) << c, 0, 0, 1;
    m.block<2, 2>(2, 0) << s, 0, 0, 0;
    m.block<2, 2>(0, 2) << -s, 0, 0, 0;
    m.block<2, 2>(2, 2) << c, 0, 0, 1;
    const GaugeMap g = classify(m);
    ASSERT_FALSE(g.is_gauge_map());
    EXPECT_EQ(g.diagnostic()->condition, Violation::column_norms_unequal);
    EXPECT_EQ(g.diagnostic()->row, 0);
    EXPECT_EQ(g.diagnostic()->col, 0);
}

TEST(Realify, Examples) {
    EXPECT_EQ(realify_unitary(ComplexMatrix::Identity(2, 2)).matrix(),
              RealMatrix::Identity(4, 4));
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = std::polar(1.0, 0.7);
    d(1, 1) = std::polar(1.0, -0.2);
    EXPECT_LT((realify_unitary(d).matrix() - block_diag({rotation(0.7), rotation(-0.2)}))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-15);
    EXPECT_EQ(realify_antiunitary(ComplexMatrix::Identity(2, 2)).matrix(),
              block_diag({reflection(), reflection()}));
    EXPECT_THROW(realify_unitary(2.0 * ComplexMatrix::Identity(2, 2)), InvariantError);
}

TEST(Realify, RoundTripThroughClassify) {
    Rng rng(2);
    for (Eigen::Index n = 2; n <= 5; ++n) {
        for (int t = 0; t < 50; ++t) {
            const ComplexMatrix v = haar_unitary(rng, n);
            const GaugeMap u = classify(realify_unitary(v));
            const GaugeMap a = classify(realify_antiunitary(v));
            ASSERT_EQ(u.kind(), MapKind::unitary);
            ASSERT_EQ(a.kind(), MapKind::antiunitary);
            EXPECT_LT(max_diff(u.matrix(), v), 1e-12);
            EXPECT_LT(max_diff(a.matrix(), v), 1e-12);
        }
    }
}

TEST(Apply, Examples) {
    Rng rng(8);
    const PureState v = random_state(rng, 3);
    EXPECT_EQ(apply(GaugeMap::unitary(ComplexMatrix::Identity(3, 3)), v).vec(), v.vec());
    const PureState w(ComplexVector{{complex(std::sqrt(0.5), 0), complex(0, std::sqrt(0.5))}});
    const PureState conj = apply(GaugeMap::antiunitary(ComplexMatrix::Identity(2, 2)), w);
    EXPECT_EQ(conj[1], complex(0, -std::sqrt(0.5)));
}

TEST(Compose, KindsFollowParity) {
    Rng rng(6);
    const ComplexMatrix v1 = haar_unitary(rng, 3), v2 = haar_unitary(rng, 3);
    const PureState s = random_state(rng, 3);
    for (bool a1 : {false, true}) {
        for (bool a2 : {false, true}) {
            const GaugeMap g1 = a1 ? GaugeMap::antiunitary(v1) : GaugeMap::unitary(v1);
            const GaugeMap g2 = a2 ? GaugeMap::antiunitary(v2) : GaugeMap::unitary(v2);
            const GaugeMap g = compose(g1, g2);
            EXPECT_EQ(g.is_antiunitary(), a1 != a2);
            EXPECT_LT((apply(g, s).vec() - apply(g1, apply(g2, s)).vec()).cwiseAbs().maxCoeff(),
                      1e-14);
            EXPECT_LT((apply(inverse(g1), apply(g1, s)).vec() - s.vec()).cwiseAbs().maxCoeff(),
                      1e-14);
        }
    }
}

TEST(Witness, GaugeMapsPassAndGenericMapsFail) {
    Rng rng(12);
    for (int t = 0; t < 50; ++t) {
        const ComplexMatrix v = haar_unitary(rng, 3);
        EXPECT_LT(gauge_invariance_witness(realify_unitary(v), 20, 1e-9, rng).max_deviation,
                  1e-12);
        EXPECT_LT(gauge_invariance_witness(realify_antiunitary(v), 20, 1e-9, rng).max_deviation,
                  1e-12);
        const auto w = gauge_invariance_witness(OrthogonalMap(haar_orthogonal(rng, 6)), 64,
                                                1e-9, rng);
        EXPECT_FALSE(w.passed);
        EXPECT_GT(w.max_deviation, 1e-2);
    }
}

TEST(Witness, SeededOverloadIsDeterministic) {
    Rng rng(1);
    const OrthogonalMap m(haar_orthogonal(rng, 4));
    EXPECT_EQ(gauge_invariance_witness(m, 10, 1e-9, std::uint64_t{5}).max_deviation,
              gauge_invariance_witness(m, 10, 1e-9, std::uint64_t{5}).max_deviation);
}

TEST(Bridge, UnitaryAndScaled) {
    Rng rng(4);
    const ComplexMatrix u = haar_unitary(rng, 3);
    const auto r = unitarity_orthogonality_bridge(u);
    EXPECT_LT(r.orthogonality, 1e-12);
    EXPECT_LT(r.unitarity, 1e-12);
    const auto s = unitarity_orthogonality_bridge(1.1 * u);
    // V^dagger V - I = 0.21 I: Frobenius 0.21 sqrt(3); realified doubles it
    EXPECT_NEAR(s.unitarity, 0.21 * std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(s.orthogonality, 0.21 * std::sqrt(6.0), 1e-12);
}

TEST(Bridge, VerdictsAgreeOnRandomMatrices) {
    Rng rng(30);
    std::normal_distribution<double> normal;
    for (int t = 0; t < 1000; ++t) {
        ComplexMatrix v(3, 3);
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            v(i) = complex(normal(rng), normal(rng));
        }
        const auto r = unitarity_orthogonality_bridge(v);
        EXPECT_EQ(r.orthogonality < 1e-10, r.unitarity < 1e-10);
        EXPECT_NEAR(r.orthogonality, std::sqrt(2.0) * r.unitarity, 1e-9 * r.unitarity);
    }
}

TEST(GaugeMap, RejectsNonUnitary) {
    EXPECT_THROW(GaugeMap::unitary(2.0 * ComplexMatrix::Identity(2, 2)), InvariantError);
}

} // namespace
} // namespace qrecon
