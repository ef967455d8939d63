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

#include "qrecon/random.hpp"
#include "qrecon/serialization.hpp"

namespace qrecon {
namespace {

TEST(Json, ProbVecAndQVector) {
    const json p = ProbVec({0.25, 0.75});
    EXPECT_EQ(p.dump(), "[0.25,0.75]");
    EXPECT_EQ(p.get<ProbVec>(), ProbVec({0.25, 0.75}));
    EXPECT_THROW(json::parse("[0.5,0.6]").get<ProbVec>(), InvariantError);
    const QVector q = json::parse("[0.6,0,0,0.8]").get<QVector>();
    EXPECT_EQ(json(q).dump(), "[0.6,0.0,0.0,0.8]");
}

TEST(Json, PureStateIsPairs) {
    const PureState v(ComplexVector{{complex(0, 1), complex(0, 0)}});
    EXPECT_EQ(json(v).dump(), "[[0.0,1.0],[0.0,0.0]]");
    Rng rng(1);
    const PureState w = random_state(rng, 4);
    EXPECT_EQ(json(w).get<PureState>().vec(), w.vec());
    EXPECT_THROW(json::parse("[[1,0,0]]").get<PureState>(), InvariantError);
}

TEST(Json, PhaseRepKeepsAbsentPhases) {
    const PhaseRep r(ProbVec({1.0, 0.0}), {0.5, std::nullopt}, 2.0, 0.1);
    const json j = r;
    EXPECT_TRUE(j["phi"][1].is_null());
    const PhaseRep back = j.get<PhaseRep>();
    EXPECT_EQ(back.phases(), r.phases());
    EXPECT_EQ(back.a(), 2.0);
    EXPECT_EQ(back.b(), 0.1);
}

TEST(Json, GaugeMapRoundTrip) {
    Rng rng(2);
    for (bool anti : {false, true}) {
        const ComplexMatrix v = haar_unitary(rng, 3);
        const GaugeMap g = anti ? GaugeMap::antiunitary(v) : GaugeMap::unitary(v);
        const json j = g;
        EXPECT_EQ(j["kind"], anti ? "antiunitary" : "unitary");
        const GaugeMap back = j.get<GaugeMap>();
        EXPECT_EQ(back.kind(), g.kind());
        EXPECT_EQ(back.matrix(), g.matrix());
    }
    const GaugeMap rejected = classify(haar_orthogonal(rng, 4));
    const json j = rejected;
    EXPECT_EQ(j["kind"], "not_gauge_invariant");
    EXPECT_TRUE(j.contains("condition"));
    EXPECT_EQ(j.get<GaugeMap>().diagnostic()->condition, rejected.diagnostic()->condition);
}

TEST(Json, MatricesRoundTrip) {
    Rng rng(3);
    const RealMatrix m = haar_orthogonal(rng, 4);
    EXPECT_EQ(real_matrix_from_json(matrix_to_json(m)), m);
    const ComplexMatrix c = haar_unitary(rng, 3);
    EXPECT_EQ(complex_matrix_from_json(matrix_to_json(c)), c);
    EXPECT_THROW(real_matrix_from_json(json::parse("[[1,2],[3]]")), Error);
}

TEST(Json, ObservableRoundTrip) {
    Rng rng(4);
    const Observable obs(MeasurementBasis(haar_unitary(rng, 2)), {1.0, -2.0});
    const Observable back = json(obs).get<Observable>();
    EXPECT_EQ(back.values(), obs.values());
    EXPECT_EQ(back.basis().matrix(), obs.basis().matrix());
}

TEST(Json, HJGridStateAndRecords) {
    const HJGridState s{0.1, -1.0, 2.0, ProbVec({0.5, 0.5}), {1.0, 2.0}, {}};
    const json j = s;
    EXPECT_FALSE(j.contains("V"));
    const HJGridState back = j.get<HJGridState>();
    EXPECT_EQ(back.s, s.s);
    EXPECT_EQ(back.mass, 2.0);

    const PureState v = PureState::basis(6, 4);
    const json c = composite_to_json(CompositeIndex(2, 3), v);
    EXPECT_EQ(c["N"], 2);
    EXPECT_EQ(c["N_prime"], 3);
    const json t = trial_to_json(7, MeasurementOutcome{1, PureState::basis(2, 1)});
    EXPECT_EQ(t["trial"], 7);
    EXPECT_EQ(t["result"], 1);
}

} // namespace
} // namespace qrecon
