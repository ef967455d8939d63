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


#include <set>

#include <gtest/gtest.h>

#include "qrecon/verify/suites.hpp"

namespace qrecon::verify {
namespace {

TEST(DeriveSeed, DependsOnNameAndMaster) {
    EXPECT_EQ(derive_seed(42, "a"), derive_seed(42, "a"));
    EXPECT_NE(derive_seed(42, "a"), derive_seed(42, "b"));
    EXPECT_NE(derive_seed(42, "a"), derive_seed(43, "a"));
}

TEST(Config, ParsesAllKeys) {
    const Config c = Config::from_json(json::parse(
        R"({"seed": 7, "tolerances": {"x": 1e-3}, "dimensions": [2, 3], "trials": {"y": 5}})"));
    EXPECT_EQ(c.seed, 7u);
    EXPECT_EQ(c.tol("x", 1.0), 1e-3);
    EXPECT_EQ(c.tol("z", 1.0), 1.0);
    EXPECT_EQ(c.dims({9}), (std::vector<int>{2, 3}));
    EXPECT_EQ(c.count("y", 1), 5);
    EXPECT_EQ(c.count("w", 1), 1);
}

TEST(Config, RejectsBadInput) {
    EXPECT_THROW(Config::from_json(json::parse(R"({"sed": 1})")), InvariantError);
    EXPECT_THROW(Config::from_json(json::parse(R"({"dimensions": [0]})")), InvariantError);
    EXPECT_THROW(Config::from_json(json::parse("[1]")), InvariantError);
    EXPECT_ANY_THROW(Config::from_json(json::parse(R"({"seed": "x"})")));
}

TEST(Config, TrialsOverrideWins) {
    Config c;
    c.trials["a"] = 3;
    c.trials_override = 9;
    EXPECT_EQ(c.count("a", 1), 9);
}

TEST(RunCheck, ExceptionsBecomeErrors) {
    const CheckReport r = run_check(Config{}, "boom", [](std::uint64_t) -> Outcome {
        throw DomainError("bad");
    });
    EXPECT_EQ(r.status, Status::error);
    EXPECT_EQ(r.details["error"], "bad");
}

TEST(RunCheck, PassRequiresResidualBelowTolerance) {
    const CheckReport r = run_check(Config{}, "x", [](std::uint64_t) {
        return Outcome{true, 2.0, 1.0, 1};
    });
    EXPECT_EQ(r.status, Status::fail);
    const CheckReport ok = run_check(Config{}, "x", [](std::uint64_t) {
        return Outcome{true, 0.5, 1.0, 1};
    });
    EXPECT_EQ(ok.status, Status::pass);
    EXPECT_EQ(ok.seed, derive_seed(42, "x"));
}

TEST(RunSuite, UnknownNameThrows) {
    EXPECT_THROW(run_suite("nope", Config{}), InvariantError);
}

TEST(RunSuite, DeterministicApartFromElapsed) {
    Config c;
    c.seed = 5;
    const auto a = run_suite("compose", c);
    const auto b = run_suite("compose", c);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_EQ(to_json_line(a[k], false).dump(), to_json_line(b[k], false).dump());
    }
}

TEST(RunSuite, EveryPassIsBelowTolerance) {
    for (const char *suite : {"metric", "coin", "measure-solver", "dynamics"}) {
        for (const auto &r : run_suite(suite, Config{})) {
            EXPECT_EQ(r.status, Status::pass) << r.check;
            EXPECT_LT(r.max_residual, r.tolerance) << r.check;
        }
    }
}

TEST(RunSuite, ToleranceOverrideCanFailACheck) {
    Config c;
    c.tolerances["coin.metric_expansion"] = 1e-12;
    const auto reports = run_suite("coin", c);
    EXPECT_EQ(reports.front().status, Status::fail);
    EXPECT_FALSE(summarize(reports).ok());
    EXPECT_EQ(summary_line("coin", c, summarize(reports))["status"], "fail");
}

TEST(RunSuite, CheckNamesAreUnique) {
    Config c;
    c.trials_override = 2;
    c.dimensions = {2};
    std::set<std::string> names;
    for (const auto &r : run_suite("all", c)) {
        EXPECT_TRUE(names.insert(r.check).second) << r.check;
    }
}

} // namespace
} // namespace qrecon::verify
