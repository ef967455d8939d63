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
 * Verification harness plumbing: configuration, per-check reports and the
 * runner that times checks and turns exceptions into `error` reports.
 *
 * Per-check seeds are derive_seed(master_seed, check_name), so the order in
 * which checks run never changes their results.
 */
#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qrecon/random.hpp"
#include "qrecon/serialization.hpp"

namespace qrecon::verify {

enum class Status { pass, fail, error };

inline const char *to_string(Status s) {
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::error:
        return "error";
    }
    return "error";
}

struct CheckReport {
    std::string check;
    Status status = Status::error;
    double max_residual = 0.0;
    double tolerance = 0.0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    double elapsed = 0.0; // seconds; excluded from the determinism guarantee
    json details = json::object();
};

inline json to_json_line(const CheckReport &r, bool with_elapsed = true) {
    json j = {{"check", r.check},
              {"status", to_string(r.status)},
              {"max_residual", r.max_residual},
              {"tolerance", r.tolerance},
              {"trials", r.trials},
              {"seed", r.seed},
              {"details", r.details}};
    if (with_elapsed) {
        j["elapsed"] = r.elapsed;
    }
    return j;
}

/// Parsed from {seed, tolerances: {...}, dimensions: [...], trials: {...}}.
struct Config {
    std::uint64_t seed = 42;
    std::map<std::string, double> tolerances;
    std::vector<int> dimensions; // empty: each suite's own defaults
    std::map<std::string, std::int64_t> trials;
    std::optional<std::int64_t> trials_override;

    [[nodiscard]] double tol(const std::string &name, double fallback) const {
        const auto it = tolerances.find(name);
        return it == tolerances.end() ? fallback : it->second;
    }

    [[nodiscard]] std::int64_t count(const std::string &name,
                                     std::int64_t fallback) const {
        if (trials_override) {
            return *trials_override;
        }
        const auto it = trials.find(name);
        return it == trials.end() ? fallback : it->second;
    }

    [[nodiscard]] std::vector<int> dims(std::vector<int> fallback) const {
        return dimensions.empty() ? fallback : dimensions;
    }

    static Config from_json(const json &j) {
        Config c;
        if (!j.is_object()) {
            throw InvariantError("config: top level must be an object");
        }
        for (const auto &[key, _] : j.items()) {
            if (key != "seed" && key != "tolerances" && key != "dimensions" &&
                key != "trials") {
                throw InvariantError("config: unknown key '" + key + "'");
            }
        }
        c.seed = j.value("seed", c.seed);
        if (j.contains("tolerances")) {
            c.tolerances = j.at("tolerances").get<std::map<std::string, double>>();
        }
        if (j.contains("dimensions")) {
            c.dimensions = j.at("dimensions").get<std::vector<int>>();
        }
        if (j.contains("trials")) {
            c.trials = j.at("trials").get<std::map<std::string, std::int64_t>>();
        }
        for (int n : c.dimensions) {
            if (n < 1) {
                throw InvariantError("config: dimensions must be positive");
            }
        }
        return c;
    }
};

/// What a check body hands back.
struct Outcome {
    bool passed = false;
    double max_residual = 0.0;
    double tolerance = 0.0;
    std::int64_t trials = 0;
    json details = json::object();
};

/// Runs one named check with its derived seed.
inline CheckReport run_check(const Config &cfg, const std::string &name,
                             const std::function<Outcome(std::uint64_t)> &body) {
    CheckReport r;
    r.check = name;
    r.seed = derive_seed(cfg.seed, name);
    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome o = body(r.seed);
        // a pass must also sit below the declared tolerance
        r.status = o.passed && o.max_residual < o.tolerance ? Status::pass
                                                            : Status::fail;
        r.max_residual = o.max_residual;
        r.tolerance = o.tolerance;
        r.trials = o.trials;
        r.details = std::move(o.details);
    } catch (const std::exception &e) {
        r.status = Status::error;
        r.details = {{"error", e.what()}};
    }
    r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
    return r;
}

struct Summary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t errors = 0;

    [[nodiscard]] bool ok() const { return failed == 0 && errors == 0; }
};

inline Summary summarize(const std::vector<CheckReport> &reports) {
    Summary s;
    for (const auto &r : reports) {
        switch (r.status) {
        case Status::pass:
            ++s.passed;
            break;
        case Status::fail:
            ++s.failed;
            break;
        case Status::error:
            ++s.errors;
            break;
        }
    }
    return s;
}

inline json summary_line(const std::string &suite, const Config &cfg,
                         const Summary &s) {
    return {{"summary", true},
            {"suite", suite},
            {"seed", cfg.seed},
            {"checks", s.passed + s.failed + s.errors},
            {"passed", s.passed},
            {"failed", s.failed},
            {"errors", s.errors},
            {"status", s.ok() ? "pass" : "fail"}};
}

} // namespace qrecon::verify
