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


// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance <path-to-qrecon-cli>
//
// Criteria 1-8 run the named checks in-process with the tolerances pinned
// below; criterion 9 runs `qrecon verify all` twice through the CLI and
// compares the report streams with elapsed fields removed.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qrecon/verify/suites.hpp"

namespace {

using namespace qrecon::verify;

struct Criterion {
    int id;
    std::string title;
    std::string suite;
    std::vector<std::string> checks;
    double time_limit; // seconds
};

Config pinned() {
    Config c;
    c.seed = 42;
    c.tolerances = {
        {"coin.metric_expansion", 0.02},
        {"ode.closed_form", 1e-6},
        {"measure.cos2_constant", 1e-9},
        {"measure.non_sinusoidal_rejected", 0.10},
        {"classify.unitary_roundtrip", 1e-9},
        {"classify.antiunitary_roundtrip", 1e-9},
        {"classify.generic_rejected", 1e-2},
        {"born.simulation_equals_born", 1e-12},
        {"compose.tensor_vs_phase_reps", 1e-12},
        {"compose.born_factorization", 1e-12},
        {"compose.energy_additivity", 1e-12},
        {"compose.subsystem_expectation", 1e-12},
        {"haar.metric_unitary", 1e-10},
        {"haar.metric_antiunitary", 1e-10},
        {"dynamics.hj_correspondence", 1e-12},
        {"dynamics.hj_free_particle_convergence", 3.5},
    };
    c.trials = {
        {"coin.monte_carlo", 100000},
        {"classify.corpus", 1000},
        {"born.simulation_equals_born", 1000},
        {"simulate.frequencies", 100000},
        {"simulate.repeatability", 100000},
        {"compose.tensor_vs_phase_reps", 1000},
        {"compose.born_factorization", 1000},
        {"compose.energy_additivity", 1000},
        {"haar.metric_unitary.maps", 100},
        {"haar.metric_unitary.pairs", 10000},
        {"haar.metric_antiunitary.maps", 100},
        {"haar.metric_antiunitary.pairs", 10000},
        {"haar.measure.samples", 100000},
    };
    return c;
}

const std::vector<Criterion> criteria{
    {1, "Bayes factor vs. information metric", "coin",
     {"coin.metric_expansion", "coin.monte_carlo"}, 30},
    {2, "f, f~ determination", "measure-solver",
     {"ode.closed_form", "measure.cos2_constant", "measure.non_sinusoidal_rejected"}, 10},
    {3, "Wigner reproduction", "classify",
     {"classify.unitary_roundtrip", "classify.antiunitary_roundtrip",
      "classify.generic_rejected", "classify.witness_agreement"}, 120},
    {4, "Born rule and simulation", "",
     {"born.simulation_equals_born", "simulate.frequencies", "simulate.repeatability"}, 60},
    {5, "Composite rule", "compose",
     {"compose.tensor_vs_phase_reps", "compose.born_factorization",
      "compose.energy_additivity"}, 30},
    {6, "Subsystem and degenerate measurements", "compose",
     {"compose.subsystem_expectation", "compose.degenerate_grouping"}, 10},
    {7, "Invariant metric and measure", "haar",
     {"haar.metric_unitary", "haar.metric_antiunitary", "haar.measure_identity",
      "haar.measure_unitary", "haar.negative_control"}, 120},
    {8, "Stationary dynamics and HJ residuals", "dynamics",
     {"dynamics.hj_correspondence", "dynamics.hj_free_particle_convergence"}, 30},
};

bool report(int id, const std::string &title, bool ok, const std::string &detail) {
    std::cout << "criterion " << id << " " << (ok ? "PASS" : "FAIL") << "  " << title
              << "  [" << detail << "]" << std::endl;
    return ok;
}

bool run_criterion(const Criterion &c, const Config &cfg) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckReport> reports;
    for (const std::string suite :
         c.suite.empty() ? std::vector<std::string>{"born", "simulate"}
                         : std::vector<std::string>{c.suite}) {
        auto r = run_suite(suite, cfg);
        reports.insert(reports.end(), r.begin(), r.end());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = elapsed < c.time_limit;
    std::ostringstream detail;
    for (const std::string &name : c.checks) {
        const auto it = std::find_if(reports.begin(), reports.end(),
                                     [&](const CheckReport &r) { return r.check == name; });
        if (it == reports.end()) {
            ok = false;
            detail << name << "=missing ";
            continue;
        }
        ok = ok && it->status == Status::pass;
        detail << name << "=" << to_string(it->status) << " (" << it->max_residual << " < "
               << it->tolerance << ", n=" << it->trials << ") ";
    }
    detail << "time " << elapsed << "s < " << c.time_limit << "s";
    return report(c.id, c.title, ok, detail.str());
}

std::string strip_elapsed(const std::string &path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return std::regex_replace(ss.str(), std::regex(R"("elapsed":[-+0-9.eE]+,?)"), "");
}

bool run_full_suite(const std::string &cli) {
    const std::string a = "acceptance_all_1.jsonl", b = "acceptance_all_2.jsonl";
    const auto start = std::chrono::steady_clock::now();
    const int rc1 = std::system((cli + " verify all --seed 42 --out " + a).c_str());
    const double first =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const int rc2 = std::system((cli + " verify all --seed 42 --out " + b).c_str());
    const std::string sa = strip_elapsed(a), sb = strip_elapsed(b);
    const bool same = !sa.empty() && sa == sb;
    std::ostringstream detail;
    detail << "exit " << rc1 << "/" << rc2 << ", identical reports " << (same ? "yes" : "no")
           << ", time " << first << "s < 300s";
    return report(9, "Full suite via CLI", rc1 == 0 && rc2 == 0 && same && first < 300.0,
                  detail.str());
}

} // namespace

int main(int argc, char **argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-qrecon-cli>\n";
        return 2;
    }
    const Config cfg = pinned();
    bool all = true;
    for (const Criterion &c : criteria) {
        all = run_criterion(c, cfg) && all;
    }
    all = run_full_suite(argv[1]) && all;
    std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
    return all ? 0 : 1;
}
