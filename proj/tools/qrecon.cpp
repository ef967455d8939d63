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


// qrecon: command-line front end for the verification suites.
//
//   qrecon verify <suite> [--n 3 | --n 2..5 | --n 2,3,5] [--trials N]
//                         [--seed S] [--tol name=value]... [--config file]
//                         [--out file]
//
// Reports are JSON lines, one per check, followed by a summary object.
// QRECON_CONFIG names a default config file; --config overrides it and
// command-line flags override both. Exit status: 0 all checks passed,
// 1 some check failed or errored, 2 bad invocation or config.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qrecon/verify/suites.hpp"

namespace {

using qrecon::json;
namespace verify = qrecon::verify;

std::vector<int> parse_dimensions(const std::string &text) {
    std::vector<int> out;
    const auto range = text.find("..");
    try {
        if (range != std::string::npos) {
            const int lo = std::stoi(text.substr(0, range));
            const int hi = std::stoi(text.substr(range + 2));
            for (int n = lo; n <= hi; ++n) {
                out.push_back(n);
            }
        } else {
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                out.push_back(std::stoi(item));
            }
        }
    } catch (const std::exception &) {
        throw qrecon::InvariantError("--n: expected N, a..b or a,b,c; got '" +
                                     text + "'");
    }
    if (out.empty()) {
        throw qrecon::InvariantError("--n: empty dimension range '" + text + "'");
    }
    for (int n : out) {
        if (n < 1) {
            throw qrecon::InvariantError("--n: dimensions must be positive");
        }
    }
    return out;
}

verify::Config load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw qrecon::InvariantError("cannot open config '" + path + "'");
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error &e) {
        throw qrecon::InvariantError("config '" + path + "': " + e.what());
    }
    return verify::Config::from_json(j);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"qrecon: verification harness"};
    app.require_subcommand(1);

    auto *cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::string dims;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> tol_overrides;
    std::string config_path;
    std::string out_path;

    std::vector<std::string> names{"all"};
    for (const auto &[name, _] : verify::suites()) {
        names.push_back(name);
    }
    cmd->add_option("suite", suite, "suite to run")
        ->required()
        ->check(CLI::IsMember(names));
    auto *n_opt = cmd->add_option("--n", dims, "dimension N, range a..b or list a,b");
    auto *trials_opt =
        cmd->add_option("--trials", trials, "trial count for every check")
            ->check(CLI::PositiveNumber);
    auto *seed_opt = cmd->add_option("--seed", seed, "master seed");
    cmd->add_option("--tol", tol_overrides, "tolerance override name=value")
        ->take_all();
    cmd->add_option("--config", config_path, "JSON config file");
    cmd->add_option("--out", out_path, "write reports here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    verify::Config cfg;
    try {
        if (config_path.empty()) {
            if (const char *env = std::getenv("QRECON_CONFIG"); env && *env) {
                config_path = env;
            }
        }
        if (!config_path.empty()) {
            cfg = load_config(config_path);
        }
        if (*seed_opt) {
            cfg.seed = seed;
        }
        if (*n_opt) {
            cfg.dimensions = parse_dimensions(dims);
        }
        if (*trials_opt) {
            cfg.trials_override = trials;
        }
        for (const std::string &kv : tol_overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0) {
                throw qrecon::InvariantError("--tol: expected name=value, got '" +
                                             kv + "'");
            }
            try {
                cfg.tolerances[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
            } catch (const std::exception &) {
                throw qrecon::InvariantError("--tol: bad number in '" + kv + "'");
            }
        }
    } catch (const std::exception &e) {
        std::cerr << "qrecon: " << e.what() << "\n";
        return 2;
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "qrecon: cannot write '" << out_path << "'\n";
            return 2;
        }
    }
    std::ostream &out = out_path.empty() ? std::cout : file;

    const auto reports = verify::run_suite(suite, cfg);
    for (const auto &r : reports) {
        out << verify::to_json_line(r).dump() << "\n";
    }
    const verify::Summary s = verify::summarize(reports);
    out << verify::summary_line(suite, cfg, s).dump() << std::endl;
    return s.ok() ? 0 : 1;
}
