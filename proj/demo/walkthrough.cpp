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


// Walk-through of the library on a two-outcome system: phase representation,
// measurement by simulation, and classifying a realified unitary.

#include <iostream>

#include "qrecon.hpp"

int main() {
    using namespace qrecon;

    const PhaseRep rep = PhaseRep::from_phases(ProbVec({0.3, 0.7}), {0.0, 1.2});
    const PureState v = to_complex(from_phase_rep(rep));
    std::cout << "state: " << v.vec().transpose() << "\n";

    Rng rng(derive_seed(1, "demo"));
    const MeasurementBasis basis(haar_unitary(rng, 2));
    const ProbVec born = born_probs(v, basis);
    std::cout << "born probabilities: " << born[0] << " " << born[1] << "\n";

    const SimulationArrangement arr = build_simulation(basis);
    int counts[2] = {0, 0};
    for (int k = 0; k < 10000; ++k) {
        ++counts[simulate_measurement(arr, v, rng).result];
    }
    std::cout << "simulated frequencies: " << counts[0] / 1e4 << " "
              << counts[1] / 1e4 << "\n";

    const GaugeMap g = classify(realify_antiunitary(haar_unitary(rng, 2)));
    std::cout << "realified map classified as " << to_string(g.kind()) << "\n";
    std::cout << "metric deviation under it: "
              << metric_invariance_check(g, 1000, 7) << "\n";
}
