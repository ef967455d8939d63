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
 * Seeded randomness: the generator used everywhere, seed splitting, and the
 * elementary random objects (uniform states, Haar unitaries and orthogonal
 * matrices) that the checks are built on.
 */
#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "qrecon/common.hpp"
#include "qrecon/qspace.hpp"

namespace qrecon {

/// The generator behind every sampled quantity.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/**
 * Seed for a named sub-stream: mix64(master ^ fnv1a64(name)).
 *
 * Streams depend only on (master, name), never on execution order.
 */
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return mix64(master ^ h);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master ^ mix64(index + 0x632be59bd9b4e019ULL));
}

/// Uniform point on the unit sphere S^{dim-1}.
inline RealVector random_unit_vector(Rng &rng, Eigen::Index dim) {
    std::normal_distribution<double> normal;
    RealVector x(dim);
    double n2 = 0.0;
    do {
        for (Eigen::Index i = 0; i < dim; ++i) {
            x(i) = normal(rng);
        }
        n2 = x.squaredNorm();
    } while (!(n2 > 1e-300));
    return x / std::sqrt(n2);
}

/// Uniform pure state: 2N standard normals, normalized, in complex form.
inline PureState random_state(Rng &rng, Eigen::Index n) {
    const RealVector q = random_unit_vector(rng, 2 * n);
    ComplexVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = complex(q(2 * i), q(2 * i + 1));
    }
    return PureState::normalized(v);
}

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
/// of R's diagonal divided out.
inline ComplexMatrix haar_unitary(Rng &rng, Eigen::Index n) {
    std::normal_distribution<double> normal;
    ComplexMatrix z(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            z(i, j) = complex(normal(rng), normal(rng)) / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
    const ComplexMatrix &r = qr.matrixQR();
    for (Eigen::Index j = 0; j < n; ++j) {
        const double mag = std::abs(r(j, j));
        q.col(j) *= mag > 0.0 ? r(j, j) / mag : complex(1.0);
    }
    return q;
}

/// Haar-distributed element of O(n), same construction over the reals.
inline RealMatrix haar_orthogonal(Rng &rng, Eigen::Index n) {
    std::normal_distribution<double> normal;
    RealMatrix z(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            z(i, j) = normal(rng);
        }
    }
    Eigen::HouseholderQR<RealMatrix> qr(z);
    RealMatrix q = qr.householderQ() * RealMatrix::Identity(n, n);
    const RealMatrix &r = qr.matrixQR();
    for (Eigen::Index j = 0; j < n; ++j) {
        if (r(j, j) < 0.0) {
            q.col(j) *= -1.0;
        }
    }
    return q;
}

} // namespace qrecon
