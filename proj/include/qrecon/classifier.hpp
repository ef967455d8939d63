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
 * Orthogonal maps of Q-space and their classification under global gauge
 * invariance.
 *
 * A 2N x 2N orthogonal matrix M acts on Q-space; read as an N x N array of
 * 2 x 2 blocks T(ij), it leaves every result probability invariant under a
 * global phase shift exactly when each nonzero block is a scaled rotation
 * alpha R(phi) or a scaled reflection-rotation alpha R(phi) F with
 * F = diag(1, -1), and all nonzero blocks are of the same kind. The map is
 * then v -> V v (unitary) or v -> V v* (antiunitary) with V_ij = alpha e^{i phi}.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qrecon/common.hpp"
#include "qrecon/qspace.hpp"
#include "qrecon/random.hpp"

namespace qrecon {

/// Frobenius norm of A^T A - I.
inline double orthogonality_residual(const RealMatrix &m) {
    return (m.transpose() * m - RealMatrix::Identity(m.cols(), m.cols())).norm();
}

/// Frobenius norm of V^dagger V - I.
inline double unitarity_residual(const ComplexMatrix &v) {
    return (v.adjoint() * v - ComplexMatrix::Identity(v.cols(), v.cols())).norm();
}

/// A real 2N x 2N matrix with M^T M = I.
class OrthogonalMap {
  public:
    OrthogonalMap() = default;

    explicit OrthogonalMap(RealMatrix m, double tolerance = tol::orthogonality)
        : m_(std::move(m)) {
        if (m_.rows() != m_.cols() || m_.rows() == 0 || m_.rows() % 2 != 0) {
            throw DimensionError("OrthogonalMap: matrix must be square with "
                                 "even positive size");
        }
        const double r = orthogonality_residual(m_);
        if (!(r <= tolerance)) {
            throw InvariantError("OrthogonalMap: not orthogonal (residual " +
                                 std::to_string(r) + ")");
        }
    }

    [[nodiscard]] const RealMatrix &matrix() const { return m_; }
    [[nodiscard]] Eigen::Index results() const { return m_.rows() / 2; }

    /// The 2 x 2 block T(ij).
    [[nodiscard]] Eigen::Matrix2d block(Eigen::Index i, Eigen::Index j) const {
        return m_.block<2, 2>(2 * i, 2 * j);
    }

  private:
    RealMatrix m_;
};

enum class BlockKind { rotation, reflection, zero };

/// Sign sigma of a nonzero block kind: +1 rotation, -1 reflection-rotation.
inline int sigma(BlockKind k) { return k == BlockKind::reflection ? -1 : 1; }

/// One 2 x 2 block read as alpha R(phi) F^{(1 - sigma)/2}.
struct Block {
    double scale = 0.0;
    std::optional<double> angle; // [0, 2pi), absent for zero blocks
    BlockKind kind = BlockKind::zero;
    /// |c1|^2 - |c2|^2 for the two columns; must vanish.
    double norm_gap = 0.0;
    /// c1 . c2; must vanish.
    double cross = 0.0;
    /// max |T - alpha R(phi) F^sigma| over entries.
    double fit_residual = 0.0;
};

inline Eigen::Matrix2d rotation(double phi) {
    Eigen::Matrix2d r;
    r << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    return r;
}

inline Eigen::Matrix2d reflection() {
    return Eigen::Vector2d(1.0, -1.0).asDiagonal();
}

inline Eigen::Matrix2d reconstruct(const Block &b) {
    if (b.kind == BlockKind::zero || !b.angle) {
        return Eigen::Matrix2d::Zero();
    }
    Eigen::Matrix2d t = b.scale * rotation(*b.angle);
    if (b.kind == BlockKind::reflection) {
        t = t * reflection();
    }
    return t;
}

inline Block fit_block(const Eigen::Matrix2d &t, double tolerance) {
    Block b;
    const double c1 = t(0, 0) * t(0, 0) + t(1, 0) * t(1, 0);
    const double c2 = t(0, 1) * t(0, 1) + t(1, 1) * t(1, 1);
    b.norm_gap = c1 - c2;
    b.cross = t(0, 0) * t(0, 1) + t(1, 0) * t(1, 1);
    const double det = t.determinant();
    if (std::abs(det) < tolerance * tolerance) {
        b.kind = BlockKind::zero;
        b.fit_residual = t.cwiseAbs().maxCoeff();
        return b;
    }
    b.kind = det > 0.0 ? BlockKind::rotation : BlockKind::reflection;
    b.scale = std::sqrt(0.5 * (c1 + c2));
    b.angle = wrap_angle(std::atan2(t(1, 0), t(0, 0)));
    b.fit_residual = (t - reconstruct(b)).cwiseAbs().maxCoeff();
    return b;
}

/// N x N array of fitted blocks, row-major.
class BlockDecomposition {
  public:
    BlockDecomposition(const OrthogonalMap &m, double tolerance = tol::block_fit)
        : n_(m.results()) {
        blocks_.reserve(static_cast<std::size_t>(n_ * n_));
        for (Eigen::Index i = 0; i < n_; ++i) {
            for (Eigen::Index j = 0; j < n_; ++j) {
                blocks_.push_back(fit_block(m.block(i, j), tolerance));
            }
        }
    }

    [[nodiscard]] Eigen::Index results() const { return n_; }
    [[nodiscard]] const Block &at(Eigen::Index i, Eigen::Index j) const {
        return blocks_[static_cast<std::size_t>(i * n_ + j)];
    }

  private:
    Eigen::Index n_ = 0;
    std::vector<Block> blocks_;
};

/// Which gauge-invariance condition a rejected matrix violates first.
enum class Violation {
    column_norms_unequal,  // alpha_ki != beta_ki
    columns_not_orthogonal, // gamma_ki != 0
    block_not_rotation_form,
    mixed_block_kinds,
};

inline const char *to_string(Violation v) {
    switch (v) {
    case Violation::column_norms_unequal:
        return "column_norms_unequal";
    case Violation::columns_not_orthogonal:
        return "columns_not_orthogonal";
    case Violation::block_not_rotation_form:
        return "block_not_rotation_form";
    case Violation::mixed_block_kinds:
        return "mixed_block_kinds";
    }
    return "unknown";
}

struct Unitary {
    ComplexMatrix v;
};

/// v -> V v*.
struct Antiunitary {
    ComplexMatrix v;
};

struct NotGaugeInvariant {
    Violation condition = Violation::column_norms_unequal;
    Eigen::Index row = 0;
    Eigen::Index col = 0;
    double residual = 0.0;

    [[nodiscard]] std::string describe() const {
        return std::string(to_string(condition)) + " at block (" +
               std::to_string(row) + ", " + std::to_string(col) +
               "), residual " + std::to_string(residual);
    }
};

enum class MapKind { unitary, antiunitary, not_gauge_invariant };

inline const char *to_string(MapKind k) {
    switch (k) {
    case MapKind::unitary:
        return "unitary";
    case MapKind::antiunitary:
        return "antiunitary";
    case MapKind::not_gauge_invariant:
        return "not_gauge_invariant";
    }
    return "unknown";
}

/// Result of classifying a Q-space transformation.
class GaugeMap {
  public:
    static GaugeMap unitary(ComplexMatrix v, double tolerance = tol::orthogonality) {
        check_unitary(v, tolerance);
        return GaugeMap(Unitary{std::move(v)});
    }
    static GaugeMap antiunitary(ComplexMatrix v,
                                double tolerance = tol::orthogonality) {
        check_unitary(v, tolerance);
        return GaugeMap(Antiunitary{std::move(v)});
    }
    static GaugeMap rejected(NotGaugeInvariant why) { return GaugeMap(why); }

    [[nodiscard]] MapKind kind() const {
        return static_cast<MapKind>(value_.index());
    }
    [[nodiscard]] bool is_gauge_map() const {
        return kind() != MapKind::not_gauge_invariant;
    }
    [[nodiscard]] bool is_antiunitary() const {
        return kind() == MapKind::antiunitary;
    }

    /// V of either gauge kind; throws for a rejected map.
    [[nodiscard]] const ComplexMatrix &matrix() const {
        if (const auto *u = std::get_if<Unitary>(&value_)) {
            return u->v;
        }
        if (const auto *a = std::get_if<Antiunitary>(&value_)) {
            return a->v;
        }
        throw Error("GaugeMap: not gauge invariant (" +
                    std::get<NotGaugeInvariant>(value_).describe() + ")");
    }

    [[nodiscard]] const NotGaugeInvariant *diagnostic() const {
        return std::get_if<NotGaugeInvariant>(&value_);
    }

    [[nodiscard]] const std::variant<Unitary, Antiunitary, NotGaugeInvariant> &
    value() const {
        return value_;
    }

  private:
    template <class T> explicit GaugeMap(T v) : value_(std::move(v)) {}

    static void check_unitary(const ComplexMatrix &v, double tolerance) {
        if (v.rows() != v.cols() || v.rows() == 0) {
            throw DimensionError("GaugeMap: matrix must be square");
        }
        const double r = unitarity_residual(v);
        if (!(r <= tolerance)) {
            throw InvariantError("GaugeMap: matrix is not unitary (residual " +
                                 std::to_string(r) + ")");
        }
    }

    std::variant<Unitary, Antiunitary, NotGaugeInvariant> value_;
};

/**
 * Decides whether `m` satisfies gauge invariance and, if it does, returns
 * the unitary or antiunitary complex map it realises.
 *
 * Blocks are scanned row-major; the first violated condition is reported.
 * Zero blocks (|det| < tolerance^2) impose no block kind.
 */
inline GaugeMap classify(const OrthogonalMap &m,
                         double tolerance = tol::block_fit) {
    const BlockDecomposition blocks(m, tolerance);
    const Eigen::Index n = m.results();
    std::optional<BlockKind> shared;
    ComplexMatrix v = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const Block &b = blocks.at(i, j);
            if (std::abs(b.norm_gap) > tolerance) {
                return GaugeMap::rejected(
                    {Violation::column_norms_unequal, i, j, std::abs(b.norm_gap)});
            }
            if (std::abs(b.cross) > tolerance) {
                return GaugeMap::rejected(
                    {Violation::columns_not_orthogonal, i, j, std::abs(b.cross)});
            }
            if (b.fit_residual > tolerance) {
                return GaugeMap::rejected(
                    {Violation::block_not_rotation_form, i, j, b.fit_residual});
            }
            if (b.kind == BlockKind::zero) {
                continue;
            }
            if (!shared) {
                shared = b.kind;
            } else if (*shared != b.kind) {
                return GaugeMap::rejected(
                    {Violation::mixed_block_kinds, i, j, b.scale});
            }
            v(i, j) = std::polar(b.scale, *b.angle);
        }
    }
    // orthogonal M implies unitary V; the slack covers accumulated rounding
    const double slack = std::max(tolerance, tol::orthogonality) * 10.0;
    if (shared == BlockKind::reflection) {
        return GaugeMap::antiunitary(std::move(v), slack);
    }
    return GaugeMap::unitary(std::move(v), slack);
}

inline GaugeMap classify(const RealMatrix &m, double tolerance = tol::block_fit) {
    return classify(OrthogonalMap(m, std::max(tolerance, tol::orthogonality)),
                    tolerance);
}

/// Block-wise realification with T(ij) = alpha R(phi) F^sigma, without any
/// unitarity check.
inline RealMatrix realify_matrix(const ComplexMatrix &v, bool conjugate) {
    const Eigen::Index n = v.rows();
    RealMatrix m(2 * v.rows(), 2 * v.cols());
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < v.cols(); ++j) {
            const double re = v(i, j).real();
            const double im = v(i, j).imag();
            if (conjugate) {
                m.block<2, 2>(2 * i, 2 * j) << re, im, im, -re;
            } else {
                m.block<2, 2>(2 * i, 2 * j) << re, -im, im, re;
            }
        }
    }
    return m;
}

inline OrthogonalMap realify_unitary(const ComplexMatrix &v,
                                     double tolerance = tol::orthogonality) {
    if (v.rows() != v.cols() || !(unitarity_residual(v) <= tolerance)) {
        throw InvariantError("realify_unitary: input is not unitary");
    }
    return OrthogonalMap(realify_matrix(v, false), tolerance * 2.0);
}

inline OrthogonalMap realify_antiunitary(const ComplexMatrix &v,
                                         double tolerance = tol::orthogonality) {
    if (v.rows() != v.cols() || !(unitarity_residual(v) <= tolerance)) {
        throw InvariantError("realify_antiunitary: input is not unitary");
    }
    return OrthogonalMap(realify_matrix(v, true), tolerance * 2.0);
}

inline OrthogonalMap realify(const GaugeMap &g) {
    return g.is_antiunitary() ? realify_antiunitary(g.matrix())
                              : realify_unitary(g.matrix());
}

/// v' = V v, or V v* for an antiunitary map.
inline PureState apply(const GaugeMap &g, const PureState &v) {
    if (!g.is_gauge_map()) {
        throw Error("apply: map is not gauge invariant");
    }
    const ComplexMatrix &m = g.matrix();
    require_same_size(static_cast<std::size_t>(m.cols()), v.size(), "apply");
    // V is unitary to 1e-10, so the image is already normalized
    if (g.is_antiunitary()) {
        return PureState(m * v.vec().conjugate(), 1e-9);
    }
    return PureState(m * v.vec(), 1e-9);
}

/// Q' = M Q.
inline QVector apply(const OrthogonalMap &m, const QVector &q) {
    require_same_size(static_cast<std::size_t>(m.matrix().cols()), q.size(),
                      "apply");
    const RealVector out = m.matrix() * q.as_eigen();
    std::vector<double> entries(out.data(), out.data() + out.size());
    const double n = out.norm();
    for (double &e : entries) {
        e /= n;
    }
    return QVector(std::move(entries));
}

/// g1 after g2.
inline GaugeMap compose(const GaugeMap &g1, const GaugeMap &g2) {
    const ComplexMatrix &v1 = g1.matrix();
    const ComplexMatrix &v2 = g2.matrix();
    const double slack = tol::orthogonality * 10.0;
    if (!g1.is_antiunitary()) {
        ComplexMatrix v = v1 * v2;
        return g2.is_antiunitary() ? GaugeMap::antiunitary(std::move(v), slack)
                                   : GaugeMap::unitary(std::move(v), slack);
    }
    // V1 K V2 = V1 V2* K
    ComplexMatrix v = v1 * v2.conjugate();
    return g2.is_antiunitary() ? GaugeMap::unitary(std::move(v), slack)
                               : GaugeMap::antiunitary(std::move(v), slack);
}

/// Inverse map: V^dagger for unitary, (V K)^{-1} = V^T K for antiunitary.
inline GaugeMap inverse(const GaugeMap &g) {
    const ComplexMatrix &v = g.matrix();
    if (g.is_antiunitary()) {
        return GaugeMap::antiunitary(v.transpose(), tol::orthogonality * 10.0);
    }
    return GaugeMap::unitary(v.adjoint(), tol::orthogonality * 10.0);
}

struct WitnessResult {
    bool passed = false;
    double max_deviation = 0.0;
};

/**
 * Numerical gauge-invariance test independent of classify: for `trials`
 * random states Q and phases phi0, compares the result probabilities of
 * M Q and M Q(phi + phi0).
 */
inline WitnessResult gauge_invariance_witness(const OrthogonalMap &m, int trials,
                                              double tolerance, Rng &rng) {
    std::uniform_real_distribution<double> angle(0.0, two_pi);
    const Eigen::Index n = m.results();
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const PureState v = random_state(rng, n);
        const PureState shifted = gauge_shift(v, angle(rng));
        const ProbVec p1 = result_probs(apply(m, from_complex(v)));
        const ProbVec p2 = result_probs(apply(m, from_complex(shifted)));
        for (std::size_t i = 0; i < p1.size(); ++i) {
            worst = std::max(worst, std::abs(p1[i] - p2[i]));
        }
    }
    return {worst < tolerance, worst};
}

inline WitnessResult gauge_invariance_witness(const OrthogonalMap &m, int trials,
                                              double tolerance,
                                              std::uint64_t seed) {
    Rng rng(seed);
    return gauge_invariance_witness(m, trials, tolerance, rng);
}

struct BridgeResiduals {
    double orthogonality = 0.0; // ||M^T M - I||_F of the realified matrix
    double unitarity = 0.0;     // ||V^dagger V - I||_F
};

/// Both residuals; realification maps V^dagger V - I block-wise, so
/// orthogonality == sqrt(2) * unitarity up to rounding.
inline BridgeResiduals unitarity_orthogonality_bridge(const ComplexMatrix &v) {
    if (v.rows() != v.cols()) {
        throw DimensionError("unitarity_orthogonality_bridge: matrix must be "
                             "square");
    }
    return {orthogonality_residual(realify_matrix(v, false)),
            unitarity_residual(v)};
}

} // namespace qrecon
