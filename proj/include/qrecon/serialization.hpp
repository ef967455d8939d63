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
 * JSON forms of the value types (nlohmann/json).
 *
 *   ProbVec, QVector      [x, ...]
 *   PureState             [[re, im], ...]
 *   PhaseRep              {"p": [...], "phi": [x | null, ...], "a": a, "b": b}
 *   real matrix           [[row 0], [row 1], ...]
 *   complex matrix        [[[re, im], ...], ...]   (row-major)
 *   GaugeMap              {"kind": "unitary" | "antiunitary", "matrix": ...}
 *                         {"kind": "not_gauge_invariant", "condition": ...,
 *                          "block": [i, j], "residual": r}
 *   Observable            {"values": [...], "basis": [state, ...]}
 *   HJGridState           {"h", "x0", "m", "P": [...], "S": [...], "V"?: [...]}
 *   composite state       {"N": n, "N_prime": n', "state": PureState}
 *   simulation trial      {"trial": k, "result": i, "output_state": PureState}
 */
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "json.hpp"

#include "qrecon/classifier.hpp"
#include "qrecon/composite.hpp"
#include "qrecon/dynamics.hpp"
#include "qrecon/measurement.hpp"
#include "qrecon/qspace.hpp"
#include "qrecon/simplex.hpp"

namespace qrecon {

using json = nlohmann::json;

inline void to_json(json &j, const ProbVec &p) { j = p.vec(); }
inline void from_json(const json &j, ProbVec &p) {
    p = ProbVec(j.get<std::vector<double>>());
}

inline void to_json(json &j, const QVector &q) {
    j = std::vector<double>(q.entries().begin(), q.entries().end());
}
inline void from_json(const json &j, QVector &q) {
    q = QVector(j.get<std::vector<double>>());
}

inline json complex_to_json(complex z) { return json::array({z.real(), z.imag()}); }

inline complex complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2) {
        throw InvariantError("complex number must be [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

inline json vector_to_json(const ComplexVector &v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(complex_to_json(v(i)));
    }
    return out;
}

inline ComplexVector vector_from_json(const json &j) {
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
    }
    return v;
}

inline void to_json(json &j, const PureState &v) { j = vector_to_json(v.vec()); }
inline void from_json(const json &j, PureState &v) {
    v = PureState(vector_from_json(j));
}

inline void to_json(json &j, const PhaseRep &r) {
    json phi = json::array();
    for (const auto &x : r.phases()) {
        phi.push_back(x ? json(*x) : json(nullptr));
    }
    j = {{"p", r.probs()}, {"phi", phi}, {"a", r.a()}, {"b", r.b()}};
}
inline void from_json(const json &j, PhaseRep &r) {
    std::vector<std::optional<double>> phi;
    for (const auto &x : j.at("phi")) {
        phi.push_back(x.is_null() ? std::nullopt
                                  : std::optional<double>(x.get<double>()));
    }
    r = PhaseRep(j.at("p").get<ProbVec>(), std::move(phi), j.value("a", 1.0),
                 j.value("b", 0.0));
}

inline json matrix_to_json(const RealMatrix &m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            row.push_back(m(i, k));
        }
        out.push_back(std::move(row));
    }
    return out;
}

inline RealMatrix real_matrix_from_json(const json &j) {
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = rows > 0 ? static_cast<Eigen::Index>(j[0].size()) : 0;
    RealMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const json &row = j[static_cast<std::size_t>(i)];
        if (static_cast<Eigen::Index>(row.size()) != cols) {
            throw DimensionError("matrix rows differ in length");
        }
        for (Eigen::Index k = 0; k < cols; ++k) {
            m(i, k) = row[static_cast<std::size_t>(k)].get<double>();
        }
    }
    return m;
}

inline json matrix_to_json(const ComplexMatrix &m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out.push_back(vector_to_json(m.row(i).transpose()));
    }
    return out;
}

inline ComplexMatrix complex_matrix_from_json(const json &j) {
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = rows > 0 ? static_cast<Eigen::Index>(j[0].size()) : 0;
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const ComplexVector r = vector_from_json(j[static_cast<std::size_t>(i)]);
        if (r.size() != cols) {
            throw DimensionError("matrix rows differ in length");
        }
        m.row(i) = r.transpose();
    }
    return m;
}

inline void to_json(json &j, const OrthogonalMap &m) { j = matrix_to_json(m.matrix()); }

inline void to_json(json &j, const GaugeMap &g) {
    j = {{"kind", to_string(g.kind())}};
    if (const auto *d = g.diagnostic()) {
        j["condition"] = to_string(d->condition);
        j["block"] = {d->row, d->col};
        j["residual"] = d->residual;
    } else {
        j["matrix"] = matrix_to_json(g.matrix());
    }
}

inline GaugeMap gauge_map_from_json(const json &j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "unitary") {
        return GaugeMap::unitary(complex_matrix_from_json(j.at("matrix")));
    }
    if (kind == "antiunitary") {
        return GaugeMap::antiunitary(complex_matrix_from_json(j.at("matrix")));
    }
    if (kind == "not_gauge_invariant") {
        NotGaugeInvariant d;
        const auto c = j.at("condition").get<std::string>();
        for (auto v : {Violation::column_norms_unequal,
                       Violation::columns_not_orthogonal,
                       Violation::block_not_rotation_form,
                       Violation::mixed_block_kinds}) {
            if (c == to_string(v)) {
                d.condition = v;
            }
        }
        d.row = j.at("block")[0].get<Eigen::Index>();
        d.col = j.at("block")[1].get<Eigen::Index>();
        d.residual = j.at("residual").get<double>();
        return GaugeMap::rejected(d);
    }
    throw InvariantError("GaugeMap: unknown kind '" + kind + "'");
}

inline void to_json(json &j, const Observable &obs) {
    json basis = json::array();
    for (Eigen::Index i = 0; i < obs.size(); ++i) {
        basis.push_back(vector_to_json(obs.basis().matrix().col(i)));
    }
    j = {{"values", obs.values()}, {"basis", basis}};
}

inline Observable observable_from_json(const json &j) {
    std::vector<PureState> vectors;
    for (const auto &v : j.at("basis")) {
        vectors.emplace_back(vector_from_json(v), tol::basis);
    }
    return Observable(MeasurementBasis(vectors),
                      j.at("values").get<std::vector<double>>());
}

inline void to_json(json &j, const HJGridState &s) {
    j = {{"h", s.h}, {"x0", s.x0}, {"m", s.mass}, {"P", s.p}, {"S", s.s}};
    if (!s.v.empty()) {
        j["V"] = s.v;
    }
}
inline void from_json(const json &j, HJGridState &s) {
    s.h = j.at("h").get<double>();
    s.x0 = j.at("x0").get<double>();
    s.mass = j.at("m").get<double>();
    s.p = j.at("P").get<ProbVec>();
    s.s = j.at("S").get<std::vector<double>>();
    s.v = j.contains("V") ? j.at("V").get<std::vector<double>>()
                          : std::vector<double>{};
    s.validate();
}

inline json composite_to_json(const CompositeIndex &idx, const PureState &v) {
    require_same_size(idx.size(), v.size(), "composite_to_json");
    return {{"N", idx.first()}, {"N_prime", idx.second()}, {"state", v}};
}

inline json trial_to_json(std::size_t trial, const MeasurementOutcome &o) {
    return {{"trial", trial}, {"result", o.result}, {"output_state", o.output}};
}

} // namespace qrecon

namespace nlohmann {
template <> struct adl_serializer<qrecon::GaugeMap> {
    static qrecon::GaugeMap from_json(const json &j) {
        return qrecon::gauge_map_from_json(j);
    }
    static void to_json(json &j, const qrecon::GaugeMap &g) { qrecon::to_json(j, g); }
};
template <> struct adl_serializer<qrecon::Observable> {
    static qrecon::Observable from_json(const json &j) {
        return qrecon::observable_from_json(j);
    }
    static void to_json(json &j, const qrecon::Observable &o) {
        qrecon::to_json(j, o);
    }
};
} // namespace nlohmann
