/**
 * @file io.hpp
 * @brief JSON serialization for the shared external formats. Objects use
 *        sorted keys and arrays use canonical orders, so output is byte
 *        stable for golden-file testing.
 */

#pragma once

#include "opgraph/algebra.hpp"
#include "opgraph/channel.hpp"
#include "opgraph/ext.hpp"
#include "opgraph/moduli.hpp"
#include "opgraph/repr.hpp"

#include <json.hpp>

#include <string>

namespace opgraph {

using Json = nlohmann::json;

// Matrix format: {"rows":n,"cols":m,"entries":[["re","im"],...]} with
// entries row-major and the parts as rational strings.
inline Json matrix_to_json(const ExactMatrix& m) {
    Json entries = Json::array();
    for (const auto& e : m.entries())
        entries.push_back(Json::array({rational_to_string(e.re()), rational_to_string(e.im())}));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline ExactMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw std::invalid_argument("matrix JSON: need rows, cols, entries");
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const Json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows * cols)
        throw std::invalid_argument("matrix JSON: entries length mismatch");
    std::vector<GaussRational> flat;
    flat.reserve(rows * cols);
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("matrix JSON: each entry is [re, im]");
        flat.emplace_back(parse_rational(e[0].get<std::string>()),
                          parse_rational(e[1].get<std::string>()));
    }
    return ExactMatrix::from_vector(flat, rows, cols);
}

inline Json structure_report_to_json(const StructureReport& r) {
    Json blocks = Json::array();
    for (std::size_t b : r.block_dims) blocks.push_back(b);
    return Json{{"dim", r.dim},
                {"radical_dim", r.radical_dim},
                {"center_dim", r.center_dim},
                {"blocks", std::move(blocks)},
                {"notes", r.notes}};
}

inline Json phi_decomposition_to_json(const PhiDecomposition& d) {
    auto chi_json = [](const PCharacter& chi) {
        return Json{{"chi", Json::array({chi.g_val.to_string(), chi.z_val > 0 ? "+1" : "-1"})}};
    };
    return Json{{"theta", d.theta.to_string()},
                {"T", matrix_to_json(d.transform)},
                {"blocks", Json::array({chi_json(d.chi1), chi_json(d.chi2)})}};
}

inline Json ext_result_to_json(const ExtResult& r) {
    return Json{{"hom", r.hom_dim}, {"ext1", r.ext1_dim}};
}

inline Json trace_tuple_to_json(const TraceTuple& t) {
    Json out = Json::array();
    for (const auto& v : t.as_array()) out.push_back(v.to_string());
    return out;
}

inline Json subspace_to_json(const Subspace& s) {
    Json basis = Json::array();
    for (const auto& row : s.basis()) {
        Json jr = Json::array();
        for (const auto& v : row) jr.push_back(v.to_string());
        basis.push_back(std::move(jr));
    }
    return Json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", std::move(basis)}};
}

inline Json kraus_summary_to_json(const KrausChannel& ch) {
    Json ops = Json::array();
    for (const auto& op : ch.ops())
        ops.push_back(Json{{"weight", rational_to_string(op.weight)},
                           {"matrix", matrix_to_json(op.matrix)}});
    return Json{{"dim", ch.dim()}, {"ops", std::move(ops)}, {"trace_preserving", true}};
}

}  // namespace opgraph
