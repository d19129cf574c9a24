#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gorstab/errors.hpp"
#include "gorstab/graph.hpp"
#include "gorstab/rational.hpp"

namespace gorstab {

// Where a row of a stable-set-polytope description comes from. Singleton
// upper bounds x_v <= 1 are clique rows on the one-element clique {v}.
enum class RowKind { nonneg, clique, odd_cycle, other };

struct RowTag {
    RowKind kind = RowKind::other;
    VertexSet vertices;
    friend bool operator==(const RowTag&, const RowTag&) = default;
};

// One inequality coeffs.x <= bound.
struct HRow {
    RationalVector coeffs;
    Rational bound;
    RowTag tag;
};

// A finite system of linear inequalities over coordinates named after the
// vertices of a graph (or plain indices for ad-hoc systems).
struct HalfspaceSystem {
    int dimension = 0;
    std::vector<std::string> names;  // one per coordinate
    std::vector<HRow> rows;
};

inline HalfspaceSystem make_system(std::vector<std::string> names, std::vector<HRow> rows) {
    HalfspaceSystem s;
    s.dimension = static_cast<int>(names.size());
    s.names = std::move(names);
    for (const auto& row : rows)
        if (static_cast<int>(row.coeffs.size()) != s.dimension)
            throw DimensionMismatch("row length does not match system dimension");
    s.rows = std::move(rows);
    return s;
}

namespace detail {

inline HRow nonneg_row(int dimension, int v) {
    HRow row;
    row.coeffs.assign(dimension, 0);
    row.coeffs[v] = -1;
    row.bound = 0;
    row.tag = {RowKind::nonneg, {v}};
    return row;
}

inline HRow clique_row(int dimension, const VertexSet& clique) {
    HRow row;
    row.coeffs.assign(dimension, 0);
    for (int v : clique) row.coeffs[v] = 1;
    row.bound = 1;
    row.tag = {RowKind::clique, clique};
    return row;
}

inline HRow odd_cycle_row(int dimension, const VertexSet& cycle_vertices) {
    HRow row;
    row.coeffs.assign(dimension, 0);
    for (int v : cycle_vertices) row.coeffs[v] = 1;
    const int len = static_cast<int>(cycle_vertices.size());
    row.bound = Rational(len - 1, 2);
    row.tag = {RowKind::odd_cycle, cycle_vertices};
    return row;
}

inline VertexSet sorted_vertices(const std::vector<VertexId>& vs) {
    VertexSet s = vs;
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace detail

// The clique/odd-cycle relaxation of the stable set polytope:
//   x_v >= 0, x(K) <= 1 per clique, x(C) <= (|C|-1)/2 per odd cycle.
// With reduced = true only maximal cliques and chordless odd cycles of
// length >= 5 appear (the dropped rows are implied by the kept ones); with
// reduced = false every clique and every odd cycle contributes a row.
inline HalfspaceSystem hstab_system(const Graph& g, bool reduced = true) {
    HalfspaceSystem s;
    s.dimension = g.num_vertices();
    s.names = g.names();
    for (int v = 0; v < s.dimension; ++v)
        s.rows.push_back(detail::nonneg_row(s.dimension, v));
    if (reduced) {
        for (const auto& k : maximal_cliques(g))
            s.rows.push_back(detail::clique_row(s.dimension, k.vertices));
        for (const auto& c : chordless_odd_cycles(g))
            s.rows.push_back(detail::odd_cycle_row(s.dimension, detail::sorted_vertices(c.vertices)));
    } else {
        for (const auto& k : all_cliques(g))
            s.rows.push_back(detail::clique_row(s.dimension, k.vertices));
        for (const auto& c : all_odd_cycles(g))
            s.rows.push_back(detail::odd_cycle_row(s.dimension, detail::sorted_vertices(c.vertices)));
    }
    return s;
}

// Edge-and-odd-cycle relaxation: 0 <= x_v <= 1, x_u + x_v <= 1 per edge,
// x(C) <= (|C|-1)/2 per odd cycle (chords allowed).
inline HalfspaceSystem tstab_system(const Graph& g) {
    HalfspaceSystem s;
    s.dimension = g.num_vertices();
    s.names = g.names();
    for (int v = 0; v < s.dimension; ++v)
        s.rows.push_back(detail::nonneg_row(s.dimension, v));
    for (int v = 0; v < s.dimension; ++v)
        s.rows.push_back(detail::clique_row(s.dimension, {v}));
    for (const auto& [u, v] : g.edges())
        s.rows.push_back(detail::clique_row(s.dimension, {u, v}));
    for (const auto& c : all_odd_cycles(g))
        s.rows.push_back(detail::odd_cycle_row(s.dimension, detail::sorted_vertices(c.vertices)));
    return s;
}

// Clique relaxation: x_v >= 0 and x(K) <= 1 per maximal clique.
inline HalfspaceSystem qstab_system(const Graph& g) {
    HalfspaceSystem s;
    s.dimension = g.num_vertices();
    s.names = g.names();
    for (int v = 0; v < s.dimension; ++v)
        s.rows.push_back(detail::nonneg_row(s.dimension, v));
    for (const auto& k : maximal_cliques(g))
        s.rows.push_back(detail::clique_row(s.dimension, k.vertices));
    return s;
}

inline Rational row_value(const HRow& row, const RationalVector& p) {
    Rational sum = 0;
    for (std::size_t i = 0; i < row.coeffs.size(); ++i)
        if (row.coeffs[i] != 0) sum += row.coeffs[i] * p[i];
    return sum;
}

inline bool contains(const HalfspaceSystem& s, const RationalVector& p) {
    if (static_cast<int>(p.size()) != s.dimension)
        throw DimensionMismatch("point dimension does not match system");
    for (const auto& row : s.rows)
        if (row_value(row, p) > row.bound) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Serialization. Rows carry their coefficients keyed by coordinate name
// (zeros omitted), the bound, and a provenance tag like "clique:a,b".

namespace detail {

inline std::string tag_to_string(const RowTag& tag, const std::vector<std::string>& names) {
    std::string prefix;
    switch (tag.kind) {
        case RowKind::nonneg: prefix = "nonneg"; break;
        case RowKind::clique: prefix = "clique"; break;
        case RowKind::odd_cycle: prefix = "cycle"; break;
        case RowKind::other: return "other";
    }
    std::string out = prefix + ":";
    for (std::size_t i = 0; i < tag.vertices.size(); ++i) {
        if (i) out += ",";
        out += names[tag.vertices[i]];
    }
    return out;
}

inline RowTag tag_from_string(const std::string& text, const std::vector<std::string>& names) {
    if (text == "other") return {RowKind::other, {}};
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("bad row tag '" + text + "'");
    const std::string prefix = text.substr(0, colon);
    RowTag tag;
    if (prefix == "nonneg") tag.kind = RowKind::nonneg;
    else if (prefix == "clique") tag.kind = RowKind::clique;
    else if (prefix == "cycle") tag.kind = RowKind::odd_cycle;
    else throw ParseError("bad row tag '" + text + "'");
    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        auto comma = rest.find(',', pos);
        if (comma == std::string::npos) comma = rest.size();
        const std::string name = rest.substr(pos, comma - pos);
        const auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw ParseError("row tag names unknown vertex '" + name + "'");
        tag.vertices.push_back(static_cast<int>(it - names.begin()));
        pos = comma + 1;
    }
    std::sort(tag.vertices.begin(), tag.vertices.end());
    return tag;
}

}  // namespace detail

inline nlohmann::json system_to_json(const HalfspaceSystem& s) {
    nlohmann::json doc;
    doc["vertices"] = s.names;
    auto& rows = doc["rows"] = nlohmann::json::array();
    for (const auto& row : s.rows) {
        nlohmann::json r;
        auto& coeffs = r["coeffs"] = nlohmann::json::object();
        for (int i = 0; i < s.dimension; ++i)
            if (row.coeffs[i] != 0) coeffs[s.names[i]] = format_rational(row.coeffs[i]);
        r["bound"] = format_rational(row.bound);
        r["tag"] = detail::tag_to_string(row.tag, s.names);
        rows.push_back(std::move(r));
    }
    return doc;
}

inline HalfspaceSystem system_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("rows"))
        throw ParseError("system JSON needs \"vertices\" and \"rows\"");
    HalfspaceSystem s;
    for (const auto& name : doc["vertices"]) {
        if (!name.is_string()) throw ParseError("coordinate names must be strings");
        s.names.push_back(name.get<std::string>());
    }
    s.dimension = static_cast<int>(s.names.size());
    for (const auto& r : doc["rows"]) {
        if (!r.is_object() || !r.contains("coeffs") || !r.contains("bound"))
            throw ParseError("system row needs \"coeffs\" and \"bound\"");
        HRow row;
        row.coeffs.assign(s.dimension, 0);
        for (const auto& [key, value] : r["coeffs"].items()) {
            const auto it = std::find(s.names.begin(), s.names.end(), key);
            if (it == s.names.end())
                throw ParseError("row coefficient names unknown coordinate '" + key + "'");
            if (!value.is_string()) throw ParseError("coefficients must be rational strings");
            row.coeffs[it - s.names.begin()] = parse_rational(value.get<std::string>());
        }
        if (!r["bound"].is_string()) throw ParseError("bounds must be rational strings");
        row.bound = parse_rational(r["bound"].get<std::string>());
        if (r.contains("tag")) {
            if (!r["tag"].is_string()) throw ParseError("row tag must be a string");
            row.tag = detail::tag_from_string(r["tag"].get<std::string>(), s.names);
        }
        s.rows.push_back(std::move(row));
    }
    return s;
}

inline nlohmann::json point_to_json(const RationalVector& p, const std::vector<std::string>& names) {
    if (p.size() != names.size())
        throw DimensionMismatch("point dimension does not match name list");
    nlohmann::json doc;
    auto& values = doc["values"] = nlohmann::json::object();
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) values[names[i]] = format_rational(p[i]);  // zero coordinates are implicit
    return doc;
}

inline RationalVector point_from_json(const nlohmann::json& doc,
                                      const std::vector<std::string>& names) {
    if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_object())
        throw ParseError("point JSON needs a \"values\" object");
    RationalVector p(names.size(), 0);
    for (const auto& [key, value] : doc["values"].items()) {
        const auto it = std::find(names.begin(), names.end(), key);
        if (it == names.end()) throw ParseError("point names unknown coordinate '" + key + "'");
        if (!value.is_string()) throw ParseError("point values must be rational strings");
        p[it - names.begin()] = parse_rational(value.get<std::string>());
    }
    return p;
}

}  // namespace gorstab
