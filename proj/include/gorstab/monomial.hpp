#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gorstab/errors.hpp"
#include "gorstab/graph.hpp"

namespace gorstab {

// An integer exponent vector over the vertices together with the exponent
// of the grading variable ("deg"). Values are plain machine integers: every
// quantity the membership tests form from them stays far below 2^63 for any
// input this library can enumerate.
struct Monomial {
    std::vector<long long> values;
    long long deg = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial operator+(const Monomial& a, const Monomial& b) {
    if (a.values.size() != b.values.size())
        throw DimensionMismatch("monomial dimension mismatch");
    Monomial out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    out.deg += b.deg;
    return out;
}

inline Monomial operator-(const Monomial& a) {
    Monomial out = a;
    for (auto& value : out.values) value = -value;
    out.deg = -out.deg;
    return out;
}

// sum of the exponents over a vertex set
inline long long sum_over(const Monomial& m, const VertexSet& vertices) {
    long long total = 0;
    for (int v : vertices) total += m.values[v];
    return total;
}

inline nlohmann::json monomial_to_json(const Monomial& m, const std::vector<std::string>& names) {
    if (m.values.size() != names.size())
        throw DimensionMismatch("monomial dimension does not match name list");
    nlohmann::json doc;
    auto& values = doc["values"] = nlohmann::json::object();
    for (std::size_t i = 0; i < names.size(); ++i) values[names[i]] = m.values[i];
    doc["deg"] = m.deg;
    return doc;
}

inline Monomial monomial_from_json(const nlohmann::json& doc,
                                   const std::vector<std::string>& names) {
    if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_object() ||
        !doc.contains("deg") || !doc["deg"].is_number_integer())
        throw ParseError("monomial JSON needs a \"values\" object and an integer \"deg\"");
    Monomial m;
    m.values.assign(names.size(), 0);
    for (const auto& [key, value] : doc["values"].items()) {
        const auto it = std::find(names.begin(), names.end(), key);
        if (it == names.end())
            throw ParseError("monomial names unknown vertex '" + key + "'");
        if (!value.is_number_integer()) throw ParseError("monomial values must be integers");
        m.values[it - names.begin()] = value.get<long long>();
    }
    m.deg = doc["deg"].get<long long>();
    return m;
}

}  // namespace gorstab
