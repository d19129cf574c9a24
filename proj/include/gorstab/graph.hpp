#pragma once

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gorstab/errors.hpp"

namespace gorstab {

using VertexId = int;
// Always kept sorted ascending.
using VertexSet = std::vector<VertexId>;

// Simple undirected graph on {0, ..., n-1}. Loops and parallel edges are
// rejected at construction; the empty vertex set is rejected as well, so
// every Graph in the library has at least one vertex.
class Graph {
  public:
    Graph(int n, std::vector<std::pair<int, int>> edge_list,
          std::vector<std::string> vertex_names = {})
        : n_(n), names_(std::move(vertex_names)) {
        if (n_ < 1) throw InvalidGraph("graph must have at least one vertex");
        if (names_.empty()) {
            names_.reserve(n_);
            for (int v = 0; v < n_; ++v) names_.push_back(std::to_string(v));
        }
        if (static_cast<int>(names_.size()) != n_)
            throw InvalidGraph("vertex name list does not match vertex count");
        {
            std::set<std::string> seen;
            for (const auto& name : names_) {
                if (name.empty()) throw InvalidGraph("empty vertex name");
                if (!seen.insert(name).second)
                    throw InvalidGraph("duplicate vertex name '" + name + "'");
            }
        }
        adj_.assign(n_, boost::dynamic_bitset<>(n_));
        for (auto& [u, v] : edge_list) {
            if (u < 0 || v < 0 || u >= n_ || v >= n_)
                throw InvalidGraph("edge endpoint out of range");
            if (u == v) throw InvalidGraph("loop edge rejected");
            if (u > v) std::swap(u, v);
            if (adj_[u][v]) throw InvalidGraph("duplicate edge rejected");
            adj_[u].set(v);
            adj_[v].set(u);
        }
        std::sort(edge_list.begin(), edge_list.end());
        edges_ = std::move(edge_list);
        neighbors_.assign(n_, {});
        for (const auto& [u, v] : edges_) {
            neighbors_[u].push_back(v);
            neighbors_[v].push_back(u);
        }
        for (auto& list : neighbors_) std::sort(list.begin(), list.end());
    }

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    bool adjacent(int u, int v) const { return adj_[u][v]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }
    const boost::dynamic_bitset<>& neighbor_bits(int v) const { return adj_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_[v]; }

    // Id of the vertex with the given name; throws if absent.
    int index_of(const std::string& name) const {
        for (int v = 0; v < n_; ++v)
            if (names_[v] == name) return v;
        throw InvalidParameter("unknown vertex name '" + name + "'");
    }

    int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }

  private:
    int n_;
    std::vector<std::string> names_;
    std::vector<boost::dynamic_bitset<>> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> neighbors_;
};

// A clique, stored as a sorted vertex list.
struct Clique {
    VertexSet vertices;
    int size() const { return static_cast<int>(vertices.size()); }
    friend bool operator==(const Clique&, const Clique&) = default;
    friend auto operator<=>(const Clique& a, const Clique& b) {
        return a.vertices <=> b.vertices;
    }
};

// A cycle, stored in canonical traversal order: the smallest vertex id
// comes first, followed by the smaller of its two cycle neighbors. Two
// cyclic sequences describing the same cycle canonicalise identically.
struct Cycle {
    std::vector<VertexId> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
    friend bool operator==(const Cycle&, const Cycle&) = default;
    friend auto operator<=>(const Cycle& a, const Cycle& b) {
        return a.vertices <=> b.vertices;
    }
};

inline Cycle canonical_cycle(const std::vector<VertexId>& sequence) {
    const int len = static_cast<int>(sequence.size());
    if (len < 3) throw InvalidParameter("cycle needs at least three vertices");
    int start = 0;
    for (int i = 1; i < len; ++i)
        if (sequence[i] < sequence[start]) start = i;
    const int next = sequence[(start + 1) % len];
    const int prev = sequence[(start + len - 1) % len];
    Cycle out;
    out.vertices.reserve(len);
    if (next <= prev) {
        for (int i = 0; i < len; ++i) out.vertices.push_back(sequence[(start + i) % len]);
    } else {
        for (int i = 0; i < len; ++i)
            out.vertices.push_back(sequence[(start + len - i) % len]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

enum class GraphFormat { edge_list, json };

namespace detail {

inline Graph parse_edge_list(const std::string& text) {
    std::vector<std::string> data_lines;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;       // blank
        if (line[first] == '#') continue;               // comment line
        data_lines.push_back(line);
    }
    if (data_lines.empty()) throw ParseError("empty edge-list input");

    auto parse_ints = [](const std::string& l, int expected) {
        std::istringstream ls(l);
        std::vector<int> out;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                int value = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                out.push_back(value);
            } catch (const std::exception&) {
                throw ParseError("bad integer token '" + tok + "'");
            }
        }
        if (static_cast<int>(out.size()) != expected)
            throw ParseError("expected " + std::to_string(expected) +
                             " integers on line '" + l + "'");
        return out;
    };

    const auto header = parse_ints(data_lines[0], 2);
    const int n = header[0];
    const int m = header[1];
    if (m < 0) throw ParseError("negative edge count");
    if (static_cast<int>(data_lines.size()) != m + 1)
        throw ParseError("edge-list input has " +
                         std::to_string(data_lines.size() - 1) + " edge lines, header says " +
                         std::to_string(m));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 1; i <= m; ++i) {
        const auto pair = parse_ints(data_lines[i], 2);
        edges.emplace_back(pair[0], pair[1]);
    }
    return Graph(n, std::move(edges));
}

inline Graph parse_graph_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
        !doc["vertices"].is_array() || !doc["edges"].is_array())
        throw ParseError("graph JSON needs \"vertices\" and \"edges\" arrays");
    std::vector<std::string> names;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) throw ParseError("vertex names must be strings");
        names.push_back(v.get<std::string>());
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("each edge must be a two-element array");
        int endpoint[2];
        for (int i = 0; i < 2; ++i) {
            if (e[i].is_number_integer()) {
                endpoint[i] = e[i].get<int>();
            } else if (e[i].is_string()) {
                const auto name = e[i].get<std::string>();
                const auto it = std::find(names.begin(), names.end(), name);
                if (it == names.end())
                    throw ParseError("edge references unknown vertex '" + name + "'");
                endpoint[i] = static_cast<int>(it - names.begin());
            } else {
                throw ParseError("edge endpoints must be indices or vertex names");
            }
        }
        edges.emplace_back(endpoint[0], endpoint[1]);
    }
    const int n = static_cast<int>(names.size());  // read before names is moved from
    return Graph(n, std::move(edges), std::move(names));
}

}  // namespace detail

inline Graph parse_graph(const std::string& text, GraphFormat format) {
    switch (format) {
        case GraphFormat::edge_list: return detail::parse_edge_list(text);
        case GraphFormat::json: return detail::parse_graph_json(text);
    }
    throw InvalidParameter("unknown graph format");
}

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json doc;
    doc["vertices"] = g.names();
    auto& edges = doc["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return doc;
}

// ---------------------------------------------------------------------------
// Generators

inline Graph cycle_graph(int n) {
    if (n < 3) throw InvalidParameter("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(edges));
}

inline Graph complete_graph(int n) {
    if (n < 1) throw InvalidParameter("complete graph needs at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

inline Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw InvalidParameter("bipartite sides must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, std::move(edges));
}

inline Graph path_graph(int n) {
    if (n < 1) throw InvalidParameter("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

// Wheel on n rim vertices plus one hub (vertex n).
inline Graph wheel_graph(int n) {
    if (n < 3) throw InvalidParameter("wheel rim needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        edges.emplace_back(v, (v + 1) % n);
        edges.emplace_back(v, n);
    }
    return Graph(n + 1, std::move(edges));
}

inline Graph edgeless_graph(int n) {
    if (n < 1) throw InvalidParameter("graph needs at least 1 vertex");
    return Graph(n, {});
}

// Finite poset given by a list of strict relations a < b; the transitive
// closure is taken here, and a cycle in the relations is rejected.
struct Poset {
    int n = 0;
    std::vector<std::pair<int, int>> relations;
};

inline Graph comparability_graph(const Poset& poset) {
    if (poset.n < 1) throw InvalidParameter("poset needs at least 1 element");
    const int n = poset.n;
    std::vector<boost::dynamic_bitset<>> below(n, boost::dynamic_bitset<>(n));
    for (const auto& [a, b] : poset.relations) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw InvalidParameter("poset relation out of range");
        if (a == b) throw InvalidParameter("poset relation must be strict");
        below[a].set(b);
    }
    // transitive closure
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (below[i][k]) below[i] |= below[k];
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
        if (below[a][a]) throw InvalidParameter("poset relations contain a cycle");
        for (int b = a + 1; b < n; ++b)
            if (below[a][b] || below[b][a]) edges.emplace_back(a, b);
    }
    return Graph(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Clique enumeration

// All maximal cliques (Bron–Kerbosch with pivoting), sorted lexicographically.
inline std::vector<Clique> maximal_cliques(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<Clique> out;
    std::vector<int> current;
    using Bits = boost::dynamic_bitset<>;

    auto expand = [&](auto&& self, Bits candidates, Bits excluded) -> void {
        if (candidates.none() && excluded.none()) {
            Clique c{current};
            std::sort(c.vertices.begin(), c.vertices.end());
            out.push_back(std::move(c));
            return;
        }
        // pivot: vertex of candidates|excluded covering the most candidates
        Bits both = candidates | excluded;
        int pivot = -1;
        std::size_t best = 0;
        for (auto u = both.find_first(); u != Bits::npos; u = both.find_next(u)) {
            const std::size_t covered = (candidates & g.neighbor_bits(static_cast<int>(u))).count();
            if (pivot < 0 || covered > best) {
                pivot = static_cast<int>(u);
                best = covered;
            }
        }
        Bits branch = candidates & ~g.neighbor_bits(pivot);
        for (auto v = branch.find_first(); v != Bits::npos; v = branch.find_next(v)) {
            const int vi = static_cast<int>(v);
            current.push_back(vi);
            self(self, candidates & g.neighbor_bits(vi), excluded & g.neighbor_bits(vi));
            current.pop_back();
            candidates.reset(v);
            excluded.set(v);
        }
    };

    Bits all(n);
    all.set();
    expand(expand, all, Bits(n));
    std::sort(out.begin(), out.end());
    return out;
}

// Every nonempty clique, in lexicographic order. Exponential by nature, so
// guarded by a vertex-count cap.
inline std::vector<Clique> all_cliques(const Graph& g, int max_vertices = 12) {
    const int n = g.num_vertices();
    if (n > max_vertices)
        throw SizeLimitExceeded("all_cliques: graph has " + std::to_string(n) +
                                " vertices, cap is " + std::to_string(max_vertices));
    std::vector<Clique> out;
    std::vector<int> current;
    auto extend = [&](auto&& self, int start) -> void {
        for (int v = start; v < n; ++v) {
            bool joined = true;
            for (int u : current)
                if (!g.adjacent(u, v)) {
                    joined = false;
                    break;
                }
            if (!joined) continue;
            current.push_back(v);
            out.push_back(Clique{current});
            self(self, v + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

inline bool is_triangle_free(const Graph& g) {
    for (const auto& [u, v] : g.edges())
        if ((g.neighbor_bits(u) & g.neighbor_bits(v)).any()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Cycle enumeration

// Chordless cycles of odd length >= min_len (and <= max_len if positive),
// canonicalised and sorted. The search grows induced paths from their
// smallest vertex: an extension may touch the path only at its tail, except
// that touching the start closes a cycle, which is recorded and not grown
// further (the closing edge would be a chord of any longer cycle).
inline std::vector<Cycle> chordless_odd_cycles(const Graph& g, int min_len = 5,
                                               int max_len = 0) {
    if (min_len < 5 || min_len % 2 == 0)
        throw InvalidParameter("min_len must be an odd number >= 5");
    const int n = g.num_vertices();
    if (max_len <= 0) max_len = n;
    std::set<Cycle> found;
    std::vector<int> path;
    std::vector<char> on_path(n, 0);

    auto grow = [&](auto&& self) -> void {
        const int start = path.front();
        const int tail = path.back();
        const int plen = static_cast<int>(path.size());
        for (int w : g.neighbors(tail)) {
            if (w <= start || on_path[w]) continue;
            // w may not see any interior path vertex (indices 1..plen-2)
            bool chord = false;
            for (int i = 1; i + 1 < plen; ++i)
                if (g.adjacent(w, path[i])) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (plen >= 2 && g.adjacent(w, start)) {
                const int cycle_len = plen + 1;
                if (cycle_len >= min_len && cycle_len <= max_len && cycle_len % 2 == 1) {
                    path.push_back(w);
                    found.insert(canonical_cycle(path));
                    path.pop_back();
                }
                continue;  // closing edge would be a chord in any extension
            }
            if (plen >= max_len) continue;
            path.push_back(w);
            on_path[w] = 1;
            self(self);
            on_path[w] = 0;
            path.pop_back();
        }
    };

    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        grow(grow);
        on_path[s] = 0;
    }
    return {found.begin(), found.end()};
}

// Every odd cycle (chords allowed), canonicalised and sorted. Guarded by a
// vertex cap since the number of cycles is exponential.
inline std::vector<Cycle> all_odd_cycles(const Graph& g, int max_vertices = 10) {
    const int n = g.num_vertices();
    if (n > max_vertices)
        throw SizeLimitExceeded("all_odd_cycles: graph has " + std::to_string(n) +
                                " vertices, cap is " + std::to_string(max_vertices));
    std::set<Cycle> found;
    std::vector<int> path;
    std::vector<char> on_path(n, 0);

    auto grow = [&](auto&& self) -> void {
        const int start = path.front();
        const int tail = path.back();
        const int plen = static_cast<int>(path.size());
        for (int w : g.neighbors(tail)) {
            if (w <= start || on_path[w]) continue;
            if (plen >= 2 && g.adjacent(w, start) && (plen + 1) % 2 == 1) {
                path.push_back(w);
                found.insert(canonical_cycle(path));
                path.pop_back();
            }
            path.push_back(w);
            on_path[w] = 1;
            self(self);
            on_path[w] = 0;
            path.pop_back();
        }
    };

    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        grow(grow);
        on_path[s] = 0;
    }
    return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// Stable sets

// Visits every stable set (the empty set included) exactly once, in
// lexicographic order of the sorted vertex lists. The callback receives the
// current set as a sorted vector; it must not retain the reference.
template <class Callback>
inline void for_each_stable_set(const Graph& g, Callback&& visit, int max_vertices = 25) {
    const int n = g.num_vertices();
    if (n > max_vertices)
        throw SizeLimitExceeded("stable-set enumeration: graph has " + std::to_string(n) +
                                " vertices, cap is " + std::to_string(max_vertices));
    std::vector<int> current;
    boost::dynamic_bitset<> blocked(n);
    auto extend = [&](auto&& self, int start, boost::dynamic_bitset<> forbidden) -> void {
        visit(static_cast<const std::vector<int>&>(current));
        for (int v = start; v < n; ++v) {
            if (forbidden[v]) continue;
            current.push_back(v);
            self(self, v + 1, forbidden | g.neighbor_bits(v));
            current.pop_back();
        }
    };
    extend(extend, 0, std::move(blocked));
}

inline std::vector<VertexSet> stable_sets(const Graph& g, int max_vertices = 25) {
    std::vector<VertexSet> out;
    for_each_stable_set(g, [&](const std::vector<int>& s) { out.push_back(s); }, max_vertices);
    return out;
}

inline long long count_stable_sets(const Graph& g, int max_vertices = 25) {
    long long count = 0;
    for_each_stable_set(g, [&](const std::vector<int>&) { ++count; }, max_vertices);
    return count;
}

}  // namespace gorstab
