#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "gorstab/graph.hpp"
#include "support/corpus.hpp"
#include "support/naive.hpp"

using namespace gorstab;
using namespace gorstab::testing;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("edge list parsing round trips") {
    const std::string text = "# a pentagon\n5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
    const Graph g = parse_graph(text, GraphFormat::edge_list);
    REQUIRE(g.num_vertices() == 5);
    REQUIRE(g.num_edges() == 5);
    REQUIRE(g.adjacent(0, 4));
    REQUIRE_FALSE(g.adjacent(0, 2));
    REQUIRE(g.name(3) == "3");
    REQUIRE(g.index_of("3") == 3);
}

TEST_CASE("edge list parser rejects malformed input") {
    REQUIRE_THROWS_AS(parse_graph("", GraphFormat::edge_list), ParseError);
    REQUIRE_THROWS_AS(parse_graph("3\n", GraphFormat::edge_list), ParseError);
    REQUIRE_THROWS_AS(parse_graph("3 1\n", GraphFormat::edge_list), ParseError);        // missing edge
    REQUIRE_THROWS_AS(parse_graph("3 1\n0 1\n1 2\n", GraphFormat::edge_list), ParseError);  // extra edge
    REQUIRE_THROWS_AS(parse_graph("3 1\n0 x\n", GraphFormat::edge_list), ParseError);
    REQUIRE_THROWS_AS(parse_graph("3 1\n0 1 2\n", GraphFormat::edge_list), ParseError);
    REQUIRE_THROWS_AS(parse_graph("0 0\n", GraphFormat::edge_list), InvalidGraph);
    REQUIRE_THROWS_AS(parse_graph("3 1\n1 1\n", GraphFormat::edge_list), InvalidGraph);  // loop
    REQUIRE_THROWS_AS(parse_graph("3 2\n0 1\n1 0\n", GraphFormat::edge_list), InvalidGraph);
    REQUIRE_THROWS_AS(parse_graph("3 1\n0 3\n", GraphFormat::edge_list), InvalidGraph);
}

TEST_CASE("json graph parsing accepts ids and names") {
    const std::string text = R"({"vertices":["a","b","c"],"edges":[[0,1],["b","c"]]})";
    const Graph g = parse_graph(text, GraphFormat::json);
    REQUIRE(g.num_vertices() == 3);
    REQUIRE(g.adjacent(0, 1));
    REQUIRE(g.adjacent(1, 2));
    REQUIRE_FALSE(g.adjacent(0, 2));
    REQUIRE(g.index_of("c") == 2);

    const Graph back = parse_graph(graph_to_json(g).dump(), GraphFormat::json);
    REQUIRE(back.names() == g.names());
    REQUIRE(back.edges() == g.edges());

    REQUIRE_THROWS_AS(parse_graph(R"({"vertices":["a","a"],"edges":[]})", GraphFormat::json),
                      InvalidGraph);
    REQUIRE_THROWS_AS(parse_graph(R"({"vertices":["a"],"edges":[["a","z"]]})", GraphFormat::json),
                      ParseError);
    REQUIRE_THROWS_AS(parse_graph("[1,2]", GraphFormat::json), ParseError);
    REQUIRE_THROWS_AS(parse_graph("{not json", GraphFormat::json), ParseError);
}

TEST_CASE("generators build the expected graphs") {
    REQUIRE(cycle_graph(5).num_edges() == 5);
    REQUIRE_THROWS_AS(cycle_graph(2), InvalidParameter);
    REQUIRE(complete_graph(4).num_edges() == 6);
    REQUIRE(complete_bipartite_graph(2, 3).num_edges() == 6);
    REQUIRE(path_graph(1).num_edges() == 0);
    REQUIRE(path_graph(4).num_edges() == 3);
    REQUIRE(edgeless_graph(3).num_edges() == 0);

    const Graph w = wheel_graph(5);
    REQUIRE(w.num_vertices() == 6);
    REQUIRE(w.num_edges() == 10);
    REQUIRE(w.degree(5) == 5);  // hub comes after the rim
    for (int v = 0; v < 5; ++v) REQUIRE(w.degree(v) == 3);
}

TEST_CASE("comparability graphs come from posets") {
    // chain 0 < 1 < 2 (transitivity fills in 0 < 2)
    const Graph chain = comparability_graph(Poset{3, {{0, 1}, {1, 2}}});
    REQUIRE(chain.num_edges() == 3);

    const Graph antichain = comparability_graph(Poset{3, {}});
    REQUIRE(antichain.num_edges() == 0);

    // diamond 0 < 1 < 3, 0 < 2 < 3: only 1 and 2 are incomparable
    const Graph diamond = comparability_graph(Poset{4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}});
    REQUIRE(diamond.num_edges() == 5);
    REQUIRE_FALSE(diamond.adjacent(1, 2));

    REQUIRE_THROWS_AS(comparability_graph(Poset{2, {{0, 1}, {1, 0}}}), InvalidParameter);
}

TEST_CASE("maximal cliques match brute force on all five-vertex graphs") {
    for (unsigned mask = 0; mask < 1024; ++mask) {
        const Graph g = five_vertex_graph(mask);
        REQUIRE(maximal_cliques(g) == naive_maximal_cliques(g));
    }
}

TEST_CASE("maximal cliques match brute force on random seven-vertex graphs") {
    std::mt19937 rng(20260817);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(7, 0.5, rng);
        REQUIRE(maximal_cliques(g) == naive_maximal_cliques(g));
    }
}

TEST_CASE("all cliques match brute force") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(6, 0.5, rng);
        REQUIRE(all_cliques(g) == naive_all_cliques(g));
    }
    REQUIRE(all_cliques(complete_graph(4)).size() == 15);  // every nonempty subset
    REQUIRE_THROWS_AS(all_cliques(edgeless_graph(13)), SizeLimitExceeded);
}

TEST_CASE("chordless odd cycle enumeration matches brute force") {
    auto sets_of = [](const std::vector<Cycle>& cycles) {
        std::vector<VertexSet> out;
        for (const auto& c : cycles) {
            VertexSet s = c.vertices;
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    for (unsigned mask = 0; mask < 1024; ++mask) {
        const Graph g = five_vertex_graph(mask);
        REQUIRE(sets_of(chordless_odd_cycles(g)) == naive_chordless_odd_cycle_sets(g));
    }
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(7, 0.4, rng);
        REQUIRE(sets_of(chordless_odd_cycles(g)) == naive_chordless_odd_cycle_sets(g));
    }
    // triangles are cliques, not holes: lengths below five are rejected
    REQUIRE_THROWS_AS(chordless_odd_cycles(complete_graph(3), 3), InvalidParameter);
    REQUIRE_THROWS_AS(chordless_odd_cycles(cycle_graph(7), 6), InvalidParameter);  // even
    REQUIRE(chordless_odd_cycles(cycle_graph(9)).size() == 1);
    REQUIRE(chordless_odd_cycles(cycle_graph(9), 5, 7).empty());  // max length cut
}

TEST_CASE("all odd cycle enumeration matches brute force") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(6, 0.5, rng);
        REQUIRE(all_odd_cycles(g) == naive_all_odd_cycles(g));
    }
    // K5: 10 triangles plus 12 five-cycles
    REQUIRE(all_odd_cycles(complete_graph(5)).size() == 22);
    REQUIRE(all_odd_cycles(complete_graph(5)) == naive_all_odd_cycles(complete_graph(5)));
    REQUIRE_THROWS_AS(all_odd_cycles(cycle_graph(11)), SizeLimitExceeded);
}

TEST_CASE("canonical cycles start at their smallest vertex") {
    const Cycle c = canonical_cycle({3, 1, 4, 2, 5});
    REQUIRE(c.vertices.front() == 1);
    REQUIRE(c.vertices[1] < c.vertices.back());
    REQUIRE(canonical_cycle({4, 2, 1, 3, 5}).vertices ==
            canonical_cycle({1, 2, 4, 5, 3}).vertices);
    REQUIRE_THROWS_AS(canonical_cycle({0, 1}), InvalidParameter);
}

TEST_CASE("stable set enumeration matches brute force and is ordered") {
    for (unsigned mask = 0; mask < 1024; mask += 7) {
        const Graph g = five_vertex_graph(mask);
        REQUIRE(stable_sets(g) == naive_stable_sets(g));
    }
    const auto sets = stable_sets(cycle_graph(5));
    REQUIRE(sets.size() == 11);
    REQUIRE(sets.front().empty());                       // empty set first
    REQUIRE(std::is_sorted(sets.begin(), sets.end()));   // lexicographic order
    REQUIRE(count_stable_sets(cycle_graph(5)) == 11);
    REQUIRE(count_stable_sets(cycle_graph(7)) == 29);
    REQUIRE(count_stable_sets(complete_graph(5)) == 6);
    REQUIRE_THROWS_AS(stable_sets(edgeless_graph(26)), SizeLimitExceeded);

    long long visits = 0;
    for_each_stable_set(path_graph(4), [&](const VertexSet&) { ++visits; });
    REQUIRE(visits == count_stable_sets(path_graph(4)));
}

TEST_CASE("triangle detection") {
    REQUIRE(is_triangle_free(cycle_graph(5)));
    REQUIRE(is_triangle_free(complete_bipartite_graph(3, 3)));
    REQUIRE_FALSE(is_triangle_free(complete_graph(3)));
    REQUIRE_FALSE(is_triangle_free(wheel_graph(5)));
}

TEST_CASE("graph constructor validates its input") {
    REQUIRE_THROWS_AS(Graph(0, {}), InvalidGraph);
    REQUIRE_THROWS_AS(Graph(2, {{0, 0}}), InvalidGraph);
    REQUIRE_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InvalidGraph);
    REQUIRE_THROWS_AS(Graph(2, {{0, 2}}), InvalidGraph);
    REQUIRE_THROWS_AS(Graph(2, {}, {"a"}), InvalidGraph);
    REQUIRE_THROWS_AS(Graph(2, {}, {"a", "a"}), InvalidGraph);
    REQUIRE_THROWS_AS(Graph(2, {}, {"a", ""}), InvalidGraph);
    const Graph g(2, {}, {"left", "right"});
    REQUIRE(g.index_of("right") == 1);
    REQUIRE_THROWS_AS(g.index_of("missing"), InvalidParameter);
}
