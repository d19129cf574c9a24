#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gorstab/errors.hpp"
#include "gorstab/graph.hpp"
#include "gorstab/halfspace.hpp"
#include "gorstab/lattice.hpp"
#include "gorstab/monomial.hpp"
#include "gorstab/polytope.hpp"
#include "gorstab/rational.hpp"

// A 21-vertex graph whose canonical-module monomial chain is NOT generated
// in the first graded piece: it carries a monomial mu in U^(2) that is not
// a sum of two members of U^(1), and a related rational point nu inside the
// clique/odd-cycle relaxation but outside the stable set polytope. The
// replication harness re-derives all of this from scratch with the generic
// machinery of the library.

namespace gorstab {

struct G21Labels {
    std::array<int, 7> x, y, z;
};

// Vertices: x_0..x_6 (ids 0..6), y_0..y_6 (ids 7..13), z_0..z_6 (ids
// 14..20). Edges, all indices mod 7:
//   x_i x_{i+1},  x_i y_i,  y_i z_i,  z_i y_{i+1},  z_i z_{i+3}.
// X is a 7-cycle in sequence order; Z is a 7-cycle in stride-3 order
// (z_0 z_3 z_6 z_2 z_5 z_1 z_4); Y is stable. For every i,
// C_i = x_i y_i z_i y_{i+1} x_{i+1} is a chordless 5-cycle.
inline std::pair<Graph, G21Labels> build_g21() {
    G21Labels labels;
    std::vector<std::string> names;
    for (int i = 0; i < 7; ++i) {
        labels.x[i] = i;
        names.push_back("x" + std::to_string(i));
    }
    for (int i = 0; i < 7; ++i) {
        labels.y[i] = 7 + i;
        names.push_back("y" + std::to_string(i));
    }
    for (int i = 0; i < 7; ++i) {
        labels.z[i] = 14 + i;
        names.push_back("z" + std::to_string(i));
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 7; ++i) {
        const int j = (i + 1) % 7;
        edges.emplace_back(labels.x[i], labels.x[j]);
        edges.emplace_back(labels.x[i], labels.y[i]);
        edges.emplace_back(labels.y[i], labels.z[i]);
        edges.emplace_back(labels.z[i], labels.y[j]);
        edges.emplace_back(labels.z[i], labels.z[(i + 3) % 7]);
    }
    return {Graph(21, std::move(edges), std::move(names)), labels};
}

// mu: exponent 4 on X and Z, 3 on Y, grading exponent 10.
inline Monomial g21_mu() {
    Monomial mu;
    mu.values.assign(21, 0);
    for (int i = 0; i < 7; ++i) {
        mu.values[i] = 4;       // x_i
        mu.values[7 + i] = 3;   // y_i
        mu.values[14 + i] = 4;  // z_i
    }
    mu.deg = 10;
    return mu;
}

// nu: 3/7 on X and Z, 5/14 on Y. Lies in the clique/odd-cycle relaxation
// but outside the stable set polytope.
inline RationalVector g21_nu() {
    RationalVector nu(21, 0);
    for (int i = 0; i < 7; ++i) {
        nu[i] = Rational(3, 7);
        nu[7 + i] = Rational(5, 14);
        nu[14 + i] = Rational(3, 7);
    }
    return nu;
}

// ---------------------------------------------------------------------------
// Replication harness

struct ReplicationCheck {
    std::string name;
    bool passed = false;
    nlohmann::json detail;
};

struct ReplicationReport {
    int version = 1;
    std::vector<ReplicationCheck> checks;
    bool all_passed = false;
};

inline nlohmann::json report_to_json(const ReplicationReport& report) {
    nlohmann::json doc;
    doc["version"] = report.version;
    auto& checks = doc["checks"] = nlohmann::json::array();
    for (const auto& check : report.checks) {
        nlohmann::json c;
        c["check"] = check.name;
        c["passed"] = check.passed;
        c["detail"] = check.detail;
        checks.push_back(std::move(c));
    }
    doc["passed"] = report.all_passed;
    return doc;
}

// Re-derives the counterexample facts with the generic machinery:
//   1. the graph is triangle-free (so its maximal cliques are its edges);
//   2. X and Z are chordless 7-cycles and each C_i a chordless 5-cycle,
//      all found by enumeration;
//   3. mu lies in U^(2);
//   4. mu is not a sum of two members of U^(1) (exhaustive search);
//   5. nu lies in the clique/odd-cycle relaxation;
//   6. nu is certifiably outside the stable set polytope, witnessed by
//      X, Z and the five-cycles C_0..C_6.
inline ReplicationReport replicate_example(const DecomposeOptions& options = {}) {
    ReplicationReport report;
    auto [g, labels] = build_g21();
    const Monomial mu = g21_mu();
    const RationalVector nu = g21_nu();

    {
        ReplicationCheck check;
        check.name = "triangle_free";
        check.passed = is_triangle_free(g);
        check.detail["num_vertices"] = g.num_vertices();
        check.detail["num_edges"] = g.num_edges();
        const auto cliques = maximal_cliques(g);
        check.detail["num_maximal_cliques"] = cliques.size();
        bool cliques_are_edges = cliques.size() == static_cast<std::size_t>(g.num_edges());
        for (const auto& k : cliques)
            if (k.size() != 2) cliques_are_edges = false;
        check.passed = check.passed && cliques_are_edges;
        check.detail["maximal_cliques_are_edges"] = cliques_are_edges;
        report.checks.push_back(std::move(check));
    }
    {
        ReplicationCheck check;
        check.name = "cycle_structure";
        const auto holes = chordless_odd_cycles(g);
        int five = 0, seven = 0, longer = 0;
        for (const auto& c : holes) {
            if (c.length() == 5) ++five;
            else if (c.length() == 7) ++seven;
            else ++longer;
        }
        check.detail["chordless_odd_cycles_5"] = five;
        check.detail["chordless_odd_cycles_7"] = seven;
        check.detail["chordless_odd_cycles_longer"] = longer;
        // the expected members: X in order, Z in stride-3 order, each C_i
        std::vector<Cycle> expected;
        {
            std::vector<int> seq;
            for (int i = 0; i < 7; ++i) seq.push_back(labels.x[i]);
            expected.push_back(canonical_cycle(seq));
            seq.clear();
            for (int i = 0, p = 0; i < 7; ++i, p = (p + 3) % 7) seq.push_back(labels.z[p]);
            expected.push_back(canonical_cycle(seq));
            for (int i = 0; i < 7; ++i) {
                const int j = (i + 1) % 7;
                expected.push_back(canonical_cycle(
                    {labels.x[i], labels.y[i], labels.z[i], labels.y[j], labels.x[j]}));
            }
        }
        bool all_found = true;
        for (const auto& e : expected)
            if (std::find(holes.begin(), holes.end(), e) == holes.end()) all_found = false;
        check.detail["expected_cycles_found"] = all_found;
        // every 5-cycle must meet Y at least twice (equivalently, meet both X
        // and Z); in a triangle-free graph every 5-cycle is chordless, so the
        // enumeration above already covers them all
        bool five_cycles_meet_y_twice = true;
        for (const auto& c : holes) {
            if (c.length() != 5) continue;
            int in_y = 0;
            for (int v : c.vertices)
                if (std::find(labels.y.begin(), labels.y.end(), v) != labels.y.end()) ++in_y;
            if (in_y < 2) five_cycles_meet_y_twice = false;
        }
        check.detail["every_five_cycle_meets_y_twice"] = five_cycles_meet_y_twice;
        check.passed = all_found && five >= 7 && seven >= 2 && five_cycles_meet_y_twice;
        report.checks.push_back(std::move(check));
    }
    {
        ReplicationCheck check;
        check.name = "mu_in_u2";
        check.passed = u_membership(g, mu, 2);
        check.detail["deg"] = mu.deg;
        report.checks.push_back(std::move(check));
    }
    {
        ReplicationCheck check;
        check.name = "mu_not_sum_of_two_u1";
        const auto parts = decompose_into_u1(g, mu, 2, options);
        check.passed = !parts.has_value();
        check.detail["decomposition_found"] = parts.has_value();
        report.checks.push_back(std::move(check));
    }
    {
        ReplicationCheck check;
        check.name = "nu_in_hstab";
        check.passed = contains(hstab_system(g, true), nu);
        report.checks.push_back(std::move(check));
    }
    {
        ReplicationCheck check;
        check.name = "nu_not_in_stab";
        std::vector<VertexSet> witnesses;
        witnesses.emplace_back(labels.x.begin(), labels.x.end());
        witnesses.emplace_back(labels.z.begin(), labels.z.end());
        for (int i = 0; i < 7; ++i) {
            const int j = (i + 1) % 7;
            VertexSet c{labels.x[i], labels.y[i], labels.z[i], labels.y[j], labels.x[j]};
            std::sort(c.begin(), c.end());
            witnesses.push_back(std::move(c));
        }
        const auto certificate = certify_not_in_stab(g, nu, witnesses);
        check.passed = certificate.kind == StabCertificate::Kind::not_in_stab;
        check.detail["surviving_stable_sets"] = certificate.surviving;
        check.detail["witness_maxima"] = certificate.witness_maxima;
        report.checks.push_back(std::move(check));
    }

    report.all_passed = true;
    for (const auto& check : report.checks) report.all_passed &= check.passed;
    return report;
}

}  // namespace gorstab
