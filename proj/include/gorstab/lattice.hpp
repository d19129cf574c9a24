#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gorstab/errors.hpp"
#include "gorstab/graph.hpp"
#include "gorstab/monomial.hpp"

// Membership in the graded pieces U^(n) of the anticanonical chain attached
// to the clique/odd-cycle relaxation of the stable set polytope, plus the
// combinatorial Gorenstein test built on it. Everything here is pure
// integer arithmetic: the odd-cycle inequality with its half-integral right
// side is stored doubled, so no rationals appear.

namespace gorstab {

enum class StabVariant { hstab, tstab, qstab };

// The clique and odd-cycle families whose inequalities cut out a given
// relaxation. For hstab: maximal cliques + chordless odd cycles >= 5. For
// tstab: the maximal cliques among those with at most 3 vertices, same
// cycles. For qstab: maximal cliques only.
struct MembershipSystem {
    int n = 0;
    std::vector<VertexSet> cliques;
    std::vector<VertexSet> cycles;
};

// Maximal elements of the family of cliques with at most three vertices:
// all triangles, every edge not inside a triangle, every isolated vertex.
inline std::vector<Clique> tstab_clique_family(const Graph& g) {
    std::vector<Clique> out;
    const int n = g.num_vertices();
    for (int v = 0; v < n; ++v)
        if (g.neighbors(v).empty()) out.push_back(Clique{{v}});
    for (const auto& [u, v] : g.edges())
        if ((g.neighbor_bits(u) & g.neighbor_bits(v)).none()) out.push_back(Clique{{u, v}});
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) continue;
            auto common = g.neighbor_bits(u) & g.neighbor_bits(v);
            for (auto w = common.find_next(v); w != boost::dynamic_bitset<>::npos;
                 w = common.find_next(w))
                out.push_back(Clique{{u, v, static_cast<int>(w)}});
        }
    std::sort(out.begin(), out.end());
    return out;
}

inline MembershipSystem membership_system(const Graph& g,
                                          StabVariant variant = StabVariant::hstab) {
    MembershipSystem sys;
    sys.n = g.num_vertices();
    const auto cliques = (variant == StabVariant::tstab) ? tstab_clique_family(g)
                                                         : maximal_cliques(g);
    for (const auto& k : cliques) sys.cliques.push_back(k.vertices);
    if (variant != StabVariant::qstab)
        for (const auto& c : chordless_odd_cycles(g)) {
            VertexSet vs = c.vertices;
            std::sort(vs.begin(), vs.end());
            sys.cycles.push_back(std::move(vs));
        }
    return sys;
}

// mu lies in U^(n) iff
//   mu(v)       >= n                     for every vertex v,
//   mu+(K)      <= mu(deg) - n           for every clique K of the family,
//   2 mu+(C)    <= mu(deg)(|C|-1) - 2n   for every odd cycle C of the family
// where mu(deg) is the exponent of the grading variable.
inline bool u_membership(const MembershipSystem& sys, const Monomial& mu, long long n) {
    if (static_cast<int>(mu.values.size()) != sys.n)
        throw DimensionMismatch("monomial dimension does not match graph");
    for (const auto value : mu.values)
        if (value < n) return false;
    for (const auto& clique : sys.cliques)
        if (sum_over(mu, clique) > mu.deg - n) return false;
    for (const auto& cycle : sys.cycles) {
        const long long len = static_cast<long long>(cycle.size());
        if (2 * sum_over(mu, cycle) > mu.deg * (len - 1) - 2 * n) return false;
    }
    return true;
}

inline bool u_membership(const Graph& g, const Monomial& mu, long long n) {
    return u_membership(membership_system(g, StabVariant::hstab), mu, n);
}

inline bool tu_membership(const Graph& g, const Monomial& mu, long long n) {
    return u_membership(membership_system(g, StabVariant::tstab), mu, n);
}

inline bool qu_membership(const Graph& g, const Monomial& mu, long long n) {
    return u_membership(membership_system(g, StabVariant::qstab), mu, n);
}

// U^(0) is the monomial support of the Ehrhart ring itself; U^(1) the
// support of its canonical module.
inline bool in_ehrhart_ring(const Graph& g, const Monomial& mu) {
    return u_membership(g, mu, 0);
}

inline bool in_canonical_ideal(const Graph& g, const Monomial& mu) {
    return u_membership(g, mu, 1);
}

inline bool symbolic_power_membership(const Graph& g, const Monomial& mu, long long n) {
    if (n < 1) throw InvalidParameter("symbolic power needs n >= 1");
    return u_membership(g, mu, n);
}

// ---------------------------------------------------------------------------
// Gorenstein tests

// Which arm of the constant-clique-size test applied:
//   a: common size 1 (edgeless), no cycle condition;
//   b: common size 2, no chordless odd cycle of length >= 7;
//   c: common size >= 3, no chordless odd cycle of length >= 5.
enum class GorensteinBranch { a, b, c };

struct GorensteinVerdict {
    bool gorenstein = false;
    StabVariant variant = StabVariant::hstab;
    std::vector<int> clique_sizes;           // sorted sizes of the clique family
    std::optional<int> common_size;          // set when the sizes agree
    std::optional<GorensteinBranch> branch;  // set when gorenstein
    // witnesses (set when not gorenstein, mutually exclusive):
    std::optional<std::pair<Clique, Clique>> unequal_cliques;
    std::optional<Cycle> offending_cycle;
};

// The combinatorial Gorenstein test for the Ehrhart ring of the chosen
// relaxation: all cliques of the defining family must have one common size
// n, and (except for the pure clique relaxation, which needs nothing more)
// chordless odd cycles must be absent from length 7 up when n = 2, and from
// length 5 up when n >= 3.
inline GorensteinVerdict gorenstein_criterion(const Graph& g,
                                              StabVariant variant = StabVariant::hstab) {
    GorensteinVerdict verdict;
    verdict.variant = variant;
    const auto cliques = (variant == StabVariant::tstab) ? tstab_clique_family(g)
                                                         : maximal_cliques(g);
    for (const auto& k : cliques) verdict.clique_sizes.push_back(k.size());
    std::sort(verdict.clique_sizes.begin(), verdict.clique_sizes.end());

    for (std::size_t i = 0; i < cliques.size(); ++i)
        if (cliques[i].size() != cliques[0].size()) {
            verdict.gorenstein = false;
            verdict.unequal_cliques = std::make_pair(cliques[0], cliques[i]);
            return verdict;
        }
    const int n = cliques[0].size();
    verdict.common_size = n;

    if (variant == StabVariant::qstab) {
        verdict.gorenstein = true;
        return verdict;
    }
    if (n == 1) {
        verdict.gorenstein = true;
        verdict.branch = GorensteinBranch::a;
        return verdict;
    }
    const int forbidden_from = (n == 2) ? 7 : 5;
    const auto holes = chordless_odd_cycles(g, forbidden_from);
    if (!holes.empty()) {
        verdict.gorenstein = false;
        verdict.offending_cycle = holes.front();
        return verdict;
    }
    verdict.gorenstein = true;
    verdict.branch = (n == 2) ? GorensteinBranch::b : GorensteinBranch::c;
    return verdict;
}

// Independent reformulation of the same property: the ring is Gorenstein
// iff some monomial eta in U^(1) has -eta in U^(-1). Such an eta must have
// value 1 on every vertex, which pins it down to (1,...,1; s), and the two
// memberships force max clique size + 1 <= s <= min clique size + 1, so
// only those degrees need testing (no candidates when clique sizes differ).
inline bool trace_test(const Graph& g) {
    const auto sys = membership_system(g, StabVariant::hstab);
    long long smallest = sys.n, largest = 0;
    for (const auto& clique : sys.cliques) {
        smallest = std::min<long long>(smallest, clique.size());
        largest = std::max<long long>(largest, clique.size());
    }
    for (long long s = largest + 1; s <= smallest + 1; ++s) {
        Monomial eta{std::vector<long long>(sys.n, 1), s};
        if (u_membership(sys, eta, 1) && u_membership(sys, -eta, -1)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Decomposition into k summands from U^(1)

struct DecomposeOptions {
    long long node_budget = 100'000'000;
};

namespace detail {

struct DecomposeConstraint {
    bool is_cycle = false;
    long long size = 0;
    VertexSet members;
};

}  // namespace detail

// Searches for monomials mu_1, ..., mu_k, each in U^(1), summing to mu.
// Exhaustive backtracking: the degree of each summand is split first (the
// splits are enumerated as nondecreasing sequences, smallest first), then
// vertex values are assigned in vertex-major order with partial-sum pruning
// against every clique/cycle constraint. Deterministic: the first
// decomposition in this order is returned. Returns nullopt when none
// exists; throws SearchBudgetExceeded when the node budget runs out first.
inline std::optional<std::vector<Monomial>> decompose_into_u1(
    const Graph& g, const Monomial& mu, int k, const DecomposeOptions& options = {}) {
    const int n = g.num_vertices();
    if (k < 1) throw InvalidParameter("need k >= 1 summands");
    if (static_cast<int>(mu.values.size()) != n)
        throw DimensionMismatch("monomial dimension does not match graph");

    const auto sys = membership_system(g, StabVariant::hstab);
    if (k == 1)
        return u_membership(sys, mu, 1) ? std::optional<std::vector<Monomial>>{{mu}}
                                        : std::nullopt;
    // necessary by additivity of the chain; cheap early exit
    if (!u_membership(sys, mu, k)) return std::nullopt;

    std::vector<detail::DecomposeConstraint> constraints;
    long long min_part_deg = 2;
    for (const auto& clique : sys.cliques) {
        constraints.push_back({false, static_cast<long long>(clique.size()), clique});
        // mu_i+(K) <= s_i - 1 with all values >= 1 forces s_i >= |K| + 1
        min_part_deg = std::max(min_part_deg, static_cast<long long>(clique.size()) + 1);
    }
    for (const auto& cycle : sys.cycles) {
        constraints.push_back({true, static_cast<long long>(cycle.size()), cycle});
        // 2 mu_i+(C) <= s_i(|C|-1) - 2 with values >= 1 forces
        // s_i >= (2|C| + 2) / (|C| - 1), which is 3 for every |C| >= 5
        min_part_deg = std::max(min_part_deg, 3LL);
    }
    const int c = static_cast<int>(constraints.size());

    // members of each constraint with id > v, for suffix pruning
    std::vector<std::vector<std::pair<int, long long>>> incident(n);
    for (int ci = 0; ci < c; ++ci) {
        const auto& members = constraints[ci].members;
        for (std::size_t pos = 0; pos < members.size(); ++pos)
            incident[members[pos]].push_back(
                {ci, static_cast<long long>(members.size() - pos - 1)});
    }

    long long nodes = 0;
    std::vector<long long> split(k);
    std::vector<std::vector<long long>> values(k, std::vector<long long>(n, 0));
    std::vector<std::vector<long long>> partial(k, std::vector<long long>(c, 0));

    // Is "sum so far + best case for the unassigned members" still within
    // the part's bound for this constraint? The unassigned members each
    // contribute at least 1, so the optimistic future total is sum+remaining.
    auto feasible = [&](int part, int ci, long long sum, long long remaining) {
        const auto& constraint = constraints[ci];
        if (constraint.is_cycle)
            return 2 * (sum + remaining) <= split[part] * (constraint.size - 1) - 2;
        return sum + remaining <= split[part] - 1;
    };

    // Applies every increment before checking, so a failed assignment can
    // still be rolled back uniformly by unassign().
    auto assign = [&](int part, int v, long long value) -> bool {
        ++nodes;
        if (nodes > options.node_budget)
            throw SearchBudgetExceeded("decomposition search exceeded " +
                                       std::to_string(options.node_budget) + " nodes");
        values[part][v] = value;
        for (const auto& [ci, remaining] : incident[v]) partial[part][ci] += value;
        for (const auto& [ci, remaining] : incident[v])
            if (!feasible(part, ci, partial[part][ci], remaining)) return false;
        return true;
    };
    auto unassign = [&](int part, int v) {
        const long long value = values[part][v];
        for (const auto& [ci, remaining] : incident[v]) partial[part][ci] -= value;
        values[part][v] = 0;
    };

    // choose values for all parts at vertex v, then move to vertex v+1
    auto search_vertex = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        auto choose_part = [&](auto&& part_self, int part, long long left) -> bool {
            if (part == k - 1) {
                if (left < 1) return false;
                const bool ok = assign(part, v, left);
                if (ok && self(self, v + 1)) return true;
                unassign(part, v);
                return false;
            }
            // keep at least 1 for each of the remaining parts
            const long long max_value = left - (k - 1 - part);
            for (long long value = 1; value <= max_value; ++value) {
                const bool ok = assign(part, v, value);
                if (!ok) {
                    // partial sums only grow with the value, so larger
                    // choices for this part fail the same constraint
                    unassign(part, v);
                    break;
                }
                if (part_self(part_self, part + 1, left - value)) return true;
                unassign(part, v);
            }
            return false;
        };
        return choose_part(choose_part, 0, mu.values[v]);
    };

    // enumerate nondecreasing degree splits, lexicographically smallest first
    auto split_search = [&](auto&& self, int part, long long remaining_deg) -> bool {
        if (part == k - 1) {
            if (remaining_deg < split[k - 2]) return false;
            split[part] = remaining_deg;
            for (auto& row : partial) std::fill(row.begin(), row.end(), 0);
            return search_vertex(search_vertex, 0);
        }
        const long long lo = (part == 0) ? min_part_deg : split[part - 1];
        for (long long s = lo; s * (k - part) <= remaining_deg; ++s) {
            split[part] = s;
            if (self(self, part + 1, remaining_deg - s)) return true;
        }
        return false;
    };

    if (mu.deg < static_cast<long long>(k) * min_part_deg) return std::nullopt;
    if (!split_search(split_search, 0, mu.deg)) return std::nullopt;

    std::vector<Monomial> parts;
    parts.reserve(k);
    for (int i = 0; i < k; ++i) parts.push_back(Monomial{values[i], split[i]});
    return parts;
}

}  // namespace gorstab
