#pragma once

#include <optional>
#include <vector>

#include "gorstab/errors.hpp"
#include "gorstab/graph.hpp"
#include "gorstab/halfspace.hpp"
#include "gorstab/rational.hpp"
#include "gorstab/simplex.hpp"
#include "gorstab/vertex_enum.hpp"

namespace gorstab {

struct BoundingBox {
    std::vector<Rational> lower, upper;
};

namespace detail {

// Coordinate bounds by interval propagation over the rows. Cheap and often
// finite on its own (every system built from a graph has nonnegativity rows
// and covering clique rows); a finite result is always a valid enclosure of
// the feasible set even when the propagation has not converged to the
// tightest box.
inline std::vector<std::pair<std::optional<Rational>, std::optional<Rational>>>
propagate_intervals(const HalfspaceSystem& s) {
    const int d = s.dimension;
    std::vector<std::pair<std::optional<Rational>, std::optional<Rational>>> box(d);
    const int sweeps = 3 * (d + 1);
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        bool changed = false;
        for (const auto& row : s.rows) {
            for (int j = 0; j < d; ++j) {
                if (row.coeffs[j] == 0) continue;
                // bound a_j x_j <= b - sum_{i != j} a_i x_i from below
                Rational rest = 0;
                bool rest_finite = true;
                for (int i = 0; i < d && rest_finite; ++i) {
                    if (i == j || row.coeffs[i] == 0) continue;
                    const auto& bound = (row.coeffs[i] > 0) ? box[i].first : box[i].second;
                    if (!bound) rest_finite = false;
                    else rest += row.coeffs[i] * *bound;
                }
                if (!rest_finite) continue;
                const Rational limit = (row.bound - rest) / row.coeffs[j];
                if (row.coeffs[j] > 0) {
                    if (!box[j].second || limit < *box[j].second) {
                        box[j].second = limit;
                        changed = true;
                    }
                } else {
                    if (!box[j].first || limit > *box[j].first) {
                        box[j].first = limit;
                        changed = true;
                    }
                }
            }
        }
        if (!changed) break;
    }
    return box;
}

// Exact bounding box of the feasible set: propagation first, one LP per
// still-open side as a fallback. Returns nullopt when the system is
// infeasible; throws Unbounded when some coordinate really is unbounded.
inline std::optional<BoundingBox> bounding_box(const HalfspaceSystem& s) {
    const int d = s.dimension;
    auto intervals = propagate_intervals(s);
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    auto need_lp = [&]() {
        if (!a.empty()) return;
        for (const auto& row : s.rows) {
            a.push_back(row.coeffs);
            b.push_back(row.bound);
        }
    };
    BoundingBox box;
    box.lower.resize(d);
    box.upper.resize(d);
    for (int j = 0; j < d; ++j) {
        for (int side = 0; side < 2; ++side) {
            const bool upper = (side == 1);
            const auto& known = upper ? intervals[j].second : intervals[j].first;
            if (known) {
                (upper ? box.upper[j] : box.lower[j]) = *known;
                continue;
            }
            need_lp();
            std::vector<Rational> objective(d, 0);
            objective[j] = upper ? 1 : -1;
            const auto lp = lp::maximize(a, b, objective);
            if (lp.status == lp::Status::unbounded)
                throw Unbounded("coordinate " + s.names[j] + " is unbounded");
            if (lp.status == lp::Status::infeasible) return std::nullopt;
            (upper ? box.upper[j] : box.lower[j]) = upper ? lp.objective : -lp.objective;
        }
    }
    return box;
}

}  // namespace detail

// Checks that the feasible set has full dimension d (there is a point
// satisfying every row strictly); also rejects unbounded or empty systems.
inline void assert_bounded_full_dimensional(const HalfspaceSystem& s) {
    if (!detail::bounding_box(s))
        throw PreconditionFailed("halfspace system is infeasible");
    // maximise the margin t with a.x + t <= b per row; positive optimum
    // means an interior point exists
    const int d = s.dimension;
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (const auto& row : s.rows) {
        auto extended = row.coeffs;
        extended.push_back(1);
        a.push_back(std::move(extended));
        b.push_back(row.bound);
    }
    std::vector<Rational> objective(d + 1, 0);
    objective[d] = 1;
    const auto lp = lp::maximize(a, b, objective);
    if (lp.status != lp::Status::optimal || lp.objective <= 0)
        throw PreconditionFailed("halfspace system is not full-dimensional");
}

// Removes redundant rows by one LP per row: maximise the row's left side
// subject to the other (still kept) rows; the row is redundant exactly when
// that maximum stays within its bound. Requires a bounded full-dimensional
// system, which makes the irredundant description unique up to scaling.
inline HalfspaceSystem remove_redundant(const HalfspaceSystem& s) {
    assert_bounded_full_dimensional(s);
    const int m = static_cast<int>(s.rows.size());
    std::vector<char> kept(m, 1);
    for (int i = 0; i < m; ++i) {
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> b;
        for (int k = 0; k < m; ++k) {
            if (k == i || !kept[k]) continue;
            a.push_back(s.rows[k].coeffs);
            b.push_back(s.rows[k].bound);
        }
        if (a.empty()) continue;
        const auto lp = lp::maximize(a, b, s.rows[i].coeffs);
        if (lp.status == lp::Status::optimal && lp.objective <= s.rows[i].bound)
            kept[i] = 0;
    }
    HalfspaceSystem out;
    out.dimension = s.dimension;
    out.names = s.names;
    for (int i = 0; i < m; ++i)
        if (kept[i]) out.rows.push_back(s.rows[i]);
    return out;
}

// Does p satisfy every row strictly? On an irredundant description of a
// full-dimensional polytope this is exactly relative-interior membership.
inline bool strictly_inside(const HalfspaceSystem& s, const RationalVector& p) {
    if (static_cast<int>(p.size()) != s.dimension)
        throw DimensionMismatch("point dimension does not match system");
    for (const auto& row : s.rows)
        if (row_value(row, p) >= row.bound) return false;
    return true;
}

// Relative-interior membership for a bounded full-dimensional system: the
// redundant rows are stripped first, then every remaining facet row must
// hold strictly.
inline bool relint_contains(const HalfspaceSystem& s, const RationalVector& p) {
    if (static_cast<int>(p.size()) != s.dimension)
        throw DimensionMismatch("point dimension does not match system");
    return strictly_inside(remove_redundant(s), p);
}

inline bool in_convex_hull(const std::vector<RationalVector>& points,
                           const RationalVector& target) {
    if (points.empty()) throw InvalidParameter("convex hull of no points");
    for (const auto& p : points)
        if (p.size() != target.size())
            throw DimensionMismatch("hull point dimension does not match target");
    return lp::convex_combination_exists(points, target);
}

// A graph is h-perfect exactly when the clique/odd-cycle relaxation already
// has integral vertices (i.e. equals the stable set polytope).
inline bool is_h_perfect(const Graph& g) {
    const auto vrep = enumerate_vertices(hstab_system(g, true));
    for (const auto& vertex : vrep.vertices)
        for (const auto& coordinate : vertex)
            if (!is_integral(coordinate)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Certified non-membership in the stable set polytope.

struct StabCertificate {
    enum class Kind { not_in_stab, inconclusive };
    Kind kind = Kind::inconclusive;
    // per witness set W: max_S |S ∩ W| over stable sets S
    std::vector<long long> witness_maxima;
    // stable sets meeting every witness maximum with equality
    long long surviving = 0;
};

// One-sided certificate that p lies outside the stable set polytope.
// Precondition (checked): p attains, on every witness set W, the maximum
// stable-set value max_S |S ∩ W|. Every convex-combination representation
// of p could then use only stable sets tight on all witnesses; if no stable
// set is tight on all of them simultaneously, p is certified outside.
// A nonempty filter result proves nothing, and is reported as inconclusive.
inline StabCertificate certify_not_in_stab(const Graph& g, const RationalVector& p,
                                           const std::vector<VertexSet>& witnesses,
                                           int max_vertices = 25) {
    const int n = g.num_vertices();
    if (static_cast<int>(p.size()) != n)
        throw DimensionMismatch("point dimension does not match graph");
    if (witnesses.empty()) throw InvalidParameter("no witness sets given");
    const int w = static_cast<int>(witnesses.size());
    std::vector<std::vector<int>> witness_of_vertex(n);
    for (int i = 0; i < w; ++i)
        for (int v : witnesses[i]) {
            if (v < 0 || v >= n) throw InvalidParameter("witness vertex out of range");
            witness_of_vertex[v].push_back(i);
        }

    StabCertificate cert;
    cert.witness_maxima.assign(w, 0);
    std::vector<long long> counts(w, 0);
    auto tally = [&](const std::vector<int>& stable) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int v : stable)
            for (int i : witness_of_vertex[v]) ++counts[i];
    };

    // pass 1: per-witness maxima over all stable sets
    for_each_stable_set(
        g,
        [&](const std::vector<int>& stable) {
            tally(stable);
            for (int i = 0; i < w; ++i)
                if (counts[i] > cert.witness_maxima[i]) cert.witness_maxima[i] = counts[i];
        },
        max_vertices);

    // the point must be tight on every witness, otherwise the filtering
    // argument below says nothing
    for (int i = 0; i < w; ++i) {
        Rational value = 0;
        for (int v : witnesses[i]) value += p[v];
        if (value != cert.witness_maxima[i])
            throw PreconditionFailed("point is not tight on witness set " + std::to_string(i));
    }

    // pass 2: count stable sets tight on every witness simultaneously
    for_each_stable_set(
        g,
        [&](const std::vector<int>& stable) {
            tally(stable);
            for (int i = 0; i < w; ++i)
                if (counts[i] != cert.witness_maxima[i]) return;
            ++cert.surviving;
        },
        max_vertices);

    cert.kind = (cert.surviving == 0) ? StabCertificate::Kind::not_in_stab
                                      : StabCertificate::Kind::inconclusive;
    return cert;
}

}  // namespace gorstab
