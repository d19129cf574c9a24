#pragma once

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <vector>

#include "gorstab/errors.hpp"
#include "gorstab/halfspace.hpp"
#include "gorstab/linalg.hpp"
#include "gorstab/rational.hpp"

// Exact vertex enumeration by the double description method on the
// homogenisation cone {(x, t) : a.x - b t <= 0 per row, -t <= 0}. The rows
// are sorted and inserted in a fixed order, the initial cone is spanned by
// a lexicographically first full-rank row basis, and adjacency of extreme
// rays is decided by an exact rank computation, so the procedure is fully
// deterministic and needs no floating point at any stage.

namespace gorstab {

struct VRepresentation {
    std::vector<RationalVector> vertices;  // sorted lexicographically
};

namespace detail {

struct DDRay {
    Vec y;                         // homogeneous coordinates, primitive integer
    boost::dynamic_bitset<> tight; // which rows vanish on the ray
};

// scale to a primitive integer vector without flipping direction
inline void normalize_ray(Vec& y) {
    BigInt denom_lcm = 1;
    for (const auto& value : y)
        denom_lcm = boost::multiprecision::lcm(denom_lcm, boost::multiprecision::denominator(value));
    BigInt num_gcd = 0;
    std::vector<BigInt> scaled(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        scaled[i] = boost::multiprecision::numerator(y[i]) *
                    (denom_lcm / boost::multiprecision::denominator(y[i]));
        num_gcd = boost::multiprecision::gcd(num_gcd, scaled[i]);
    }
    if (num_gcd == 0) throw InvalidParameter("zero ray");
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = Rational(scaled[i] / num_gcd);
}

}  // namespace detail

inline VRepresentation enumerate_vertices(const HalfspaceSystem& s) {
    using detail::Vec;
    const int d = s.dimension;
    if (d < 1) throw InvalidParameter("system has no coordinates");

    // homogenised rows, deduplicated and sorted for a canonical insertion order
    std::vector<Vec> rows;
    rows.reserve(s.rows.size() + 1);
    for (const auto& row : s.rows) {
        Vec h(d + 1);
        for (int j = 0; j < d; ++j) h[j] = row.coeffs[j];
        h[d] = -row.bound;
        rows.push_back(std::move(h));
    }
    {
        Vec t_row(d + 1, 0);
        t_row[d] = -1;
        rows.push_back(std::move(t_row));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    const int m = static_cast<int>(rows.size());

    // lexicographically first maximal independent subset of the rows
    std::vector<int> basis;
    {
        std::vector<Vec> elim;  // row-echelon accumulators
        for (int i = 0; i < m && static_cast<int>(basis.size()) < d + 1; ++i) {
            Vec cand = rows[i];
            for (const auto& e : elim) {
                int lead = 0;
                while (e[lead] == 0) ++lead;
                if (cand[lead] != 0) {
                    const Rational factor = cand[lead] / e[lead];
                    for (int j = lead; j <= d; ++j) cand[j] -= factor * e[j];
                }
            }
            bool nonzero = false;
            for (const auto& value : cand)
                if (value != 0) {
                    nonzero = true;
                    break;
                }
            if (!nonzero) continue;
            // move the leading entry forward so later reductions are cheap
            elim.push_back(cand);
            std::sort(elim.begin(), elim.end(), [](const Vec& a, const Vec& b) {
                int la = 0, lb = 0;
                while (la < static_cast<int>(a.size()) && a[la] == 0) ++la;
                while (lb < static_cast<int>(b.size()) && b[lb] == 0) ++lb;
                return la < lb;
            });
            basis.push_back(i);
        }
        if (static_cast<int>(basis.size()) < d + 1)
            throw Unbounded("homogenisation cone is not pointed (system is unbounded)");
    }

    // initial simplicial cone: rays are the columns of -inverse(basis rows)
    std::vector<detail::DDRay> rays;
    {
        detail::Matrix mb(d + 1, Vec(d + 1));
        for (int i = 0; i <= d; ++i) mb[i] = rows[basis[i]];
        const detail::Matrix inv = detail::invert(mb);
        for (int c = 0; c <= d; ++c) {
            detail::DDRay ray;
            ray.y.resize(d + 1);
            for (int r = 0; r <= d; ++r) ray.y[r] = -inv[r][c];
            detail::normalize_ray(ray.y);
            rays.push_back(std::move(ray));
        }
    }
    boost::dynamic_bitset<> processed(m);
    for (int i : basis) processed.set(i);
    auto fill_tight = [&](detail::DDRay& ray) {
        ray.tight.resize(m);
        for (int r = 0; r < m; ++r) ray.tight[r] = (detail::dot(rows[r], ray.y) == 0);
    };
    for (auto& ray : rays) fill_tight(ray);

    // incremental insertion
    for (int r = 0; r < m; ++r) {
        if (processed[r]) continue;
        std::vector<detail::DDRay> keep, negative, positive;
        std::vector<Rational> pos_value, neg_value;
        for (auto& ray : rays) {
            Rational value = detail::dot(rows[r], ray.y);
            if (value == 0) {
                keep.push_back(std::move(ray));
            } else if (value < 0) {
                neg_value.push_back(std::move(value));
                negative.push_back(std::move(ray));
            } else {
                pos_value.push_back(std::move(value));
                positive.push_back(std::move(ray));
            }
        }
        // pair adjacent positive/negative rays; adjacency: the rows tight on
        // both span a subspace of rank exactly (rank of processed rows) - 2,
        // and the processed rows always have full rank d+1 here because the
        // initial basis is processed from the start.
        std::vector<detail::DDRay> fresh_rays;
        for (std::size_t pi = 0; pi < positive.size(); ++pi) {
            for (std::size_t ni = 0; ni < negative.size(); ++ni) {
                boost::dynamic_bitset<> common =
                    positive[pi].tight & negative[ni].tight & processed;
                detail::Matrix common_rows;
                for (auto idx = common.find_first(); idx != boost::dynamic_bitset<>::npos;
                     idx = common.find_next(idx))
                    common_rows.push_back(rows[idx]);
                if (detail::rank_of(std::move(common_rows)) != d - 1) continue;
                detail::DDRay fresh;
                fresh.y.resize(d + 1);
                for (int j = 0; j <= d; ++j)
                    fresh.y[j] = pos_value[pi] * negative[ni].y[j] -
                                 neg_value[ni] * positive[pi].y[j];
                detail::normalize_ray(fresh.y);
                fill_tight(fresh);
                fresh_rays.push_back(std::move(fresh));
            }
        }
        rays = std::move(keep);
        for (auto& ray : negative) rays.push_back(std::move(ray));
        for (auto& ray : fresh_rays) rays.push_back(std::move(ray));
        processed.set(r);
    }

    // read vertices off the rays; a surviving ray with t = 0 is a recession
    // direction of the original polyhedron
    VRepresentation out;
    for (const auto& ray : rays) {
        if (ray.y[d] == 0)
            throw Unbounded("polyhedron has a recession direction");
        RationalVector vertex(d);
        for (int j = 0; j < d; ++j) vertex[j] = ray.y[j] / ray.y[d];
        out.vertices.push_back(std::move(vertex));
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()),
                       out.vertices.end());
    return out;
}

}  // namespace gorstab
