#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "gorstab/errors.hpp"
#include "gorstab/halfspace.hpp"
#include "gorstab/linalg.hpp"
#include "gorstab/polytope.hpp"
#include "gorstab/rational.hpp"
#include "gorstab/vertex_enum.hpp"

// Independent Gorenstein oracle via Ehrhart theory: count lattice points of
// the dilates kP directly, interpolate the Ehrhart polynomial, convert to
// the h^*-vector (delta-vector), and test palindromicity. Nothing here
// shares logic with the combinatorial criterion it is used to cross-check:
// counting is a box-pruned integer search, and the polynomial is validated
// at two extra dilates before being trusted.

namespace gorstab {

namespace detail {

inline long long checked_ll(const BigInt& value, const char* what) {
    if (value > std::numeric_limits<long long>::max() / 4 ||
        value < std::numeric_limits<long long>::min() / 4)
        throw SizeLimitExceeded(std::string(what) + ": integer out of machine range");
    return value.convert_to<long long>();
}

struct IntegerRow {
    std::vector<long long> coeffs;
    long long bound = 0;  // right side for the dilation factor k = 1
};

// Clear denominators row by row; the scaled system has the same solution
// set for any dilation factor.
inline std::vector<IntegerRow> integerize_rows(const HalfspaceSystem& s) {
    std::vector<IntegerRow> rows;
    rows.reserve(s.rows.size());
    for (const auto& row : s.rows) {
        BigInt common = boost::multiprecision::denominator(row.bound);
        for (const auto& coefficient : row.coeffs)
            common = boost::multiprecision::lcm(
                common, boost::multiprecision::denominator(coefficient));
        IntegerRow out;
        out.coeffs.reserve(s.dimension);
        for (const auto& coefficient : row.coeffs) {
            const BigInt scaled = boost::multiprecision::numerator(coefficient) *
                                  (common / boost::multiprecision::denominator(coefficient));
            out.coeffs.push_back(checked_ll(scaled, "lattice counting"));
        }
        const BigInt scaled_bound = boost::multiprecision::numerator(row.bound) *
                                    (common / boost::multiprecision::denominator(row.bound));
        out.bound = checked_ll(scaled_bound, "lattice counting");
        rows.push_back(std::move(out));
    }
    return rows;
}

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long long ceil_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

}  // namespace detail

// Number of integer points of the k-th dilate of the polytope described by
// the system. Depth-first search coordinate by coordinate: the integer
// bounding box of kP supplies the base ranges, each partially summed row
// narrows the range of the current coordinate, and a row that cannot be
// satisfied even by the most favourable completion prunes the subtree.
inline long long count_lattice_points(const HalfspaceSystem& s, long long k) {
    if (k < 0) throw InvalidParameter("dilation factor must be >= 0");
    const int d = s.dimension;

    // bounding box of kP (propagation, LP fallback; may detect emptiness)
    HalfspaceSystem dilated = s;
    for (auto& row : dilated.rows) row.bound *= k;
    const auto box = detail::bounding_box(dilated);
    if (!box) return 0;
    std::vector<long long> lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
        using boost::multiprecision::denominator;
        using boost::multiprecision::numerator;
        const auto& l = box->lower[j];
        const auto& u = box->upper[j];
        lo[j] = detail::ceil_div(detail::checked_ll(numerator(l), "lattice counting"),
                                 detail::checked_ll(denominator(l), "lattice counting"));
        hi[j] = detail::floor_div(detail::checked_ll(numerator(u), "lattice counting"),
                                  detail::checked_ll(denominator(u), "lattice counting"));
        if (lo[j] > hi[j]) return 0;
    }

    const auto rows = detail::integerize_rows(s);
    const int m = static_cast<int>(rows.size());
    // minrest[r][j]: least possible value of sum_{i >= j} a_ri x_i over the box
    std::vector<std::vector<long long>> minrest(m, std::vector<long long>(d + 1, 0));
    for (int r = 0; r < m; ++r)
        for (int j = d - 1; j >= 0; --j) {
            const long long a = rows[r].coeffs[j];
            const long long best = (a >= 0) ? a * lo[j] : a * hi[j];
            minrest[r][j] = minrest[r][j + 1] + best;
        }

    std::vector<std::vector<long long>> partial(d + 1, std::vector<long long>(m, 0));
    long long count = 0;
    auto descend = [&](auto&& self, int j) -> void {
        for (int r = 0; r < m; ++r)
            if (partial[j][r] + minrest[r][j] > rows[r].bound * k) return;
        if (j == d) {
            ++count;
            return;
        }
        long long from = lo[j], to = hi[j];
        for (int r = 0; r < m; ++r) {
            const long long a = rows[r].coeffs[j];
            if (a == 0) continue;
            const long long slack = rows[r].bound * k - partial[j][r] - minrest[r][j + 1];
            if (a > 0) to = std::min(to, detail::floor_div(slack, a));
            else from = std::max(from, detail::ceil_div(slack, a));
        }
        for (long long value = from; value <= to; ++value) {
            for (int r = 0; r < m; ++r)
                partial[j + 1][r] = partial[j][r] + rows[r].coeffs[j] * value;
            self(self, j + 1);
        }
    };
    descend(descend, 0);
    return count;
}

// ---------------------------------------------------------------------------

struct DeltaVector {
    std::vector<long long> coefficients;  // delta_0 ... delta_dim

    std::vector<long long> trimmed() const {
        auto t = coefficients;
        while (!t.empty() && t.back() == 0) t.pop_back();
        return t;
    }
    bool palindromic() const {
        const auto t = trimmed();
        for (std::size_t i = 0, j = t.size(); i < j; ++i)
            if (t[i] != t[t.size() - 1 - i]) return false;
        return true;
    }
};

namespace detail {

struct EhrhartData {
    int dim = 0;                     // affine dimension of the polytope
    std::vector<long long> counts;   // L(0) ... L(dim + 2)
    std::vector<Rational> coefficients;  // Ehrhart polynomial, ascending
};

inline Rational evaluate(const std::vector<Rational>& coefficients, long long at) {
    Rational value = 0;
    Rational power = 1;
    for (const auto& coefficient : coefficients) {
        value += coefficient * power;
        power *= at;
    }
    return value;
}

// Counts, interpolates, and validates the polynomial on two extra dilates.
inline EhrhartData ehrhart_data(const HalfspaceSystem& s) {
    const auto vrep = enumerate_vertices(s);
    if (vrep.vertices.empty())
        throw NotLatticePolytope("empty feasible set is not a lattice polytope");
    for (const auto& vertex : vrep.vertices)
        for (const auto& coordinate : vertex)
            if (!is_integral(coordinate))
                throw NotLatticePolytope("vertex with non-integer coordinate " +
                                         format_rational(coordinate));
    EhrhartData data;
    {
        Matrix differences;
        for (std::size_t i = 1; i < vrep.vertices.size(); ++i) {
            Vec diff(s.dimension);
            for (int j = 0; j < s.dimension; ++j)
                diff[j] = vrep.vertices[i][j] - vrep.vertices[0][j];
            differences.push_back(std::move(diff));
        }
        data.dim = rank_of(std::move(differences));
    }
    for (long long k = 0; k <= data.dim + 2; ++k)
        data.counts.push_back(count_lattice_points(s, k));

    // Lagrange interpolation through (0, L(0)) ... (dim, L(dim))
    const int dim = data.dim;
    data.coefficients.assign(dim + 1, 0);
    for (int node = 0; node <= dim; ++node) {
        std::vector<Rational> basis{1};  // polynomial, ascending coefficients
        Rational denominator = 1;
        for (int other = 0; other <= dim; ++other) {
            if (other == node) continue;
            basis.insert(basis.begin(), 0);  // multiply by t
            for (std::size_t c = 0; c + 1 < basis.size(); ++c)
                basis[c] -= Rational(other) * basis[c + 1];
            denominator *= Rational(node - other);
        }
        const Rational weight = Rational(data.counts[node]) / denominator;
        for (std::size_t c = 0; c < basis.size(); ++c)
            data.coefficients[c] += weight * basis[c];
    }
    for (long long k = dim + 1; k <= dim + 2; ++k)
        if (evaluate(data.coefficients, k) != data.counts[k])
            throw ValidationFailed(
                "interpolated point count disagrees with direct count at dilate " +
                std::to_string(k));
    return data;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace detail

inline std::vector<Rational> ehrhart_polynomial(const HalfspaceSystem& s) {
    return detail::ehrhart_data(s).coefficients;
}

// h^*-vector from the counts: delta_i = sum_j (-1)^j C(dim+1, j) L(i-j).
inline DeltaVector delta_vector(const HalfspaceSystem& s) {
    const auto data = detail::ehrhart_data(s);
    const int dim = data.dim;
    DeltaVector delta;
    delta.coefficients.assign(dim + 1, 0);
    for (int i = 0; i <= dim; ++i) {
        long long value = 0;
        for (int j = 0; j <= i; ++j) {
            const long long term = detail::binomial(dim + 1, j) * data.counts[i - j];
            value += (j % 2 == 0) ? term : -term;
        }
        if (value < 0)
            throw NegativeDelta("delta_" + std::to_string(i) + " came out negative (" +
                                std::to_string(value) + ")");
        delta.coefficients[i] = value;
    }
    if (delta.coefficients[0] != 1)
        throw ValidationFailed("delta_0 must be 1");
    return delta;
}

// Palindromic h^*-vector (trailing zeros stripped) == Gorenstein Ehrhart ring.
inline bool gorenstein_oracle(const HalfspaceSystem& s) {
    return delta_vector(s).palindromic();
}

}  // namespace gorstab
