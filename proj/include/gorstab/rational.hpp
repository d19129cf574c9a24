#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cctype>
#include <string>
#include <vector>

#include "gorstab/errors.hpp"

namespace gorstab {

// Exact arithmetic everywhere: all polyhedral computations run over GMP
// rationals, so there is no tolerance parameter anywhere in the library.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// A point/vector indexed by the vertices of a fixed graph (dense, by id).
using RationalVector = std::vector<Rational>;

namespace detail {

inline bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace detail

// Parses "p" or "p/q" (q > 0 after sign normalisation). The two halves are
// parsed separately and recombined so the result is always canonical.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!detail::is_integer_token(text))
            throw ParseError("bad rational literal: '" + text + "'");
        return Rational(BigInt(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!detail::is_integer_token(num) || !detail::is_integer_token(den))
        throw ParseError("bad rational literal: '" + text + "'");
    BigInt q(den);
    if (q == 0) throw ParseError("zero denominator in rational literal: '" + text + "'");
    return Rational(BigInt(num), q);
}

// Canonical form: "p" when integral, "p/q" otherwise (q > 0, gcd(p,q)=1).
inline std::string format_rational(const Rational& value) {
    return value.str();
}

inline bool is_integral(const Rational& value) {
    return boost::multiprecision::denominator(value) == 1;
}

}  // namespace gorstab
