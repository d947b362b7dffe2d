#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "waring/error.hpp"

namespace waring {

// All arithmetic in this library is exact. Hilbert functions, Kruskal ranks
// and Cayley-Bacharach checks are integer-valued and discontinuous, so there
// is no floating point anywhere in the core.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int numerator_of(const Rational& q) { return Int(numerator(q)); }
inline Int denominator_of(const Rational& q) { return Int(denominator(q)); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Parses "p", "-p" or "p/q" into an exact rational.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw Error(errc::json_schema, "empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw Error(errc::json_schema, "zero denominator in '" + s + "'");
        return Rational(num) / Rational(den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(errc::json_schema, "malformed rational literal '" + s + "'");
    }
}

/// "p/q" with q > 0 and gcd(|p|,q) = 1, or plain "p" for integers.
inline std::string to_string(const Rational& q) { return q.str(); }

/// Scales a rational vector to the unique primitive integer vector with the
/// same direction and a positive first nonzero entry. Zero vectors pass
/// through unchanged.
inline std::vector<Rational> primitive_scale(std::vector<Rational> v) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    Int den_lcm = 1;
    for (const auto& x : v) den_lcm = lcm(den_lcm, denominator_of(x));
    Int num_gcd = 0;
    for (const auto& x : v) num_gcd = gcd(num_gcd, Int(numerator_of(x) * (den_lcm / denominator_of(x))));
    if (num_gcd == 0) return v;  // zero vector
    int sign = 0;
    for (const auto& x : v) {
        if (x != 0) { sign = numerator_of(x) < 0 ? -1 : 1; break; }
    }
    const Rational factor = Rational(sign * den_lcm) / Rational(num_gcd);
    for (auto& x : v) x *= factor;
    return v;
}

}  // namespace waring
