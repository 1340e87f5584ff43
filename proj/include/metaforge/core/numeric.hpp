#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

#include "metaforge/core/error.hpp"

namespace metaforge {

// Arbitrary-precision integers and rationals. Rationals are kept in
// canonical form (coprime numerator/denominator, positive denominator)
// by the adaptor.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer ipow(Integer base, unsigned exp) {
    Integer r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline Integer imod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Integer powm(Integer base, Integer exp, const Integer& m) {
    Integer r = 1;
    base = imod(base, m);
    while (exp > 0) {
        if ((exp & 1) != 0) r = imod(r * base, m);
        base = imod(base * base, m);
        exp >>= 1;
    }
    return r;
}

// Inverse of a mod m for gcd(a, m) = 1.
inline Integer inv_mod(const Integer& a, const Integer& m) {
    Integer t = 0, new_t = 1;
    Integer r = m, new_r = imod(a, m);
    while (new_r != 0) {
        Integer q = r / new_r;
        Integer tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw division_by_zero("inv_mod: not invertible");
    return imod(t, m);
}

constexpr long long kValInfinity = std::numeric_limits<long long>::max() / 4;

// p-adic valuation of an integer; kValInfinity for zero.
inline long long val_p(const Integer& n, const Integer& p) {
    if (n == 0) return kValInfinity;
    Integer m = n;
    long long v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

inline long long val_p(const Rational& q, const Integer& p) {
    if (q == 0) return kValInfinity;
    return val_p(numerator(q), p) - val_p(denominator(q), p);
}

// Legendre symbol (a|p) for odd prime p, a not divisible by p.
inline int legendre(const Integer& a, const Integer& p) {
    Integer r = powm(a, (p - 1) / 2, p);
    if (r == 0) throw bad_parameter("legendre: a divisible by p");
    return r == 1 ? 1 : -1;
}

inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (Integer d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::string to_string(const Integer& n) { return n.str(); }
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace metaforge
