#pragma once

#include <array>
#include <optional>
#include <vector>

#include "metaforge/scalars/padic.hpp"

namespace metaforge {

// Square root of a unit mod p^N by Hensel lifting from a seed mod p.
// Requires p odd. Throws no_square_root when the residue is not a square.
inline Integer unit_sqrt_mod(const Integer& u, const PadicContext& ctx) {
    Integer seed = 0;
    Integer u0 = imod(u, ctx.p);
    for (Integer t = 1; t < ctx.p; ++t) {
        if (imod(t * t, ctx.p) == u0) {
            seed = t;
            break;
        }
    }
    if (seed == 0) throw no_square_root("unit_sqrt_mod: non-residue");
    // Newton: r <- (r + u/r)/2, doubling the precision each step.
    Integer r = seed;
    Integer mod = ctx.p;
    int have = 1;
    Integer inv2 = inv_mod(2, ctx.pn);
    while (have < ctx.precision) {
        have = std::min(2 * have, ctx.precision);
        mod = ipow(ctx.p, static_cast<unsigned>(have));
        r = imod((r + imod(u, mod) * inv_mod(r, mod)) * inv2, mod);
    }
    return imod(r, ctx.pn);
}

// Square root of a p-adic number with even valuation and square unit part.
inline Padic hensel_sqrt(const Padic& a) {
    if (a.is_zero()) throw no_square_root("hensel_sqrt: zero input");
    if (a.val() % 2 != 0) throw no_square_root("hensel_sqrt: odd valuation");
    const auto& ctx = *a.ctx();
    Integer r = unit_sqrt_mod(a.unit(), ctx);
    Padic root = Padic::from_integer(a.ctx(), r);
    if (a.val() != 0) {
        Padic shift = Padic::from_rational(a.ctx(), Rational(ipow(ctx.p, static_cast<unsigned>(std::abs(a.val()) / 2)), 1));
        root = a.val() > 0 ? root * shift : root / shift;
    }
    return root;
}

inline Padic hensel_sqrt(const PadicCtxPtr& ctx, const Rational& q) {
    return hensel_sqrt(Padic::from_rational(ctx, q));
}

// ---------------------------------------------------------------------
// Local invariants over Q_p at odd p, computed from exact rationals.
// ---------------------------------------------------------------------

// (valuation parity, unit residue class) data of a.
struct UnitPart {
    long long val;
    Integer unit;  // p-free part, sign included
};

inline UnitPart unit_part(const Rational& a, const Integer& p) {
    if (a == 0) throw bad_parameter("unit_part: zero");
    Integer num = numerator(a), den = denominator(a);
    long long v = val_p(num, p) - val_p(den, p);
    num /= ipow(p, static_cast<unsigned>(val_p(num, p)));
    den /= ipow(p, static_cast<unsigned>(val_p(den, p)));
    // the unit is only ever used through Legendre symbols mod p
    Integer u = imod(num * inv_mod(den, p), p);
    return {v, u};
}

// Hilbert symbol (a, b)_p for odd p via the standard tame formula.
inline int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p) {
    if (a == 0 || b == 0) throw bad_parameter("hilbert_symbol: zero argument");
    if (p < 3 || !is_prime(p)) throw bad_parameter("hilbert_symbol: p must be an odd prime");
    UnitPart ua = unit_part(a, p), ub = unit_part(b, p);
    long long alpha = ua.val, beta = ub.val;
    int sign = 1;
    if ((alpha % 2 != 0) && (beta % 2 != 0) && ((p - 1) / 2) % 2 != 0) sign = -sign;
    if (beta % 2 != 0) sign *= legendre(ua.unit, p);
    if (alpha % 2 != 0) sign *= legendre(ub.unit, p);
    return sign;
}

// Brute-force oracle: z^2 = a x^2 + b y^2 has a primitive solution mod p^3.
// Independent route kept deliberately naive; valid for odd p after the
// inputs are normalized to valuation 0 or 1 by square scaling.
inline bool hilbert_symbol_bruteforce(const Rational& a, const Rational& b, const Integer& p) {
    auto normalize = [&](const Rational& x) {
        UnitPart u = unit_part(x, p);
        long long v = ((u.val % 2) + 2) % 2;
        Integer m = ipow(p, 3);
        return imod(u.unit * ipow(p, static_cast<unsigned>(v)), m);
    };
    Integer m = ipow(p, 3);
    Integer an = normalize(a), bn = normalize(b);
    std::vector<char> is_square(static_cast<size_t>(m), 0);
    for (Integer z = 0; z < m; ++z) is_square[static_cast<size_t>(imod(z * z, m))] = 1;
    for (Integer x = 0; x < m; ++x) {
        for (Integer y = 0; y < m; ++y) {
            if (x % p == 0 && y % p == 0) continue;
            Integer rhs = imod(an * x * x + bn * y * y, m);
            if (is_square[static_cast<size_t>(rhs)]) return true;
        }
    }
    // remaining case: x = y = 0 mod p forces z = 0 mod p, not primitive
    return false;
}

enum class SquareClass { one, u, p, up };

inline const char* to_string(SquareClass c) {
    switch (c) {
        case SquareClass::one: return "1";
        case SquareClass::u: return "u";
        case SquareClass::p: return "p";
        case SquareClass::up: return "up";
    }
    return "?";
}

// Class of a in F^x/(F^x)^2 for F = Q_p, odd p: determined by valuation
// parity and the Legendre symbol of the unit part.
inline SquareClass square_class(const Rational& a, const Integer& p) {
    UnitPart u = unit_part(a, p);
    bool odd_val = (imod(Integer(u.val), 2) == 1);
    bool residue = legendre(u.unit, p) == 1;
    if (!odd_val) return residue ? SquareClass::one : SquareClass::u;
    return residue ? SquareClass::p : SquareClass::up;
}

inline bool is_square_class_trivial(const Rational& a, const Integer& p) {
    return square_class(a, p) == SquareClass::one;
}

// a in N_{F(sqrt(d))/F}(F(sqrt(d))^x)?  Split extension: everything is a norm.
inline bool is_local_norm(const Rational& a, const Rational& d, const Integer& p) {
    if (a == 0) throw bad_parameter("is_local_norm: a = 0");
    if (is_square_class_trivial(d, p)) return true;
    return hilbert_symbol(a, d, p) == 1;
}

// Find (x, y) with a x^2 + b y^2 = target mod p^N, by scanning one slot
// and extracting a Hensel square root in the other. Returns nullopt when
// the small search fails (callers pre-certify solvability).
inline std::optional<std::pair<Padic, Padic>> represent_binary(const PadicCtxPtr& ctx,
                                                               const Rational& a,
                                                               const Rational& b,
                                                               const Rational& target) {
    auto attempt = [&](const Rational& ca, const Rational& cb,
                       bool swapped) -> std::optional<std::pair<Padic, Padic>> {
        for (long long y = 0; y <= 40; ++y) {
            for (long long yv = 0; yv <= 1; ++yv) {
                Rational yy = Rational(y) * ipow(ctx->p, static_cast<unsigned>(yv));
                Rational rem = (target - cb * yy * yy) / ca;
                if (rem == 0) continue;
                UnitPart u = unit_part(rem, ctx->p);
                if (u.val % 2 != 0 || legendre(u.unit, ctx->p) != 1) continue;
                Padic x = hensel_sqrt(ctx, rem);
                Padic ypd = Padic::from_rational(ctx, yy);
                if (swapped) return std::make_pair(ypd, x);
                return std::make_pair(x, ypd);
            }
        }
        return std::nullopt;
    };
    if (auto r = attempt(a, b, false)) return r;
    return attempt(b, a, true);
}

// Nontrivial solution of a x^2 + b y^2 + c z^2 = 0 over Q_p, mod p^N.
// Isotropy is certified by the Hilbert symbol first; on the anisotropic
// side this throws no_solution.
inline std::array<Padic, 3> solve_conic(const Rational& a, const Rational& b, const Rational& c,
                                        const PadicCtxPtr& ctx) {
    if (a == 0 || b == 0 || c == 0) throw bad_parameter("solve_conic: zero coefficient");
    if (hilbert_symbol(-a / c, -b / c, ctx->p) != 1)
        throw no_solution("solve_conic: anisotropic (Hilbert symbol -1)");
    // z^2 = A x^2 + B y^2 with A = -a/c, B = -b/c
    Rational A = -a / c, B = -b / c;
    Padic one = Padic::from_integer(ctx, 1);
    // direct z-extraction with y (resp. x) scanned small
    if (auto r = represent_binary(ctx, Rational(1), -B, A)) {
        // z^2 - B y^2 = A  =>  (x, y, z) = (1, y, z)
        return {one, r->second, r->first};
    }
    if (auto r = represent_binary(ctx, Rational(1), -A, B)) {
        return {r->second, one, r->first};
    }
    throw no_solution("solve_conic: small search exhausted (unexpected for certified isotropic input)");
}

inline std::array<Padic, 3> solve_conic(const std::array<Rational, 3>& coeffs, const PadicCtxPtr& ctx) {
    return solve_conic(coeffs[0], coeffs[1], coeffs[2], ctx);
}

}  // namespace metaforge
