#pragma once

#include <memory>
#include <string>
#include <utility>

#include "metaforge/core/numeric.hpp"

namespace metaforge {

// Working modulus for truncated p-adic arithmetic: all congruences are
// checked mod p^precision. p must be an odd prime (the residual
// characteristic is odd everywhere in this library).
struct PadicContext {
    Integer p;
    int precision;
    Integer pn;  // p^precision

    PadicContext(Integer prime, int prec) : p(std::move(prime)), precision(prec) {
        if (p < 3 || !is_prime(p)) throw bad_parameter("PadicContext: p must be an odd prime");
        if (precision < 1) throw bad_parameter("PadicContext: precision must be >= 1");
        pn = ipow(p, static_cast<unsigned>(precision));
    }
};

using PadicCtxPtr = std::shared_ptr<const PadicContext>;

inline PadicCtxPtr make_padic_context(long long p, int precision) {
    return std::make_shared<const PadicContext>(Integer(p), precision);
}

/**
 * Truncated p-adic number: unit * p^val with the unit kept mod p^N for
 * the context precision N. The relative precision is N; absolute
 * precision therefore floats with the valuation. Zero is the valuation
 * sentinel kValInfinity. Values are immutable after construction.
 */
class Padic {
  public:
    Padic() = default;

    static Padic zero(const PadicCtxPtr& ctx) { return Padic(ctx, kValInfinity, 0); }

    static Padic from_integer(const PadicCtxPtr& ctx, const Integer& n) {
        if (n == 0) return zero(ctx);
        long long v = val_p(n, ctx->p);
        Integer u = imod(n / ipow(ctx->p, static_cast<unsigned>(v)), ctx->pn);
        return Padic(ctx, v, u);
    }

    static Padic from_rational(const PadicCtxPtr& ctx, const Rational& q) {
        if (q == 0) return zero(ctx);
        Integer num = numerator(q), den = denominator(q);
        long long v = val_p(num, ctx->p) - val_p(den, ctx->p);
        num /= ipow(ctx->p, static_cast<unsigned>(val_p(num, ctx->p)));
        den /= ipow(ctx->p, static_cast<unsigned>(val_p(den, ctx->p)));
        Integer u = imod(num * inv_mod(den, ctx->pn), ctx->pn);
        return Padic(ctx, v, u);
    }

    const PadicCtxPtr& ctx() const { return ctx_; }
    long long val() const { return val_; }
    const Integer& unit() const { return unit_; }
    bool is_zero() const { return val_ >= kValInfinity; }

    Padic operator-() const {
        if (is_zero()) return *this;
        return Padic(ctx_, val_, ctx_->pn - unit_);
    }

    friend Padic operator+(const Padic& a, const Padic& b) {
        a.require_same_ctx(b);
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long long v = std::min(a.val_, b.val_);
        const auto& c = *a.ctx_;
        Integer s = 0;
        if (a.val_ - v < c.precision) s += a.unit_ * ipow(c.p, static_cast<unsigned>(a.val_ - v));
        if (b.val_ - v < c.precision) s += b.unit_ * ipow(c.p, static_cast<unsigned>(b.val_ - v));
        s = imod(s, c.pn);
        if (s == 0) return zero(a.ctx_);  // cancellation below working precision
        long long k = val_p(s, c.p);
        return Padic(a.ctx_, v + k, imod(s / ipow(c.p, static_cast<unsigned>(k)), c.pn));
    }

    friend Padic operator-(const Padic& a, const Padic& b) { return a + (-b); }

    friend Padic operator*(const Padic& a, const Padic& b) {
        a.require_same_ctx(b);
        if (a.is_zero() || b.is_zero()) return zero(a.ctx_ ? a.ctx_ : b.ctx_);
        return Padic(a.ctx_, a.val_ + b.val_, imod(a.unit_ * b.unit_, a.ctx_->pn));
    }

    Padic inverse() const {
        if (is_zero()) throw division_by_zero("Padic::inverse of zero");
        return Padic(ctx_, -val_, inv_mod(unit_, ctx_->pn));
    }

    friend Padic operator/(const Padic& a, const Padic& b) { return a * b.inverse(); }

    // Congruence at the minimum shared (relative) precision: equal when
    // v_p(a - b) exceeds min(val) by the full context precision.
    friend bool operator==(const Padic& a, const Padic& b) {
        a.require_same_ctx(b);
        if (a.is_zero() && b.is_zero()) return true;
        Padic d = a - b;
        if (d.is_zero()) return true;
        return d.val_ >= std::min(a.val_, b.val_) + a.ctx_->precision;
    }
    friend bool operator!=(const Padic& a, const Padic& b) { return !(a == b); }

    // v_p(a - b) >= k, the slack-tolerant congruence used by identity suites.
    friend bool congruent(const Padic& a, const Padic& b, long long k) {
        Padic d = a - b;
        return d.is_zero() || d.val_ >= k;
    }

    // Representative integer u*p^v (only meaningful for val >= 0).
    Integer lift() const {
        if (is_zero()) return 0;
        if (val_ < 0) throw bad_parameter("Padic::lift: negative valuation");
        return imod(unit_ * ipow(ctx_->p, static_cast<unsigned>(val_)), ctx_->pn);
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s = unit_.str();
        if (val_ != 0) s += "*" + ctx_->p.str() + "^" + std::to_string(val_);
        return s;
    }

  private:
    Padic(PadicCtxPtr ctx, long long v, Integer u)
        : ctx_(std::move(ctx)), val_(v), unit_(std::move(u)) {}

    void require_same_ctx(const Padic& other) const {
        if (ctx_ && other.ctx_ && (ctx_->p != other.ctx_->p || ctx_->precision != other.ctx_->precision))
            throw bad_parameter("Padic: mixed contexts");
    }

    PadicCtxPtr ctx_;
    long long val_ = kValInfinity;
    Integer unit_ = 0;

    friend class PadicOps;
};

inline Padic zero_like(const Padic& x) { return Padic::zero(x.ctx()); }
inline Padic one_like(const Padic& x) { return Padic::from_integer(x.ctx(), 1); }
inline Padic scalar_from_int(const Padic& sample, long long n) {
    return Padic::from_integer(sample.ctx(), Integer(n));
}
inline Padic scalar_from_rational(const Padic& sample, const Rational& q) {
    return Padic::from_rational(sample.ctx(), q);
}
inline bool is_zero(const Padic& x) { return x.is_zero(); }
inline Padic inverse(const Padic& x) { return x.inverse(); }

// Rational passthroughs so scalar-generic code works over both fields.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational scalar_from_int(const Rational&, long long n) { return Rational(n); }
inline Rational scalar_from_rational(const Rational&, const Rational& q) { return q; }
inline bool is_zero(const Rational& x) { return x == 0; }
inline Rational inverse(const Rational& x) {
    if (x == 0) throw division_by_zero("Rational inverse of zero");
    return Rational(1) / x;
}
inline bool congruent(const Rational& a, const Rational& b, long long) { return a == b; }
inline std::string str_of(const Rational& x) { return to_string(x); }
inline std::string str_of(const Padic& x) { return x.str(); }

// ADL dispatch point: generic code calls ring_inverse so that scalar
// types defined later (Quadratic, Quaternion, Tower) are still found.
template <class T>
T ring_inverse(const T& x) {
    return inverse(x);
}

}  // namespace metaforge
