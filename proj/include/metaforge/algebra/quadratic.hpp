#pragma once

#include <string>

#include "metaforge/scalars/padic.hpp"

namespace metaforge {

// Element a + b*i of the quadratic extension F(i), i^2 = -alpha.
// The nontrivial Galois automorphism (conjugation) negates the i part.
template <class S>
class Quadratic {
  public:
    Quadratic() = default;
    Quadratic(S a, S b, S alpha) : a_(std::move(a)), b_(std::move(b)), alpha_(std::move(alpha)) {}

    static Quadratic from_scalar(const S& a, const S& alpha) {
        return Quadratic(a, zero_like(a), alpha);
    }
    static Quadratic gen(const S& alpha) {  // the element i
        return Quadratic(zero_like(alpha), one_like(alpha), alpha);
    }

    const S& re() const { return a_; }
    const S& im() const { return b_; }
    const S& alpha() const { return alpha_; }

    friend Quadratic operator+(const Quadratic& x, const Quadratic& y) {
        return Quadratic(x.a_ + y.a_, x.b_ + y.b_, x.alpha_);
    }
    friend Quadratic operator-(const Quadratic& x, const Quadratic& y) {
        return Quadratic(x.a_ - y.a_, x.b_ - y.b_, x.alpha_);
    }
    Quadratic operator-() const { return Quadratic(zero_like(a_) - a_, zero_like(b_) - b_, alpha_); }

    friend Quadratic operator*(const Quadratic& x, const Quadratic& y) {
        // (a + bi)(c + di) = (ac - alpha bd) + (ad + bc) i
        return Quadratic(x.a_ * y.a_ - x.alpha_ * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.alpha_);
    }

    Quadratic conj() const { return Quadratic(a_, zero_like(b_) - b_, alpha_); }

    S norm() const { return a_ * a_ + alpha_ * b_ * b_; }  // N_{F(i)/F}
    S trace() const { return a_ + a_; }

    Quadratic inv() const {
        S n = norm();
        if (is_zero(n)) throw division_by_zero("Quadratic inverse: zero norm");
        S ninv = inverse(n);
        return Quadratic(a_ * ninv, (zero_like(b_) - b_) * ninv, alpha_);
    }

    friend Quadratic operator/(const Quadratic& x, const Quadratic& y) { return x * y.inv(); }

    friend bool operator==(const Quadratic& x, const Quadratic& y) {
        return is_zero(x.a_ - y.a_) && is_zero(x.b_ - y.b_);
    }
    friend bool operator!=(const Quadratic& x, const Quadratic& y) { return !(x == y); }

    std::string str() const { return "(" + str_of(a_) + "+" + str_of(b_) + "i)"; }

  private:
    S a_{}, b_{}, alpha_{};
};

template <class S>
Quadratic<S> zero_like(const Quadratic<S>& x) {
    return Quadratic<S>(zero_like(x.re()), zero_like(x.re()), x.alpha());
}
template <class S>
Quadratic<S> one_like(const Quadratic<S>& x) {
    return Quadratic<S>(one_like(x.re()), zero_like(x.re()), x.alpha());
}
template <class S>
bool is_zero(const Quadratic<S>& x) {
    return is_zero(x.re()) && is_zero(x.im());
}
template <class S>
Quadratic<S> inverse(const Quadratic<S>& x) {
    return x.inv();
}
template <class S>
Quadratic<S> ring_conj(const Quadratic<S>& x) {
    return x.conj();
}
template <class S>
Quadratic<S> scalar_from_int(const Quadratic<S>& sample, long long n) {
    return Quadratic<S>::from_scalar(scalar_from_int(sample.re(), n), sample.alpha());
}
template <class S>
bool congruent(const Quadratic<S>& x, const Quadratic<S>& y, long long k) {
    return congruent(x.re(), y.re(), k) && congruent(x.im(), y.im(), k);
}
template <class S>
std::string str_of(const Quadratic<S>& x) {
    return x.str();
}

}  // namespace metaforge
