#pragma once

#include <array>
#include <string>

#include "metaforge/scalars/padic.hpp"

namespace metaforge {

// Structure constants of the quaternion algebra (-alpha, -beta / F):
// i^2 = -alpha, j^2 = -beta, ij = k = -ji (so k^2 = -alpha*beta).
template <class S>
struct QuatParams {
    S alpha;
    S beta;

    friend bool operator==(const QuatParams& x, const QuatParams& y) {
        return is_zero(x.alpha - y.alpha) && is_zero(x.beta - y.beta);
    }
};

/**
 * Quaternion a + b i + c j + d k over the scalar field S.
 *
 * conj(x) negates the pure part, Trd(x) = x + conj(x), Nrd(x) = x conj(x)
 * = a^2 + alpha b^2 + beta c^2 + alpha beta d^2. The algebra is division
 * exactly when the Hilbert symbol (-alpha, -beta) is -1 over the base.
 */
template <class S>
class Quaternion {
  public:
    Quaternion() = default;
    Quaternion(S a, S b, S c, S d, QuatParams<S> params)
        : c_{std::move(a), std::move(b), std::move(c), std::move(d)}, params_(std::move(params)) {}

    static Quaternion from_scalar(const S& a, const QuatParams<S>& p) {
        S z = zero_like(a);
        return Quaternion(a, z, z, z, p);
    }
    static Quaternion unit(int which, const QuatParams<S>& p) {  // 0->1, 1->i, 2->j, 3->k
        S z = zero_like(p.alpha), o = one_like(p.alpha);
        Quaternion q(z, z, z, z, p);
        q.c_[which] = o;
        return q;
    }

    const S& a() const { return c_[0]; }
    const S& b() const { return c_[1]; }
    const S& c() const { return c_[2]; }
    const S& d() const { return c_[3]; }
    const S& coeff(int k) const { return c_[k]; }
    const QuatParams<S>& params() const { return params_; }

    friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
        Quaternion r = x;
        for (int k = 0; k < 4; ++k) r.c_[k] = r.c_[k] + y.c_[k];
        return r;
    }
    friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
        Quaternion r = x;
        for (int k = 0; k < 4; ++k) r.c_[k] = r.c_[k] - y.c_[k];
        return r;
    }
    Quaternion operator-() const {
        Quaternion r = *this;
        for (auto& v : r.c_) v = zero_like(v) - v;
        return r;
    }

    friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
        const S& al = x.params_.alpha;
        const S& be = x.params_.beta;
        const S &a1 = x.c_[0], &b1 = x.c_[1], &c1 = x.c_[2], &d1 = x.c_[3];
        const S &a2 = y.c_[0], &b2 = y.c_[1], &c2 = y.c_[2], &d2 = y.c_[3];
        S ab = al * be;
        S a = a1 * a2 - al * b1 * b2 - be * c1 * c2 - ab * d1 * d2;
        S b = a1 * b2 + b1 * a2 + be * (c1 * d2 - d1 * c2);
        S c = a1 * c2 + c1 * a2 + al * (d1 * b2 - b1 * d2);
        S d = a1 * d2 + d1 * a2 + b1 * c2 - c1 * b2;
        return Quaternion(a, b, c, d, x.params_);
    }

    Quaternion conj() const {
        Quaternion r = *this;
        for (int k = 1; k < 4; ++k) r.c_[k] = zero_like(r.c_[k]) - r.c_[k];
        return r;
    }

    S nrd() const {
        const S& al = params_.alpha;
        const S& be = params_.beta;
        return c_[0] * c_[0] + al * c_[1] * c_[1] + be * c_[2] * c_[2] + al * be * c_[3] * c_[3];
    }
    S trd() const { return c_[0] + c_[0]; }

    bool is_pure() const { return is_zero(c_[0]); }

    Quaternion inv() const {
        S n = nrd();
        if (is_zero(n)) throw division_by_zero("Quaternion inverse: zero reduced norm");
        S ninv = inverse(n);
        Quaternion r = conj();
        for (auto& v : r.c_) v = v * ninv;
        return r;
    }

    friend Quaternion operator/(const Quaternion& x, const Quaternion& y) { return x * y.inv(); }

    friend bool operator==(const Quaternion& x, const Quaternion& y) {
        for (int k = 0; k < 4; ++k)
            if (!is_zero(x.c_[k] - y.c_[k])) return false;
        return true;
    }
    friend bool operator!=(const Quaternion& x, const Quaternion& y) { return !(x == y); }

    std::string str() const {
        return "(" + str_of(c_[0]) + "+" + str_of(c_[1]) + "i+" + str_of(c_[2]) + "j+" +
               str_of(c_[3]) + "k)";
    }

  private:
    std::array<S, 4> c_{};
    QuatParams<S> params_{};
};

template <class S>
Quaternion<S> zero_like(const Quaternion<S>& x) {
    return Quaternion<S>::from_scalar(zero_like(x.a()), x.params());
}
template <class S>
Quaternion<S> one_like(const Quaternion<S>& x) {
    return Quaternion<S>::from_scalar(one_like(x.a()), x.params());
}
template <class S>
bool is_zero(const Quaternion<S>& x) {
    return is_zero(x.a()) && is_zero(x.b()) && is_zero(x.c()) && is_zero(x.d());
}
template <class S>
Quaternion<S> inverse(const Quaternion<S>& x) {
    return x.inv();
}
template <class S>
Quaternion<S> ring_conj(const Quaternion<S>& x) {
    return x.conj();
}
template <class S>
Quaternion<S> scalar_from_int(const Quaternion<S>& sample, long long n) {
    return Quaternion<S>::from_scalar(scalar_from_int(sample.a(), n), sample.params());
}
template <class S>
bool congruent(const Quaternion<S>& x, const Quaternion<S>& y, long long k) {
    for (int t = 0; t < 4; ++t)
        if (!congruent(x.coeff(t), y.coeff(t), k)) return false;
    return true;
}
template <class S>
std::string str_of(const Quaternion<S>& x) {
    return x.str();
}

// Matrix of left multiplication by q on the basis {1, i, j, k}; columns
// are the coordinates of q*1, q*i, q*j, q*k.
template <class S>
std::array<std::array<S, 4>, 4> left_mult_table(const Quaternion<S>& q) {
    std::array<std::array<S, 4>, 4> m;
    for (int col = 0; col < 4; ++col) {
        Quaternion<S> img = q * Quaternion<S>::unit(col, q.params());
        for (int row = 0; row < 4; ++row) m[row][col] = img.coeff(row);
    }
    return m;
}

}  // namespace metaforge
