#pragma once

#include <array>
#include <string>

#include "metaforge/algebra/matrix.hpp"
#include "metaforge/scalars/padic.hpp"

namespace metaforge {

enum class TowerLevel { F, Fi, Fs, K };

// Element of the biquadratic tower K = F(i, s) with i^2 = -alpha and
// s^2 = -beta (s stands for the formal sqrt(-beta); it never becomes a
// p-adic numeral, so ramified beta stays exact). Coordinates are over
// the basis {1, i, s, i s}. The Galois group is generated by
//   sigma: i -> -i, s -> s        tau: i -> i, s -> -s
// and sigma tau = tau sigma.
template <class S>
class Tower {
  public:
    Tower() = default;
    Tower(S c0, S c1, S c2, S c3, S alpha, S beta)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)},
          alpha_(std::move(alpha)),
          beta_(std::move(beta)) {}

    static Tower from_scalar(const S& a, const S& alpha, const S& beta) {
        S z = zero_like(a);
        return Tower(a, z, z, z, alpha, beta);
    }
    static Tower gen_i(const S& alpha, const S& beta) {
        S z = zero_like(alpha), o = one_like(alpha);
        return Tower(z, o, z, z, alpha, beta);
    }
    static Tower gen_s(const S& alpha, const S& beta) {
        S z = zero_like(alpha), o = one_like(alpha);
        return Tower(z, z, o, z, alpha, beta);
    }

    const S& coeff(int k) const { return c_[k]; }
    const S& alpha() const { return alpha_; }
    const S& beta() const { return beta_; }

    TowerLevel level() const {
        bool has_i = !is_zero(c_[1]) || !is_zero(c_[3]);
        bool has_s = !is_zero(c_[2]) || !is_zero(c_[3]);
        if (has_i && has_s) return TowerLevel::K;
        if (has_i) return TowerLevel::Fi;
        if (has_s) return TowerLevel::Fs;
        return TowerLevel::F;
    }

    friend Tower operator+(const Tower& x, const Tower& y) {
        Tower r = x;
        for (int k = 0; k < 4; ++k) r.c_[k] = r.c_[k] + y.c_[k];
        return r;
    }
    friend Tower operator-(const Tower& x, const Tower& y) {
        Tower r = x;
        for (int k = 0; k < 4; ++k) r.c_[k] = r.c_[k] - y.c_[k];
        return r;
    }
    Tower operator-() const {
        Tower r = *this;
        for (auto& v : r.c_) v = zero_like(v) - v;
        return r;
    }

    friend Tower operator*(const Tower& x, const Tower& y) {
        // commutative: (1, i, s, is) with i^2 = -alpha, s^2 = -beta
        const S& al = x.alpha_;
        const S& be = x.beta_;
        const S &a0 = x.c_[0], &a1 = x.c_[1], &a2 = x.c_[2], &a3 = x.c_[3];
        const S &b0 = y.c_[0], &b1 = y.c_[1], &b2 = y.c_[2], &b3 = y.c_[3];
        S ab = al * be;
        S r0 = a0 * b0 - al * a1 * b1 - be * a2 * b2 + ab * a3 * b3;
        S r1 = a0 * b1 + a1 * b0 - be * (a2 * b3 + a3 * b2);
        S r2 = a0 * b2 + a2 * b0 - al * (a1 * b3 + a3 * b1);
        S r3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
        return Tower(r0, r1, r2, r3, x.alpha_, x.beta_);
    }

    Tower sigma() const {
        return Tower(c_[0], zero_like(c_[1]) - c_[1], c_[2], zero_like(c_[3]) - c_[3], alpha_, beta_);
    }
    Tower tau() const {
        return Tower(c_[0], c_[1], zero_like(c_[2]) - c_[2], zero_like(c_[3]) - c_[3], alpha_, beta_);
    }
    Tower sigma_tau() const { return sigma().tau(); }

    // N_{K/F}(x) = x x^sigma x^tau x^{sigma tau}, landing in F.
    S galois_norm() const {
        Tower n = (*this) * sigma() * tau() * sigma_tau();
        if (!(is_zero(n.c_[1]) && is_zero(n.c_[2]) && is_zero(n.c_[3])))
            throw precision_exhausted("Tower norm did not collapse to the base field");
        return n.c_[0];
    }

    // Inverse by solving the 4x4 multiplication system over S; immune to
    // the truncation dust a conjugate-product route can leave at finite
    // p-adic precision.
    Tower inv() const {
        Matrix<S> m(4, 4, c_[0]);
        for (int col = 0; col < 4; ++col) {
            Tower e = zero_like(*this);
            e.c_[col] = one_like(c_[0]);
            Tower img = (*this) * e;
            for (int row = 0; row < 4; ++row) m(row, col) = img.c_[row];
        }
        Matrix<S> rhs(4, 1, c_[0]);
        rhs(0, 0) = one_like(c_[0]);
        Matrix<S> sol = m.solve(rhs);
        return Tower(sol(0, 0), sol(1, 0), sol(2, 0), sol(3, 0), alpha_, beta_);
    }

    friend Tower operator/(const Tower& x, const Tower& y) { return x * y.inv(); }

    friend bool operator==(const Tower& x, const Tower& y) {
        for (int k = 0; k < 4; ++k)
            if (!is_zero(x.c_[k] - y.c_[k])) return false;
        return true;
    }
    friend bool operator!=(const Tower& x, const Tower& y) { return !(x == y); }

    std::string str() const {
        return "(" + str_of(c_[0]) + " + " + str_of(c_[1]) + " i + " + str_of(c_[2]) + " s + " +
               str_of(c_[3]) + " is)";
    }

  private:
    std::array<S, 4> c_{};
    S alpha_{}, beta_{};
};

template <class S>
Tower<S> zero_like(const Tower<S>& x) {
    return Tower<S>::from_scalar(zero_like(x.coeff(0)), x.alpha(), x.beta());
}
template <class S>
Tower<S> one_like(const Tower<S>& x) {
    return Tower<S>::from_scalar(one_like(x.coeff(0)), x.alpha(), x.beta());
}
template <class S>
bool is_zero(const Tower<S>& x) {
    for (int k = 0; k < 4; ++k)
        if (!is_zero(x.coeff(k))) return false;
    return true;
}
template <class S>
Tower<S> inverse(const Tower<S>& x) {
    return x.inv();
}
template <class S>
Tower<S> ring_conj(const Tower<S>& x) {
    // K is commutative; matrix conj-transposes over K are plain transposes.
    return x;
}
template <class S>
Tower<S> scalar_from_int(const Tower<S>& sample, long long n) {
    return Tower<S>::from_scalar(scalar_from_int(sample.coeff(0), n), sample.alpha(), sample.beta());
}
template <class S>
bool congruent(const Tower<S>& x, const Tower<S>& y, long long k) {
    for (int t = 0; t < 4; ++t)
        if (!congruent(x.coeff(t), y.coeff(t), k)) return false;
    return true;
}
template <class S>
std::string str_of(const Tower<S>& x) {
    return x.str();
}

}  // namespace metaforge
