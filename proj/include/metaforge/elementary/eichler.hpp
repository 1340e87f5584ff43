#pragma once

#include <vector>

#include "metaforge/elementary/gens.hpp"
#include "metaforge/hermitian/space.hpp"

namespace metaforge {

template <class D>
Vec<D> vec_add(const Vec<D>& a, const Vec<D>& b) {
    Vec<D> r = a;
    for (size_t k = 0; k < r.size(); ++k) r[k] = r[k] + b[k];
    return r;
}
template <class D>
Vec<D> vec_sub(const Vec<D>& a, const Vec<D>& b) {
    Vec<D> r = a;
    for (size_t k = 0; k < r.size(); ++k) r[k] = r[k] - b[k];
    return r;
}
// right scalar action x * d
template <class D>
Vec<D> vec_scale(const Vec<D>& a, const D& d) {
    Vec<D> r = a;
    for (auto& x : r) x = x * d;
    return r;
}
template <class D>
Vec<D> vec_zero(int n, const D& sample) {
    return Vec<D>(static_cast<size_t>(n), zero_like(sample));
}
template <class D>
Vec<D> basis_vec(int n, int k, const D& sample) {
    Vec<D> r = vec_zero(n, sample);
    r[static_cast<size_t>(k)] = one_like(sample);
    return r;
}
template <class D>
Vec<D> apply_matrix(const Matrix<D>& m, const Vec<D>& x) {
    Vec<D> r = vec_zero(m.rows(), m.sample());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (is_zero(m(i, j)) || is_zero(x[static_cast<size_t>(j)])) continue;
            r[static_cast<size_t>(i)] = r[static_cast<size_t>(i)] + m(i, j) * x[static_cast<size_t>(j)];
        }
    return r;
}
template <class D>
bool vec_is_zero(const Vec<D>& x) {
    for (const auto& v : x)
        if (!is_zero(v)) return false;
    return true;
}

// Eichler transformation e_{u,v,d}: x -> x + eps u <v,x> - (v + eps u d) <u,x>
// for isotropic u orthogonal to v and d in the coset (1/2)<v,v> + S_D.
template <class D>
struct EichlerMap {
    Vec<D> u;
    Vec<D> v;
    D d;

    EichlerMap(const HermSpace<D>& sp, Vec<D> u_, Vec<D> v_, D d_)
        : u(std::move(u_)), v(std::move(v_)), d(std::move(d_)) {
        if (!is_zero(eval_form(sp, u, u)) || !is_zero(eval_form(sp, u, v)))
            throw invalid_eichler("EichlerMap: need <u,u> = 0 = <u,v>");
        D half_vv = eval_form(sp, v, v) * scalar_from_rational_like(d, Rational(1, 2));
        D rem = d - half_vv;
        if (!is_zero(ring_conj(rem) + scalar_from_int(d, sp.eps) * rem))
            throw invalid_eichler("EichlerMap: d not in (1/2)<v,v> + S_D");
    }

    static D scalar_from_rational_like(const D& sample, const Rational& q) {
        // 1/2 exists because the residual characteristic is odd
        D num = scalar_from_int(sample, static_cast<long long>(numerator(q)));
        D den = scalar_from_int(sample, static_cast<long long>(denominator(q)));
        return num * ring_inverse(den);
    }

    Vec<D> apply(const HermSpace<D>& sp, const Vec<D>& x) const {
        D e = scalar_from_int(d, sp.eps);
        D vx = eval_form(sp, v, x);
        D ux = eval_form(sp, u, x);
        Vec<D> shifted = vec_add(v, vec_scale(u, e * d));
        return vec_sub(vec_add(x, vec_scale(u, e * vx)), vec_scale(shifted, ux));
    }

    Matrix<D> matrix(const HermSpace<D>& sp) const {
        int n = sp.dim();
        Matrix<D> m(n, n, d);
        for (int col = 0; col < n; ++col) {
            Vec<D> img = apply(sp, basis_vec(n, col, d));
            for (int row = 0; row < n; ++row) m(row, col) = img[static_cast<size_t>(row)];
        }
        return m;
    }

    // sigma e_{u,v,d} sigma^{-1} = e_{sigma u, sigma v, d}
    EichlerMap conjugated(const HermSpace<D>& sp, const Matrix<D>& sigma) const {
        return EichlerMap(sp, apply_matrix(sigma, u), apply_matrix(sigma, v), d);
    }
};

// The isotropic transvection / symmetry tau_{v,d}: x -> x - v conj(d) <v, x>.
template <class D>
Matrix<D> transvection_matrix(const HermSpace<D>& sp, const Vec<D>& v, const D& d) {
    int n = sp.dim();
    Matrix<D> m(n, n, d);
    for (int col = 0; col < n; ++col) {
        Vec<D> x = basis_vec(n, col, d);
        Vec<D> img = vec_sub(x, vec_scale(v, ring_conj(d) * eval_form(sp, v, x)));
        for (int row = 0; row < n; ++row) m(row, col) = img[static_cast<size_t>(row)];
    }
    return m;
}

// Decompose a general Eichler map on a hyperbolic space with the split
// basis (e_1..e_n, e_1*..e_n*) into named generators. The isotropic
// vector u must be supported on a single e-slot (u = e_m * c); the word
// multiplies out, left to right, to exactly the matrix of the map.
template <class D>
std::vector<ElemGen<D>> eichler_to_generators(const HermSpace<D>& sp, const EichlerMap<D>& em) {
    int n2 = sp.dim();
    int n = n2 / 2;
    if (2 * n != n2) throw not_hyperbolic("eichler_to_generators: odd dimension");
    // locate the single supported slot of u
    int m = -1;
    for (int k = 0; k < n2; ++k) {
        if (is_zero(em.u[static_cast<size_t>(k)])) continue;
        if (m >= 0 || k >= n) throw not_hyperbolic("eichler_to_generators: u must be e_m * c");
        m = k;
    }
    if (m < 0) return {};  // u = 0: the identity map
    // e_{e_m c, v, d} = e_{e_m, v conj(c), c d conj(c)}
    D c = em.u[static_cast<size_t>(m)];
    EichlerMap<D> norm(sp, basis_vec(sp.dim(), m, c), vec_scale(em.v, ring_conj(c)),
                       c * em.d * ring_conj(c));
    // now u = e_m exactly; v = e_m a_m + sum_{i != m} (e_i a_i + e_i* a_i*)
    if (!is_zero(norm.v[static_cast<size_t>(n + m)]))
        throw invalid_eichler("eichler_to_generators: v has an e_m* component");
    D half = EichlerMap<D>::scalar_from_rational_like(norm.d, Rational(1, 2));
    D e = scalar_from_int(norm.d, sp.eps);
    std::vector<ElemGen<D>> word;
    // residual parameter d1 = d - (1/2)<v, v> lies in S_D
    D d1 = norm.d - eval_form(sp, norm.v, norm.v) * half;
    // e_{e_m, e_m a_m, 0} = B_mm(-a_m)
    D am = norm.v[static_cast<size_t>(m)];
    if (!is_zero(am)) word.push_back(ElemGen<D>::b(m, m, zero_like(am) - am));
    // e_{e_m, 0, d1} = B_mm(-eps d1 / 2)
    if (!is_zero(d1)) word.push_back(ElemGen<D>::b(m, m, (zero_like(d1) - e * d1) * half));
    for (int i = 0; i < n; ++i) {
        if (i == m) continue;
        D ai = norm.v[static_cast<size_t>(i)];
        D asi = norm.v[static_cast<size_t>(n + i)];
        if (is_zero(ai) && is_zero(asi)) continue;
        // the symmetric four-factor split of e_{e_m, e_i a_i + e_i* a_i*, d_i}:
        //   e_{e_m, e_i (a_i/2), 0}   = B_im(-a_i/2)
        //   e_{e_m, e_i* (a_i*/2), 0} = A_mi(conj(a_i*/2))
        D bhalf = zero_like(ai) - ai * half;
        D ahalf = ring_conj(asi * half);
        if (!is_zero(asi)) word.push_back(ElemGen<D>::a(m, i, ahalf));
        if (!is_zero(ai)) word.push_back(ElemGen<D>::b(i, m, bhalf));
        if (!is_zero(ai)) word.push_back(ElemGen<D>::b(i, m, bhalf));
        if (!is_zero(asi)) word.push_back(ElemGen<D>::a(m, i, ahalf));
    }
    return word;
}

}  // namespace metaforge
