#pragma once

#include <string>
#include <vector>

#include "metaforge/algebra/matrix.hpp"
#include "metaforge/algebra/split.hpp"

namespace metaforge {

// Generators of the hyperbolic unitary group on nH in the split basis
// (e_1..e_n, e_1*..e_n*), acting on column coordinates:
//   A_ij(r): [[1 + E_ij(r), 0], [0, 1 - E_ji(conj r)]], i != j
//   B_ij(s): [[1, E_ij(s) - eps E_ji(conj s)], [0, 1]]
//   C_ij(t): [[1, 0], [-eps E_ij(t) + E_ji(conj t), 1]]
// plus the rank-one subgroup pieces used by the U_{V1}-decomposition:
//   Adiag(a):  a at slot (1,1), conj(a)^{-1} at (n+1, n+1)
//   Bcorner(b), Ccorner(b): single off-diagonal entry with conj(b) = -eps b
//   Eswap:     [[0, eps], [1, 0]] embedded at the first plane
enum class GenTag { A, B, C, Adiag, Bcorner, Ccorner, Eswap };

template <class D>
struct ElemGen {
    GenTag tag;
    int i = 0;  // 0-based indices into 1..n
    int j = 0;
    D param;

    static ElemGen a(int i, int j, D r) { return {GenTag::A, i, j, std::move(r)}; }
    static ElemGen b(int i, int j, D s) { return {GenTag::B, i, j, std::move(s)}; }
    static ElemGen c(int i, int j, D t) { return {GenTag::C, i, j, std::move(t)}; }
    static ElemGen adiag(D a) { return {GenTag::Adiag, 0, 0, std::move(a)}; }
    static ElemGen bcorner(D b) { return {GenTag::Bcorner, 0, 0, std::move(b)}; }
    static ElemGen ccorner(D b) { return {GenTag::Ccorner, 0, 0, std::move(b)}; }
    static ElemGen eswap(const D& sample) { return {GenTag::Eswap, 0, 0, one_like(sample)}; }
};

template <class D>
Matrix<D> gen_matrix(const ElemGen<D>& g, int n, int eps) {
    const D& sample = g.param;
    Matrix<D> m = Matrix<D>::identity(2 * n, sample);
    D e = scalar_from_int(sample, eps);
    switch (g.tag) {
        case GenTag::A:
            if (g.i == g.j) throw bad_parameter("A_ij requires i != j");
            m(g.i, g.j) = m(g.i, g.j) + g.param;
            m(n + g.j, n + g.i) = m(n + g.j, n + g.i) - ring_conj(g.param);
            break;
        case GenTag::B:
            m(g.i, n + g.j) = m(g.i, n + g.j) + g.param;
            m(g.j, n + g.i) = m(g.j, n + g.i) - e * ring_conj(g.param);
            break;
        case GenTag::C:
            m(n + g.i, g.j) = m(n + g.i, g.j) - e * g.param;
            m(n + g.j, g.i) = m(n + g.j, g.i) + ring_conj(g.param);
            break;
        case GenTag::Adiag:
            if (is_zero(g.param)) throw bad_parameter("Adiag needs an invertible parameter");
            m(0, 0) = g.param;
            m(n, n) = ring_inverse(ring_conj(g.param));
            break;
        case GenTag::Bcorner:
            if (!is_zero(ring_conj(g.param) + e * g.param))
                throw bad_parameter("Bcorner parameter must satisfy conj(b) = -eps b");
            m(0, n) = g.param;
            break;
        case GenTag::Ccorner:
            if (!is_zero(ring_conj(g.param) + e * g.param))
                throw bad_parameter("Ccorner parameter must satisfy conj(b) = -eps b");
            m(n, 0) = g.param;
            break;
        case GenTag::Eswap:
            m(0, 0) = zero_like(sample);
            m(n, n) = zero_like(sample);
            m(0, n) = e;
            m(n, 0) = one_like(sample);
            break;
    }
    return m;
}

template <class D>
Matrix<D> word_product(const std::vector<ElemGen<D>>& word, int n, int eps, const D& sample) {
    Matrix<D> prod = Matrix<D>::identity(2 * n, sample);
    for (const auto& g : word) prod = prod * gen_matrix(g, n, eps);
    return prod;
}

// H(r) = A_ij(r) A_ji(-r^{-1}) A_ij(r) on the plane pair (i, j).
template <class D>
Matrix<D> h_element(const D& r, int i, int j, int n, int eps) {
    auto rinv = ring_inverse(r);
    return gen_matrix(ElemGen<D>::a(i, j, r), n, eps) *
           gen_matrix(ElemGen<D>::a(j, i, zero_like(r) - rinv), n, eps) *
           gen_matrix(ElemGen<D>::a(i, j, r), n, eps);
}

// E(r) = H(r) H(-1) = diag(..., r at i, r^{-1} at j; conj(r)^{-1}, conj(r)).
template <class D>
Matrix<D> e_element(const D& r, int i, int j, int n, int eps) {
    D minus1 = scalar_from_int(r, -1);
    return h_element(r, i, j, n, eps) * h_element(minus1, i, j, n, eps);
}

template <class D>
std::vector<ElemGen<D>> e_element_word(const D& r, int i, int j) {
    D minus1 = scalar_from_int(r, -1);
    D one = one_like(r);
    auto rinv = ring_inverse(r);
    return {ElemGen<D>::a(i, j, r),      ElemGen<D>::a(j, i, zero_like(r) - rinv),
            ElemGen<D>::a(i, j, r),      ElemGen<D>::a(i, j, minus1),
            ElemGen<D>::a(j, i, one),    ElemGen<D>::a(i, j, minus1)};
}

// Orthogonal-case derived elements (D = F, eps = +1, n = 2):
// L(s) = B_12(s) C_12(-s^{-1}) B_12(s), N(s) = L(-1) L(s).
template <class D>
Matrix<D> l_element(const D& s, int n, int eps) {
    auto sinv = ring_inverse(s);
    return gen_matrix(ElemGen<D>::b(0, 1, s), n, eps) *
           gen_matrix(ElemGen<D>::c(0, 1, zero_like(s) - sinv), n, eps) *
           gen_matrix(ElemGen<D>::b(0, 1, s), n, eps);
}

template <class D>
Matrix<D> n_element(const D& s, int n, int eps) {
    return l_element(scalar_from_int(s, -1), n, eps) * l_element(s, n, eps);
}

// Dimension-1 generators B(s) = [[1, s], [0, 1]], C(t) = [[1, 0], [t, 1]]
// for s, t in S_D, with the derived H(s), E(s) = H(s) H(-s0).
template <class D>
Matrix<D> dim1_b(const D& s) {
    Matrix<D> m = Matrix<D>::identity(2, s);
    m(0, 1) = s;
    return m;
}
template <class D>
Matrix<D> dim1_c(const D& t) {
    Matrix<D> m = Matrix<D>::identity(2, t);
    m(1, 0) = t;
    return m;
}
template <class D>
Matrix<D> dim1_h(const D& s) {
    return dim1_b(s) * dim1_c(zero_like(s) - ring_inverse(s)) * dim1_b(s);
}
template <class D>
Matrix<D> dim1_e(const D& s, const D& s0) {
    return dim1_h(s) * dim1_h(zero_like(s0) - s0);
}

}  // namespace metaforge
