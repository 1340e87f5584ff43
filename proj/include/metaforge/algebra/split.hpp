#pragma once

#include <string>

#include "metaforge/algebra/matrix.hpp"
#include "metaforge/algebra/quadratic.hpp"
#include "metaforge/algebra/quaternion.hpp"
#include "metaforge/algebra/tower.hpp"

namespace metaforge {

// H (x) F(i) -> M_2(F(i)):   a + bi + cj + dk  |->  [[a+ib, -beta(c+id)],
//                                                    [c-id,   a-ib   ]]
// Coefficients live in F(i), with the quaternion i identified with the
// field generator on the diagonal. Multiplicative, and it intertwines
// the sigma-twisted involutions (see s_split_sigma_twist below).
template <class S>
Matrix<Quadratic<S>> s_split(const Quaternion<Quadratic<S>>& x) {
    const Quadratic<S>& al = x.params().alpha;
    Quadratic<S> gen = Quadratic<S>::gen(al.re());  // the field generator i, i^2 = -alpha
    // alpha and beta are required to be base-field scalars here
    Quadratic<S> beta = x.params().beta;
    Quadratic<S> a = x.a(), b = x.b(), c = x.c(), d = x.d();
    Matrix<Quadratic<S>> m(2, 2, a);
    m(0, 0) = a + gen * b;
    m(0, 1) = -(beta * (c + gen * d));
    m(1, 0) = c - gen * d;
    m(1, 1) = a - gen * b;
    return m;
}

// Convenience overload: quaternion over the base field S, split over F(i).
template <class S>
Matrix<Quadratic<S>> s_split_base(const Quaternion<S>& x) {
    Quadratic<S> al = Quadratic<S>::from_scalar(x.params().alpha, x.params().alpha);
    QuatParams<Quadratic<S>> qp{al, Quadratic<S>::from_scalar(x.params().beta, x.params().alpha)};
    Quaternion<Quadratic<S>> lifted(Quadratic<S>::from_scalar(x.a(), x.params().alpha),
                                    Quadratic<S>::from_scalar(x.b(), x.params().alpha),
                                    Quadratic<S>::from_scalar(x.c(), x.params().alpha),
                                    Quadratic<S>::from_scalar(x.d(), x.params().alpha), qp);
    return s_split(lifted);
}

// Matrix Delta = [[0, -beta], [1, 0]] implementing the sigma twist:
// s(sigma-coefficients of x) = Delta * s(x)^sigma * Delta^{-1}.
template <class S>
Matrix<Quadratic<S>> split_sigma_twist_matrix(const S& alpha, const S& beta) {
    Quadratic<S> z = Quadratic<S>::from_scalar(zero_like(alpha), alpha);
    Matrix<Quadratic<S>> d(2, 2, z);
    d(0, 1) = Quadratic<S>::from_scalar(zero_like(beta) - beta, alpha);
    d(1, 0) = Quadratic<S>::from_scalar(one_like(beta), alpha);
    return d;
}

// Canonical involution on M_2(F): [[a,b],[c,d]] -> [[d,-b],[-c,a]].
// Satisfies A * bar(A) = det(A) * 1.
template <class R>
Matrix<R> m2_canonical_involution(const Matrix<R>& m) {
    if (m.rows() != 2 || m.cols() != 2) throw dimension_mismatch("m2_canonical_involution: 2x2 only");
    Matrix<R> r = m;
    r(0, 0) = m(1, 1);
    r(0, 1) = zero_like(m(0, 1)) - m(0, 1);
    r(1, 0) = zero_like(m(1, 0)) - m(1, 0);
    r(1, 1) = m(0, 0);
    return r;
}

// ---------------------------------------------------------------------
// S_D = { s - eps * conj(s) | s in D } = { b in D : conj(b) = -eps b }.
// ---------------------------------------------------------------------

enum class CoefficientKind { F, E, H };

inline const char* to_string(CoefficientKind k) {
    switch (k) {
        case CoefficientKind::F: return "F";
        case CoefficientKind::E: return "E";
        case CoefficientKind::H: return "H";
    }
    return "?";
}

// Case table for S_D: {0}, F, F, F i, F, or the pure quaternions,
// depending on (D, eps).
inline std::string s_d_description(CoefficientKind kind, int eps) {
    if (kind == CoefficientKind::F) return eps == 1 ? "{0}" : "F";
    if (kind == CoefficientKind::E) return eps == 1 ? "F*i" : "F";
    return eps == 1 ? "pure quaternions" : "F";
}

inline bool s_d_contains(const Rational& b, int eps) {
    return eps == 1 ? b == 0 : true;
}
template <class S>
bool s_d_contains(const Quadratic<S>& b, int eps) {
    return eps == 1 ? is_zero(b.re()) : is_zero(b.im());
}
template <class S>
bool s_d_contains(const Quaternion<S>& b, int eps) {
    if (eps == 1) return is_zero(b.a());
    return is_zero(b.b()) && is_zero(b.c()) && is_zero(b.d());
}

// b |-> b - eps * conj(b), always a member of S_D.
template <class D>
D s_d_project(const D& b, int eps) {
    D c = ring_conj(b);
    if (eps == 1) return D(b - c);
    return D(b + c);
}

}  // namespace metaforge
