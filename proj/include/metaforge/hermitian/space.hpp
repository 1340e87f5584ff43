#pragma once

#include <string>
#include <vector>

#include "metaforge/algebra/matrix.hpp"
#include "metaforge/algebra/quadratic.hpp"
#include "metaforge/algebra/quaternion.hpp"
#include "metaforge/algebra/split.hpp"
#include "metaforge/scalars/local.hpp"

namespace metaforge {

enum class Side { right, left };

// epsilon-hermitian space over a coefficient ring D with involution,
// presented by its Gram matrix. Right spaces pair as conj(x)^t G y,
// left spaces as x G conj(y)^t; both store maps so that composition is
// plain matrix multiplication in the stored convention.
template <class D>
struct HermSpace {
    CoefficientKind kind;
    int eps;  // +1 hermitian, -1 skew-hermitian
    Side side;
    Matrix<D> gram;

    HermSpace(CoefficientKind k, int e, Side s, Matrix<D> g)
        : kind(k), eps(e), side(s), gram(std::move(g)) {
        if (eps != 1 && eps != -1) throw bad_parameter("HermSpace: eps must be +-1");
        Matrix<D> star = gram.conj_transpose();
        Matrix<D> scaled = eps == 1 ? gram : -gram;
        if (star != scaled) throw bad_parameter("HermSpace: Gram fails G* = eps G");
    }

    int dim() const { return gram.rows(); }
};

template <class D>
using Vec = std::vector<D>;

template <class D>
Matrix<D> column(const Vec<D>& x) {
    Matrix<D> m(static_cast<int>(x.size()), 1, x.at(0));
    for (size_t i = 0; i < x.size(); ++i) m(static_cast<int>(i), 0) = x[i];
    return m;
}

template <class D>
D eval_form(const HermSpace<D>& sp, const Vec<D>& x, const Vec<D>& y) {
    if (static_cast<int>(x.size()) != sp.dim() || static_cast<int>(y.size()) != sp.dim())
        throw dimension_mismatch("eval_form: vector length");
    D acc = zero_like(sp.gram.sample());
    for (int i = 0; i < sp.dim(); ++i)
        for (int j = 0; j < sp.dim(); ++j) {
            if (is_zero(sp.gram(i, j))) continue;
            if (sp.side == Side::right)
                acc = acc + ring_conj(x[i]) * sp.gram(i, j) * y[j];
            else
                acc = acc + x[i] * sp.gram(i, j) * ring_conj(y[j]);
        }
    return acc;
}

// g* G g = G (right) or g G g* = G (left).
template <class D>
bool is_isometry(const HermSpace<D>& sp, const Matrix<D>& g) {
    if (g.rows() != sp.dim() || g.cols() != sp.dim()) return false;
    Matrix<D> lhs = sp.side == Side::right ? g.conj_transpose() * sp.gram * g
                                           : g * sp.gram * g.conj_transpose();
    return lhs == sp.gram;
}

// Central scalar lambda with g* G g = lambda G; throws when none exists.
template <class D>
D similitude_factor(const HermSpace<D>& sp, const Matrix<D>& g) {
    Matrix<D> m = sp.side == Side::right ? g.conj_transpose() * sp.gram * g
                                         : g * sp.gram * g.conj_transpose();
    // read the candidate factor off a nonzero Gram entry; a valid factor
    // is involution-fixed (hence central in F, E, H) and scales G globally
    for (int i = 0; i < sp.dim(); ++i)
        for (int j = 0; j < sp.dim(); ++j) {
            if (is_zero(sp.gram(i, j))) continue;
            for (D lam : {inverse(sp.gram(i, j)) * m(i, j), m(i, j) * inverse(sp.gram(i, j))}) {
                if (!is_zero(lam - ring_conj(lam))) continue;
                if (sp.gram * lam == m && lam * sp.gram == m) return lam;
            }
            throw not_similitude("similitude_factor: no central factor");
        }
    throw not_similitude("similitude_factor: zero Gram");
}

// The three displayed defining equations for a split (hyperbolic) space
// written in n x n blocks [[a, b], [c, d]]:
//   eps c* a + a* c = 0, eps d* b + b* d = 0, eps c* b + a* d = 1.
template <class D>
bool defining_equations_hold(int eps, const Matrix<D>& g) {
    int n = g.rows() / 2;
    Matrix<D> a = g.block(0, 0, n, n), b = g.block(0, n, n, n);
    Matrix<D> c = g.block(n, 0, n, n), d = g.block(n, n, n, n);
    D e = scalar_from_int(g.sample(), eps);
    Matrix<D> one = Matrix<D>::identity(n, g.sample());
    Matrix<D> z(n, n, g.sample());
    return (e * (c.conj_transpose() * a) + a.conj_transpose() * c == z) &&
           (e * (d.conj_transpose() * b) + b.conj_transpose() * d == z) &&
           (e * (c.conj_transpose() * b) + a.conj_transpose() * d == one);
}

// ---------------------------------------------------------------------
// Constructors from the anisotropic classification, plus hyperbolic
// spaces. Quadratic forms are carried as symmetric Gram matrices
// (D = F, eps = +1).
// ---------------------------------------------------------------------

inline HermSpace<Rational> quadratic_line(const Rational& a) {
    if (a == 0) throw bad_spec("quadratic_line: a = 0");
    Matrix<Rational> g(1, 1, a);
    g(0, 0) = a;
    return HermSpace<Rational>(CoefficientKind::F, 1, Side::right, g);
}

// a * N_{F1/F}(x) on F1 = F(i), Gram a*diag(1, alpha) in the basis {1, i}.
inline HermSpace<Rational> quadratic_norm_form(const Rational& a, const Rational& alpha) {
    Matrix<Rational> g(2, 2, a);
    g(0, 0) = a;
    g(1, 1) = a * alpha;
    return HermSpace<Rational>(CoefficientKind::F, 1, Side::right, g);
}

// x -> conj(x) a x on pure quaternions, Gram a*diag(alpha, beta, alpha beta).
inline HermSpace<Rational> pure_quaternion_form(const Rational& a, const Rational& alpha,
                                                const Rational& beta) {
    Matrix<Rational> g(3, 3, a);
    g(0, 0) = a * alpha;
    g(1, 1) = a * beta;
    g(2, 2) = a * alpha * beta;
    return HermSpace<Rational>(CoefficientKind::F, 1, Side::right, g);
}

// x -> Nrd(x), Gram diag(1, alpha, beta, alpha beta).
inline HermSpace<Rational> nrd_form(const Rational& alpha, const Rational& beta) {
    Matrix<Rational> g(4, 4, alpha);
    g(0, 0) = 1;
    g(1, 1) = alpha;
    g(2, 2) = beta;
    g(3, 3) = alpha * beta;
    return HermSpace<Rational>(CoefficientKind::F, 1, Side::right, g);
}

template <class S>
HermSpace<Quadratic<S>> hermitian_E_line(const S& a, const S& alpha) {
    Matrix<Quadratic<S>> g(1, 1, Quadratic<S>::from_scalar(a, alpha));
    g(0, 0) = Quadratic<S>::from_scalar(a, alpha);
    return HermSpace<Quadratic<S>>(CoefficientKind::E, 1, Side::right, g);
}

// H = E + jE as the rank-2 hermitian E-space: Gram diag(1, beta).
template <class S>
HermSpace<Quadratic<S>> hermitian_E_quaternion(const S& alpha, const S& beta) {
    Quadratic<S> one = Quadratic<S>::from_scalar(one_like(alpha), alpha);
    Matrix<Quadratic<S>> g(2, 2, one);
    g(0, 0) = one;
    g(1, 1) = Quadratic<S>::from_scalar(beta, alpha);
    return HermSpace<Quadratic<S>>(CoefficientKind::E, 1, Side::right, g);
}

// mu-twist by mu = i (conj(i)/i = -1, the Hilbert-90 witness of the tower).
template <class S>
HermSpace<Quadratic<S>> skew_E_line(const S& a, const S& alpha) {
    Quadratic<S> entry = Quadratic<S>(zero_like(a), a, alpha);  // a * i
    Matrix<Quadratic<S>> g(1, 1, entry);
    g(0, 0) = entry;
    return HermSpace<Quadratic<S>>(CoefficientKind::E, -1, Side::right, g);
}

template <class S>
HermSpace<Quadratic<S>> skew_E_quaternion(const S& alpha, const S& beta) {
    Quadratic<S> i = Quadratic<S>::gen(alpha);
    Matrix<Quadratic<S>> g(2, 2, i);
    g(0, 0) = i;
    g(1, 1) = Quadratic<S>(zero_like(beta), beta, alpha);  // beta * i
    return HermSpace<Quadratic<S>>(CoefficientKind::E, -1, Side::right, g);
}

// Right skew-hermitian space over the quaternions with diagonal Gram of
// pure units. No classification constraints: plain constructor.
template <class S>
HermSpace<Quaternion<S>> skew_H_space(const std::vector<Quaternion<S>>& diag,
                                      Side side = Side::right) {
    int n = static_cast<int>(diag.size());
    Matrix<Quaternion<S>> g(n, n, diag.at(0));
    for (int i = 0; i < n; ++i) {
        if (!diag[i].is_pure()) throw bad_spec("skew_H_space: diagonal entry not pure");
        g(i, i) = diag[i];
    }
    return HermSpace<Quaternion<S>>(CoefficientKind::H, -1, side, g);
}

template <class S>
HermSpace<Quaternion<S>> hermitian_H_line(const QuatParams<S>& params) {
    Matrix<Quaternion<S>> g(1, 1, Quaternion<S>::unit(0, params));
    g(0, 0) = Quaternion<S>::unit(0, params);
    return HermSpace<Quaternion<S>>(CoefficientKind::H, 1, Side::right, g);
}

// Hyperbolic space nH with the split basis e_1..e_n, e_1*..e_n* and
// Gram [[0, I], [eps I, 0]].
template <class D>
HermSpace<D> hyperbolic_space(CoefficientKind kind, int eps, int n, const D& sample) {
    Matrix<D> g(2 * n, 2 * n, sample);
    for (int i = 0; i < n; ++i) {
        g(i, n + i) = one_like(sample);
        g(n + i, i) = scalar_from_int(sample, eps);
    }
    return HermSpace<D>(kind, eps, Side::right, g);
}

// ---------------------------------------------------------------------
// Discriminant of a diagonalized skew-hermitian quaternionic space:
// the square class of prod(a_i^2).
// ---------------------------------------------------------------------

inline SquareClass square_class_of(const Rational& a, const Integer& p) { return square_class(a, p); }
inline SquareClass square_class_of(const Padic& a, const Integer& p) {
    if (a.is_zero()) throw bad_parameter("square_class_of: zero");
    if (a.ctx()->p != p) throw bad_parameter("square_class_of: context prime mismatch");
    bool odd_val = ((a.val() % 2) + 2) % 2 == 1;
    bool residue = legendre(imod(a.unit(), p), p) == 1;
    if (!odd_val) return residue ? SquareClass::one : SquareClass::u;
    return residue ? SquareClass::p : SquareClass::up;
}

template <class S>
SquareClass discriminant(const HermSpace<Quaternion<S>>& sp, const Integer& p) {
    if (sp.eps != -1) throw bad_spec("discriminant: skew-hermitian spaces only");
    S prod = one_like(sp.gram.sample().a());
    for (int i = 0; i < sp.dim(); ++i) {
        for (int j = 0; j < sp.dim(); ++j)
            if (i != j && !is_zero(sp.gram(i, j))) throw not_diagonal("discriminant: Gram not diagonal");
        Quaternion<S> sq = sp.gram(i, i) * sp.gram(i, i);
        if (!is_zero(sq.b()) || !is_zero(sq.c()) || !is_zero(sq.d()))
            throw not_diagonal("discriminant: entry squared is not scalar");
        prod = prod * sq.a();
    }
    return square_class_of(prod, p);
}

// Validating constructor for the anisotropic quaternionic skew spaces:
// dimension at most 3, trivial discriminant exactly in dimension 3.
template <class S>
HermSpace<Quaternion<S>> make_anisotropic_skew_H(const std::vector<Quaternion<S>>& diag,
                                                 const Integer& p) {
    if (diag.empty() || diag.size() > 3)
        throw bad_spec("anisotropic skew space over H has dimension 1, 2, or 3");
    HermSpace<Quaternion<S>> sp = skew_H_space(diag);
    SquareClass disc = discriminant(sp, p);
    if (diag.size() == 3 && disc != SquareClass::one)
        throw bad_spec("dimension 3 requires trivial discriminant");
    if (diag.size() < 3 && disc == SquareClass::one)
        throw bad_spec("dimension 1 or 2 excludes the trivial discriminant");
    return sp;
}

// Witt decomposition data: a named anisotropic kernel plus hyperbolic
// multiplicity.
struct WittData {
    std::string kernel_spec;
    int kernel_dim = 0;
    int multiplicity = 0;

    int total_dim() const { return kernel_dim + 2 * multiplicity; }
};

// Bounded random probe for isotropic vectors; a falsification tool, not
// a decision procedure.
template <class D, class DrawFn>
bool isotropy_probe(const HermSpace<D>& sp, DrawFn&& draw, int attempts) {
    for (int t = 0; t < attempts; ++t) {
        Vec<D> x;
        bool nonzero = false;
        for (int i = 0; i < sp.dim(); ++i) {
            x.push_back(draw());
            if (!is_zero(x.back())) nonzero = true;
        }
        if (!nonzero) continue;
        if (is_zero(eval_form(sp, x, x))) return true;
    }
    return false;
}

}  // namespace metaforge
