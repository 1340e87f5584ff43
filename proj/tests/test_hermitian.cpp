#include <catch2/catch_amalgamated.hpp>

#include "metaforge/core/rng.hpp"
#include "metaforge/hermitian/space.hpp"

using namespace metaforge;

namespace {
QuatParams<Rational> hamilton() { return {Rational(1), Rational(1)}; }
}

TEST_CASE("hyperbolic plane pairing conventions") {
    auto sp = hyperbolic_space(CoefficientKind::F, -1, 1, Rational(1));
    Vec<Rational> e{Rational(1), Rational(0)}, estar{Rational(0), Rational(1)};
    CHECK(eval_form(sp, e, estar) == Rational(1));
    CHECK(eval_form(sp, estar, e) == Rational(-1));
    CHECK(eval_form(sp, e, e) == Rational(0));

    // quaternionic plane, eps = +1: <x,x> has conj = eps * itself
    auto hp = hyperbolic_space(CoefficientKind::H, 1, 1,
                               Quaternion<Rational>::from_scalar(Rational(1), hamilton()));
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        Vec<Quaternion<Rational>> x;
        for (int i = 0; i < 2; ++i)
            x.push_back({rng.small_rational(), rng.small_rational(), rng.small_rational(),
                         rng.small_rational(), hamilton()});
        auto v = eval_form(hp, x, x);
        CHECK(ring_conj(v) == v);
        // sesquilinearity <x d, y> = conj(d) <x, y>
        Quaternion<Rational> d{rng.small_rational(), rng.small_rational(), rng.small_rational(),
                               rng.small_rational(), hamilton()};
        Vec<Quaternion<Rational>> xd;
        for (auto& xi : x) xd.push_back(xi * d);
        CHECK(eval_form(hp, xd, x) == d.conj() * eval_form(hp, x, x));
    }
}

TEST_CASE("E-case rank-2 hermitian space") {
    Rational alpha(1), beta(3);
    auto sp = hermitian_E_quaternion(alpha, beta);
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        Quadratic<Rational> e1(rng.small_rational(), rng.small_rational(), alpha);
        Quadratic<Rational> e2(rng.small_rational(), rng.small_rational(), alpha);
        Quadratic<Rational> f1(rng.small_rational(), rng.small_rational(), alpha);
        Quadratic<Rational> f2(rng.small_rational(), rng.small_rational(), alpha);
        // <e1 + j e2, f1 + j f2> = conj(e1) f1 + beta conj(e2) f2
        auto v = eval_form(sp, Vec<Quadratic<Rational>>{e1, e2}, Vec<Quadratic<Rational>>{f1, f2});
        CHECK(v == e1.conj() * f1 + Quadratic<Rational>::from_scalar(beta, alpha) * e2.conj() * f2);
        // <x,x> = Nrd(e1) + beta Nrd(e2); positive definite over Q here
        auto q = eval_form(sp, Vec<Quadratic<Rational>>{e1, e2}, Vec<Quadratic<Rational>>{e1, e2});
        CHECK(q == Quadratic<Rational>::from_scalar(e1.norm() + beta * e2.norm(), alpha));
        if (!is_zero(e1) || !is_zero(e2)) CHECK(!is_zero(q));  // anisotropy at rational scale
    }
    // bounded isotropy probe finds nothing for the definite instance
    Rng probe_rng(13);
    auto draw = [&] {
        return Quadratic<Rational>(probe_rng.small_rational(), probe_rng.small_rational(), alpha);
    };
    CHECK(!isotropy_probe(sp, draw, 200));
}

TEST_CASE("isometry and similitude predicates") {
    SECTION("identity is an isometry with factor 1") {
        auto sp = hyperbolic_space(CoefficientKind::F, -1, 2, Rational(1));
        auto id = Matrix<Rational>::identity(4, Rational(1));
        CHECK(is_isometry(sp, id));
        CHECK(similitude_factor(sp, id) == Rational(1));
        CHECK(defining_equations_hold(-1, id));
    }
    SECTION("dim-1 skew-hermitian H(i): units give similitudes, i+j does not") {
        auto p = hamilton();
        auto sp = skew_H_space(std::vector<Quaternion<Rational>>{Quaternion<Rational>::unit(1, p)});
        // alpha0 in F(i): isometry iff norm 1
        Quaternion<Rational> a0(Rational(3, 5), Rational(4, 5), Rational(0), Rational(0), p);
        Matrix<Quaternion<Rational>> g(1, 1, a0);
        g(0, 0) = a0;
        CHECK(is_isometry(sp, g));
        // alpha1 * j: similitude with factor -nrd(alpha1 j)
        Quaternion<Rational> a1j(Rational(0), Rational(0), Rational(2), Rational(0), p);
        Matrix<Quaternion<Rational>> gj(1, 1, a1j);
        gj(0, 0) = a1j;
        auto lam = similitude_factor(sp, gj);
        CHECK(lam == Quaternion<Rational>::from_scalar(Rational(-4), p));
        // mixed alpha0 + alpha1 j is not a similitude
        Quaternion<Rational> mixed(Rational(1), Rational(0), Rational(1), Rational(0), p);
        Matrix<Quaternion<Rational>> gm(1, 1, mixed);
        gm(0, 0) = mixed;
        CHECK_THROWS_AS(similitude_factor(sp, gm), not_similitude);
    }
    SECTION("scalar a on a right H-line scales by nrd(a)") {
        auto p = hamilton();
        auto sp = hermitian_H_line(p);
        Rng rng(17);
        for (int t = 0; t < 10; ++t) {
            Quaternion<Rational> a{rng.small_rational(true), rng.small_rational(),
                                   rng.small_rational(), rng.small_rational(), p};
            Matrix<Quaternion<Rational>> g(1, 1, a);
            g(0, 0) = a;
            CHECK(similitude_factor(sp, g) == Quaternion<Rational>::from_scalar(a.nrd(), p));
        }
    }
    SECTION("closure and multiplicativity of the factor") {
        auto sp = hyperbolic_space(CoefficientKind::F, 1, 1, Rational(1));
        Rng rng(23);
        for (int t = 0; t < 20; ++t) {
            Rational u = rng.small_rational(true);
            Matrix<Rational> g(2, 2, Rational(1));
            g(0, 0) = u;
            g(1, 1) = Rational(1) / u;
            Matrix<Rational> h(2, 2, Rational(1));
            h(0, 1) = Rational(1);
            h(1, 0) = Rational(1);
            CHECK(is_isometry(sp, g));
            CHECK(is_isometry(sp, h));
            CHECK(is_isometry(sp, g * h));
            CHECK(is_isometry(sp, g.inverse()));
            Matrix<Rational> s = g * Rational(3);
            CHECK(similitude_factor(sp, s) == Rational(9));
            CHECK(similitude_factor(sp, s * h) == Rational(9));
        }
    }
}

TEST_CASE("anisotropic classification constructors") {
    auto p = hamilton();
    SECTION("norm-form Grams satisfy G* = eps G") {
        CHECK(quadratic_line(Rational(5)).dim() == 1);
        CHECK(quadratic_norm_form(Rational(2), Rational(1)).gram(1, 1) == Rational(2));
        CHECK(pure_quaternion_form(Rational(1), Rational(1), Rational(1)).dim() == 3);
        CHECK(nrd_form(Rational(1), Rational(3)).gram(3, 3) == Rational(3));
        CHECK(hermitian_E_line(Rational(2), Rational(1)).dim() == 1);
        CHECK(skew_E_line(Rational(2), Rational(1)).eps == -1);
        CHECK(skew_E_quaternion(Rational(1), Rational(3)).eps == -1);
    }
    SECTION("quaternionic skew spaces and the dimension/discriminant constraints at p=3") {
        auto ctx = make_padic_context(3, 20);
        QuatParams<Padic> qp{Padic::from_integer(ctx, 1), Padic::from_integer(ctx, 3)};
        auto xi = Quaternion<Padic>::unit(1, qp);     // xi^2 = -1, unramified
        auto varpi = Quaternion<Padic>::unit(2, qp);  // nrd = 3, prime
        // e_{-1} in F(xi) with Nrd = -1: 1 + sqrt(-2) i
        Quaternion<Padic> em1(Padic::from_integer(ctx, 1), hensel_sqrt(ctx, Rational(-2)),
                              Padic::zero(ctx), Padic::zero(ctx), qp);
        CHECK(em1.nrd() == Padic::from_integer(ctx, -1));
        auto diag3 = std::vector<Quaternion<Padic>>{xi, varpi, em1 * xi * varpi};
        auto sp3 = make_anisotropic_skew_H(diag3, Integer(3));
        CHECK(discriminant(sp3, Integer(3)) == SquareClass::one);
        // dim 3 with nontrivial discriminant is rejected
        auto bad3 = std::vector<Quaternion<Padic>>{xi, varpi, xi * varpi};
        CHECK(discriminant(skew_H_space(bad3), Integer(3)) != SquareClass::one);
        CHECK_THROWS_AS(make_anisotropic_skew_H(bad3, Integer(3)), bad_spec);
        // dim 1: diag(xi) has class of -alpha = -1
        auto sp1 = make_anisotropic_skew_H(std::vector<Quaternion<Padic>>{xi}, Integer(3));
        CHECK(discriminant(sp1, Integer(3)) == SquareClass::u);
        // scaling an entry by a central square fixes the class
        auto scaled = std::vector<Quaternion<Padic>>{
            xi * Quaternion<Padic>::from_scalar(Padic::from_integer(ctx, 4), qp)};
        CHECK(discriminant(skew_H_space(scaled), Integer(3)) == discriminant(sp1, Integer(3)));
        // dims > 3 rejected
        auto diag4 = std::vector<Quaternion<Padic>>{xi, varpi, xi * varpi, xi};
        CHECK_THROWS_AS(make_anisotropic_skew_H(diag4, Integer(3)), bad_spec);
    }
    SECTION("rational Hamilton instance: diag(i, j) discriminant") {
        auto i = Quaternion<Rational>::unit(1, p);
        auto j = Quaternion<Rational>::unit(2, p);
        auto sp = skew_H_space(std::vector<Quaternion<Rational>>{i, j});
        // disc = (-1)(-1) = 1, the trivial class at every odd p
        CHECK(discriminant(sp, Integer(5)) == SquareClass::one);
        CHECK(discriminant(sp, Integer(3)) == SquareClass::one);
        CHECK_THROWS_AS(discriminant(hyperbolic_space(CoefficientKind::H, -1, 1,
                                                      Quaternion<Rational>::unit(0, p)),
                                     Integer(3)),
                        not_diagonal);
    }
}

TEST_CASE("Witt decomposition data") {
    WittData w{"H(xi)+H(varpi)", 8, 2};
    CHECK(w.total_dim() == 12);
    WittData trivial{"", 0, 3};
    CHECK(trivial.total_dim() == 6);
}
