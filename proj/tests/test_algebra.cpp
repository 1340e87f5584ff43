#include <catch2/catch_amalgamated.hpp>

#include "metaforge/algebra/matrix.hpp"
#include "metaforge/algebra/order.hpp"
#include "metaforge/algebra/quadratic.hpp"
#include "metaforge/algebra/quaternion.hpp"
#include "metaforge/algebra/split.hpp"
#include "metaforge/algebra/tower.hpp"
#include "metaforge/core/rng.hpp"

using namespace metaforge;

namespace {

QuatParams<Rational> hamilton() { return {Rational(1), Rational(1)}; }

Quaternion<Rational> rand_quat(Rng& rng, const QuatParams<Rational>& p) {
    return {rng.small_rational(), rng.small_rational(), rng.small_rational(), rng.small_rational(), p};
}

}  // namespace

TEST_CASE("quaternion algebra laws") {
    Rng rng(7);
    auto p = hamilton();
    Quaternion<Rational> i = Quaternion<Rational>::unit(1, p);
    Quaternion<Rational> j = Quaternion<Rational>::unit(2, p);
    Quaternion<Rational> k = Quaternion<Rational>::unit(3, p);
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(i * i == -one_like(i));
    CHECK(i.nrd() == Rational(1));  // nrd(i) = alpha
    SECTION("with alpha=2, beta=3") {
        QuatParams<Rational> q{Rational(2), Rational(3)};
        auto ii = Quaternion<Rational>::unit(1, q);
        CHECK(ii.nrd() == Rational(2));
        CHECK((ii * ii).a() == Rational(-2));
    }
    for (int t = 0; t < 50; ++t) {
        auto x = rand_quat(rng, p), y = rand_quat(rng, p);
        // trd(q) = 2a, nrd multiplicative (oracle: direct multiplication)
        CHECK(x.trd() == Rational(2) * x.a());
        CHECK((x * y).nrd() == x.nrd() * y.nrd());
        CHECK(x.conj().nrd() == x.nrd());
        CHECK((x * y).trd() == (y * x).trd());
        if (!is_zero(x)) CHECK(x * x.inv() == one_like(x));
    }
}

TEST_CASE("splitting map into M2") {
    Rng rng(13);
    Rational alpha(1), beta(3);
    QuatParams<Rational> bp{alpha, beta};
    // image list: s(j) = [[0, -beta], [1, 0]], s(1) = identity
    auto mj = s_split_base(Quaternion<Rational>::unit(2, bp));
    CHECK(is_zero(mj(0, 0)));
    CHECK(mj(0, 1) == Quadratic<Rational>::from_scalar(-beta, alpha));
    CHECK(mj(1, 0) == one_like(mj(1, 0)));
    auto m1 = s_split_base(Quaternion<Rational>::unit(0, bp));
    CHECK(m1 == Matrix<Quadratic<Rational>>::identity(2, m1.sample()));
    auto mk = s_split_base(Quaternion<Rational>::unit(3, bp));
    Quadratic<Rational> gi = Quadratic<Rational>::gen(alpha);
    CHECK(mk(0, 1) == Quadratic<Rational>::from_scalar(-beta, alpha) * gi);
    CHECK(mk(1, 0) == -gi);

    QuatParams<Quadratic<Rational>> lifted{Quadratic<Rational>::from_scalar(alpha, alpha),
                                           Quadratic<Rational>::from_scalar(beta, alpha)};
    auto rand_lifted = [&](Rng& r) {
        auto c = [&] { return Quadratic<Rational>(r.small_rational(), r.small_rational(), alpha); };
        return Quaternion<Quadratic<Rational>>(c(), c(), c(), c(), lifted);
    };
    for (int t = 0; t < 50; ++t) {
        auto x = rand_lifted(rng), y = rand_lifted(rng);
        CHECK(s_split(x * y) == s_split(x) * s_split(y));  // multiplicative
        CHECK(s_split(x + y) == s_split(x) + s_split(y));
    }
    SECTION("sigma twist: s(x^sigma-coeffs) = Delta s(x)^sigma Delta^{-1}") {
        auto delta = split_sigma_twist_matrix(alpha, beta);
        for (int t = 0; t < 50; ++t) {
            auto x = rand_lifted(rng);
            Quaternion<Quadratic<Rational>> xs(x.a().conj(), x.b().conj(), x.c().conj(),
                                               x.d().conj(), lifted);
            auto lhs = s_split(xs);
            auto rhs = delta * s_split(x).map([](const Quadratic<Rational>& q) { return q.conj(); }) *
                       delta.inverse();
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("S_D case table") {
    CHECK(s_d_description(CoefficientKind::F, 1) == "{0}");
    CHECK(s_d_description(CoefficientKind::H, 1) == "pure quaternions");
    CHECK(s_d_description(CoefficientKind::E, 1) == "F*i");
    CHECK(s_d_description(CoefficientKind::F, -1) == "F");
    Rng rng(3);
    auto p = hamilton();
    for (int eps : {1, -1}) {
        for (int t = 0; t < 20; ++t) {
            auto s = rand_quat(rng, p);
            CHECK(s_d_contains(s_d_project(s, eps), eps));
            Quadratic<Rational> e(rng.small_rational(), rng.small_rational(), Rational(1));
            CHECK(s_d_contains(s_d_project(e, eps), eps));
            Rational f = rng.small_rational();
            CHECK(s_d_contains(s_d_project(f, eps), eps));
        }
    }
}

TEST_CASE("canonical involution on M2") {
    // [[a,b],[c,d]] -> [[d,-b],[-c,a]]; identity fixed; bar(A) A = det A
    Rng rng(29);
    Matrix<Rational> id = Matrix<Rational>::identity(2, Rational(1));
    CHECK(m2_canonical_involution(id) == id);
    for (int t = 0; t < 20; ++t) {
        Matrix<Rational> a(2, 2, Rational(1));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) a(i, j) = rng.small_rational();
        Matrix<Rational> bar = m2_canonical_involution(a);
        CHECK(bar(0, 0) == a(1, 1));
        CHECK(bar(0, 1) == -a(0, 1));
        Matrix<Rational> prod = bar * a;
        CHECK(prod(0, 0) == a.det());
        CHECK(prod(0, 0) == prod(1, 1));
        CHECK(prod(0, 1) == Rational(0));
        CHECK(prod(1, 0) == Rational(0));
        CHECK(a * bar == prod);
    }
}

TEST_CASE("tower Galois actions") {
    Rng rng(41);
    Rational alpha(1), beta(3);
    auto rand_tower = [&] {
        return Tower<Rational>(rng.small_rational(), rng.small_rational(), rng.small_rational(),
                               rng.small_rational(), alpha, beta);
    };
    for (int t = 0; t < 100; ++t) {
        auto x = rand_tower(), y = rand_tower();
        CHECK(x.sigma().sigma() == x);
        CHECK(x.tau().tau() == x);
        CHECK(x.sigma().tau() == x.tau().sigma());
        CHECK((x * y).sigma() == x.sigma() * y.sigma());  // ring morphisms
        CHECK((x + y).tau() == x.tau() + y.tau());
        if (!is_zero(x)) {
            CHECK(x * x.inv() == one_like(x));
            CHECK(x.galois_norm() == (x * x.sigma() * x.tau() * x.sigma_tau()).coeff(0));
        }
    }
    // levels
    Tower<Rational> i = Tower<Rational>::gen_i(alpha, beta);
    Tower<Rational> s = Tower<Rational>::gen_s(alpha, beta);
    CHECK(i.level() == TowerLevel::Fi);
    CHECK(s.level() == TowerLevel::Fs);
    CHECK((i * s).level() == TowerLevel::K);
    CHECK(one_like(i).level() == TowerLevel::F);
    CHECK(i * i == Tower<Rational>::from_scalar(-alpha, alpha, beta));
    CHECK(s * s == Tower<Rational>::from_scalar(-beta, alpha, beta));
}

TEST_CASE("integral filtration of the p-adic quaternion algebra") {
    auto ctx = make_padic_context(3, 40);
    // (alpha, beta) = (1, 3): division certified by (-1, -3)_3 = -1
    QuatOrderContext oc(ctx, Rational(1), Rational(3));
    auto one = Quaternion<Padic>::unit(0, oc.params);
    // x = 1 + varpi lies in 1 + P but not 1 + P^2
    auto x = one + oc.varpi;
    auto r = filtration_membership(x, oc, 1);
    CHECK(r.in_order);
    CHECK(r.in_one_plus_pn);
    CHECK(!filtration_membership(x, oc, 2).in_one_plus_pn);
    // xi has unit norm
    auto rx = filtration_membership(oc.xi, oc, 1);
    CHECK(rx.in_order);
    CHECK(rx.w == 0);
    // split algebra rejected
    CHECK_THROWS_AS(QuatOrderContext(ctx, Rational(1), Rational(1)), error);

    // sampled SL1 pairs: commutators land in 1 + P, and w is additive
    Rng rng(57);
    auto rand_sl1 = [&]() -> Quaternion<Padic> {
        for (;;) {
            Rational b(rng.range(-9, 9), 1), c(rng.range(-9, 9), 1), d(rng.range(-9, 9), 1);
            Rational rest = Rational(1) - (b * b + Rational(3) * c * c + Rational(3) * d * d);
            if (rest == 0) continue;
            UnitPart u = unit_part(rest, ctx->p);
            if (u.val % 2 != 0 || legendre(u.unit, ctx->p) != 1) continue;
            Padic a = hensel_sqrt(ctx, rest);
            return Quaternion<Padic>(a, Padic::from_rational(ctx, b), Padic::from_rational(ctx, c),
                                     Padic::from_rational(ctx, d), oc.params);
        }
    };
    for (int t = 0; t < 50; ++t) {
        auto g1 = rand_sl1(), g2 = rand_sl1();
        auto comm = g1 * g2 * g1.inv() * g2.inv();
        CHECK(filtration_membership(comm, oc, 1).in_one_plus_pn);
        auto prod = filtration_membership(g1 * oc.varpi * g2, oc, 0);
        CHECK(prod.w ==
              filtration_membership(g1, oc, 0).w + 1 + filtration_membership(g2, oc, 0).w);
    }
}

TEST_CASE("commutator witnesses in SL1") {
    auto p = hamilton();
    SECTION("x = i") {
        auto i = Quaternion<Rational>::unit(1, p);
        auto w = commutator_witness(i);
        REQUIRE(w.factors.size() == 1);
        CHECK(w.recompose(i) == i);
        // the conjugator anticommutes with the pure part
        const auto& [jj, y] = w.factors[0];
        CHECK(jj * i == -(i * jj));
        (void)y;
    }
    SECTION("trivial and -1") {
        auto one = Quaternion<Rational>::unit(0, p);
        CHECK(commutator_witness(one).factors.empty());
        auto w = commutator_witness(-one);
        CHECK(w.recompose(one) == -one);
    }
    SECTION("random Hamilton SL1 elements") {
        Rng rng(91);
        int found = 0;
        for (int t = 0; found < 20 && t < 2000; ++t) {
            Rational a = rng.small_rational(), b = rng.small_rational(), c = rng.small_rational(),
                     d = rng.small_rational();
            Rational n = a * a + b * b + c * c + d * d;
            if (n == 0) continue;
            // q^2 / nrd(q) always has reduced norm 1
            Quaternion<Rational> q(a, b, c, d, p);
            Quaternion<Rational> u = q * q * Quaternion<Rational>::from_scalar(Rational(1) / n, p);
            if (u.nrd() != Rational(1)) continue;
            if (u == one_like(u) || u == -one_like(u)) continue;
            auto w = commutator_witness(u);
            CHECK(w.recompose(u) == u);
            ++found;
        }
        CHECK(found == 20);
    }
}

TEST_CASE("p-adic commutator witness") {
    auto ctx = make_padic_context(3, 30);
    QuatParams<Padic> qp{Padic::from_integer(ctx, 1), Padic::from_integer(ctx, 3)};
    Rng rng(101);
    int found = 0;
    for (int t = 0; found < 10 && t < 500; ++t) {
        Rational b(rng.range(-9, 9), 1), c(rng.range(-9, 9), 1), d(rng.range(-9, 9), 1);
        Rational rest = Rational(1) - (b * b + Rational(3) * c * c + Rational(3) * d * d);
        if (rest == 0 || (b == 0 && c == 0 && d == 0)) continue;
        UnitPart u = unit_part(rest, ctx->p);
        if (u.val % 2 != 0 || legendre(u.unit, ctx->p) != 1) continue;
        Quaternion<Padic> x(hensel_sqrt(ctx, rest), Padic::from_rational(ctx, b),
                            Padic::from_rational(ctx, c), Padic::from_rational(ctx, d), qp);
        auto w = commutator_witness(x);
        CHECK(congruent(w.recompose(x), x, 22));
        ++found;
    }
    CHECK(found == 10);
}
