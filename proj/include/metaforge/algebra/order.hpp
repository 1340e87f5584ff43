#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "metaforge/algebra/quaternion.hpp"
#include "metaforge/scalars/local.hpp"

namespace metaforge {

// Integral structure of a p-adic quaternion division algebra with the
// standard basis {1, xi, varpi, xi varpi}: F(xi)/F unramified and
// Nrd(varpi) a prime of F. With the conventions of this library,
// xi = i when -alpha is a unit non-residue and varpi = j when beta = p.
struct QuatOrderContext {
    PadicCtxPtr padic;
    QuatParams<Padic> params;
    Quaternion<Padic> xi;
    Quaternion<Padic> varpi;

    QuatOrderContext(PadicCtxPtr ctx, const Rational& alpha, const Rational& beta)
        : padic(std::move(ctx)),
          params{Padic::from_rational(padic, alpha), Padic::from_rational(padic, beta)},
          xi(Quaternion<Padic>::unit(1, params)),
          varpi(Quaternion<Padic>::unit(2, params)) {
        const Integer& p = padic->p;
        if (hilbert_symbol(-alpha, -beta, p) != -1)
            throw split_algebra("QuatOrderContext: algebra is split at p");
        UnitPart ua = unit_part(alpha, p);
        if (ua.val % 2 != 0 || legendre(imod(p - ua.unit, p), p) != -1)
            throw bad_parameter("QuatOrderContext: need -alpha a unit non-residue (xi = i)");
        if (val_p(beta, p) != 1)
            throw bad_parameter("QuatOrderContext: need val(beta) = 1 (varpi = j)");
    }
};

struct FiltrationResult {
    bool in_order;      // |Nrd| <= 1
    bool in_one_plus_pn;  // x in 1 + P^n
    bool in_sl1;        // Nrd(x) = 1 at working precision
    long long w;        // quaternion valuation w(x) = v_p(Nrd x)
};

// Membership in the maximal order D, in 1 + P^n, and in SL_1, read off
// the valuation of the reduced norm.
inline FiltrationResult filtration_membership(const Quaternion<Padic>& x,
                                              const QuatOrderContext& ctx, long long n) {
    Padic nrd = x.nrd();
    long long w = nrd.is_zero() ? kValInfinity : nrd.val();
    Quaternion<Padic> shifted = x - one_like(x);
    Padic snrd = shifted.nrd();
    long long ws = snrd.is_zero() ? kValInfinity : snrd.val();
    if (nrd.is_zero())
        throw precision_exhausted("filtration_membership: Nrd vanished at working precision");
    Padic one = Padic::from_integer(ctx.padic, 1);
    bool sl1 = (nrd == one);
    return FiltrationResult{w >= 0, ws >= n, sl1, w};
}

// Witness for x in [H^x, H^x] when Nrd(x) = 1: a pair (jj, y) with
// jj * y * jj^{-1} * y^{-1} = x, from the singular 2x2 system whose
// determinant vanishes exactly on the norm-one locus. x = 1 gets the
// empty witness, x = -1 the composite of two witnesses through i.
template <class S>
struct CommutatorWitness {
    std::vector<std::pair<Quaternion<S>, Quaternion<S>>> factors;

    Quaternion<S> recompose(const Quaternion<S>& sample) const {
        Quaternion<S> prod = one_like(sample);
        for (const auto& [jj, y] : factors) prod = prod * (jj * y * jj.inv() * y.inv());
        return prod;
    }
};

template <class S>
std::pair<Quaternion<S>, Quaternion<S>> commutator_witness_single(const Quaternion<S>& x) {
    // x = a + pure, pure != 0, Nrd(x) = 1
    Quaternion<S> pure = x;
    {
        S z = zero_like(x.a());
        pure = Quaternion<S>(z, x.b(), x.c(), x.d(), x.params());
    }
    if (is_zero(pure)) throw degenerate_input("commutator_witness: zero pure part");
    // jj: a pure quaternion anticommuting with the pure part, i.e. with
    // alpha b b' + beta c c' + alpha beta d d' = 0 (nonzero solution).
    const S& al = x.params().alpha;
    const S& be = x.params().beta;
    S z = zero_like(al), o = one_like(al);
    Quaternion<S> jj = one_like(x);
    if (!is_zero(x.b())) {
        if (!is_zero(x.c())) {
            // (b', c', d') = (beta c, -alpha b, 0)
            jj = Quaternion<S>(z, be * x.c(), (z - al) * x.b(), z, x.params());
        } else {
            jj = Quaternion<S>(z, z, o, z, x.params());  // j anticommutes with i-d plane
            if (!is_zero(x.d())) {
                // need alpha*beta*d*d' = -alpha*b*b' with c' = 0: (b', d') = (beta d, -b)
                jj = Quaternion<S>(z, be * x.d(), z, zero_like(o) - x.b(), x.params());
            }
        }
    } else if (!is_zero(x.c())) {
        jj = Quaternion<S>(z, o, z, z, x.params());  // i anticommutes with j-k plane...
        if (!is_zero(x.d())) {
            // alpha beta d d' = -beta c c' with b' = 0: (c', d') = (alpha d, -c)
            jj = Quaternion<S>(z, z, al * x.d(), zero_like(o) - x.c(), x.params());
        }
    } else {
        jj = Quaternion<S>(z, o, z, z, x.params());  // pure part is d k; i anticommutes
    }
    // y = x0 + pure*y0 solving (a-1) x0 + pure^2 y0 = 0, x0 + (a+1) y0 = 0:
    // (x0, y0) = (-(a+1), 1), invertible unless a = -1.
    S a = x.a();
    S x0 = zero_like(a) - (a + o);
    Quaternion<S> y = Quaternion<S>::from_scalar(x0, x.params()) + pure;
    if (is_zero(y.nrd())) throw degenerate_input("commutator_witness: non-invertible y");
    return {jj, y};
}

template <class S>
CommutatorWitness<S> commutator_witness(const Quaternion<S>& x) {
    if (!is_zero(x.nrd() - one_like(x.nrd())))
        throw bad_parameter("commutator_witness: Nrd(x) != 1");
    CommutatorWitness<S> w;
    Quaternion<S> one = one_like(x);
    if (x == one) return w;  // trivial witness
    if (x == -one) {
        // -1 = i * i: compose the witnesses of i with itself
        Quaternion<S> i = Quaternion<S>::unit(1, x.params());
        S al = x.params().alpha;
        if (!is_zero(al - one_like(al)))
            throw degenerate_input("commutator_witness for -1 expects alpha = 1 (i^2 = -1)");
        auto wi = commutator_witness_single(i);
        w.factors.push_back(wi);
        w.factors.push_back(wi);
        return w;
    }
    w.factors.push_back(commutator_witness_single(x));
    return w;
}

}  // namespace metaforge
