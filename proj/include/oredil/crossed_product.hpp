#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "direct_limit.hpp"
#include "multiplier.hpp"
#include "phase.hpp"

namespace oredil {

/// Coefficient b + u*1 in the unitization of the limit algebra. The formal
/// unit is what lets a bare unitary U_g live as a one-term sum even when
/// the coefficient algebra has no unit of its own; every beta_g fixes it.
template <StarAlgebraAction A>
struct UnitizedLim {
    LimElement<A> b{};
    GaussRat u{};
};

template <StarAlgebraAction A>
UnitizedLim<A> ul_zero() {
    return {lim_zero<A>(), GaussRat()};
}

template <StarAlgebraAction A>
UnitizedLim<A> ul_from_lim(LimElement<A> b) {
    return {std::move(b), GaussRat()};
}

template <StarAlgebraAction A>
UnitizedLim<A> ul_from_unit(const GaussRat& u) {
    return {lim_zero<A>(), u};
}

template <StarAlgebraAction A>
bool ul_is_zero(const UnitizedLim<A>& x) {
    return x.u.is_zero() && lim_is_zero(x.b);
}

template <StarAlgebraAction A>
bool ul_eq(const UnitizedLim<A>& x, const UnitizedLim<A>& y) {
    return x.u == y.u && lim_eq(x.b, y.b);
}

template <StarAlgebraAction A>
UnitizedLim<A> ul_add(const UnitizedLim<A>& x, const UnitizedLim<A>& y) {
    return {lim_add(x.b, y.b), x.u + y.u};
}

template <StarAlgebraAction A>
UnitizedLim<A> ul_scale(const GaussRat& c, const UnitizedLim<A>& x) {
    return {lim_scale(c, x.b), c * x.u};
}

/// (b1 + u1)(b2 + u2) = b1 b2 + u1 b2 + u2 b1 + (u1 u2) 1.
template <StarAlgebraAction A>
UnitizedLim<A> ul_mul(const UnitizedLim<A>& x, const UnitizedLim<A>& y) {
    LimElement<A> cross = lim_add(lim_scale(x.u, y.b), lim_scale(y.u, x.b));
    return {lim_add(lim_mul(x.b, y.b), cross), x.u * y.u};
}

template <StarAlgebraAction A>
UnitizedLim<A> ul_star(const UnitizedLim<A>& x) {
    return {lim_star(x.b), x.u.conj()};
}

template <StarAlgebraAction A>
UnitizedLim<A> ul_beta(const Fraction<typename A::monoid>& g, const UnitizedLim<A>& x) {
    return {beta_apply(g, x.b), x.u};
}

template <StarAlgebraAction A>
std::string ul_to_string(const UnitizedLim<A>& x) {
    if (x.u.is_zero())
        return lim_to_string(x.b);
    return lim_to_string(x.b) + " + " + x.u.str() + "*1";
}

/// Finite sum of terms coef * U_g keyed by the canonical representative of
/// the fraction class g, so a class appears at most once and structural
/// traversal order is deterministic.
template <StarAlgebraAction A>
struct CPElement {
    using monoid = typename A::monoid;
    using key = std::pair<typename monoid::element, typename monoid::element>;

    struct KeyLess {
        bool operator()(const key& a, const key& b) const {
            if (monoid::less(a.first, b.first))
                return true;
            if (monoid::less(b.first, a.first))
                return false;
            return monoid::less(a.second, b.second);
        }
    };

    std::map<key, UnitizedLim<A>, KeyLess> terms;
};

/// Bundles the action with the extended multiplier; the shared section in
/// mu fixes the canonical representatives used as term keys.
template <StarAlgebraAction A, MultiplierInstance L>
    requires std::same_as<typename A::monoid, typename L::monoid>
struct CpContext {
    using action = A;
    using monoid = typename A::monoid;
    ExtendedMultiplier<L> mu;
};

template <StarAlgebraAction A, MultiplierInstance L>
CpContext<A, L> make_cp_context(L lam) {
    return {extend_multiplier(std::move(lam))};
}

template <class C>
using cp_element_t = CPElement<typename C::action>;

template <class C>
cp_element_t<C> cp_zero(const C&) {
    return {};
}

template <class C>
void cp_accumulate(const C& ctx, cp_element_t<C>& out,
                   const Fraction<typename C::monoid>& g,
                   const UnitizedLim<typename C::action>& coef) {
    if (ul_is_zero(coef))
        return;
    Fraction<typename C::monoid> r = ctx.mu.rep(g);
    auto key = std::make_pair(r.x, r.y);
    auto it = out.terms.find(key);
    if (it == out.terms.end()) {
        out.terms.emplace(key, coef);
        return;
    }
    it->second = ul_add(it->second, coef);
    if (ul_is_zero(it->second))
        out.terms.erase(it);
}

template <class C>
cp_element_t<C> cp_term(const C& ctx, const Fraction<typename C::monoid>& g,
                        const UnitizedLim<typename C::action>& coef) {
    cp_element_t<C> out;
    cp_accumulate(ctx, out, g, coef);
    return out;
}

template <class C>
cp_element_t<C> cp_embed(const C& ctx, const LimElement<typename C::action>& b) {
    return cp_term(ctx, frac_identity<typename C::monoid>(), ul_from_lim<typename C::action>(b));
}

template <class C>
cp_element_t<C> cp_embed_alg(const C& ctx, const typename C::action::alg& a) {
    return cp_embed(ctx, i_embed<typename C::action>(a));
}

template <class C>
cp_element_t<C> cp_unitary(const C& ctx, const Fraction<typename C::monoid>& g) {
    return cp_term(ctx, g, ul_from_unit<typename C::action>(GaussRat(Rat(1))));
}

template <class C>
cp_element_t<C> cp_add(const C& ctx, const cp_element_t<C>& x, const cp_element_t<C>& y) {
    cp_element_t<C> out = x;
    for (const auto& [k, coef] : y.terms)
        cp_accumulate(ctx, out, {k.first, k.second}, coef);
    return out;
}

template <class C>
cp_element_t<C> cp_scale(const C& ctx, const GaussRat& c, const cp_element_t<C>& x) {
    cp_element_t<C> out;
    for (const auto& [k, coef] : x.terms)
        cp_accumulate(ctx, out, {k.first, k.second}, ul_scale(c, coef));
    return out;
}

/// (b U_g)(c U_h) = b beta_g(c) e(mu(g,h)) U_{gh}, extended bilinearly.
template <class C>
cp_element_t<C> cp_mul(const C& ctx, const cp_element_t<C>& x, const cp_element_t<C>& y) {
    using M = typename C::monoid;
    cp_element_t<C> out;
    for (const auto& [gk, b] : x.terms) {
        Fraction<M> g{gk.first, gk.second};
        for (const auto& [hk, c] : y.terms) {
            Fraction<M> h{hk.first, hk.second};
            UnitizedLim coef = ul_mul(b, ul_beta(g, c));
            coef = ul_scale(ctx.mu(g, h).scalar(), coef);
            cp_accumulate(ctx, out, frac_mul(g, h), coef);
        }
    }
    return out;
}

/// (b U_g)^* = e(-mu(g, g^{-1})) beta_{g^{-1}}(b^*) U_{g^{-1}}; this makes
/// U_g U_g^* = U_e on the nose.
template <class C>
cp_element_t<C> cp_star(const C& ctx, const cp_element_t<C>& x) {
    using M = typename C::monoid;
    cp_element_t<C> out;
    for (const auto& [gk, b] : x.terms) {
        Fraction<M> g{gk.first, gk.second};
        Fraction<M> gi = frac_inv(g);
        UnitizedLim coef = ul_beta(gi, ul_star(b));
        coef = ul_scale((-ctx.mu(g, gi)).scalar(), coef);
        cp_accumulate(ctx, out, gi, coef);
    }
    return out;
}

template <class C>
bool cp_eq(const C& ctx, const cp_element_t<C>& x, const cp_element_t<C>& y) {
    cp_element_t<C> diff = cp_add(ctx, x, cp_scale(ctx, GaussRat(Rat(-1)), y));
    return diff.terms.empty();
}

template <class C>
bool cp_is_zero(const C&, const cp_element_t<C>& x) {
    return x.terms.empty();
}

template <class C>
std::string cp_to_string(const C&, const cp_element_t<C>& x) {
    using M = typename C::monoid;
    if (x.terms.empty())
        return "0";
    std::string out;
    for (const auto& [k, coef] : x.terms) {
        if (!out.empty())
            out += "  +  ";
        out += "[" + ul_to_string(coef) + "] U(" + frac_to_string(Fraction<M>{k.first, k.second}) + ")";
    }
    return out;
}

/// p = i(1) U_e, the unit of the coefficient copy sitting at level e.
template <class C>
cp_element_t<C> corner_p(const C& ctx) {
    return cp_embed_alg(ctx, C::action::unit());
}

template <class C>
cp_element_t<C> corner_project(const C& ctx, const cp_element_t<C>& x) {
    cp_element_t<C> p = corner_p(ctx);
    return cp_mul(ctx, p, cp_mul(ctx, x, p));
}

/// v_s = U_s p, the isometry of the corner; v_s^* v_s = p and
/// v_s v_t = e(lambda(s,t)) v_{st}.
template <class C>
cp_element_t<C> v_iso(const C& ctx, const typename C::monoid::element& s) {
    return cp_mul(ctx, cp_unitary(ctx, frac_embed<typename C::monoid>(s)), corner_p(ctx));
}

/// A corner monomial phase * v_x^* i(a) v_y in symbolic form.
template <StarAlgebraAction A>
struct SgMonomial {
    typename A::monoid::element x;
    typename A::alg a;
    typename A::monoid::element y;
    Phase phase{};
};

/// Evaluate the monomial inside the crossed product. The corner
/// projections in v_x and v_y fold the coefficient to
/// alpha_x(1) a alpha_y(1) before anything moves across U's, so the
/// result is always a single term.
template <class C>
cp_element_t<C> sg_monomial(const C& ctx, const SgMonomial<typename C::action>& m) {
    cp_element_t<C> mid = cp_mul(ctx, cp_embed_alg(ctx, m.a), v_iso(ctx, m.y));
    cp_element_t<C> out = cp_mul(ctx, cp_star(ctx, v_iso(ctx, m.x)), mid);
    return cp_scale(ctx, m.phase.scalar(), out);
}

/// Closed-form product of two corner monomials. With (t,z) = ore_pair(y,r)
/// (so t y = z r),
///   (v_x^* a v_y)(v_r^* b v_s)
///     = e(lambda(t,y) - lambda(z,r) - lambda(t,x) + lambda(z,s))
///       v_{tx}^* alpha_t(a alpha_y(1)) alpha_z(alpha_r(1) b) v_{zs}.
/// The middle phases pair the lift letters with the inner letters as
/// (t,y) and (z,r): lifting v_y to level ty costs lambda(t,y) on the
/// non-starred side and lambda(z,r) conjugated on the starred side.
template <class C>
SgMonomial<typename C::action> sg_mul_direct(const C& ctx,
                                             const SgMonomial<typename C::action>& m1,
                                             const SgMonomial<typename C::action>& m2) {
    using M = typename C::monoid;
    using A = typename C::action;
    auto [t, z] = M::ore_pair(m1.y, m2.x);
    const auto& lam = ctx.mu.base();
    SgMonomial<A> out;
    out.x = M::mul(t, m1.x);
    out.y = M::mul(z, m2.y);
    out.a = A::mul(A::endo(t, A::mul(m1.a, A::endo(m1.y, A::unit()))),
                   A::endo(z, A::mul(A::endo(m2.x, A::unit()), m2.a)));
    out.phase = m1.phase + m2.phase + lam(t, m1.y) - lam(z, m2.x) - lam(t, m1.x) + lam(z, m2.y);
    return out;
}

template <StarAlgebraAction A>
std::string sg_to_string(const SgMonomial<A>& m) {
    using M = typename A::monoid;
    return "e(" + m.phase.str() + ") v(" + M::to_string(m.x) + ")* [" + A::to_string(m.a) +
           "] v(" + M::to_string(m.y) + ")";
}

/// Factorization witnessing that the corner is full: for b = class(s, a)
/// and any g,
///   X = e(mu(s, g)) U_s^* i(a)   and   Y = i(1) U_{sg}
/// satisfy X p Y = b U_g, and both factors have coefficients inside the
/// limit algebra (no formal unit survives).
template <class C>
struct FullnessWitness {
    cp_element_t<C> X;
    cp_element_t<C> Y;
};

template <class C>
FullnessWitness<C> fullness_witness(const C& ctx, const LimElement<typename C::action>& b,
                                    const Fraction<typename C::monoid>& g) {
    using M = typename C::monoid;
    Fraction<M> shat = frac_embed<M>(b.s);
    cp_element_t<C> X = cp_mul(ctx, cp_star(ctx, cp_unitary(ctx, shat)), cp_embed_alg(ctx, b.a));
    X = cp_scale(ctx, ctx.mu(shat, g).scalar(), X);
    cp_element_t<C> Y = cp_mul(ctx, corner_p(ctx), cp_unitary(ctx, frac_mul(shat, g)));
    return {std::move(X), std::move(Y)};
}

} // namespace oredil
