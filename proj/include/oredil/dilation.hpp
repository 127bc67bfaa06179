#pragma once

#include <string>
#include <utility>

#include "hilbert.hpp"
#include "multiplier.hpp"

namespace oredil {

/// A vector U_t* h of the minimal unitary dilation, stored as the pair
/// (level t, h in H). The lifting relation
///   (t, h) = (s*t, e(-lam(s,t)) V_s h)
/// identifies pairs; sums are canonicalized to a common level, so a single
/// pair represents every finitely supported dilation vector we construct.
template <OreMonoidInstance M>
struct DilVec {
    typename M::element level;
    HVec<M> h;
};

template <OreMonoidInstance M>
DilVec<M> dil_embed(const HVec<M>& h) {
    return {M::identity(), h};
}

template <OreMonoidInstance M>
DilVec<M> dil_zero() {
    return {M::identity(), {}};
}

/// Rewrite xi = (t, h) at the higher level u*t via the lifting relation.
template <IsometricRep R>
DilVec<typename R::monoid> dil_lift(const R& rep, const typename R::monoid::element& u,
                                    const DilVec<typename R::monoid>& xi) {
    using M = typename R::monoid;
    GaussRat ph = rep.lambda(u, xi.level).conj().scalar();
    return {M::mul(u, xi.level), hv_scale(ph, rep.apply(u, xi.h))};
}

/// Both inputs rewritten at one common level produced by ore_pair.
template <IsometricRep R>
std::pair<DilVec<typename R::monoid>, DilVec<typename R::monoid>>
dil_common(const R& rep, const DilVec<typename R::monoid>& xi,
           const DilVec<typename R::monoid>& eta) {
    using M = typename R::monoid;
    auto [u, v] = M::ore_pair(xi.level, eta.level);
    return {dil_lift(rep, u, xi), dil_lift(rep, v, eta)};
}

template <IsometricRep R>
bool dil_eq(const R& rep, const DilVec<typename R::monoid>& xi,
            const DilVec<typename R::monoid>& eta) {
    auto [a, b] = dil_common(rep, xi, eta);
    return hv_eq(a.h, b.h);
}

/// Lifting is implemented by isometries with unitary dilates, so the inner
/// product of two vectors is the H-inner product of any common lift.
template <IsometricRep R>
GaussRat dil_inner(const R& rep, const DilVec<typename R::monoid>& xi,
                   const DilVec<typename R::monoid>& eta) {
    auto [a, b] = dil_common(rep, xi, eta);
    return hv_inner(a.h, b.h);
}

template <IsometricRep R>
DilVec<typename R::monoid> dil_add(const R& rep, const DilVec<typename R::monoid>& xi,
                                   const DilVec<typename R::monoid>& eta) {
    auto [a, b] = dil_common(rep, xi, eta);
    return {a.level, hv_add(a.h, b.h)};
}

template <OreMonoidInstance M>
DilVec<M> dil_scale(const GaussRat& a, const DilVec<M>& xi) {
    return {xi.level, hv_scale(a, xi.h)};
}

/// U_x applied to (s,h): with (t,z) = ore_pair(x,s) (so t*x == z*s),
///   U_x U_s* h = e(lam(t,x) - lam(z,s)) U_t* (V_z h).
/// The result class does not depend on the Ore pair chosen.
template <IsometricRep R>
DilVec<typename R::monoid> dil_apply_Us(const R& rep, const typename R::monoid::element& x,
                                        const DilVec<typename R::monoid>& xi) {
    using M = typename R::monoid;
    auto [t, z] = M::ore_pair(x, xi.level);
    GaussRat ph = (rep.lambda(t, x) - rep.lambda(z, xi.level)).scalar();
    return {t, hv_scale(ph, rep.apply(z, xi.h))};
}

/// U_x* applied to (s,h): U_x* U_s* h = e(-lam(s,x)) U_{sx}* h.
template <IsometricRep R>
DilVec<typename R::monoid> dil_apply_Us_star(const R& rep, const typename R::monoid::element& x,
                                             const DilVec<typename R::monoid>& xi) {
    using M = typename R::monoid;
    GaussRat ph = rep.lambda(xi.level, x).conj().scalar();
    return {M::mul(xi.level, x), hv_scale(ph, xi.h)};
}

/// The unitary mu-representation of G: for the canonical representative
/// (x,y) of g, U_g = U_x* U_y. No phase correction is needed precisely
/// because mu is defined through the same section; U_{embed s} then agrees
/// with dil_apply_Us since embedded classes have representative (e,s).
template <IsometricRep R, class Mu>
DilVec<typename R::monoid> dil_apply_group(const R& rep, const Mu& mu,
                                           const Fraction<typename R::monoid>& g,
                                           const DilVec<typename R::monoid>& xi) {
    auto r = mu.rep(g);
    return dil_apply_Us_star(rep, r.x, dil_apply_Us(rep, r.y, xi));
}

template <OreMonoidInstance M>
std::string dil_to_string(const DilVec<M>& xi) {
    return "U_" + M::to_string(xi.level) + "* [" + hv_to_string(xi.h) + "]";
}

} // namespace oredil
