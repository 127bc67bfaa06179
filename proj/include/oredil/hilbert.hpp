#pragma once

#include <map>
#include <string>
#include <utility>

#include "monoid.hpp"
#include "multiplier.hpp"
#include "rational.hpp"

namespace oredil {

/// A finitely supported vector in l^2(S) (dense part): basis elements are
/// monoid elements, coefficients are Gaussian rationals. The map never
/// stores zero coefficients.
template <OreMonoidInstance M>
struct HVec {
    std::map<typename M::element, GaussRat, ElementLess<M>> c;
};

template <OreMonoidInstance M>
HVec<M> hv_zero() {
    return {};
}

template <OreMonoidInstance M>
HVec<M> hv_basis(const typename M::element& s) {
    HVec<M> h;
    h.c.emplace(s, GaussRat(Rat(1)));
    return h;
}

template <OreMonoidInstance M>
void hv_accumulate(HVec<M>& h, const typename M::element& s, const GaussRat& a) {
    if (a.is_zero())
        return;
    auto [it, fresh] = h.c.emplace(s, a);
    if (!fresh) {
        it->second += a;
        if (it->second.is_zero())
            h.c.erase(it);
    }
}

template <OreMonoidInstance M>
HVec<M> hv_add(const HVec<M>& a, const HVec<M>& b) {
    HVec<M> r = a;
    for (const auto& [s, v] : b.c)
        hv_accumulate(r, s, v);
    return r;
}

template <OreMonoidInstance M>
HVec<M> hv_scale(const GaussRat& a, const HVec<M>& h) {
    HVec<M> r;
    if (a.is_zero())
        return r;
    for (const auto& [s, v] : h.c)
        r.c.emplace(s, a * v);
    return r;
}

/// Conjugate-linear in the first argument: <sum a_s d_s, sum b_s d_s> =
/// sum conj(a_s) b_s.
template <OreMonoidInstance M>
GaussRat hv_inner(const HVec<M>& a, const HVec<M>& b) {
    GaussRat acc;
    for (const auto& [s, v] : a.c) {
        auto it = b.c.find(s);
        if (it != b.c.end())
            acc += v.conj() * it->second;
    }
    return acc;
}

template <OreMonoidInstance M>
bool hv_eq(const HVec<M>& a, const HVec<M>& b) {
    return a.c == b.c;
}

template <OreMonoidInstance M>
bool hv_is_zero(const HVec<M>& h) {
    return h.c.empty();
}

template <OreMonoidInstance M>
std::string hv_to_string(const HVec<M>& h) {
    if (h.c.empty())
        return "0";
    std::string out;
    for (const auto& [s, v] : h.c) {
        if (!out.empty())
            out += " + ";
        out += "(" + v.str() + ")d_" + M::to_string(s);
    }
    return out;
}

/// A projective isometric representation given by its action on basis
/// vectors, its adjoint, and the multiplier it is twisted by.
template <class R>
concept IsometricRep = OreMonoidInstance<typename R::monoid> &&
    requires(const R& rep, const typename R::monoid::element& s,
             const HVec<typename R::monoid>& h) {
        { rep.apply(s, h) } -> std::same_as<HVec<typename R::monoid>>;
        { rep.apply_adjoint(s, h) } -> std::same_as<HVec<typename R::monoid>>;
        { rep.lambda(s, s) } -> std::same_as<Phase>;
    };

/// The lambda-twisted regular representation: V_s d_x = e(lam(s,x)) d_{sx},
/// and V_s* d_x = e(-lam(s,y)) d_y when x = s*y, else 0. V_sV_t =
/// e(lam(s,t)) V_{st} holds exactly when lam is a cocycle, which makes the
/// projective-relation test double as an operator-level cocycle check.
template <MultiplierInstance L>
struct RegularRep {
    using monoid = typename L::monoid;
    L lam_;

    explicit RegularRep(L lam) : lam_(std::move(lam)) {}

    Phase lambda(const typename monoid::element& s, const typename monoid::element& t) const {
        return lam_(s, t);
    }

    HVec<monoid> apply(const typename monoid::element& s, const HVec<monoid>& h) const {
        HVec<monoid> r;
        for (const auto& [x, v] : h.c)
            hv_accumulate(r, monoid::mul(s, x), lam_(s, x).scalar() * v);
        return r;
    }

    HVec<monoid> apply_adjoint(const typename monoid::element& s, const HVec<monoid>& h) const {
        HVec<monoid> r;
        for (const auto& [x, v] : h.c)
            if (auto y = monoid::left_divide(s, x))
                hv_accumulate(r, *y, lam_(s, *y).conj().scalar() * v);
        return r;
    }
};

template <MultiplierInstance L>
RegularRep<L> regular_rep(L lam) {
    return RegularRep<L>(std::move(lam));
}

static_assert(IsometricRep<RegularRep<TrivialMultiplier<NatAdd>>>);
static_assert(IsometricRep<RegularRep<Nat2Bicharacter>>);

} // namespace oredil
