#pragma once

#include <optional>
#include <string>
#include <utility>

#include "monoid.hpp"

namespace oredil {

/// A group whose elements we can compute with. Target contract for
/// extending monoid homomorphisms to the group of fractions.
template <class G>
concept GroupInstance = requires(const typename G::element& a, const typename G::element& b) {
    typename G::element;
    { G::identity() } -> std::same_as<typename G::element>;
    { G::mul(a, b) } -> std::same_as<typename G::element>;
    { G::inv(a) } -> std::same_as<typename G::element>;
    { G::eq(a, b) } -> std::same_as<bool>;
};

/// A formal fraction x^{-1} y over an Ore monoid. Two pairs name the same
/// group element when a common left multiple lines them up, so equality,
/// product, and inverse are all computed through ore_pair. The fractions
/// form a group and s |-> e^{-1} s embeds the monoid into it.
template <OreMonoidInstance M>
struct Fraction {
    typename M::element x; // denominator
    typename M::element y; // numerator
};

template <OreMonoidInstance M>
Fraction<M> frac_embed(const typename M::element& s) {
    return {M::identity(), s};
}

template <OreMonoidInstance M>
Fraction<M> frac_identity() {
    return frac_embed<M>(M::identity());
}

template <OreMonoidInstance M>
Fraction<M> frac_inv(const Fraction<M>& g) {
    return {g.y, g.x};
}

/// (x1^{-1} y1)(x2^{-1} y2) = (t x1)^{-1} (z y2) where t y1 == z x2.
template <OreMonoidInstance M>
Fraction<M> frac_mul(const Fraction<M>& g, const Fraction<M>& h) {
    auto [t, z] = M::ore_pair(g.y, h.x);
    return {M::mul(t, g.x), M::mul(z, h.y)};
}

template <OreMonoidInstance M>
bool frac_eq(const Fraction<M>& g, const Fraction<M>& h) {
    auto [u, v] = M::ore_pair(g.x, h.x);
    return M::eq(M::mul(u, g.y), M::mul(v, h.y));
}

template <OreMonoidInstance M>
bool frac_is_identity(const Fraction<M>& g) {
    return M::eq(g.x, g.y);
}

/// When x^{-1} y lies in the embedded copy of S, return the monoid element
/// it equals: the solution s of x s == y.
template <OreMonoidInstance M>
std::optional<typename M::element> frac_as_monoid(const Fraction<M>& g) {
    return M::left_divide(g.x, g.y);
}

/// Rewrite (x, y) as (u x, u y); the class is unchanged for any u.
template <OreMonoidInstance M>
Fraction<M> frac_amplify(const typename M::element& u, const Fraction<M>& g) {
    return {M::mul(u, g.x), M::mul(u, g.y)};
}

/// The right order on S: s <= t iff t in S s, i.e. some u solves u s == t.
template <OreMonoidInstance M>
bool right_order_leq(const typename M::element& s, const typename M::element& t) {
    return M::right_divide(t, s).has_value();
}

template <OreMonoidInstance M>
std::string frac_to_string(const Fraction<M>& g) {
    return M::to_string(g.x) + "\\" + M::to_string(g.y);
}

/// Extend a monoid homomorphism phi: S -> G to the group of fractions by
/// x^{-1} y |-> phi(x)^{-1} phi(y). Well defined because phi respects the
/// common-left-multiple relation that defines fraction equality.
template <OreMonoidInstance M, GroupInstance G, class Phi>
typename G::element extend_hom(Phi&& phi, const Fraction<M>& g) {
    return G::mul(G::inv(phi(g.x)), phi(g.y));
}

/// The group of fractions packaged as a GroupInstance. eq is semantic
/// fraction equality, so this is a group of representatives, not of
/// canonical forms.
template <OreMonoidInstance M>
struct FractionGroup {
    using element = Fraction<M>;

    static element identity() { return frac_identity<M>(); }
    static element mul(const element& a, const element& b) { return frac_mul<M>(a, b); }
    static element inv(const element& a) { return frac_inv<M>(a); }
    static bool eq(const element& a, const element& b) { return frac_eq<M>(a, b); }
};

static_assert(GroupInstance<FractionGroup<NatMul>>);

} // namespace oredil
