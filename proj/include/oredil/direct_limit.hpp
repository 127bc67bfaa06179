#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fraction.hpp"
#include "star_algebra.hpp"

namespace oredil {

/// An element of the direct-limit algebra B of (A, S, alpha): the pair
/// (s, a) denotes beta_s^{-1}(i(a)). The defining identification is
///   (s, a) = (t*s, alpha_t(a)) for every t,
/// and every operation lifts its operands to a common level via ore_pair.
/// Injectivity of the alpha_t makes equality at one common level equal to
/// equality at all of them.
template <StarAlgebraAction A>
struct LimElement {
    typename A::monoid::element s;
    typename A::alg a;
};

template <StarAlgebraAction A>
LimElement<A> i_embed(const typename A::alg& a) {
    return {A::monoid::identity(), a};
}

template <StarAlgebraAction A>
LimElement<A> lim_zero() {
    return {A::monoid::identity(), A::zero()};
}

template <StarAlgebraAction A>
LimElement<A> lim_lift(const typename A::monoid::element& t, const LimElement<A>& b) {
    using M = typename A::monoid;
    return {M::mul(t, b.s), A::endo(t, b.a)};
}

/// Undo redundant lifting: while a = alpha_t(c) for a proper division
/// s = t * rest, replace (s, a) by (rest, c). Keeps representatives small;
/// instances without division enumeration keep what they have.
template <StarAlgebraAction A>
LimElement<A> lim_compress(LimElement<A> b) {
    if constexpr (HasDivisions<A>) {
        bool reduced = true;
        while (reduced) {
            reduced = false;
            for (const auto& [t, rest] : A::proper_divisions(b.s)) {
                if (auto c = A::endo_preimage(t, b.a)) {
                    b = {rest, *c};
                    reduced = true;
                    break;
                }
            }
        }
    }
    return b;
}

template <StarAlgebraAction A>
std::pair<LimElement<A>, LimElement<A>> lim_common(const LimElement<A>& b1,
                                                   const LimElement<A>& b2) {
    auto [u, v] = A::monoid::ore_pair(b1.s, b2.s);
    return {lim_lift(u, b1), lim_lift(v, b2)};
}

template <StarAlgebraAction A>
bool lim_eq(const LimElement<A>& b1, const LimElement<A>& b2) {
    auto [c1, c2] = lim_common(b1, b2);
    return A::eq(c1.a, c2.a);
}

template <StarAlgebraAction A>
bool lim_is_zero(const LimElement<A>& b) {
    return A::eq(b.a, A::zero());
}

template <StarAlgebraAction A>
LimElement<A> lim_add(const LimElement<A>& b1, const LimElement<A>& b2) {
    auto [c1, c2] = lim_common(b1, b2);
    return lim_compress<A>({c1.s, A::add(c1.a, c2.a)});
}

template <StarAlgebraAction A>
LimElement<A> lim_mul(const LimElement<A>& b1, const LimElement<A>& b2) {
    auto [c1, c2] = lim_common(b1, b2);
    return lim_compress<A>({c1.s, A::mul(c1.a, c2.a)});
}

template <StarAlgebraAction A>
LimElement<A> lim_star(const LimElement<A>& b) {
    return {b.s, A::star(b.a)};
}

template <StarAlgebraAction A>
LimElement<A> lim_scale(const GaussRat& c, const LimElement<A>& b) {
    return lim_compress<A>({b.s, A::scale(c, b.a)});
}

/// beta of an embedded x: beta_x(beta_s^{-1} i(a)) = beta_{v^{-1}u} i(a)
/// with u*s == v*x, which is class (v, alpha_u(a)).
template <StarAlgebraAction A>
LimElement<A> beta_embed(const typename A::monoid::element& x, const LimElement<A>& b) {
    auto [u, v] = A::monoid::ore_pair(b.s, x);
    return lim_compress<A>({v, A::endo(u, b.a)});
}

/// beta of an embedded x, inverted: beta_x^{-1}(beta_s^{-1} i(a)) =
/// beta_{sx}^{-1} i(a).
template <StarAlgebraAction A>
LimElement<A> beta_inv_embed(const typename A::monoid::element& x, const LimElement<A>& b) {
    return {A::monoid::mul(b.s, x), b.a};
}

/// The G-action: beta_{x^{-1}y} = beta_x^{-1} beta_y. Independent of the
/// representative (x, y) chosen for g; the suites test that.
template <StarAlgebraAction A>
LimElement<A> beta_apply(const Fraction<typename A::monoid>& g, const LimElement<A>& b) {
    return beta_inv_embed<A>(g.x, beta_embed<A>(g.y, b));
}

/// Rewrite b at denominator s: the a with (s, a) = b, when b lies in
/// beta_s^{-1}(i(A)).
template <StarAlgebraAction A>
std::optional<typename A::alg> lim_localize(const LimElement<A>& b,
                                            const typename A::monoid::element& s) {
    auto [u, v] = A::monoid::ore_pair(b.s, s);
    return A::endo_preimage(v, A::endo(u, b.a));
}

template <StarAlgebraAction A>
std::string lim_to_string(const LimElement<A>& b) {
    return "(" + A::monoid::to_string(b.s) + " | " + A::to_string(b.a) + ")";
}

/// A candidate minimal automorphic dilation (B', G, beta', j) of the same
/// (A, S, alpha), with enough structure to evaluate the uniqueness map
///   theta(class(s, a)) = beta'_{s^{-1}}(j(a))
/// and to search for preimages. preimage(x) returns some (s, a) with
/// theta(class(s,a)) = x when x lies at a representable level.
template <class Mo, class A>
concept LimitModel = StarAlgebraAction<A> &&
    requires(const Mo& mo, const typename Mo::elem& x, const typename A::alg& a,
             const Fraction<typename A::monoid>& g) {
        typename Mo::elem;
        { mo.j(a) } -> std::same_as<typename Mo::elem>;
        { mo.beta(g, x) } -> std::same_as<typename Mo::elem>;
        { mo.add(x, x) } -> std::same_as<typename Mo::elem>;
        { mo.mul(x, x) } -> std::same_as<typename Mo::elem>;
        { mo.star(x) } -> std::same_as<typename Mo::elem>;
        { mo.eq(x, x) } -> std::same_as<bool>;
        { mo.preimage(x) } -> std::same_as<std::optional<LimElement<A>>>;
        { mo.to_string(x) } -> std::convertible_to<std::string>;
    };

template <StarAlgebraAction A, LimitModel<A> Mo>
typename Mo::elem theta_map(const Mo& mo, const LimElement<A>& b) {
    Fraction<typename A::monoid> s_inv{b.s, A::monoid::identity()};
    return mo.beta(s_inv, mo.j(b.a));
}

/// The executable uniqueness statement: theta is well defined, a
/// *-homomorphism, equivariant, and bijective on the sampled elements.
/// Returns human-readable witnesses for every violated clause.
template <StarAlgebraAction A, LimitModel<A> Mo>
std::vector<std::string> dilation_iso_check(const Mo& mo, const std::vector<LimElement<A>>& bs,
                                            const std::vector<typename A::monoid::element>& amps,
                                            const std::vector<Fraction<typename A::monoid>>& gs,
                                            const std::vector<typename A::alg>& as) {
    std::vector<std::string> bad;
    auto tag = [&](const LimElement<A>& b) { return lim_to_string(b); };

    for (std::size_t k = 0; k < bs.size(); ++k) {
        const auto& b = bs[k];
        const auto tb = theta_map(mo, b);
        if (!amps.empty()) {
            const auto& u = amps[k % amps.size()];
            if (!mo.eq(theta_map(mo, lim_lift(u, b)), tb))
                bad.push_back("theta not well defined at " + tag(b) + " lifted by " +
                              A::monoid::to_string(u));
        }
        if (!mo.eq(theta_map(mo, lim_star(b)), mo.star(tb)))
            bad.push_back("theta not *-preserving at " + tag(b));
        if (!gs.empty()) {
            const auto& g = gs[k % gs.size()];
            if (!mo.eq(theta_map(mo, beta_apply(g, b)), mo.beta(g, tb)))
                bad.push_back("theta not equivariant at " + tag(b) + ", g = " +
                              frac_to_string<typename A::monoid>(g));
        }
        const auto& b2 = bs[(k + 1) % bs.size()];
        const auto tb2 = theta_map(mo, b2);
        if (!mo.eq(theta_map(mo, lim_add(b, b2)), mo.add(tb, tb2)))
            bad.push_back("theta not additive at " + tag(b) + ", " + tag(b2));
        if (!mo.eq(theta_map(mo, lim_mul(b, b2)), mo.mul(tb, tb2)))
            bad.push_back("theta not multiplicative at " + tag(b) + ", " + tag(b2));
        if (lim_eq(b, b2) != mo.eq(tb, tb2))
            bad.push_back("theta not injective on " + tag(b) + ", " + tag(b2));
        if (auto pre = mo.preimage(tb)) {
            if (!lim_eq(*pre, b))
                bad.push_back("model preimage disagrees at " + tag(b));
        } else {
            bad.push_back("model preimage missing for theta(" + tag(b) + ")");
        }
    }
    for (const auto& a : as)
        if (!mo.eq(theta_map(mo, i_embed<A>(a)), mo.j(a)))
            bad.push_back("theta ∘ i != j at " + A::to_string(a));
    return bad;
}

/// The limit itself, packaged as a model of its own dilation; theta is
/// then the identity and dilation_iso_check must pass trivially.
template <StarAlgebraAction A>
struct GenericSelfModel {
    using elem = LimElement<A>;

    elem j(const typename A::alg& a) const { return i_embed<A>(a); }
    elem beta(const Fraction<typename A::monoid>& g, const elem& x) const {
        return beta_apply(g, x);
    }
    elem add(const elem& x, const elem& y) const { return lim_add(x, y); }
    elem mul(const elem& x, const elem& y) const { return lim_mul(x, y); }
    elem star(const elem& x) const { return lim_star(x); }
    bool eq(const elem& x, const elem& y) const { return lim_eq(x, y); }
    std::optional<LimElement<A>> preimage(const elem& x) const { return x; }
    std::string to_string(const elem& x) const { return lim_to_string(x); }
};

static_assert(LimitModel<GenericSelfModel<PolyPowers>, PolyPowers>);

} // namespace oredil
