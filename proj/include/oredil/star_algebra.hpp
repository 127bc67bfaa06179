#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoid.hpp"
#include "rational.hpp"

namespace oredil {

/// A *-algebra carrying an action of an Ore monoid by injective
/// *-endomorphisms: endo(s, ·) = alpha_s with alpha_s alpha_t = alpha_{st}.
/// endo_preimage solves alpha_s(x) = a exactly, returning nothing when a is
/// outside the range. The unit is the unit of A; alpha_s(1) may be a proper
/// projection (the action need not be unital).
template <class A>
concept StarAlgebraAction = OreMonoidInstance<typename A::monoid> &&
    requires(const typename A::alg& a, const typename A::alg& b,
             const typename A::monoid::element& s, const GaussRat& c) {
        typename A::alg;
        { A::name() } -> std::convertible_to<std::string>;
        { A::unit() } -> std::same_as<typename A::alg>;
        { A::zero() } -> std::same_as<typename A::alg>;
        { A::add(a, b) } -> std::same_as<typename A::alg>;
        { A::mul(a, b) } -> std::same_as<typename A::alg>;
        { A::star(a) } -> std::same_as<typename A::alg>;
        { A::scale(c, a) } -> std::same_as<typename A::alg>;
        { A::eq(a, b) } -> std::same_as<bool>;
        { A::endo(s, a) } -> std::same_as<typename A::alg>;
        { A::endo_preimage(s, a) } -> std::same_as<std::optional<typename A::alg>>;
        { A::to_string(a) } -> std::convertible_to<std::string>;
    };

/// Instances may list the nontrivial factorizations s = t * rest of a
/// level; direct-limit representatives use them to stay at minimal levels.
template <class A>
concept HasDivisions = StarAlgebraAction<A> && requires(const typename A::monoid::element& s) {
    {
        A::proper_divisions(s)
    } -> std::same_as<std::vector<std::pair<typename A::monoid::element, typename A::monoid::element>>>;
};

/// Gaussian-rational polynomials in one self-adjoint variable, acted on by
/// the multiplicative naturals via alpha_n(p)(X) = p(X^n). The action is
/// unital and injective; the preimage exists exactly when every exponent
/// is divisible by n. Shipped as the unital companion to the number-theory
/// instance: laws that need a unit of the limit algebra are tested here.
struct PolyPowers {
    using monoid = NatMul;
    using alg = std::map<std::int64_t, GaussRat>;

    static std::string name() { return "poly-powers"; }
    static alg unit() { return {{0, GaussRat(Rat(1))}}; }
    static alg zero() { return {}; }

    static void accumulate(alg& p, std::int64_t k, const GaussRat& c) {
        if (c.is_zero())
            return;
        auto [it, fresh] = p.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                p.erase(it);
        }
    }

    static alg add(const alg& p, const alg& q) {
        alg r = p;
        for (const auto& [k, c] : q)
            accumulate(r, k, c);
        return r;
    }
    static alg mul(const alg& p, const alg& q) {
        alg r;
        for (const auto& [k, c] : p)
            for (const auto& [l, d] : q)
                accumulate(r, k + l, c * d);
        return r;
    }
    static alg star(const alg& p) {
        alg r;
        for (const auto& [k, c] : p)
            r.emplace(k, c.conj());
        return r;
    }
    static alg scale(const GaussRat& c, const alg& p) {
        alg r;
        if (c.is_zero())
            return r;
        for (const auto& [k, d] : p)
            r.emplace(k, c * d);
        return r;
    }
    static bool eq(const alg& p, const alg& q) { return p == q; }

    static alg endo(NatMul::element n, const alg& p) {
        alg r;
        for (const auto& [k, c] : p)
            r.emplace(k * n, c);
        return r;
    }
    static std::optional<alg> endo_preimage(NatMul::element n, const alg& p) {
        alg r;
        for (const auto& [k, c] : p) {
            if (k % n != 0)
                return std::nullopt;
            r.emplace(k / n, c);
        }
        return r;
    }

    static std::vector<std::pair<NatMul::element, NatMul::element>>
    proper_divisions(NatMul::element s) {
        return natmul_proper_divisions(s);
    }

    static std::string to_string(const alg& p) {
        if (p.empty())
            return "0";
        std::string out;
        for (const auto& [k, c] : p) {
            if (!out.empty())
                out += " + ";
            out += "(" + c.str() + ")X^" + std::to_string(k);
        }
        return out;
    }
};

static_assert(StarAlgebraAction<PolyPowers> && HasDivisions<PolyPowers>);

} // namespace oredil
