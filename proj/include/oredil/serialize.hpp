#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "adele.hpp"
#include "crossed_product.hpp"
#include "dilation.hpp"
#include "direct_limit.hpp"
#include "fraction.hpp"
#include "monoid.hpp"
#include "multiplier.hpp"
#include "phase.hpp"
#include "rational.hpp"
#include "star_algebra.hpp"
#include "zhat.hpp"

/// JSON forms:
///   Rat          "a/b"               GaussRat  ["a/b", "c/d"] (re, im)
///   Phase        "k/m"
///   nat-mul, nat-add elements         decimal integer strings
///   nat2-add elements                 [a, b]
///   int-mat2 elements                 [[a, b], [c, d]] row-major
///   Fraction     {"x": element, "y": element}
///   DilVec       {"level": element, "vec": [[basis, "re", "im"], ...]}
///   LimElement   {"level": element, "elem": payload}
///   ZhatFn       {"N": int, "values": [GaussRat, ...]}
///   AdeleFn      {"n": int, "N": int, "values": [GaussRat, ...]}
///   CPElement    [{"g": Fraction, "coef": LimElement, "unit": GaussRat?}, ...]
///                ("unit" appears only when the formal unit coefficient is
///                 nonzero, so plain sums match the base shape exactly)
namespace oredil::js {

using nlohmann::json;

inline json to_json(const Rat& q) { return q.str(); }

inline Rat rat_from_json(const json& j) {
    if (j.is_number_integer())
        return Rat(j.get<std::int64_t>());
    auto q = Rat::parse(j.get<std::string>());
    if (!q)
        throw std::invalid_argument("bad rational: " + j.dump());
    return *q;
}

inline json to_json(const GaussRat& c) { return json::array({c.re().str(), c.im().str()}); }

inline GaussRat gauss_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("bad Gaussian rational: " + j.dump());
    return {rat_from_json(j[0]), rat_from_json(j[1])};
}

inline json to_json(const Phase& p) { return p.str(); }

inline Phase phase_from_json(const json& j) { return Phase(rat_from_json(j)); }

// Elements are keyed by the monoid type, since several instances share the
// same underlying element representation.
template <OreMonoidInstance M>
json element_to_json(const typename M::element& s);

template <OreMonoidInstance M>
typename M::element element_from_json(const json& j);

template <>
inline json element_to_json<NatMul>(const NatMul::element& s) {
    return std::to_string(s);
}

template <>
inline NatMul::element element_from_json<NatMul>(const json& j) {
    return j.is_number_integer() ? j.get<std::int64_t>() : std::stoll(j.get<std::string>());
}

template <>
inline json element_to_json<NatAdd>(const NatAdd::element& s) {
    return std::to_string(s);
}

template <>
inline NatAdd::element element_from_json<NatAdd>(const json& j) {
    return j.is_number_integer() ? j.get<std::int64_t>() : std::stoll(j.get<std::string>());
}

template <>
inline json element_to_json<Nat2Add>(const Nat2Add::element& s) {
    return json::array({s[0], s[1]});
}

template <>
inline Nat2Add::element element_from_json<Nat2Add>(const json& j) {
    return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()};
}

template <>
inline json element_to_json<IntMat2Pos>(const IntMat2Pos::element& s) {
    return json::array({json::array({s.v[0], s.v[1]}), json::array({s.v[2], s.v[3]})});
}

template <>
inline IntMat2Pos::element element_from_json<IntMat2Pos>(const json& j) {
    return Mat2{{j.at(0).at(0).get<std::int64_t>(), j.at(0).at(1).get<std::int64_t>(),
                 j.at(1).at(0).get<std::int64_t>(), j.at(1).at(1).get<std::int64_t>()}};
}

template <OreMonoidInstance M>
json fraction_to_json(const Fraction<M>& g) {
    return json{{"x", element_to_json<M>(g.x)}, {"y", element_to_json<M>(g.y)}};
}

template <OreMonoidInstance M>
Fraction<M> fraction_from_json(const json& j) {
    return {element_from_json<M>(j.at("x")), element_from_json<M>(j.at("y"))};
}

template <OreMonoidInstance M>
json dil_to_json(const DilVec<M>& xi) {
    json rows = json::array();
    for (const auto& [s, c] : xi.h.c)
        rows.push_back(json::array({element_to_json<M>(s), c.re().str(), c.im().str()}));
    return json{{"level", element_to_json<M>(xi.level)}, {"vec", rows}};
}

template <OreMonoidInstance M>
DilVec<M> dil_from_json(const json& j) {
    DilVec<M> xi{element_from_json<M>(j.at("level")), {}};
    for (const auto& row : j.at("vec"))
        hv_accumulate<M>(xi.h, element_from_json<M>(row.at(0)),
                         GaussRat(rat_from_json(row.at(1)), rat_from_json(row.at(2))));
    return xi;
}

inline json to_json(const ZhatFn& f) {
    json vals = json::array();
    for (const auto& c : f.v)
        vals.push_back(to_json(c));
    return json{{"N", f.N}, {"values", vals}};
}

inline ZhatFn zhat_from_json(const json& j) {
    std::vector<GaussRat> vals;
    for (const auto& c : j.at("values"))
        vals.push_back(gauss_from_json(c));
    return zh_make(j.at("N").get<std::int64_t>(), std::move(vals));
}

inline json to_json(const AdeleFn& f) {
    json vals = json::array();
    for (const auto& c : f.v)
        vals.push_back(to_json(c));
    return json{{"n", f.n}, {"N", f.N}, {"values", vals}};
}

inline AdeleFn adele_from_json(const json& j) {
    std::vector<GaussRat> vals;
    for (const auto& c : j.at("values"))
        vals.push_back(gauss_from_json(c));
    return af_make(j.at("n").get<std::int64_t>(), j.at("N").get<std::int64_t>(), std::move(vals));
}

// Instance-specific coefficient payloads.
template <StarAlgebraAction A>
json alg_to_json(const typename A::alg& a);

template <StarAlgebraAction A>
typename A::alg alg_from_json(const json& j);

template <>
inline json alg_to_json<BcSystem>(const ZhatFn& a) {
    return to_json(a);
}

template <>
inline ZhatFn alg_from_json<BcSystem>(const json& j) {
    return zhat_from_json(j);
}

template <>
inline json alg_to_json<PolyPowers>(const PolyPowers::alg& a) {
    json rows = json::array();
    for (const auto& [k, c] : a)
        rows.push_back(json::array({k, c.re().str(), c.im().str()}));
    return rows;
}

template <>
inline PolyPowers::alg alg_from_json<PolyPowers>(const json& j) {
    PolyPowers::alg a;
    for (const auto& row : j)
        PolyPowers::accumulate(a, row.at(0).get<std::int64_t>(),
                               GaussRat(rat_from_json(row.at(1)), rat_from_json(row.at(2))));
    return a;
}

template <StarAlgebraAction A>
json lim_to_json(const LimElement<A>& b) {
    return json{{"level", element_to_json<typename A::monoid>(b.s)},
                {"elem", alg_to_json<A>(b.a)}};
}

template <StarAlgebraAction A>
LimElement<A> lim_from_json(const json& j) {
    return {element_from_json<typename A::monoid>(j.at("level")),
            alg_from_json<A>(j.at("elem"))};
}

template <class C>
json cp_to_json(const C&, const cp_element_t<C>& x) {
    using M = typename C::monoid;
    using A = typename C::action;
    json terms = json::array();
    for (const auto& [k, coef] : x.terms) {
        json term{{"g", fraction_to_json<M>(Fraction<M>{k.first, k.second})},
                  {"coef", lim_to_json<A>(coef.b)}};
        if (!coef.u.is_zero())
            term["unit"] = to_json(coef.u);
        terms.push_back(std::move(term));
    }
    return terms;
}

template <class C>
cp_element_t<C> cp_from_json(const C& ctx, const json& j) {
    using M = typename C::monoid;
    using A = typename C::action;
    cp_element_t<C> out;
    for (const auto& term : j) {
        UnitizedLim<A> coef = ul_from_lim<A>(lim_from_json<A>(term.at("coef")));
        if (term.contains("unit"))
            coef.u = gauss_from_json(term.at("unit"));
        cp_accumulate(ctx, out, fraction_from_json<M>(term.at("g")), coef);
    }
    return out;
}

// Multiplier descriptors: a name identifying the built-in family plus its
// parameters.
template <OreMonoidInstance M>
json to_json(const TrivialMultiplier<M>&) {
    return json{{"name", "trivial"}, {"monoid", M::name()}};
}

inline json to_json(const Nat2Bicharacter& lam) {
    return json{{"name", "nat2-bicharacter"}, {"theta", lam.theta.str()}};
}

inline json to_json(const NatMulValuationBichar&) {
    return json{{"name", "natmul-valuation-bicharacter"}, {"primes", json::array({2, 3})},
                {"denominator", 4}};
}

} // namespace oredil::js
