#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "../adele.hpp"
#include "../crossed_product.hpp"
#include "../direct_limit.hpp"
#include "../report.hpp"
#include "../sampling.hpp"
#include "check_cocycle.hpp"
#include "check_crossprod.hpp"
#include "check_dilation.hpp"
#include "check_limit.hpp"
#include "check_ore.hpp"

namespace oredil {

/// Deliberately wrong instances. Every suite must catch its perturbation
/// and surface a witness; a silent pass here means the checks have no
/// teeth.

/// Ore pair that does not produce a common left multiple.
struct NatMulBadOre {
    using element = NatMul::element;
    static std::string name() { return "nat-mul-bad-ore"; }
    static element identity() { return NatMul::identity(); }
    static element mul(element a, element b) { return NatMul::mul(a, b); }
    static bool eq(element a, element b) { return NatMul::eq(a, b); }
    static bool less(element a, element b) { return NatMul::less(a, b); }
    static std::optional<element> left_divide(element a, element b) {
        return NatMul::left_divide(a, b);
    }
    static std::optional<element> right_divide(element a, element b) {
        return NatMul::right_divide(a, b);
    }
    static std::pair<element, element> ore_pair(element, element) { return {1, 1}; }
    static std::string to_string(element a) { return NatMul::to_string(a); }
};

static_assert(OreMonoidInstance<NatMulBadOre>);

template <>
inline NatMulBadOre::element sample_element<NatMulBadOre>(Rng& rng) {
    return sample_element<NatMul>(rng);
}

/// A multiplier shifted off normalization: lam'(s,t) = lam(s,t) + 1/4.
template <MultiplierInstance L>
struct ShiftedMultiplier {
    using monoid = typename L::monoid;
    static std::string name() { return L::name() + "-shifted"; }
    Phase operator()(const typename monoid::element& s, const typename monoid::element& t) const {
        return base(s, t) + Phase(1, 4);
    }
    L base{};
};

/// A non-injective endomorphism family: exponents scaled past 3 are
/// silently dropped.
struct CollapsePoly {
    using monoid = NatMul;
    using alg = PolyPowers::alg;
    static std::string name() { return "poly-collapse"; }
    static alg unit() { return PolyPowers::unit(); }
    static alg zero() { return PolyPowers::zero(); }
    static alg add(const alg& p, const alg& q) { return PolyPowers::add(p, q); }
    static alg mul(const alg& p, const alg& q) { return PolyPowers::mul(p, q); }
    static alg star(const alg& p) { return PolyPowers::star(p); }
    static alg scale(const GaussRat& c, const alg& p) { return PolyPowers::scale(c, p); }
    static bool eq(const alg& p, const alg& q) { return PolyPowers::eq(p, q); }
    static alg endo(NatMul::element n, const alg& p) {
        alg out;
        for (const auto& [k, c] : PolyPowers::endo(n, p))
            if (k <= 3)
                out[k] = c;
        return out;
    }
    static std::optional<alg> endo_preimage(NatMul::element n, const alg& p) {
        return PolyPowers::endo_preimage(n, p);
    }
    static std::string to_string(const alg& p) { return PolyPowers::to_string(p); }
};

static_assert(StarAlgebraAction<CollapsePoly>);

/// The adele model acting through the inverted rational: beta_g is wired
/// to g^{-1}.
struct WrongBetaAdeleModel {
    using elem = AdeleFn;
    elem j(const ZhatFn& a) const { return i_embed_adele(a); }
    elem beta(const Fraction<NatMul>& g, const elem& x) const { return af_beta(g.x, g.y, x); }
    elem add(const elem& x, const elem& y) const { return af_add(x, y); }
    elem mul(const elem& x, const elem& y) const { return af_mul(x, y); }
    elem star(const elem& x) const { return af_star(x); }
    bool eq(const elem& x, const elem& y) const { return x == y; }
    std::optional<LimElement<BcSystem>> preimage(const elem& x) const { return theta_inv(x); }
    std::string to_string(const elem& x) const { return af_to_string(x); }
};

inline VerificationReport check_negative(std::uint64_t seed, const std::string& instance = "") {
    ReportBuilder rb("negative", instance);

    auto expect_failures = [&rb](const std::string& label, const VerificationReport& inner) {
        rb.require(label, !inner.pass(),
                   "perturbed instance passed all " + std::to_string(inner.cases) + " cases");
    };

    {
        ReportBuilder b("inner-ore");
        Rng rng(seed);
        ore_cases<NatMulBadOre>(b, rng, 40);
        expect_failures("ore-detects-bad-pair", b.finish());
    }
    {
        ReportBuilder b("inner-cocycle");
        Rng rng(seed);
        cocycle_cases(b, rng, 40, ShiftedMultiplier<Nat2Bicharacter>{});
        expect_failures("cocycle-detects-shift", b.finish());
    }
    {
        ReportBuilder b("inner-dilation");
        Rng rng(seed);
        dilation_cases(b, rng, 30, ShiftedMultiplier<Nat2Bicharacter>{});
        expect_failures("dilation-detects-shift", b.finish());
    }
    {
        ReportBuilder b("inner-limit");
        Rng rng(seed);
        auto smp_b = [](Rng& r) {
            return LimElement<CollapsePoly>{sample_natmul_bounded(r, 12), sample_poly(r)};
        };
        auto smp_a = [](Rng& r) { return sample_poly(r); };
        auto smp_s = [](Rng& r) { return sample_natmul_bounded(r, 12); };
        limit_cases<CollapsePoly>(b, rng, 60, "collapse/", smp_b, smp_a, smp_s);
        expect_failures("limit-detects-collapse", b.finish());
    }
    {
        ReportBuilder b("inner-crossprod");
        Rng rng(seed);
        CrossprodCounts counts;
        counts.relations = 25;
        auto bad = make_cp_context<BcSystem>(ShiftedMultiplier<NatMulValuationBichar>{});
        crossprod_relation_cases(b, rng, counts, bad, "shifted/");
        expect_failures("crossprod-detects-shift", b.finish());
    }
    {
        Rng rng(seed);
        std::vector<LimElement<BcSystem>> bs;
        std::vector<NatMul::element> amps;
        std::vector<Fraction<NatMul>> gs;
        std::vector<ZhatFn> as;
        for (int k = 0; k < 16; ++k)
            bs.push_back(sample_lim_bc(rng, 12, 12));
        for (int k = 0; k < 6; ++k) {
            amps.push_back(sample_natmul_bounded(rng, 12));
            gs.push_back({sample_natmul_bounded(rng, 12), sample_natmul_bounded(rng, 12)});
            as.push_back(sample_zhat(rng, 12));
        }
        auto wits = dilation_iso_check<BcSystem>(WrongBetaAdeleModel{}, bs, amps, gs, as);
        rb.require("bc-detects-wrong-beta", !wits.empty(),
                   "inverted beta passed the model isomorphism check");
    }

    return rb.finish();
}

} // namespace oredil
