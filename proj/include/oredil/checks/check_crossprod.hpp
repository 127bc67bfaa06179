#pragma once

#include <cstdint>
#include <string>

#include "../crossed_product.hpp"
#include "../report.hpp"
#include "../sampling.hpp"
#include "../zhat.hpp"

namespace oredil {

struct CrossprodCounts {
    std::int64_t relations = 100;
    std::int64_t oracle_pairs = 200;
    std::int64_t fullness = 100;
    std::int64_t nmax = 12;
    std::int64_t Nmax = 12;
};

template <class C>
void crossprod_relation_cases(ReportBuilder& rb, Rng& rng, const CrossprodCounts& counts,
                              const C& ctx, const std::string& pre) {
    using M = typename C::monoid;
    auto p = corner_p(ctx);

    rb.require(pre + "p-projection", cp_eq(ctx, cp_mul(ctx, p, p), p), "p^2 != p");
    rb.require(pre + "p-selfadjoint", cp_eq(ctx, cp_star(ctx, p), p), "p* != p");

    for (std::int64_t k = 0; k < counts.relations; ++k) {
        const std::string id = "/" + std::to_string(k);
        auto s = sample_natmul_bounded(rng, counts.nmax);
        auto t = sample_natmul_bounded(rng, counts.nmax);
        Fraction<M> g{sample_natmul_bounded(rng, counts.nmax),
                      sample_natmul_bounded(rng, counts.nmax)};
        Fraction<M> h{sample_natmul_bounded(rng, counts.nmax),
                      sample_natmul_bounded(rng, counts.nmax)};
        auto a = sample_zhat(rng, counts.Nmax);
        auto wit = [&] {
            return "s=" + M::to_string(s) + " t=" + M::to_string(t) +
                   " g=" + frac_to_string(g) + " h=" + frac_to_string(h) +
                   " a=" + BcSystem::to_string(a);
        };

        auto vs = v_iso(ctx, s);
        auto vt = v_iso(ctx, t);
        rb.require_w(pre + "v-isometry" + id,
                     cp_eq(ctx, cp_mul(ctx, cp_star(ctx, vs), vs), p), wit);
        rb.require_w(pre + "v-product" + id,
                     cp_eq(ctx, cp_mul(ctx, vs, vt),
                           cp_scale(ctx, ctx.mu.base()(s, t).scalar(),
                                    v_iso(ctx, M::mul(s, t)))),
                     wit);

        auto ia = cp_embed_alg(ctx, a);
        rb.require_w(pre + "covariance" + id,
                     cp_eq(ctx, cp_mul(ctx, vt, cp_mul(ctx, ia, cp_star(ctx, vt))),
                           cp_embed_alg(ctx, BcSystem::endo(t, a))),
                     wit);

        auto Ug = cp_unitary(ctx, g);
        auto Ue = cp_unitary(ctx, frac_identity<M>());
        rb.require_w(pre + "u-unitary" + id,
                     cp_eq(ctx, cp_mul(ctx, Ug, cp_star(ctx, Ug)), Ue) &&
                         cp_eq(ctx, cp_mul(ctx, cp_star(ctx, Ug), Ug), Ue),
                     wit);

        // sums of generic terms: associativity and the star anti-law
        auto X = cp_add(ctx, cp_mul(ctx, ia, Ug), vs);
        auto Y = cp_add(ctx, cp_unitary(ctx, h),
                        cp_embed(ctx, sample_lim_bc(rng, counts.nmax, counts.Nmax)));
        auto Z = cp_star(ctx, vt);
        rb.require_w(pre + "assoc" + id,
                     cp_eq(ctx, cp_mul(ctx, cp_mul(ctx, X, Y), Z),
                           cp_mul(ctx, X, cp_mul(ctx, Y, Z))),
                     wit);
        rb.require_w(pre + "star" + id,
                     cp_eq(ctx, cp_star(ctx, cp_mul(ctx, X, Y)),
                           cp_mul(ctx, cp_star(ctx, Y), cp_star(ctx, X))) &&
                         cp_eq(ctx, cp_star(ctx, cp_star(ctx, X)), X),
                     wit);

        // monomial images already live in the corner
        SgMonomial<typename C::action> m{s, a, t, Phase(rng.uniform(0, 3), 4)};
        auto sm = sg_monomial(ctx, m);
        rb.require_w(pre + "corner" + id, cp_eq(ctx, corner_project(ctx, sm), sm),
                     [&] { return sg_to_string(m); });
    }
}

template <class C>
void monomial_oracle_cases(ReportBuilder& rb, Rng& rng, const CrossprodCounts& counts,
                           const C& ctx, const std::string& pre) {
    using A = typename C::action;
    for (std::int64_t k = 0; k < counts.oracle_pairs; ++k) {
        SgMonomial<A> m1{sample_natmul_bounded(rng, counts.nmax), sample_zhat(rng, counts.Nmax),
                         sample_natmul_bounded(rng, counts.nmax), Phase(rng.uniform(0, 3), 4)};
        SgMonomial<A> m2{sample_natmul_bounded(rng, counts.nmax), sample_zhat(rng, counts.Nmax),
                         sample_natmul_bounded(rng, counts.nmax), Phase(rng.uniform(0, 3), 4)};
        auto direct = sg_monomial(ctx, sg_mul_direct(ctx, m1, m2));
        auto composed = cp_mul(ctx, sg_monomial(ctx, m1), sg_monomial(ctx, m2));
        rb.require_w(pre + "monomial-oracle/" + std::to_string(k),
                     cp_eq(ctx, direct, composed), [&] {
                         return "m1=" + sg_to_string(m1) + " m2=" + sg_to_string(m2) +
                                " direct=" + cp_to_string(ctx, direct) +
                                " composed=" + cp_to_string(ctx, composed);
                     });
    }

    // lift invariance: amplifying both letters by t multiplies the
    // monomial by e(lam(t,x) - lam(t,y))
    using M = typename C::monoid;
    for (std::int64_t k = 0; k < counts.oracle_pairs / 4 + 1; ++k) {
        SgMonomial<A> m{sample_natmul_bounded(rng, counts.nmax), sample_zhat(rng, counts.Nmax),
                        sample_natmul_bounded(rng, counts.nmax), Phase()};
        auto t = sample_natmul_bounded(rng, counts.nmax);
        const auto& lam = ctx.mu.base();
        // v_t v_s = e(lam(t,s)) v_{ts} gives v_x* i(a) v_y
        //   = e(lam(t,y) - lam(t,x)) v_{tx}* i(endo_t a) v_{ty}.
        SgMonomial<A> amp{M::mul(t, m.x), A::endo(t, m.a), M::mul(t, m.y),
                          lam(t, m.y) - lam(t, m.x)};
        rb.require_w(pre + "monomial-lift/" + std::to_string(k),
                     cp_eq(ctx, sg_monomial(ctx, amp), sg_monomial(ctx, m)),
                     [&] { return "m=" + sg_to_string(m) + " t=" + M::to_string(t); });
    }
}

/// The middle phase of the closed-form product pairs the Ore letters with
/// the inner letters in the order (t,y), (z,r); the asymmetric valuation
/// bicharacter separates this from the flipped pairing, which must fail.
template <class C>
void convention_cases(ReportBuilder& rb, const C& ctx) {
    using A = typename C::action;
    using M = typename C::monoid;
    const auto& lam = ctx.mu.base();
    SgMonomial<A> m1{1, BcSystem::unit(), 2, Phase()};
    SgMonomial<A> m2{3, BcSystem::unit(), 1, Phase()};
    auto [t, z] = M::ore_pair(m1.y, m2.x);

    rb.require("convention/asymmetric",
               lam(t, m1.y) != lam(m1.y, t) || lam(z, m2.x) != lam(m2.x, z),
               "valuation bicharacter failed to separate the two pairings");

    auto oracle = cp_mul(ctx, sg_monomial(ctx, m1), sg_monomial(ctx, m2));
    auto direct = sg_mul_direct(ctx, m1, m2);
    rb.require("convention/direct-matches",
               cp_eq(ctx, sg_monomial(ctx, direct), oracle),
               "closed form disagrees with the evaluated product");

    SgMonomial<A> flipped = direct;
    flipped.phase = m1.phase + m2.phase + lam(m1.y, t) - lam(m2.x, z) - lam(t, m1.x) +
                    lam(z, m2.y);
    rb.require("convention/flipped-fails",
               !cp_eq(ctx, sg_monomial(ctx, flipped), oracle),
               "flipped pairing unexpectedly matches; the instance cannot "
               "distinguish the conventions");
}

template <class C>
void fullness_cases(ReportBuilder& rb, Rng& rng, const CrossprodCounts& counts, const C& ctx,
                    const std::string& pre) {
    using M = typename C::monoid;
    auto p = corner_p(ctx);
    for (std::int64_t k = 0; k < counts.fullness; ++k) {
        auto b = sample_lim_bc(rng, counts.nmax, counts.Nmax);
        Fraction<M> g{sample_natmul_bounded(rng, counts.nmax),
                      sample_natmul_bounded(rng, counts.nmax)};
        auto wit = [&] { return "b=" + lim_to_string(b) + " g=" + frac_to_string(g); };

        auto W = fullness_witness(ctx, b, g);
        auto target = cp_mul(ctx, cp_embed(ctx, b), cp_unitary(ctx, g));
        rb.require_w(pre + "fullness" + "/" + std::to_string(k),
                     cp_eq(ctx, cp_mul(ctx, W.X, cp_mul(ctx, p, W.Y)), target), wit);

        bool units_clear = true;
        for (const auto& [key, coef] : W.X.terms)
            units_clear = units_clear && coef.u.is_zero();
        for (const auto& [key, coef] : W.Y.terms)
            units_clear = units_clear && coef.u.is_zero();
        rb.require_w(pre + "fullness-units/" + std::to_string(k), units_clear, wit);
    }
}

inline VerificationReport check_crossprod(std::uint64_t seed, const CrossprodCounts& counts,
                                          const std::string& instance = "") {
    ReportBuilder rb("crossprod", instance);
    Rng rng(seed);

    auto plain = make_cp_context<BcSystem>(TrivialMultiplier<NatMul>{});
    crossprod_relation_cases(rb, rng, counts, plain, "bc-plain/");
    monomial_oracle_cases(rb, rng, counts, plain, "bc-plain/");
    fullness_cases(rb, rng, counts, plain, "bc-plain/");

    auto twisted = make_cp_context<BcSystem>(NatMulValuationBichar{});
    crossprod_relation_cases(rb, rng, counts, twisted, "bc-twisted/");
    monomial_oracle_cases(rb, rng, counts, twisted, "bc-twisted/");
    fullness_cases(rb, rng, counts, twisted, "bc-twisted/");
    convention_cases(rb, twisted);

    return rb.finish();
}

} // namespace oredil
