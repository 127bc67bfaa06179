#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "../direct_limit.hpp"
#include "../report.hpp"
#include "../sampling.hpp"
#include "../zhat.hpp"

namespace oredil {

/// Structural laws of the direct-limit algebra and its G-action, checked
/// on sampled elements of a concrete action instance.
template <StarAlgebraAction A, class SampleElem, class SampleAlg, class SampleMon>
void limit_cases(ReportBuilder& rb, Rng& rng, std::int64_t samples, const std::string& pre,
                 SampleElem sample_b, SampleAlg sample_a, SampleMon sample_s) {
    using M = typename A::monoid;
    for (std::int64_t k = 0; k < samples; ++k) {
        const std::string id = "/" + std::to_string(k);
        LimElement<A> b = sample_b(rng);
        LimElement<A> b2 = sample_b(rng);
        typename A::alg a = sample_a(rng);
        typename A::alg a2 = sample_a(rng);
        typename M::element s = sample_s(rng);
        typename M::element t = sample_s(rng);
        Fraction<M> g{sample_s(rng), sample_s(rng)};
        Fraction<M> h{sample_s(rng), sample_s(rng)};
        auto wit = [&] {
            return "b=" + lim_to_string(b) + " b2=" + lim_to_string(b2) +
                   " s=" + M::to_string(s) + " g=" + frac_to_string(g) +
                   " h=" + frac_to_string(h);
        };

        // the embedding intertwines the endomorphisms with the G-action
        rb.require_w(pre + "covariance" + id,
                     lim_eq(beta_apply<A>(frac_embed<M>(s), i_embed<A>(a)),
                            i_embed<A>(A::endo(s, a))),
                     [&] { return "s=" + M::to_string(s) + " a=" + A::to_string(a); });

        rb.require_w(pre + "lift-eq" + id,
                     lim_eq(b, LimElement<A>{M::mul(t, b.s), A::endo(t, b.a)}), wit);

        rb.require_w(pre + "injective" + id,
                     A::eq(A::endo(t, a), A::endo(t, a2)) == A::eq(a, a2), [&] {
                         return "t=" + M::to_string(t) + " a=" + A::to_string(a) +
                                " a2=" + A::to_string(a2);
                     });

        rb.require_w(pre + "beta-group" + id,
                     lim_eq(beta_apply<A>(g, beta_apply<A>(h, b)),
                            beta_apply<A>(frac_mul(g, h), b)),
                     wit);
        rb.require_w(pre + "beta-embed-inverse" + id,
                     lim_eq(beta_embed<A>(s, beta_inv_embed<A>(s, b)), b) &&
                         lim_eq(beta_inv_embed<A>(s, beta_embed<A>(s, b)), b),
                     wit);
        rb.require_w(pre + "beta-star-hom" + id,
                     lim_eq(beta_apply<A>(g, lim_add(b, b2)),
                            lim_add(beta_apply<A>(g, b), beta_apply<A>(g, b2))) &&
                         lim_eq(beta_apply<A>(g, lim_mul(b, b2)),
                                lim_mul(beta_apply<A>(g, b), beta_apply<A>(g, b2))) &&
                         lim_eq(beta_apply<A>(g, lim_star(b)), lim_star(beta_apply<A>(g, b))),
                     wit);

        LimElement<A> b3 = i_embed<A>(a2);
        rb.require_w(pre + "algebra-laws" + id,
                     lim_eq(lim_mul(lim_mul(b, b2), b3), lim_mul(b, lim_mul(b2, b3))) &&
                         lim_eq(lim_mul(b, lim_add(b2, b3)),
                                lim_add(lim_mul(b, b2), lim_mul(b, b3))) &&
                         lim_eq(lim_star(lim_mul(b, b2)), lim_mul(lim_star(b2), lim_star(b))) &&
                         lim_eq(lim_star(lim_star(b)), b),
                     wit);

        // i is an embedding: i(a) = i(a2) only when a = a2
        rb.require_w(pre + "i-injective" + id,
                     lim_eq(i_embed<A>(a), i_embed<A>(a2)) == A::eq(a, a2), wit);

        // a lift localizes back to its original level, through a genuine
        // preimage computation
        LimElement<A> lifted{M::mul(t, b.s), A::endo(t, b.a)};
        auto loc = lim_localize<A>(lifted, b.s);
        rb.require_w(pre + "localize-exists" + id,
                     loc.has_value() && A::eq(*loc, b.a) &&
                         lim_eq(lifted, LimElement<A>{b.s, *loc}),
                     wit);
        auto loc2 = lim_localize<A>(b, t);
        rb.require_w(pre + "localize-sound" + id,
                     !loc2 || lim_eq(b, LimElement<A>{t, *loc2}), wit);
    }
}

inline VerificationReport check_limit(std::uint64_t seed, std::int64_t samples,
                                      std::int64_t nmax, std::int64_t Nmax,
                                      const std::string& instance = "") {
    ReportBuilder rb("limit", instance);
    Rng rng(seed);

    auto bc_b = [&](Rng& r) { return sample_lim_bc(r, nmax, Nmax); };
    auto bc_a = [&](Rng& r) { return sample_zhat(r, Nmax); };
    auto bc_s = [&](Rng& r) { return sample_natmul_bounded(r, nmax); };
    limit_cases<BcSystem>(rb, rng, samples, "bc/", bc_b, bc_a, bc_s);

    // a function not supported on 2Zhat has no level-2 localization
    {
        ZhatFn odd = zh_make(2, {GaussRat(), GaussRat(Rat(1))});
        LimElement<BcSystem> b{2, odd};
        rb.require("bc/localize-absent", !lim_localize<BcSystem>(b, 1).has_value(),
                   "1_{1+2Zhat} wrongly divisible by alpha_2");
    }

    // generic model with theta = identity must pass the uniqueness check
    {
        std::vector<LimElement<BcSystem>> bs;
        std::vector<NatMul::element> amps;
        std::vector<Fraction<NatMul>> gs;
        std::vector<ZhatFn> as;
        for (int k = 0; k < 24; ++k)
            bs.push_back(bc_b(rng));
        for (int k = 0; k < 6; ++k) {
            amps.push_back(bc_s(rng));
            gs.push_back({bc_s(rng), bc_s(rng)});
            as.push_back(bc_a(rng));
        }
        auto wits = dilation_iso_check<BcSystem>(GenericSelfModel<BcSystem>{}, bs, amps, gs, as);
        std::string joined;
        for (const auto& w : wits)
            joined += w + "; ";
        rb.require("bc/self-model", wits.empty(), joined);
    }

    auto pp_b = [](Rng& r) {
        return lim_compress<PolyPowers>({sample_natmul_bounded(r, 12), sample_poly(r)});
    };
    auto pp_a = [](Rng& r) { return sample_poly(r); };
    auto pp_s = [](Rng& r) { return sample_natmul_bounded(r, 12); };
    limit_cases<PolyPowers>(rb, rng, samples / 4 + 1, "poly/", pp_b, pp_a, pp_s);

    // the unital instance has i(1) as a genuine multiplicative unit
    for (int k = 0; k < 25; ++k) {
        auto b = pp_b(rng);
        rb.require_w("poly/unit-law/" + std::to_string(k),
                     lim_eq(lim_mul(i_embed<PolyPowers>(PolyPowers::unit()), b), b) &&
                         lim_eq(lim_mul(b, i_embed<PolyPowers>(PolyPowers::unit())), b),
                     [&] { return "b=" + lim_to_string(b); });
    }

    return rb.finish();
}

} // namespace oredil
