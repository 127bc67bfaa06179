#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "../adele.hpp"
#include "../crossed_product.hpp"
#include "../direct_limit.hpp"
#include "../report.hpp"
#include "../sampling.hpp"
#include "../zhat.hpp"

namespace oredil {

/// End-to-end verification of the number-theory instantiation: the adele
/// picture is the minimal automorphic dilation of (C(Zhat), Nx, alpha) and
/// the covariance algebra sits inside its crossed product as a full
/// corner. Four clause groups:
///   (a) beta_n i = i alpha_n on the nose for every n <= nmax;
///   (b) every compactly supported function is beta_{1/n} of an embedded
///       one, via an explicit constructive witness, and theta is a
///       two-sided inverse pair with its explicit inverse;
///   (c) the generic direct limit and the adele model agree under the
///       uniqueness map, over sampled data;
///   (d) the corner identities of the crossed product and the adele-side
///       corner 1_Zhat F 1_Zhat land inside i(C(Zhat)) constructively.
inline VerificationReport verify_bc_dilation(std::uint64_t seed, std::int64_t nmax,
                                             std::int64_t Nmax, std::int64_t samples,
                                             const std::string& instance = "") {
    ReportBuilder rb("bc", instance);
    Rng rng(seed);

    // (a) covariance of the embedding, swept over all n
    for (std::int64_t n = 1; n <= nmax; ++n) {
        for (std::int64_t j = 0; j < 4; ++j) {
            ZhatFn f = sample_zhat(rng, Nmax);
            rb.require_w("a/beta-i-covariance/n=" + std::to_string(n) + "/" + std::to_string(j),
                         af_beta(n, 1, i_embed_adele(f)) == i_embed_adele(zh_alpha(n, f)),
                         [&] { return "f=" + zh_to_string(f); });
        }
    }

    for (std::int64_t k = 0; k < samples; ++k) {
        const std::string id = "/" + std::to_string(k);
        AdeleFn F = sample_adele(rng, nmax, Nmax);
        LimElement<BcSystem> b = sample_lim_bc(rng, nmax, Nmax);
        Fraction<NatMul> g{sample_natmul_bounded(rng, nmax), sample_natmul_bounded(rng, nmax)};

        // (b) constructive minimality and the two-sided inverse of theta
        ZhatFn f_wit = zh_make(F.n * F.N, F.v);
        rb.require_w("b/minimal-witness" + id,
                     af_beta(1, F.n, i_embed_adele(f_wit)) == F,
                     [&] { return "F=" + af_to_string(F); });
        rb.require_w("b/theta-left-inverse" + id, lim_eq(theta_inv(theta_iso(b)), b),
                     [&] { return "b=" + lim_to_string(b); });
        rb.require_w("b/theta-right-inverse" + id, theta_iso(theta_inv(F)) == F,
                     [&] { return "F=" + af_to_string(F); });
        rb.require_w("b/theta-equivariant" + id,
                     theta_iso(beta_apply<BcSystem>(g, b)) == af_beta_frac(g, theta_iso(b)),
                     [&] { return "b=" + lim_to_string(b) + " g=" + frac_to_string(g); });
    }

    // (c) uniqueness: the adele model passes the isomorphism check
    {
        std::vector<LimElement<BcSystem>> bs;
        std::vector<NatMul::element> amps;
        std::vector<Fraction<NatMul>> gs;
        std::vector<ZhatFn> as;
        for (std::int64_t k = 0; k < std::max<std::int64_t>(samples / 8, 8); ++k)
            bs.push_back(sample_lim_bc(rng, nmax, Nmax));
        for (int k = 0; k < 6; ++k) {
            amps.push_back(sample_natmul_bounded(rng, nmax));
            gs.push_back({sample_natmul_bounded(rng, nmax), sample_natmul_bounded(rng, nmax)});
            as.push_back(sample_zhat(rng, Nmax));
        }
        auto wits = dilation_iso_check<BcSystem>(AdeleModel{}, bs, amps, gs, as);
        std::string joined;
        for (const auto& w : wits)
            joined += w + "; ";
        rb.require("c/adele-model-iso", wits.empty(), joined);
    }

    // (d) corner identities, crossed-product side and adele side
    {
        auto ctx = make_cp_context<BcSystem>(TrivialMultiplier<NatMul>{});
        auto p = corner_p(ctx);
        rb.require("d/p-projection",
                   cp_eq(ctx, cp_mul(ctx, p, p), p) && cp_eq(ctx, cp_star(ctx, p), p),
                   "p is not a projection");
        for (std::int64_t n = 1; n <= nmax; ++n) {
            const std::string id = "/n=" + std::to_string(n);
            auto vn = v_iso(ctx, n);
            rb.require("d/v-isometry" + id, cp_eq(ctx, cp_mul(ctx, cp_star(ctx, vn), vn), p),
                       "v_n* v_n != p");
            std::int64_t m = rng.uniform(1, nmax);
            rb.require_w("d/v-multiplicative" + id,
                         cp_eq(ctx, cp_mul(ctx, v_iso(ctx, m), vn), v_iso(ctx, m * n)),
                         [&] { return "m=" + std::to_string(m); });
            ZhatFn a = sample_zhat(rng, Nmax);
            rb.require_w("d/covariance" + id,
                         cp_eq(ctx,
                               cp_mul(ctx, vn, cp_mul(ctx, cp_embed_alg(ctx, a),
                                                      cp_star(ctx, vn))),
                               cp_embed_alg(ctx, zh_alpha(n, a))),
                         [&] { return "a=" + zh_to_string(a); });
        }

        AdeleFn one = i_embed_adele(zh_const(GaussRat(Rat(1))));
        for (std::int64_t k = 0; k < samples / 4 + 1; ++k) {
            const std::string id = "/" + std::to_string(k);
            ZhatFn f = sample_zhat(rng, Nmax);
            rb.require_w("d/embed-absorbs-unit" + id,
                         af_mul(i_embed_adele(f), one) == i_embed_adele(f) &&
                             af_mul(one, i_embed_adele(f)) == i_embed_adele(f),
                         [&] { return "f=" + zh_to_string(f); });
            AdeleFn F = sample_adele(rng, nmax, Nmax);
            rb.require_w("d/adele-corner" + id,
                         af_mul(one, af_mul(F, one)) == i_embed_adele(af_restrict_zhat(F)),
                         [&] { return "F=" + af_to_string(F); });
        }
    }

    return rb.finish();
}

} // namespace oredil
