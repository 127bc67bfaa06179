#pragma once

#include <string>

#include "../fraction.hpp"
#include "../monoid.hpp"
#include "../report.hpp"
#include "../sampling.hpp"
#include "group_targets.hpp"

namespace oredil {

/// Ore monoid laws on sampled elements: identity, associativity, two-sided
/// cancellation, division round trips, Ore pairs, and the right order.
template <OreMonoidInstance M>
void ore_cases(ReportBuilder& rb, Rng& rng, std::int64_t samples) {
    const std::string pre = std::string(M::name()) + "/";
    for (std::int64_t k = 0; k < samples; ++k) {
        const std::string id = "/" + std::to_string(k);
        auto r = sample_element<M>(rng);
        auto s = sample_element<M>(rng);
        auto t = sample_element<M>(rng);
        auto wit = [&] {
            return "r=" + M::to_string(r) + " s=" + M::to_string(s) + " t=" + M::to_string(t);
        };

        auto e = M::identity();
        rb.require_w(pre + "identity" + id,
                     M::eq(M::mul(e, s), s) && M::eq(M::mul(s, e), s), wit);
        rb.require_w(pre + "assoc" + id,
                     M::eq(M::mul(M::mul(r, s), t), M::mul(r, M::mul(s, t))), wit);

        bool cancel = (!M::eq(M::mul(r, s), M::mul(r, t)) || M::eq(s, t)) &&
                      (!M::eq(M::mul(s, r), M::mul(t, r)) || M::eq(s, t));
        rb.require_w(pre + "cancel" + id, cancel, wit);

        auto [u, v] = M::ore_pair(s, t);
        rb.require_w(pre + "ore-pair" + id, M::eq(M::mul(u, s), M::mul(v, t)), [&] {
            return wit() + " u=" + M::to_string(u) + " v=" + M::to_string(v);
        });

        auto st = M::mul(s, t);
        auto ld = M::left_divide(s, st);
        auto rd = M::right_divide(st, t);
        rb.require_w(pre + "divide" + id,
                     ld && M::eq(*ld, t) && rd && M::eq(*rd, s), wit);

        // Wherever a division exists it must actually divide.
        auto ld2 = M::left_divide(s, r);
        auto rd2 = M::right_divide(r, s);
        rb.require_w(pre + "divide-sound" + id,
                     (!ld2 || M::eq(M::mul(s, *ld2), r)) &&
                         (!rd2 || M::eq(M::mul(*rd2, s), r)),
                     wit);

        rb.require_w(pre + "right-order" + id,
                     right_order_leq<M>(s, M::mul(r, s)) &&
                         right_order_leq<M>(s, t) == M::right_divide(t, s).has_value(),
                     wit);
    }
}

inline VerificationReport check_ore(std::uint64_t seed, std::int64_t samples,
                                    const std::string& instance = "") {
    ReportBuilder rb("ore", instance);
    Rng rng(seed);
    ore_cases<NatMul>(rb, rng, samples);
    ore_cases<NatAdd>(rb, rng, samples);
    ore_cases<Nat2Add>(rb, rng, samples);
    ore_cases<IntMat2Pos>(rb, rng, samples);
    return rb.finish();
}

/// Group-of-fractions laws plus agreement of the universal extension of a
/// monoid homomorphism with the original on embedded elements.
template <OreMonoidInstance M, GroupInstance G, class Phi>
void fraction_cases(ReportBuilder& rb, Rng& rng, std::int64_t samples, Phi phi) {
    const std::string pre = std::string(M::name()) + "/";
    for (std::int64_t k = 0; k < samples; ++k) {
        const std::string id = "/" + std::to_string(k);
        auto s = sample_element<M>(rng);
        auto t = sample_element<M>(rng);
        auto u = sample_element<M>(rng);
        auto g = sample_fraction<M>(rng);
        auto h = sample_fraction<M>(rng);
        auto f = sample_fraction<M>(rng);
        auto wit = [&] {
            return "g=" + frac_to_string(g) + " h=" + frac_to_string(h) +
                   " f=" + frac_to_string(f) + " u=" + M::to_string(u);
        };

        rb.require_w(pre + "embed-hom" + id,
                     frac_eq(frac_mul(frac_embed<M>(s), frac_embed<M>(t)),
                             frac_embed<M>(M::mul(s, t))),
                     [&] { return "s=" + M::to_string(s) + " t=" + M::to_string(t); });

        rb.require_w(pre + "assoc" + id,
                     frac_eq(frac_mul(frac_mul(g, h), f), frac_mul(g, frac_mul(h, f))), wit);

        auto e = frac_identity<M>();
        rb.require_w(pre + "identity" + id,
                     frac_eq(frac_mul(g, e), g) && frac_eq(frac_mul(e, g), g), wit);
        rb.require_w(pre + "inverse" + id,
                     frac_is_identity(frac_mul(g, frac_inv(g))) &&
                         frac_is_identity(frac_mul(frac_inv(g), g)),
                     wit);

        auto ga = frac_amplify<M>(u, g);
        rb.require_w(pre + "amplify" + id, frac_eq(g, ga), wit);
        rb.require_w(pre + "mul-well-defined" + id,
                     frac_eq(frac_mul(ga, frac_amplify<M>(u, h)), frac_mul(g, h)), wit);

        rb.require_w(pre + "extend-hom-embed" + id,
                     G::eq(extend_hom<M, G>(phi, frac_embed<M>(s)), phi(s)),
                     [&] { return "s=" + M::to_string(s); });
        rb.require_w(pre + "extend-hom-mul" + id,
                     G::eq(extend_hom<M, G>(phi, frac_mul(g, h)),
                           G::mul(extend_hom<M, G>(phi, g), extend_hom<M, G>(phi, h))),
                     wit);
        rb.require_w(pre + "extend-hom-well-defined" + id,
                     G::eq(extend_hom<M, G>(phi, ga), extend_hom<M, G>(phi, g)), wit);
    }
}

inline VerificationReport check_fractions(std::uint64_t seed, std::int64_t samples,
                                          const std::string& instance = "") {
    ReportBuilder rb("fractions", instance);
    Rng rng(seed);
    fraction_cases<NatMul, RatMulGroup>(rb, rng, samples, hom_natmul);
    fraction_cases<NatAdd, IntAddGroup>(rb, rng, samples, hom_natadd);
    fraction_cases<Nat2Add, Int2AddGroup>(rb, rng, samples, hom_nat2);
    fraction_cases<IntMat2Pos, RatMat2Group>(rb, rng, samples, hom_mat2);
    return rb.finish();
}

} // namespace oredil
