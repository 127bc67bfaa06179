#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "../dilation.hpp"
#include "../hilbert.hpp"
#include "../multiplier.hpp"
#include "../report.hpp"
#include "../sampling.hpp"

namespace oredil {

template <MultiplierInstance L>
void dilation_cases(ReportBuilder& rb, Rng& rng, std::int64_t samples, const L& lam) {
    using M = typename L::monoid;
    const std::string pre = std::string(M::name()) + "/";
    auto rep = regular_rep(lam);
    auto mu = extend_multiplier(lam);

    for (std::int64_t k = 0; k < samples; ++k) {
        const std::string id = "/" + std::to_string(k);
        auto h1 = sample_hvec<M>(rng, 3);
        auto h2 = sample_hvec<M>(rng, 2);
        auto s = sample_element<M>(rng);
        auto g = sample_fraction<M>(rng);
        auto gg = sample_fraction<M>(rng);
        DilVec<M> xi{sample_element<M>(rng), sample_hvec<M>(rng, 3)};
        DilVec<M> eta{sample_element<M>(rng), sample_hvec<M>(rng, 2)};
        auto wit = [&] {
            return "xi=" + dil_to_string(xi) + " eta=" + dil_to_string(eta) +
                   " s=" + M::to_string(s) + " g=" + frac_to_string(g) +
                   " h=" + frac_to_string(gg);
        };

        rb.require_w(pre + "embed-isometry" + id,
                     dil_inner(rep, dil_embed<M>(h1), dil_embed<M>(h2)) == hv_inner(h1, h2),
                     wit);

        rb.require_w(pre + "intertwine" + id,
                     dil_eq(rep, dil_apply_Us(rep, s, dil_embed<M>(h1)),
                            dil_embed<M>(rep.apply(s, h1))),
                     wit);

        rb.require_w(pre + "lift-invariance" + id, dil_eq(rep, xi, dil_lift(rep, s, xi)), wit);

        auto lhs = dil_apply_group(rep, mu, g, dil_apply_group(rep, mu, gg, xi));
        auto rhs = dil_scale(mu(g, gg).scalar(), dil_apply_group(rep, mu, frac_mul(g, gg), xi));
        rb.require_w(pre + "projective" + id, dil_eq(rep, lhs, rhs), wit);

        rb.require_w(pre + "unitary-inner" + id,
                     dil_inner(rep, dil_apply_group(rep, mu, g, xi),
                               dil_apply_group(rep, mu, g, eta)) == dil_inner(rep, xi, eta),
                     wit);
        rb.require_w(pre + "unitary-identity" + id,
                     dil_eq(rep, dil_apply_group(rep, mu, frac_identity<M>(), xi), xi), wit);

        rb.require_w(pre + "adjoint" + id,
                     dil_inner(rep, dil_apply_Us(rep, s, xi), eta) ==
                         dil_inner(rep, xi, dil_apply_Us_star(rep, s, eta)),
                     wit);

        // U_t (t, h) recovers the embedded h: the (t, h) exhaust the space
        DilVec<M> low{s, h1};
        rb.require_w(pre + "minimal" + id,
                     dil_eq(rep, dil_apply_Us(rep, s, low), dil_embed<M>(h1)), wit);
    }
}

namespace bilateral {

/// Independent model for S = (N,+) with trivial multiplier: l^2(Z) with
/// the bilateral shift (W h)(m) = h(m - 1). The dilation sends
/// (t, h) |-> W^{-t} h with h supported on N; all structure maps must
/// match under this identification.
using LVec = std::map<std::int64_t, GaussRat>;

inline void lz_accumulate(LVec& v, std::int64_t m, const GaussRat& c) {
    auto it = v.find(m);
    GaussRat s = (it == v.end() ? c : it->second + c);
    if (s.is_zero()) {
        if (it != v.end())
            v.erase(it);
    } else {
        v[m] = s;
    }
}

inline LVec lz_shift(std::int64_t k, const LVec& v) {
    LVec out;
    for (const auto& [m, c] : v)
        out[m + k] = c;
    return out;
}

inline GaussRat lz_inner(const LVec& a, const LVec& b) {
    GaussRat s;
    for (const auto& [m, c] : a) {
        auto it = b.find(m);
        if (it != b.end())
            s = s + c.conj() * it->second;
    }
    return s;
}

inline LVec phi(const DilVec<NatAdd>& xi) {
    LVec out;
    for (const auto& [n, c] : xi.h.c)
        lz_accumulate(out, n - xi.level, c);
    return out;
}

} // namespace bilateral

inline void bilateral_oracle_cases(ReportBuilder& rb, Rng& rng, std::int64_t samples) {
    using M = NatAdd;
    using namespace bilateral;
    TrivialMultiplier<M> lam;
    auto rep = regular_rep(lam);
    auto mu = extend_multiplier(lam);

    for (std::int64_t k = 0; k < samples; ++k) {
        const std::string id = "/" + std::to_string(k);
        DilVec<M> xi{sample_element<M>(rng), sample_hvec<M>(rng, 3)};
        DilVec<M> eta{sample_element<M>(rng), sample_hvec<M>(rng, 2)};
        auto s = sample_element<M>(rng);
        auto g = sample_fraction<M>(rng);
        auto wit = [&] {
            return "xi=" + dil_to_string(xi) + " eta=" + dil_to_string(eta) +
                   " s=" + M::to_string(s) + " g=" + frac_to_string(g);
        };

        rb.require_w("shift-oracle/well-defined" + id,
                     phi(dil_lift(rep, s, xi)) == phi(xi), wit);
        rb.require_w("shift-oracle/inner" + id,
                     lz_inner(phi(xi), phi(eta)) == dil_inner(rep, xi, eta), wit);
        rb.require_w("shift-oracle/intertwine" + id,
                     phi(dil_apply_Us(rep, s, xi)) == lz_shift(s, phi(xi)) &&
                         phi(dil_apply_Us_star(rep, s, xi)) == lz_shift(-s, phi(xi)),
                     wit);
        rb.require_w("shift-oracle/group" + id,
                     phi(dil_apply_group(rep, mu, g, xi)) == lz_shift(g.y - g.x, phi(xi)), wit);

        auto h = sample_hvec<M>(rng, 3);
        LVec direct;
        for (const auto& [n, c] : h.c)
            lz_accumulate(direct, n, c);
        rb.require_w("shift-oracle/embed" + id, phi(dil_embed<M>(h)) == direct, wit);
    }
}

inline VerificationReport check_dilation(std::uint64_t seed, std::int64_t samples,
                                         const std::string& instance = "") {
    ReportBuilder rb("dilation", instance);
    Rng rng(seed);
    dilation_cases(rb, rng, samples, TrivialMultiplier<NatAdd>{});
    dilation_cases(rb, rng, samples, Nat2Bicharacter{});
    dilation_cases(rb, rng, samples / 4 + 1, TrivialMultiplier<IntMat2Pos>{});
    bilateral_oracle_cases(rb, rng, samples);
    return rb.finish();
}

} // namespace oredil
