#pragma once

#include <memory>
#include <string>

#include "../fraction.hpp"
#include "../monoid.hpp"
#include "../multiplier.hpp"
#include "../report.hpp"
#include "../sampling.hpp"

namespace oredil {

struct CocycleCounts {
    std::int64_t triples = 500;
    std::int64_t pairs = 200;
    std::int64_t gtriples = 200;
    std::int64_t section_elems = 50;
};

template <MultiplierInstance L>
void cocycle_cases(ReportBuilder& rb, Rng& rng, std::int64_t triples, const L& lam) {
    using M = typename L::monoid;
    const std::string pre = std::string(lam.name()) + "/";
    for (std::int64_t k = 0; k < triples; ++k) {
        auto r = sample_element<M>(rng);
        auto s = sample_element<M>(rng);
        auto t = sample_element<M>(rng);
        auto wit = cocycle_check(lam, r, s, t);
        rb.require(pre + "cocycle/" + std::to_string(k), !wit, wit ? *wit : "");
        rb.require_w(pre + "normalized/" + std::to_string(k),
                     lam(M::identity(), s).is_zero() && lam(s, M::identity()).is_zero(),
                     [&] { return "s=" + M::to_string(s); });
    }
}

template <MultiplierInstance L>
void extension_cases(ReportBuilder& rb, Rng& rng, std::int64_t pairs, std::int64_t gtriples,
                     const L& lam) {
    using M = typename L::monoid;
    const std::string pre = std::string(lam.name()) + "/";
    auto mu = extend_multiplier(lam);

    for (std::int64_t k = 0; k < pairs; ++k) {
        auto s = sample_element<M>(rng);
        auto t = sample_element<M>(rng);
        rb.require_w(pre + "mu-restricts/" + std::to_string(k),
                     mu(frac_embed<M>(s), frac_embed<M>(t)) == lam(s, t), [&] {
                         return "s=" + M::to_string(s) + " t=" + M::to_string(t) + " mu=" +
                                mu(frac_embed<M>(s), frac_embed<M>(t)).str() + " lam=" +
                                lam(s, t).str();
                     });

        // transition phases compose along any chain of representatives
        auto g = sample_fraction<M>(rng);
        auto a = frac_amplify<M>(sample_element<M>(rng), g);
        auto b = frac_amplify<M>(sample_element<M>(rng), g);
        auto c = frac_amplify<M>(sample_element<M>(rng), g);
        rb.require_w(pre + "transition-chain/" + std::to_string(k),
                     transition_phase(lam, a, b) + transition_phase(lam, b, c) ==
                             transition_phase(lam, a, c) &&
                         transition_phase(lam, a, a).is_zero(),
                     [&] { return "g=" + frac_to_string(g); });

        // mu is blind to the representative handed in
        rb.require_w(pre + "mu-well-defined/" + std::to_string(k), mu(a, b) == mu(g, g), [&] {
            return "g=" + frac_to_string(g);
        });
    }

    for (std::int64_t k = 0; k < gtriples; ++k) {
        auto g = sample_fraction<M>(rng);
        auto h = sample_fraction<M>(rng);
        auto f = sample_fraction<M>(rng);
        Phase lhs = mu(g, h) + mu(frac_mul(g, h), f);
        Phase rhs = mu(g, frac_mul(h, f)) + mu(h, f);
        rb.require_w(pre + "mu-cocycle/" + std::to_string(k), lhs == rhs, [&] {
            return "g=" + frac_to_string(g) + " h=" + frac_to_string(h) +
                   " f=" + frac_to_string(f) + " lhs=" + lhs.str() + " rhs=" + rhs.str();
        });
    }
}

/// Two different sections give extensions differing by the explicit
/// coboundary of the section cochain.
inline void section_cases(ReportBuilder& rb, Rng& rng, std::int64_t elems) {
    using M = Nat2Add;
    Nat2Bicharacter lam;
    auto secA = std::make_shared<CanonicalSection<M>>();
    auto secB = std::make_shared<SkewedSection<M>>(M::element{1, 2});
    ExtendedMultiplier<Nat2Bicharacter, CanonicalSection<M>> muA(lam, secA);
    ExtendedMultiplier<Nat2Bicharacter, SkewedSection<M>> muB(lam, secB);
    auto c = [&](const Fraction<M>& g) { return section_cochain(lam, *secA, *secB, g); };

    for (std::int64_t k = 0; k < elems; ++k) {
        auto g = sample_fraction<M>(rng);
        auto h = sample_fraction<M>(rng);
        Phase lhs = muB(g, h);
        Phase rhs = muA(g, h) + c(g) + c(h) - c(frac_mul(g, h));
        rb.require_w("sections/coboundary/" + std::to_string(k), lhs == rhs, [&] {
            return "g=" + frac_to_string(g) + " h=" + frac_to_string(h) + " muB=" + lhs.str() +
                   " muA+dc=" + rhs.str();
        });

        auto s = sample_element<M>(rng);
        auto t = sample_element<M>(rng);
        rb.require_w("sections/skewed-restricts/" + std::to_string(k),
                     muB(frac_embed<M>(s), frac_embed<M>(t)) == lam(s, t),
                     [&] { return "s=" + M::to_string(s) + " t=" + M::to_string(t); });
    }
}

/// Independent closed form on the fraction group Z^2: the bicharacter
/// nu(g,h) = theta g_2 h_1 of the difference vectors extends lam, and the
/// section-based extension differs from it by the explicit coboundary of
///   c(g) = theta x_2 (x_1 - y_1),   (x,y) the canonical representative.
/// Both sides are computed independently and compared exactly.
inline void z2_oracle_cases(ReportBuilder& rb, Rng& rng, std::int64_t pairs) {
    using M = Nat2Add;
    Nat2Bicharacter lam;
    auto mu = extend_multiplier(lam);
    Rat theta = lam.theta;

    auto vec = [](const Fraction<M>& g) {
        return std::array<std::int64_t, 2>{g.y[0] - g.x[0], g.y[1] - g.x[1]};
    };
    auto nu = [&](const Fraction<M>& g, const Fraction<M>& h) {
        return Phase(theta * Rat(vec(g)[1] * vec(h)[0]));
    };
    auto cob = [&](const Fraction<M>& g) {
        auto r = mu.rep(g);
        return Phase(theta * Rat(r.x[1] * (r.x[0] - r.y[0])));
    };

    for (std::int64_t k = 0; k < pairs; ++k) {
        auto g = sample_fraction<M>(rng);
        auto h = sample_fraction<M>(rng);
        Phase rhs = nu(g, h) + cob(g) + cob(h) - cob(frac_mul(g, h));
        rb.require_w("z2-oracle/cohomologous/" + std::to_string(k), mu(g, h) == rhs, [&] {
            return "g=" + frac_to_string(g) + " h=" + frac_to_string(h) +
                   " mu=" + mu(g, h).str() + " nu+dc=" + rhs.str();
        });
        // nu itself is a G-cocycle extending lam
        auto s = sample_element<M>(rng);
        auto t = sample_element<M>(rng);
        rb.require_w("z2-oracle/nu-restricts/" + std::to_string(k),
                     nu(frac_embed<M>(s), frac_embed<M>(t)) == lam(s, t),
                     [&] { return "s=" + M::to_string(s) + " t=" + M::to_string(t); });
    }

    // pinned value: inverse generators, where the two cocycles differ
    Fraction<M> g{{0, 1}, {0, 0}};
    Fraction<M> h{{1, 0}, {0, 0}};
    rb.require("z2-oracle/spot-mu", mu(g, h) == Phase(),
               "mu((0,-1),(-1,0)) = " + mu(g, h).str());
    rb.require("z2-oracle/spot-nu", nu(g, h) == Phase(1, 4),
               "nu((0,-1),(-1,0)) = " + nu(g, h).str());
}

inline VerificationReport check_cocycle(std::uint64_t seed, const CocycleCounts& counts,
                                        const std::string& instance = "") {
    ReportBuilder rb("cocycle", instance);
    Rng rng(seed);
    cocycle_cases(rb, rng, counts.triples, Nat2Bicharacter{});
    cocycle_cases(rb, rng, counts.triples, NatMulValuationBichar{});
    extension_cases(rb, rng, counts.pairs, counts.gtriples, Nat2Bicharacter{});
    extension_cases(rb, rng, counts.pairs, counts.gtriples, NatMulValuationBichar{});
    extension_cases(rb, rng, counts.pairs / 4 + 1, counts.gtriples / 4 + 1,
                    TrivialMultiplier<IntMat2Pos>{});
    section_cases(rb, rng, counts.section_elems);
    z2_oracle_cases(rb, rng, counts.pairs);
    return rb.finish();
}

} // namespace oredil
