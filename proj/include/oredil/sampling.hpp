#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "adele.hpp"
#include "direct_limit.hpp"
#include "hilbert.hpp"
#include "monoid.hpp"
#include "star_algebra.hpp"
#include "zhat.hpp"

namespace oredil {

/// Deterministic sample stream: every suite draws all randomness through
/// one of these, seeded from the command line, so runs replay exactly.
class Rng {
    std::mt19937_64 eng_;

public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
    }

    bool coin() { return uniform(0, 1) == 1; }
};

template <OreMonoidInstance M>
typename M::element sample_element(Rng& rng);

template <>
inline NatMul::element sample_element<NatMul>(Rng& rng) {
    // Products of small primes keep lcm-based Ore pairs small.
    static const std::int64_t primes[] = {2, 2, 3, 3, 5, 7};
    std::int64_t s = 1;
    std::int64_t k = rng.uniform(0, 3);
    for (std::int64_t i = 0; i < k; ++i)
        s *= primes[rng.uniform(0, 5)];
    return s;
}

template <>
inline NatAdd::element sample_element<NatAdd>(Rng& rng) {
    return rng.uniform(0, 12);
}

template <>
inline Nat2Add::element sample_element<Nat2Add>(Rng& rng) {
    return {rng.uniform(0, 9), rng.uniform(0, 9)};
}

template <>
inline IntMat2Pos::element sample_element<IntMat2Pos>(Rng& rng) {
    // Small entries, positive determinant; rejection keeps it unbiased
    // within the box.
    for (;;) {
        Mat2 m{{rng.uniform(-2, 3), rng.uniform(-2, 3), rng.uniform(-2, 3), rng.uniform(-2, 3)}};
        if (m.det() > 0)
            return m;
    }
}

template <OreMonoidInstance M>
Fraction<M> sample_fraction(Rng& rng) {
    return {sample_element<M>(rng), sample_element<M>(rng)};
}

inline GaussRat sample_gauss(Rng& rng) {
    return {Rat(rng.uniform(-3, 3), rng.uniform(1, 3)), Rat(rng.uniform(-3, 3), rng.uniform(1, 3))};
}

inline GaussRat sample_gauss_int(Rng& rng) {
    return {Rat(rng.uniform(-2, 2)), Rat(rng.uniform(-2, 2))};
}

template <OreMonoidInstance M>
HVec<M> sample_hvec(Rng& rng, std::int64_t terms) {
    HVec<M> h;
    for (std::int64_t i = 0; i < terms; ++i)
        hv_accumulate<M>(h, sample_element<M>(rng), sample_gauss(rng));
    return h;
}

inline std::int64_t sample_natmul_bounded(Rng& rng, std::int64_t nmax) {
    static const std::int64_t primes[] = {2, 3, 5, 7, 11};
    std::int64_t s = 1;
    for (std::int64_t tries = rng.uniform(0, 4); tries > 0; --tries) {
        std::int64_t p = primes[rng.uniform(0, 4)];
        if (s * p <= nmax)
            s *= p;
    }
    return s;
}

inline ZhatFn sample_zhat(Rng& rng, std::int64_t Nmax) {
    std::int64_t N = sample_natmul_bounded(rng, Nmax);
    std::vector<GaussRat> vals;
    vals.reserve(N);
    for (std::int64_t k = 0; k < N; ++k)
        vals.push_back(sample_gauss_int(rng));
    return zh_make(N, std::move(vals));
}

inline AdeleFn sample_adele(Rng& rng, std::int64_t nmax, std::int64_t Nmax) {
    std::int64_t n = sample_natmul_bounded(rng, nmax);
    std::int64_t N = sample_natmul_bounded(rng, Nmax);
    std::vector<GaussRat> vals;
    vals.reserve(n * N);
    for (std::int64_t k = 0; k < n * N; ++k)
        vals.push_back(rng.coin() ? sample_gauss_int(rng) : GaussRat());
    return af_make(n, N, std::move(vals));
}

inline LimElement<BcSystem> sample_lim_bc(Rng& rng, std::int64_t nmax, std::int64_t Nmax) {
    return lim_compress<BcSystem>({sample_natmul_bounded(rng, nmax), sample_zhat(rng, Nmax)});
}

inline PolyPowers::alg sample_poly(Rng& rng) {
    PolyPowers::alg p;
    for (std::int64_t i = rng.uniform(1, 3); i > 0; --i)
        PolyPowers::accumulate(p, rng.uniform(0, 6), sample_gauss_int(rng));
    return p;
}

} // namespace oredil
