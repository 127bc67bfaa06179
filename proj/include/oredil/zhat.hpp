#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"
#include "star_algebra.hpp"

namespace oredil {

/// A locally constant function on the profinite integers, stored through a
/// finite quotient: level N and the N values on the residues of Z/N.
/// Always kept at the minimal level (no proper divisor of N is a period),
/// so structural equality is semantic equality.
struct ZhatFn {
    std::int64_t N = 1;
    std::vector<GaussRat> v = std::vector<GaussRat>(1);

    friend bool operator==(const ZhatFn& a, const ZhatFn& b) { return a.N == b.N && a.v == b.v; }
};

inline ZhatFn zh_make(std::int64_t N, std::vector<GaussRat> vals) {
    if (N <= 0 || static_cast<std::int64_t>(vals.size()) != N)
        throw std::invalid_argument("zh_make: level/value mismatch");
    for (const auto& [p, rest] : natmul_proper_divisions(N)) {
        (void)rest;
        while (N % p == 0) {
            std::int64_t M = N / p;
            bool periodic = true;
            for (std::int64_t k = M; k < N && periodic; ++k)
                periodic = (vals[k] == vals[k % M]);
            if (!periodic)
                break;
            vals.resize(M);
            N = M;
        }
    }
    return {N, std::move(vals)};
}

inline ZhatFn zh_const(const GaussRat& c) {
    return {1, {c}};
}

/// The same function presented at level N*m.
inline std::vector<GaussRat> zh_values_at(const ZhatFn& f, std::int64_t level) {
    std::vector<GaussRat> out(level);
    for (std::int64_t k = 0; k < level; ++k)
        out[k] = f.v[k % f.N];
    return out;
}

inline ZhatFn zh_pointwise(const ZhatFn& f, const ZhatFn& g, bool multiply) {
    std::int64_t L = std::lcm(f.N, g.N);
    std::vector<GaussRat> out(L);
    for (std::int64_t k = 0; k < L; ++k)
        out[k] = multiply ? f.v[k % f.N] * g.v[k % g.N] : f.v[k % f.N] + g.v[k % g.N];
    return zh_make(L, std::move(out));
}

inline ZhatFn zh_add(const ZhatFn& f, const ZhatFn& g) { return zh_pointwise(f, g, false); }
inline ZhatFn zh_mul(const ZhatFn& f, const ZhatFn& g) { return zh_pointwise(f, g, true); }

inline ZhatFn zh_star(const ZhatFn& f) {
    std::vector<GaussRat> out(f.N);
    for (std::int64_t k = 0; k < f.N; ++k)
        out[k] = f.v[k].conj();
    return {f.N, std::move(out)};
}

inline ZhatFn zh_scale(const GaussRat& c, const ZhatFn& f) {
    std::vector<GaussRat> out(f.N);
    for (std::int64_t k = 0; k < f.N; ++k)
        out[k] = c * f.v[k];
    return zh_make(f.N, std::move(out));
}

/// The division endomorphism: alpha_n(f)(x) = f(x/n) when n | x, else 0.
/// At level nN the value at residue x is f((x/n) mod N) when n | x.
inline ZhatFn zh_alpha(std::int64_t n, const ZhatFn& f) {
    if (n <= 0)
        throw std::invalid_argument("zh_alpha: n must be positive");
    std::int64_t L = n * f.N;
    std::vector<GaussRat> out(L);
    for (std::int64_t x = 0; x < L; ++x)
        if (x % n == 0)
            out[x] = f.v[(x / n) % f.N];
    return zh_make(L, std::move(out));
}

/// Solve alpha_n(f) = g. A candidate is read off by f(k) = g(nk); the
/// candidate is then verified, which also rejects g outside the range.
inline std::optional<ZhatFn> zh_alpha_preimage(std::int64_t n, const ZhatFn& g) {
    std::vector<GaussRat> out(g.N);
    for (std::int64_t k = 0; k < g.N; ++k)
        out[k] = g.v[(n * k) % g.N];
    ZhatFn f = zh_make(g.N, std::move(out));
    if (zh_alpha(n, f) == g)
        return f;
    return std::nullopt;
}

/// The indicator of nZhat = alpha_n(1).
inline ZhatFn zh_indicator(std::int64_t n) {
    return zh_alpha(n, zh_const(GaussRat(Rat(1))));
}

inline std::string zh_to_string(const ZhatFn& f) {
    std::string out = "Z/" + std::to_string(f.N) + ":[";
    for (std::int64_t k = 0; k < f.N; ++k) {
        if (k)
            out += ", ";
        out += f.v[k].str();
    }
    return out + "]";
}

/// The number-theory instance: A = C(Zhat) (locally constant part) with
/// the multiplicative naturals acting by the division endomorphisms.
struct BcSystem {
    using monoid = NatMul;
    using alg = ZhatFn;

    static std::string name() { return "arithmetic"; }
    static alg unit() { return zh_const(GaussRat(Rat(1))); }
    static alg zero() { return zh_const(GaussRat()); }
    static alg add(const alg& a, const alg& b) { return zh_add(a, b); }
    static alg mul(const alg& a, const alg& b) { return zh_mul(a, b); }
    static alg star(const alg& a) { return zh_star(a); }
    static alg scale(const GaussRat& c, const alg& a) { return zh_scale(c, a); }
    static bool eq(const alg& a, const alg& b) { return a == b; }
    static alg endo(NatMul::element n, const alg& a) { return zh_alpha(n, a); }
    static std::optional<alg> endo_preimage(NatMul::element n, const alg& a) {
        return zh_alpha_preimage(n, a);
    }
    static std::vector<std::pair<NatMul::element, NatMul::element>>
    proper_divisions(NatMul::element s) {
        return natmul_proper_divisions(s);
    }
    static std::string to_string(const alg& a) { return zh_to_string(a); }
};

static_assert(StarAlgebraAction<BcSystem> && HasDivisions<BcSystem>);

} // namespace oredil
