#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "direct_limit.hpp"
#include "fraction.hpp"
#include "zhat.hpp"

namespace oredil {

/// A locally constant, compactly supported function on the finite adeles:
/// supported in (1/n)Zhat, constant on cosets of N*Zhat, with the n*N
/// values indexed by k -> value at k/n + N*Zhat. Kept with minimal n (no
/// smaller support scale works) and minimal N (no coarser level works),
/// so structural equality is semantic equality; the zero function is
/// (1, 1, [0]).
struct AdeleFn {
    std::int64_t n = 1;
    std::int64_t N = 1;
    std::vector<GaussRat> v = std::vector<GaussRat>(1);

    friend bool operator==(const AdeleFn& a, const AdeleFn& b) {
        return a.n == b.n && a.N == b.N && a.v == b.v;
    }
};

inline AdeleFn af_make(std::int64_t n, std::int64_t N, std::vector<GaussRat> vals) {
    if (n <= 0 || N <= 0 || static_cast<std::int64_t>(vals.size()) != n * N)
        throw std::invalid_argument("af_make: parameter/value mismatch");
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        // drop the support scale n -> n/p when nothing lives off (p/n)Zhat
        for (const auto& [p, rest] : natmul_proper_divisions(n)) {
            (void)rest;
            bool off = false;
            for (std::int64_t k = 0; k < n * N && !off; ++k)
                off = (k % p != 0) && !vals[k].is_zero();
            if (!off) {
                std::int64_t m = n / p;
                std::vector<GaussRat> out(m * N);
                for (std::int64_t k = 0; k < m * N; ++k)
                    out[k] = vals[p * k];
                vals = std::move(out);
                n = m;
                shrunk = true;
                break;
            }
        }
        if (shrunk)
            continue;
        // coarsen the constancy level N -> N/p when the values are periodic
        for (const auto& [p, rest] : natmul_proper_divisions(N)) {
            (void)rest;
            std::int64_t period = n * (N / p);
            bool periodic = true;
            for (std::int64_t k = period; k < n * N && periodic; ++k)
                periodic = (vals[k] == vals[k % period]);
            if (periodic) {
                vals.resize(period);
                N /= p;
                shrunk = true;
                break;
            }
        }
    }
    return {n, N, std::move(vals)};
}

/// The same function displayed with support scale n and level N, for any
/// multiple of the stored parameters.
inline std::vector<GaussRat> af_values_at(const AdeleFn& f, std::int64_t n, std::int64_t N) {
    if (n % f.n != 0 || N % f.N != 0)
        throw std::invalid_argument("af_values_at: not a refinement");
    std::int64_t m = n / f.n;
    std::vector<GaussRat> out(n * N);
    for (std::int64_t k = 0; k < n * N; ++k)
        if (k % m == 0)
            out[k] = f.v[(k / m) % (f.n * f.N)];
    return out;
}

inline AdeleFn af_zero() {
    return {};
}

inline AdeleFn af_pointwise(const AdeleFn& f, const AdeleFn& g, bool multiply) {
    std::int64_t n = std::lcm(f.n, g.n);
    std::int64_t N = std::lcm(f.N, g.N);
    auto a = af_values_at(f, n, N);
    auto b = af_values_at(g, n, N);
    for (std::int64_t k = 0; k < n * N; ++k)
        a[k] = multiply ? a[k] * b[k] : a[k] + b[k];
    return af_make(n, N, std::move(a));
}

inline AdeleFn af_add(const AdeleFn& f, const AdeleFn& g) { return af_pointwise(f, g, false); }
inline AdeleFn af_mul(const AdeleFn& f, const AdeleFn& g) { return af_pointwise(f, g, true); }

inline AdeleFn af_star(const AdeleFn& f) {
    auto out = f.v;
    for (auto& c : out)
        c = c.conj();
    return {f.n, f.N, std::move(out)};
}

inline AdeleFn af_scale(const GaussRat& c, const AdeleFn& f) {
    auto out = f.v;
    for (auto& x : out)
        x = c * x;
    return af_make(f.n, f.N, std::move(out));
}

/// Extension by zero off Zhat: i(f)(a) = f(a) for a in Zhat, 0 elsewhere.
inline AdeleFn i_embed_adele(const ZhatFn& f) {
    return {1, f.N, f.v};
}

/// beta_r for r = p/q in lowest terms: beta_r(F)(a) = F(r^{-1} a). The
/// reindexing sends (n, N, v) to (qn, pN, v') with v'[k] = v[(k/p) mod nN]
/// when p | k and 0 otherwise: the coset k/(qn) + pN*Zhat maps under
/// multiplication by q/p into (k/p)/n + N*Zhat exactly when p | k, and
/// misses the support of F entirely otherwise.
inline AdeleFn af_beta(std::int64_t p, std::int64_t q, const AdeleFn& f) {
    if (p <= 0 || q <= 0)
        throw std::invalid_argument("af_beta: rational must be positive");
    std::int64_t g = std::gcd(p, q);
    p /= g;
    q /= g;
    std::int64_t n = q * f.n;
    std::int64_t N = p * f.N;
    std::vector<GaussRat> out(n * N);
    for (std::int64_t k = 0; k < n * N; ++k)
        if (k % p == 0)
            out[k] = f.v[(k / p) % (f.n * f.N)];
    return af_make(n, N, std::move(out));
}

inline AdeleFn af_beta_frac(const Fraction<NatMul>& g, const AdeleFn& f) {
    return af_beta(g.y, g.x, f);
}

/// The truncation 1_Zhat * F * 1_Zhat read off as a function on Zhat.
inline ZhatFn af_restrict_zhat(const AdeleFn& f) {
    std::vector<GaussRat> out(f.N);
    for (std::int64_t j = 0; j < f.N; ++j)
        out[j] = f.v[(f.n * j) % (f.n * f.N)];
    return zh_make(f.N, std::move(out));
}

inline std::string af_to_string(const AdeleFn& f) {
    std::string out =
        "(1/" + std::to_string(f.n) + ")Z at level " + std::to_string(f.N) + ":[";
    for (std::int64_t k = 0; k < f.n * f.N; ++k) {
        if (k)
            out += ", ";
        out += f.v[k].str();
    }
    return out + "]";
}

/// The uniqueness map on the number-theory instance:
/// theta(class(s, f)) = beta_{1/s}(i(f)), with inverse reading an AdeleFn
/// at scale n as the class (n, f) for f(k) = F(k/n) at level nN.
inline AdeleFn theta_iso(const LimElement<BcSystem>& b) {
    return af_beta(1, b.s, i_embed_adele(b.a));
}

inline LimElement<BcSystem> theta_inv(const AdeleFn& f) {
    return lim_compress<BcSystem>({f.n, zh_make(f.n * f.N, f.v)});
}

/// The adele realization packaged as a dilation model of (C(Zhat), Nx, alpha).
struct AdeleModel {
    using elem = AdeleFn;

    elem j(const ZhatFn& a) const { return i_embed_adele(a); }
    elem beta(const Fraction<NatMul>& g, const elem& x) const { return af_beta_frac(g, x); }
    elem add(const elem& x, const elem& y) const { return af_add(x, y); }
    elem mul(const elem& x, const elem& y) const { return af_mul(x, y); }
    elem star(const elem& x) const { return af_star(x); }
    bool eq(const elem& x, const elem& y) const { return x == y; }
    std::optional<LimElement<BcSystem>> preimage(const elem& x) const { return theta_inv(x); }
    std::string to_string(const elem& x) const { return af_to_string(x); }
};

static_assert(LimitModel<AdeleModel, BcSystem>);

} // namespace oredil
