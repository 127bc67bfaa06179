#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oredil {

/// Contract for a computable Ore monoid: a cancellative monoid S in which
/// any two principal left ideals intersect, witnessed constructively by
/// ore_pair(s, t) = (u, v) with u*s == v*t. Instances are static-function
/// traits classes; elements are plain values.
///
/// left_divide(s, x) solves s*y == x, right_divide(x, s) solves u*s == x;
/// both return nothing when no solution exists in the monoid. less() is any
/// strict total order on elements (used for deterministic containers, not
/// for algebra).
template <class M>
concept OreMonoidInstance = requires(const typename M::element& a, const typename M::element& b) {
    typename M::element;
    { M::name() } -> std::convertible_to<std::string>;
    { M::identity() } -> std::same_as<typename M::element>;
    { M::mul(a, b) } -> std::same_as<typename M::element>;
    { M::eq(a, b) } -> std::same_as<bool>;
    { M::less(a, b) } -> std::same_as<bool>;
    { M::left_divide(a, b) } -> std::same_as<std::optional<typename M::element>>;
    { M::right_divide(a, b) } -> std::same_as<std::optional<typename M::element>>;
    { M::ore_pair(a, b) } -> std::same_as<std::pair<typename M::element, typename M::element>>;
    { M::to_string(a) } -> std::convertible_to<std::string>;
};

/// Instances may additionally supply reduce(x, y): a canonical representative
/// of the fraction class of (x, y). Detected structurally.
template <class M>
concept HasReduce = OreMonoidInstance<M> &&
    requires(const typename M::element& a, const typename M::element& b) {
        { M::reduce(a, b) } -> std::same_as<std::pair<typename M::element, typename M::element>>;
    };

/// Factorizations s = p * (s/p) over the prime divisors p of s.
inline std::vector<std::pair<std::int64_t, std::int64_t>>
natmul_proper_divisions(std::int64_t s) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    std::int64_t m = s;
    for (std::int64_t p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            out.emplace_back(p, s / p);
            while (m % p == 0)
                m /= p;
        }
    if (m > 1)
        out.emplace_back(m, s / m);
    return out;
}

template <OreMonoidInstance M>
struct ElementLess {
    bool operator()(const typename M::element& a, const typename M::element& b) const {
        return M::less(a, b);
    }
};

/// Multiplicative positive integers. Ore pairs come from the lcm.
struct NatMul {
    using element = std::int64_t;

    static std::string name() { return "nat-mul"; }
    static element identity() { return 1; }
    static element mul(element a, element b) { return a * b; }
    static bool eq(element a, element b) { return a == b; }
    static bool less(element a, element b) { return a < b; }

    static std::optional<element> left_divide(element s, element x) {
        if (x % s == 0)
            return x / s;
        return std::nullopt;
    }
    static std::optional<element> right_divide(element x, element s) {
        return left_divide(s, x); // commutative
    }
    static std::pair<element, element> ore_pair(element s, element t) {
        element l = std::lcm(s, t);
        return {l / s, l / t};
    }
    static std::pair<element, element> reduce(element x, element y) {
        element g = std::gcd(x, y);
        return {x / g, y / g};
    }
    static std::string to_string(element a) { return std::to_string(a); }
};

/// The natural numbers under addition.
struct NatAdd {
    using element = std::int64_t;

    static std::string name() { return "nat-add"; }
    static element identity() { return 0; }
    static element mul(element a, element b) { return a + b; }
    static bool eq(element a, element b) { return a == b; }
    static bool less(element a, element b) { return a < b; }

    static std::optional<element> left_divide(element s, element x) {
        if (x >= s)
            return x - s;
        return std::nullopt;
    }
    static std::optional<element> right_divide(element x, element s) {
        return left_divide(s, x);
    }
    static std::pair<element, element> ore_pair(element s, element t) {
        element m = std::max(s, t);
        return {m - s, m - t};
    }
    static std::pair<element, element> reduce(element x, element y) {
        element m = std::min(x, y);
        return {x - m, y - m};
    }
    static std::string to_string(element a) { return std::to_string(a); }
};

/// N^2 under componentwise addition.
struct Nat2Add {
    using element = std::array<std::int64_t, 2>;

    static std::string name() { return "nat2-add"; }
    static element identity() { return {0, 0}; }
    static element mul(const element& a, const element& b) {
        return {a[0] + b[0], a[1] + b[1]};
    }
    static bool eq(const element& a, const element& b) { return a == b; }
    static bool less(const element& a, const element& b) { return a < b; }

    static std::optional<element> left_divide(const element& s, const element& x) {
        if (x[0] >= s[0] && x[1] >= s[1])
            return element{x[0] - s[0], x[1] - s[1]};
        return std::nullopt;
    }
    static std::optional<element> right_divide(const element& x, const element& s) {
        return left_divide(s, x);
    }
    static std::pair<element, element> ore_pair(const element& s, const element& t) {
        element m{std::max(s[0], t[0]), std::max(s[1], t[1])};
        return {element{m[0] - s[0], m[1] - s[1]}, element{m[0] - t[0], m[1] - t[1]}};
    }
    static std::pair<element, element> reduce(const element& x, const element& y) {
        element m{std::min(x[0], y[0]), std::min(x[1], y[1])};
        return {element{x[0] - m[0], x[1] - m[1]}, element{y[0] - m[0], y[1] - m[1]}};
    }
    static std::string to_string(const element& a) {
        return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + ")";
    }
};

/// 2x2 integer matrix, row-major.
struct Mat2 {
    std::array<std::int64_t, 4> v{1, 0, 0, 1};

    std::int64_t det() const { return v[0] * v[3] - v[1] * v[2]; }
    Mat2 adj() const { return Mat2{{v[3], -v[1], -v[2], v[0]}}; }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return Mat2{{a.v[0] * b.v[0] + a.v[1] * b.v[2], a.v[0] * b.v[1] + a.v[1] * b.v[3],
                     a.v[2] * b.v[0] + a.v[3] * b.v[2], a.v[2] * b.v[1] + a.v[3] * b.v[3]}};
    }
    friend bool operator==(const Mat2& a, const Mat2& b) { return a.v == b.v; }
    friend bool operator<(const Mat2& a, const Mat2& b) { return a.v < b.v; }
};

/// 2x2 integer matrices with positive determinant. The Ore pair for (s, t)
/// is (t*adj(s), det(s)*I): both factors stay integral with positive
/// determinant and t*adj(s)*s == det(s)*t holds identically.
struct IntMat2Pos {
    using element = Mat2;

    static std::string name() { return "int-mat2-pos"; }
    static element identity() { return Mat2{}; }
    static element mul(const element& a, const element& b) { return a * b; }
    static bool eq(const element& a, const element& b) { return a == b; }
    static bool less(const element& a, const element& b) { return a < b; }

    static std::optional<element> left_divide(const element& s, const element& x) {
        // solve s*y == x over the integers
        std::int64_t d = s.det();
        Mat2 n = s.adj() * x;
        for (auto c : n.v)
            if (c % d != 0)
                return std::nullopt;
        Mat2 y{{n.v[0] / d, n.v[1] / d, n.v[2] / d, n.v[3] / d}};
        if (y.det() <= 0)
            return std::nullopt;
        return y;
    }
    static std::optional<element> right_divide(const element& x, const element& s) {
        // solve u*s == x
        std::int64_t d = s.det();
        Mat2 n = x * s.adj();
        for (auto c : n.v)
            if (c % d != 0)
                return std::nullopt;
        Mat2 u{{n.v[0] / d, n.v[1] / d, n.v[2] / d, n.v[3] / d}};
        if (u.det() <= 0)
            return std::nullopt;
        return u;
    }
    static std::pair<element, element> ore_pair(const element& s, const element& t) {
        std::int64_t d = s.det();
        Mat2 scaled{{d, 0, 0, d}};
        return {t * s.adj(), scaled};
    }
    static std::string to_string(const element& a) {
        return "[[" + std::to_string(a.v[0]) + "," + std::to_string(a.v[1]) + "],[" +
               std::to_string(a.v[2]) + "," + std::to_string(a.v[3]) + "]]";
    }
};

static_assert(OreMonoidInstance<NatMul> && HasReduce<NatMul>);
static_assert(OreMonoidInstance<NatAdd> && HasReduce<NatAdd>);
static_assert(OreMonoidInstance<Nat2Add> && HasReduce<Nat2Add>);
static_assert(OreMonoidInstance<IntMat2Pos> && !HasReduce<IntMat2Pos>);

} // namespace oredil
