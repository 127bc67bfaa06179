#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "../fraction.hpp"
#include "../monoid.hpp"
#include "../rational.hpp"

namespace oredil {

/// Concrete groups receiving the universal extension of a monoid
/// homomorphism to the group of fractions.

/// (Q_{>0}, *) receiving n |-> n from the multiplicative naturals.
struct RatMulGroup {
    using element = Rat;
    static element identity() { return Rat(1); }
    static element mul(const element& a, const element& b) { return a * b; }
    static element inv(const element& a) { return Rat(1) / a; }
    static bool eq(const element& a, const element& b) { return a == b; }
};

/// (Z, +) receiving n |-> n from the additive naturals.
struct IntAddGroup {
    using element = std::int64_t;
    static element identity() { return 0; }
    static element mul(const element& a, const element& b) { return a + b; }
    static element inv(const element& a) { return -a; }
    static bool eq(const element& a, const element& b) { return a == b; }
};

/// (Z^2, +) receiving the componentwise embedding of N^2.
struct Int2AddGroup {
    using element = std::array<std::int64_t, 2>;
    static element identity() { return {0, 0}; }
    static element mul(const element& a, const element& b) { return {a[0] + b[0], a[1] + b[1]}; }
    static element inv(const element& a) { return {-a[0], -a[1]}; }
    static bool eq(const element& a, const element& b) { return a == b; }
};

/// GL_2(Q) receiving integer matrices of positive determinant.
struct RatMat2 {
    std::array<Rat, 4> v{Rat(1), Rat(0), Rat(0), Rat(1)};

    friend bool operator==(const RatMat2& a, const RatMat2& b) { return a.v == b.v; }
};

struct RatMat2Group {
    using element = RatMat2;
    static element identity() { return {}; }
    static element mul(const element& a, const element& b) {
        return {{a.v[0] * b.v[0] + a.v[1] * b.v[2], a.v[0] * b.v[1] + a.v[1] * b.v[3],
                 a.v[2] * b.v[0] + a.v[3] * b.v[2], a.v[2] * b.v[1] + a.v[3] * b.v[3]}};
    }
    static element inv(const element& a) {
        Rat d = a.v[0] * a.v[3] - a.v[1] * a.v[2];
        return {{a.v[3] / d, -a.v[1] / d, -a.v[2] / d, a.v[0] / d}};
    }
    static bool eq(const element& a, const element& b) { return a == b; }
};

static_assert(GroupInstance<RatMulGroup> && GroupInstance<IntAddGroup> &&
              GroupInstance<Int2AddGroup> && GroupInstance<RatMat2Group>);

/// The canonical monoid homomorphisms into the targets above.
inline Rat hom_natmul(NatMul::element s) { return Rat(s); }
inline std::int64_t hom_natadd(NatAdd::element s) { return s; }
inline Int2AddGroup::element hom_nat2(const Nat2Add::element& s) { return {s[0], s[1]}; }
inline RatMat2 hom_mat2(const Mat2& s) {
    return {{Rat(s.v[0]), Rat(s.v[1]), Rat(s.v[2]), Rat(s.v[3])}};
}

} // namespace oredil
