#include <catch2/catch_amalgamated.hpp>

#include "oredil/checks/group_targets.hpp"
#include "oredil/fraction.hpp"
#include "oredil/monoid.hpp"

using namespace oredil;

TEST_CASE("ore pairs via least common multiples on multiplicative naturals") {
    auto [u, v] = NatMul::ore_pair(4, 6);
    CHECK(u == 3);
    CHECK(v == 2);
    CHECK(u * 4 == v * 6);
    auto [a, b] = NatMul::ore_pair(5, 5);
    CHECK(a == 1);
    CHECK(b == 1);
}

TEST_CASE("ore pair on positive-determinant integer matrices") {
    Mat2 s{{1, 1, 0, 1}};
    Mat2 t{{1, 0, 1, 1}};
    auto [u, v] = IntMat2Pos::ore_pair(s, t);
    CHECK(u == Mat2{{1, -1, 1, 0}});
    CHECK(v == Mat2{}); // det(s) = 1, so the right factor is the identity
    CHECK(u * s == v * t);
    CHECK(u * s == Mat2{{1, 0, 1, 1}});
}

TEST_CASE("divisibility in the right order") {
    CHECK(right_order_leq<NatMul>(2, 6)); // 6 = 3*2
    CHECK(!right_order_leq<NatMul>(4, 6));
    CHECK(right_order_leq<NatMul>(7, 7));
    CHECK(NatMul::left_divide(2, 6).value() == 3);
    CHECK(!NatMul::left_divide(4, 6).has_value());
}

TEST_CASE("prime factor splittings") {
    auto d = natmul_proper_divisions(12);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == std::pair<std::int64_t, std::int64_t>(2, 6));
    CHECK(d[1] == std::pair<std::int64_t, std::int64_t>(3, 4));
    CHECK(natmul_proper_divisions(1).empty());
}

TEST_CASE("fraction arithmetic matches the rational-number oracle") {
    // x\y reads x^{-1} y, so (1\2)*(3\1) is 2 * (1/3) = 2/3 = (3\2).
    Fraction<NatMul> g{1, 2}, h{3, 1};
    CHECK(frac_eq<NatMul>(frac_mul<NatMul>(g, h), Fraction<NatMul>{3, 2}));
    CHECK(frac_is_identity<NatMul>(frac_mul<NatMul>(g, frac_inv<NatMul>(g))));
    CHECK(frac_eq<NatMul>(frac_inv<NatMul>(g), Fraction<NatMul>{2, 1}));
    CHECK(frac_eq<NatMul>(frac_inv<NatMul>(frac_inv<NatMul>(h)), h));
    // Amplified representatives denote the same fraction.
    CHECK(frac_eq<NatMul>(g, Fraction<NatMul>{5, 10}));
    CHECK(!frac_eq<NatMul>(g, h));
}

TEST_CASE("embedding of the monoid is multiplicative") {
    auto e2 = frac_embed<NatMul>(2);
    auto e3 = frac_embed<NatMul>(3);
    CHECK(frac_eq<NatMul>(frac_mul<NatMul>(e2, e3), frac_embed<NatMul>(6)));
}

TEST_CASE("homomorphisms extend to the fraction group") {
    // Inclusion into the positive rationals sends 2\3 to 3/2.
    CHECK(extend_hom<NatMul, RatMulGroup>(hom_natmul, Fraction<NatMul>{2, 3}) == Rat(3, 2));
    // (a,b) -> a-b on N^2 sends (1,0)\(0,2) to (0-2)-(1-0) = -3.
    auto phi = [](const Nat2Add::element& s) { return s[0] - s[1]; };
    CHECK(extend_hom<Nat2Add, IntAddGroup>(phi, Fraction<Nat2Add>{{1, 0}, {0, 2}}) == -3);
    // Constant identity homomorphism extends to the constant identity.
    auto triv = [](const NatMul::element&) { return Rat(1); };
    CHECK(extend_hom<NatMul, RatMulGroup>(triv, Fraction<NatMul>{5, 7}) == Rat(1));
}
