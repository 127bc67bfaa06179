#include <catch2/catch_amalgamated.hpp>

#include "oredil/adele.hpp"

using namespace oredil;

namespace {
ZhatFn c1() { return zh_const(GaussRat(Rat(1))); }
GaussRat g1() { return GaussRat(Rat(1)); }
} // namespace

TEST_CASE("locally constant functions normalize to minimal lattice and level") {
    // Values on (1/2)Z supported only on the integer part shrink to n = 1.
    AdeleFn a = af_make(2, 1, {g1(), GaussRat()});
    CHECK(a.n == 1);
    CHECK(a.N == 1);
    CHECK(a.v == std::vector<GaussRat>{g1()});
    // A level-4 write of a period-2 pattern coarsens to N = 2.
    AdeleFn b = af_make(1, 4, {g1(), GaussRat(), g1(), GaussRat()});
    CHECK(b.N == 2);
    CHECK(b.v == std::vector<GaussRat>{g1(), GaussRat()});
    CHECK(af_make(3, 2, std::vector<GaussRat>(6)) == af_zero());
    // Refinement is the inverse of normalization.
    CHECK(af_values_at(b, 1, 4) == std::vector<GaussRat>{g1(), GaussRat(), g1(), GaussRat()});
    CHECK(af_values_at(b, 2, 2) ==
          std::vector<GaussRat>{g1(), GaussRat(), GaussRat(), GaussRat()});
}

TEST_CASE("the embedded copy of the compact part") {
    ZhatFn f = zh_indicator(2);
    AdeleFn F = i_embed_adele(f);
    CHECK(F.n == 1);
    CHECK(af_restrict_zhat(F) == f);
    CHECK(af_mul(i_embed_adele(f), i_embed_adele(c1())) == i_embed_adele(zh_mul(f, c1())));
    // Support grid at lattice 1/2, level 2: half-integer points vanish and
    // integer points keep f's values.
    CHECK(af_values_at(F, 2, 2) ==
          std::vector<GaussRat>{g1(), GaussRat(), GaussRat(), GaussRat()});
}

TEST_CASE("beta scales the argument by a positive rational") {
    for (std::int64_t nn : {2, 3, 6}) {
        ZhatFn f = zh_make(2, {g1(), GaussRat(Rat(1, 2))});
        CHECK(af_beta(nn, 1, i_embed_adele(f)) == i_embed_adele(zh_alpha(nn, f)));
    }
    // beta_{1/2} of the even indicator is the constant 1 on Zhat.
    CHECK(af_beta(1, 2, i_embed_adele(zh_indicator(2))) == i_embed_adele(c1()));
    // The action inverts and composes.
    AdeleFn F = af_beta(1, 3, i_embed_adele(zh_make(3, {g1(), GaussRat(), GaussRat(Rat(2))})));
    CHECK(af_beta(2, 1, af_beta(1, 2, F)) == F);
    CHECK(af_beta_frac(Fraction<NatMul>{3, 2}, F) == af_beta(2, 3, F));
    // Common factors in the fraction cancel first.
    CHECK(af_beta(4, 6, F) == af_beta(2, 3, F));
}

TEST_CASE("theta realizes limit classes as adele functions") {
    CHECK(theta_iso(LimElement<BcSystem>{1, c1()}) == i_embed_adele(c1()));
    AdeleFn half = theta_iso(LimElement<BcSystem>{2, c1()});
    CHECK(half.n == 2);
    CHECK(half.N == 1);
    CHECK(half.v == std::vector<GaussRat>{g1(), g1()}); // constant on (1/2)Zhat
    // Identified representatives map to the same function.
    ZhatFn f = zh_make(2, {g1(), GaussRat()});
    CHECK(theta_iso(LimElement<BcSystem>{1, f}) ==
          theta_iso(LimElement<BcSystem>{2, zh_alpha(2, f)}));
    // Two-sided inverse.
    LimElement<BcSystem> b = lim_compress<BcSystem>({6, zh_make(4, {g1(), GaussRat(), GaussRat(Rat(1, 3)), GaussRat()})});
    CHECK(lim_eq(theta_inv(theta_iso(b)), b));
    AdeleFn F = af_beta(1, 4, i_embed_adele(zh_make(2, {GaussRat(), g1()})));
    CHECK(theta_iso(theta_inv(F)) == F);
    // Equivariance.
    Fraction<NatMul> g{3, 2};
    CHECK(theta_iso(beta_apply(g, b)) == af_beta_frac(g, theta_iso(b)));
}

TEST_CASE("the corner of the adele picture is the compact part") {
    AdeleFn one = i_embed_adele(c1());
    AdeleFn F = af_beta(1, 2, i_embed_adele(zh_make(4, {g1(), GaussRat(), GaussRat(Rat(5)), GaussRat()})));
    CHECK(af_mul(one, af_mul(F, one)) == i_embed_adele(af_restrict_zhat(F)));
    CHECK(af_mul(one, i_embed_adele(zh_indicator(3))) == i_embed_adele(zh_indicator(3)));
    CHECK(af_star(af_scale(GaussRat::i(), F)) == af_scale(-GaussRat::i(), af_star(F)));
}
