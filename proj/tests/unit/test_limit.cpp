#include <catch2/catch_amalgamated.hpp>

#include "oredil/direct_limit.hpp"
#include "oredil/zhat.hpp"

using namespace oredil;

namespace {
ZhatFn c1() { return zh_const(GaussRat(Rat(1))); }
GaussRat g1() { return GaussRat(Rat(1)); }
} // namespace

TEST_CASE("periodic functions on the profinite completion") {
    // alpha_2 of the constant 1 is the indicator of the even part.
    CHECK(zh_alpha(2, c1()) == zh_indicator(2));
    CHECK(zh_values_at(zh_indicator(2), 2) == std::vector<GaussRat>{g1(), GaussRat()});
    CHECK(zh_alpha(1, zh_make(3, {g1(), GaussRat(), g1()})) ==
          zh_make(3, {g1(), GaussRat(), g1()}));
    ZhatFn f = zh_make(2, {g1(), GaussRat(Rat(1, 2))});
    CHECK(zh_alpha(2, zh_alpha(3, f)) == zh_alpha(6, f));
    // Minimal-period normal form: a level-4 write of a period-2 function.
    CHECK(zh_make(4, {g1(), GaussRat(), g1(), GaussRat()}) == zh_indicator(2));
    CHECK(zh_alpha_preimage(2, zh_alpha(2, f)).value() == f);
    CHECK(!zh_alpha_preimage(2, zh_make(2, {GaussRat(), g1()})).has_value());
}

TEST_CASE("classes in the limit identify along the connecting maps") {
    ZhatFn f = zh_make(2, {g1(), GaussRat()});
    CHECK(lim_eq<BcSystem>({1, f}, {2, zh_alpha(2, f)}));
    CHECK(!lim_eq<BcSystem>({1, f}, {1, zh_indicator(3)}));
    // Distinct levels compare after lifting to the common level 6.
    CHECK(lim_eq<BcSystem>({2, zh_alpha(2, f)}, {3, zh_alpha(3, f)}));
    CHECK(lim_eq<BcSystem>(i_embed<BcSystem>(c1()), LimElement<BcSystem>{1, c1()}));
    // Compression finds the minimal level.
    LimElement<BcSystem> raw{6, zh_alpha(6, f)};
    LimElement<BcSystem> min = lim_compress<BcSystem>(raw);
    CHECK(min.s == 1);
    CHECK(min.a == f);
}

TEST_CASE("limit algebra operations at a common level") {
    ZhatFn f = zh_make(2, {g1(), GaussRat()});
    ZhatFn g = zh_make(3, {GaussRat(), g1(), GaussRat(Rat(1, 3))});
    LimElement<BcSystem> b2{2, f}, b3{3, g};
    CHECK(lim_eq<BcSystem>(lim_add<BcSystem>(b2, b2), {2, zh_add(f, f)}));
    CHECK(lim_eq<BcSystem>(lim_mul<BcSystem>(b2, b3), {6, zh_mul(zh_alpha(3, f), zh_alpha(2, g))}));
    CHECK(lim_eq<BcSystem>(lim_star<BcSystem>({2, zh_scale(GaussRat::i(), f)}),
                           {2, zh_scale(-GaussRat::i(), f)}));
    CHECK(lim_is_zero(lim_add<BcSystem>(b2, lim_scale<BcSystem>(GaussRat(Rat(-1)), b2))));
}

TEST_CASE("the fraction group acts by beta") {
    ZhatFn f = zh_make(2, {g1(), GaussRat()});
    // beta_2 of class(2, f) is class(1, f).
    CHECK(lim_eq<BcSystem>(beta_embed<BcSystem>(2, {2, f}), {1, f}));
    // beta_2 on the embedded algebra is alpha_2.
    CHECK(lim_eq<BcSystem>(beta_embed<BcSystem>(2, i_embed<BcSystem>(f)),
                           i_embed<BcSystem>(zh_alpha(2, f))));
    Fraction<NatMul> g{2, 3};
    LimElement<BcSystem> b{2, f};
    CHECK(lim_eq<BcSystem>(beta_apply<BcSystem>(frac_inv<NatMul>(g), beta_apply<BcSystem>(g, b)), b));
    CHECK(lim_eq<BcSystem>(
        beta_apply<BcSystem>(g, beta_apply<BcSystem>(Fraction<NatMul>{3, 5}, b)),
        beta_apply<BcSystem>(frac_mul<NatMul>(g, Fraction<NatMul>{3, 5}), b)));
}

TEST_CASE("localization finds the level-wise preimages") {
    ZhatFn f = zh_make(2, {g1(), GaussRat()});
    LimElement<BcSystem> b{2, f};
    CHECK(lim_localize<BcSystem>(b, 2).value() == f);
    CHECK(lim_localize<BcSystem>(b, 4).value() == zh_alpha(2, f));
    // The odd indicator at level 2 is not in the range of any alpha_u, u > 1.
    ZhatFn odd = zh_make(2, {GaussRat(), g1()});
    CHECK(!lim_localize<BcSystem>({2, odd}, 1).has_value());
    CHECK(lim_localize<BcSystem>({2, odd}, 2).value() == odd);
}

TEST_CASE("the identity realization of the limit dilates trivially") {
    GenericSelfModel<BcSystem> mo;
    ZhatFn f = zh_make(2, {g1(), GaussRat()});
    LimElement<BcSystem> b{3, f};
    CHECK(lim_eq<BcSystem>(theta_map(mo, b), b));
    auto wits = dilation_iso_check<BcSystem>(mo, {b, i_embed<BcSystem>(f)}, {2, 3},
                                             {Fraction<NatMul>{2, 3}}, {zh_indicator(2)});
    CHECK(wits.empty());
}
