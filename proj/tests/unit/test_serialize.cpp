#include <catch2/catch_amalgamated.hpp>

#include "oredil/crossed_product.hpp"
#include "oredil/serialize.hpp"

using namespace oredil;
using oredil::js::json;

TEST_CASE("scalar payloads round-trip through JSON") {
    for (Rat q : {Rat(0), Rat(-7, 3), Rat(22)})
        CHECK(js::rat_from_json(js::to_json(q)) == q);
    GaussRat c(Rat(1, 2), Rat(-3));
    CHECK(js::gauss_from_json(js::to_json(c)) == c);
    CHECK(js::phase_from_json(js::to_json(Phase(3, 4))) == Phase(3, 4));
    CHECK(js::to_json(Rat(1, 2)).get<std::string>() == "1/2");
}

TEST_CASE("monoid elements use compact instance-specific forms") {
    CHECK(js::element_from_json<NatMul>(js::element_to_json<NatMul>(12)) == 12);
    CHECK(js::element_from_json<NatAdd>(js::element_to_json<NatAdd>(5)) == 5);
    Nat2Add::element s{3, 4};
    CHECK(js::element_from_json<Nat2Add>(js::element_to_json<Nat2Add>(s)) == s);
    Mat2 m{{2, 1, 1, 1}};
    CHECK(js::element_from_json<IntMat2Pos>(js::element_to_json<IntMat2Pos>(m)) == m);
    CHECK(js::element_to_json<IntMat2Pos>(m) == json::parse("[[2,1],[1,1]]"));
}

TEST_CASE("fractions and dilation vectors round-trip") {
    Fraction<NatMul> g{4, 6};
    auto g2 = js::fraction_from_json<NatMul>(js::fraction_to_json<NatMul>(g));
    CHECK(g2.x == g.x);
    CHECK(g2.y == g.y);
    DilVec<NatAdd> xi{2, hv_add(hv_basis<NatAdd>(0), hv_scale(GaussRat::i(), hv_basis<NatAdd>(3)))};
    auto xi2 = js::dil_from_json<NatAdd>(js::dil_to_json<NatAdd>(xi));
    CHECK(xi2.level == xi.level);
    CHECK(hv_eq(xi2.h, xi.h));
}

TEST_CASE("function payloads normalize on the way in") {
    ZhatFn f = zh_make(4, {GaussRat(Rat(1)), GaussRat(), GaussRat(Rat(1)), GaussRat()});
    CHECK(js::zhat_from_json(js::to_json(f)) == f);
    // A non-minimal level in the payload collapses to the normal form.
    json fat = json::parse(R"({"N": 2, "values": [["1","0"], ["1","0"]]})");
    CHECK(js::zhat_from_json(fat) == zh_const(GaussRat(Rat(1))));
    AdeleFn F = af_beta(1, 2, i_embed_adele(zh_indicator(2)));
    CHECK(js::adele_from_json(js::to_json(F)) == F);
    LimElement<BcSystem> b{3, zh_indicator(3)};
    auto b2 = js::lim_from_json<BcSystem>(js::lim_to_json<BcSystem>(b));
    CHECK(lim_eq(b2, b));
    LimElement<PolyPowers> q{2, PolyPowers::alg{{2, GaussRat(Rat(1))}, {4, GaussRat::i()}}};
    auto q2 = js::lim_from_json<PolyPowers>(js::lim_to_json<PolyPowers>(q));
    CHECK(lim_eq(q2, q));
}

TEST_CASE("crossed-product elements keep phases and formal units") {
    auto ctx = make_cp_context<BcSystem>(NatMulValuationBichar{});
    auto X = cp_add(ctx, sg_monomial(ctx, {2, zh_indicator(2), 3, Phase(1, 4)}),
                    cp_term(ctx, frac_identity<NatMul>(),
                            ul_from_unit<BcSystem>(GaussRat(Rat(2)))));
    json j = js::cp_to_json(ctx, X);
    CHECK(cp_eq(ctx, js::cp_from_json(ctx, j), X));
    // The unit field appears only where a formal-unit part is present.
    bool any_unit = false;
    for (const auto& term : j)
        any_unit = any_unit || term.contains("unit");
    CHECK(any_unit);
}

TEST_CASE("multiplier descriptors identify the built-in families") {
    CHECK(js::to_json(TrivialMultiplier<NatMul>{}).at("name") == "trivial");
    CHECK(js::to_json(Nat2Bicharacter{}).at("theta") == "1/4");
    CHECK(js::to_json(NatMulValuationBichar{}).at("name") == "natmul-valuation-bicharacter");
}
