#include <catch2/catch_amalgamated.hpp>

#include "oredil/checks/check_dilation.hpp"
#include "oredil/dilation.hpp"
#include "oredil/hilbert.hpp"
#include "oredil/multiplier.hpp"

using namespace oredil;

TEST_CASE("regular representation: shift with a phase twist") {
    auto shift = regular_rep(TrivialMultiplier<NatAdd>{});
    CHECK(hv_eq(shift.apply(1, hv_basis<NatAdd>(0)), hv_basis<NatAdd>(1)));
    CHECK(shift.apply_adjoint(1, hv_basis<NatAdd>(0)).c.empty()); // V_1* d_0 = 0
    for (std::int64_t s : {1, 2, 5})
        for (std::int64_t x : {0, 3, 7})
            CHECK(hv_eq(shift.apply_adjoint(s, shift.apply(s, hv_basis<NatAdd>(x))),
                        hv_basis<NatAdd>(x)));

    auto tw = regular_rep(Nat2Bicharacter{});
    HVec<Nat2Add> got = tw.apply({0, 1}, hv_basis<Nat2Add>({1, 0}));
    CHECK(hv_eq(got, hv_scale(Phase(1, 4).scalar(), hv_basis<Nat2Add>({1, 1}))));
}

TEST_CASE("embedding into the dilation space is isometric") {
    auto rep = regular_rep(TrivialMultiplier<NatAdd>{});
    auto d0 = dil_embed<NatAdd>(hv_basis<NatAdd>(0));
    auto d1 = dil_embed<NatAdd>(hv_basis<NatAdd>(1));
    CHECK(dil_inner(rep, d0, d0) == GaussRat(1));
    CHECK(dil_inner(rep, d0, d1) == GaussRat());
    CHECK(hv_is_zero(dil_embed<NatAdd>(HVec<NatAdd>{}).h));
}

TEST_CASE("inner products across levels go through a common lift") {
    auto rep = regular_rep(TrivialMultiplier<NatAdd>{});
    DilVec<NatAdd> xi{1, hv_basis<NatAdd>(0)};
    CHECK(dil_inner(rep, xi, xi) == GaussRat(1));
    // Lifting embed(d_1) to level 1 yields (1, d_2), orthogonal to (1, d_0).
    auto lifted = dil_lift(rep, 1, dil_embed<NatAdd>(hv_basis<NatAdd>(1)));
    CHECK(lifted.level == 1);
    CHECK(hv_eq(lifted.h, hv_basis<NatAdd>(2)));
    CHECK(dil_inner(rep, xi, dil_embed<NatAdd>(hv_basis<NatAdd>(1))) == GaussRat());
    // Conjugate symmetry on a non-trivial pair.
    DilVec<NatAdd> eta{2, hv_add(hv_basis<NatAdd>(1), hv_scale(GaussRat::i(), hv_basis<NatAdd>(3)))};
    CHECK(dil_inner(rep, xi, eta) == dil_inner(rep, eta, xi).conj());
}

TEST_CASE("compressions of the dilation recover the isometries") {
    auto rep = regular_rep(TrivialMultiplier<NatAdd>{});
    // U_t applied to (t,h) lands back in the embedded copy.
    DilVec<NatAdd> xi{1, hv_basis<NatAdd>(0)};
    CHECK(dil_eq(rep, dil_apply_Us(rep, 1, xi), dil_embed<NatAdd>(hv_basis<NatAdd>(0))));
    // U_x* of an embedded vector is literally (x, h).
    auto down = dil_apply_Us_star(rep, 1, dil_embed<NatAdd>(hv_basis<NatAdd>(0)));
    CHECK(down.level == 1);
    CHECK(hv_eq(down.h, hv_basis<NatAdd>(0)));
    // U_x U_x* = identity.
    DilVec<NatAdd> mix{2, hv_add(hv_basis<NatAdd>(0), hv_basis<NatAdd>(4))};
    CHECK(dil_eq(rep, dil_apply_Us(rep, 3, dil_apply_Us_star(rep, 3, mix)), mix));
    // U_s restricted to the embedded copy is V_s.
    CHECK(dil_eq(rep, dil_apply_Us(rep, 2, dil_embed<NatAdd>(hv_basis<NatAdd>(1))),
                 dil_embed<NatAdd>(rep.apply(2, hv_basis<NatAdd>(1)))));
}

TEST_CASE("the group representation hits negative shifts") {
    TrivialMultiplier<NatAdd> lam;
    auto rep = regular_rep(lam);
    auto mu = extend_multiplier(lam);
    Fraction<NatAdd> minus_one{1, 0};
    auto got = dil_apply_group(rep, mu, minus_one, dil_embed<NatAdd>(hv_basis<NatAdd>(0)));
    CHECK(dil_eq(rep, got, DilVec<NatAdd>{1, hv_basis<NatAdd>(0)}));
    CHECK(dil_eq(rep, dil_apply_group(rep, mu, frac_identity<NatAdd>(), got), got));
}

TEST_CASE("bilateral-shift model agrees with the abstract dilation") {
    using namespace oredil::bilateral;
    auto rep = regular_rep(TrivialMultiplier<NatAdd>{});
    DilVec<NatAdd> xi{1, hv_basis<NatAdd>(0)};
    LVec expect;
    lz_accumulate(expect, -1, GaussRat(1));
    CHECK(phi(xi) == expect); // (1, d_0) sits at position -1
    CHECK(phi(dil_apply_Us(rep, 2, xi)) == lz_shift(2, phi(xi)));
    CHECK(phi(dil_apply_Us_star(rep, 2, xi)) == lz_shift(-2, phi(xi)));
    CHECK(lz_inner(phi(xi), phi(xi)) == dil_inner(rep, xi, xi));
}
