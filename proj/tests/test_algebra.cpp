#include <doctest.h>

#include "spinconf/algebra.hpp"
#include "spinconf/polyreal.hpp"

using namespace spinconf::algebra;
using spinconf::exactla::ExactScalar;
using GL = GeneratorLabel;

TEST_CASE("n=1 table: three generators, [K0,P0] = -2iD") {
    StructureTable t = build_conformal_table(1);
    CHECK(t.generators().size() == 3);
    Combination c = t.bracket(GL::k(0), GL::p(0));
    REQUIRE(c.size() == 1);
    CHECK(c.at(GL::d()) == ExactScalar(-2) * ExactScalar::i());
}

TEST_CASE("n=4 table: 15 generators, [K0,P1] = -2iL01") {
    StructureTable t = build_conformal_table(4);
    CHECK(t.generators().size() == 15);
    Combination c = t.bracket(GL::k(0), GL::p(1));
    REQUIRE(c.size() == 1);
    CHECK(c.at(GL::l(0, 1)) == ExactScalar(-2) * ExactScalar::i());
}

TEST_CASE("antisymmetry and Jacobi are exhaustive exact zeros") {
    for (int n : {1, 2, 4}) {
        StructureTable t(n);
        CHECK(t.check_antisymmetry());
        CHECK(t.check_jacobi());
    }
}

TEST_CASE("L-index canonicalization") {
    Combination c = StructureTable::canonical_l(2, 1, ExactScalar(1));
    REQUIRE(c.size() == 1);
    CHECK(c.at(GL::l(1, 2)) == ExactScalar(-1));
    CHECK(StructureTable::canonical_l(1, 1, ExactScalar(1)).empty());
}

TEST_CASE("swap automorphism preserves the full n=4 table") {
    StructureTable t = build_conformal_table(4);
    Report rep = verify_automorphism_swap(t);
    // 105 bracket pairs (the involution rows only appear on failure)
    CHECK(rep.pairs.size() == 105);
    CHECK(rep.all_zero());

    // spot checks of the image relations
    // [D,P] = iP maps to [-D,K] = iK, consistent with [D,K] = -iK
    Combination img = t.bracket(swap_automorphism(GL::d()), swap_automorphism(GL::p(2)));
    REQUIRE(img.size() == 1);
    CHECK(img.at(GL::k(2)) == ExactScalar::i());
    // [P,P] = 0 maps onto [K,K] = 0
    CHECK(is_zero(t.bracket(swap_automorphism(GL::p(0)), swap_automorphism(GL::p(1)))));
}

TEST_CASE("swap preserves tables for n=1 and n=2") {
    for (int n : {1, 2}) {
        StructureTable t = build_conformal_table(n);
        CHECK(verify_automorphism_swap(t).all_zero());
    }
}

TEST_CASE("verify_realization flags a corrupted generator") {
    using namespace spinconf::polyreal;
    StructureTable t = build_conformal_table(2);
    MonomialBasis basis(2, 3);
    GXSet gx = build_GX(basis, t, ExactScalar(2));
    REQUIRE(verify_realization(gx.generators).all_zero());

    GeneratorSet bad = gx.generators;
    bad.realization[GL::p(0)].at(0, 1) += ExactScalar(1);
    Report rep = verify_realization(bad);
    CHECK_FALSE(rep.all_zero());
    bool named = false;
    for (const auto& pr : rep.pairs)
        if (!pr.zero && (pr.a == GL::p(0) || pr.b == GL::p(0))) named = true;
    CHECK(named);
}
