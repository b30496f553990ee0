#include <catch_amalgamated.hpp>

#include "fgdyn/error.hpp"
#include "fgdyn/family.hpp"
#include "support/random.hpp"

using namespace fgdyn;

TEST_CASE("family_of classifies the seven parameter windows") {
    CHECK(family_of(1, 16) == FamilyKind::F11n);
    CHECK(family_of(2, 7) == FamilyKind::F12n);
    CHECK(family_of(7, 2) == FamilyKind::F1n2);
    CHECK(family_of(6, 7) == FamilyKind::F1nNp1);
    CHECK(family_of(7, 6) == FamilyKind::F1Np1n);
    CHECK(family_of(3, 5) == FamilyKind::F1mnGapUp);
    CHECK(family_of(9, 4) == FamilyKind::F1mnGapDown);
}

TEST_CASE("family_of rejects pairs outside every window") {
    CHECK_THROWS_AS(family_of(1, 7), RangeError);
    CHECK_THROWS_AS(family_of(2, 6), RangeError);
    CHECK_THROWS_AS(family_of(6, 2), RangeError);
    CHECK_THROWS_AS(family_of(3, 4), RangeError);
    CHECK_THROWS_AS(family_of(5, 5), RangeError);
    CHECK_THROWS_AS(family_of(0, 9), RangeError);
    CHECK_FALSE(in_family_range(1, 7));
    CHECK(in_family_range(1, 8));
}

TEST_CASE("family names round trip") {
    for (FamilyKind f : {FamilyKind::F11n, FamilyKind::F12n, FamilyKind::F1n2, FamilyKind::F1nNp1, FamilyKind::F1Np1n,
                         FamilyKind::F1mnGapUp, FamilyKind::F1mnGapDown}) {
        CHECK(family_from_name(family_name(f)) == f);
    }
    CHECK(family_name(FamilyKind::F1Np1n) == "F1Np1n");
    CHECK_THROWS_AS(family_from_name("F99"), ParseError);
}

TEST_CASE("build_action transcribes the printed images") {
    const Endomorphism e116 = build_action(1, 16);
    CHECK(e116.image(b(1)) == parse("a1"));
    CHECK(e116.image(a(2)) == parse("a1 -b1 a3 -c1"));
    CHECK(e116.image(a(16)) == parse("c1"));
    CHECK(e116.image(c(1)) == parse("b1"));
    CHECK(e116.image(a(7)) == parse("c1 -a8 -a1 b1"));

    CHECK(build_action(2, 19).image(c(1)) == parse("a1 c2 -c1 b1"));
    CHECK(build_action(17, 2).image(a(2)) == parse("c1"));
}

TEST_CASE("apply and iterate") {
    const Endomorphism e = build_action(1, 16);
    CHECK(apply(e, parse("b1")) == parse("a1"));
    CHECK(apply(e, Word{}).empty());
    CHECK(iterate(e, parse("a16"), 2) == parse("b1"));
    CHECK(iterate(e, parse("a16"), 0) == parse("a16"));
    CHECK(apply(e, parse("-b1")) == parse("-a1"));
}

TEST_CASE("period and anchor per family") {
    CHECK(period_k(1, 16) == 6);
    CHECK(period_k(13, 14) == 6);
    CHECK(period_k(17, 16) == 8);
    CHECK(period_k(2, 19) == 5);
    CHECK(period_k(17, 2) == 5);
    CHECK(period_k(20, 27) == 8);
    CHECK(anchor_of(FamilyKind::F11n) == Anchor::FirstA1);
    CHECK(anchor_of(FamilyKind::F1Np1n) == Anchor::LastC1);
    CHECK(anchor_of(FamilyKind::F1mnGapDown) == Anchor::LastC1);
    CHECK(anchor_letter(Anchor::LastC1) == c(1));
}

TEST_CASE("actions are homomorphisms on random words") {
    testing::Rng rng(11);
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{1, 9}, {2, 8}, {8, 2}, {5, 6}, {6, 5}, {3, 6}, {6, 3}}) {
        const Endomorphism e = build_action(m, n);
        const RankContext ctx{m, n};
        for (int i = 0; i < 100; ++i) {
            const Word u = testing::random_word(rng, ctx, 10);
            const Word v = testing::random_word(rng, ctx, 10);
            CHECK(e.apply(u * v) == e.apply(u) * e.apply(v));
            CHECK(e.apply(u.inverse()) == e.apply(u).inverse());
        }
    }
}

TEST_CASE("images never leave the rank context") {
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{1, 8}, {2, 7}, {7, 2}, {4, 5}, {5, 4}, {3, 5}, {5, 3}}) {
        const Endomorphism e = build_action(m, n);
        const RankContext ctx{m, n};
        for (const Letter& g : ctx.generators()) {
            for (const Letter& l : e.image(g)) CHECK(ctx.contains(l));
        }
    }
}
