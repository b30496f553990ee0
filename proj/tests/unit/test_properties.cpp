#include <catch_amalgamated.hpp>

#include "support/properties.hpp"
#include "support/successor.hpp"

using namespace fgdyn;

// Reduced sample counts; the acceptance run uses the full counts.

TEST_CASE("word laws on random words") {
    testing::Rng rng(1);
    const testing::Outcome o = testing::word_laws(rng, 1000);
    INFO(o.summary("word laws"));
    CHECK(o.ok());
}

TEST_CASE("truncation invariance") {
    testing::Rng rng(2);
    const testing::Outcome n = testing::truncation_in_n(rng, 150);
    INFO(n.summary("truncation in n"));
    CHECK(n.ok());
    const testing::Outcome m = testing::truncation_in_m(rng, 150);
    INFO(m.summary("truncation in m"));
    CHECK(m.ok());
}

TEST_CASE("shift identities in the generic regime") {
    testing::Rng rng(3);
    const testing::Outcome t = testing::tail_shift(rng, 150);
    INFO(t.summary("tail shift"));
    CHECK(t.ok());
    const testing::Outcome i = testing::interior_shift(rng, 150);
    INFO(i.summary("interior shift"));
    CHECK(i.ok());
}

TEST_CASE("Collatz-Wielandt bounds bracket the Perron root") {
    testing::Rng rng(4);
    const testing::Outcome o = testing::collatz_wielandt_sandwich(rng, 60, 30);
    INFO(o.summary("sandwich"));
    CHECK(o.ok());
}

TEST_CASE("fold is confluent") {
    testing::Rng rng(5);
    const testing::Outcome o = testing::fold_confluence(rng, 150);
    INFO(o.summary("fold confluence"));
    CHECK(o.ok());
}

TEST_CASE("successor law for two families") {
    const CatalogSet cats = CatalogSet::load_default();
    for (FamilyKind f : {FamilyKind::F11n, FamilyKind::F1nNp1}) {
        const testing::SuccessorCheck sc = testing::check_successor_law(f, cats);
        INFO(family_name(f) << ": " << sc.problem);
        CHECK(sc.holds());
    }
}
