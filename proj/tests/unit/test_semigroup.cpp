#include <catch_amalgamated.hpp>

#include <set>

#include "fgdyn/catalog.hpp"
#include "fgdyn/error.hpp"
#include "fgdyn/semigroup.hpp"

using namespace fgdyn;

namespace {

const CatalogSet& cats() {
    static const CatalogSet set = CatalogSet::load_default();
    return set;
}

std::vector<std::string> factor_names(const VerificationReport& vr, const std::string& name) {
    for (std::size_t j = 0; j < vr.names.size(); ++j) {
        if (vr.names[j] != name) continue;
        std::vector<std::string> out;
        for (int f : vr.factors[j]) out.push_back(vr.names[static_cast<std::size_t>(f)]);
        return out;
    }
    return {};
}

std::set<Word> as_set(const std::vector<Word>& ws) { return {ws.begin(), ws.end()}; }

}  // namespace

TEST_CASE("build_semigroup sizes and names") {
    const Semigroup s116 = build_semigroup(1, 16, cats());
    REQUIRE(s116.size() == 18);
    CHECK(s116[0].name == "s1");
    CHECK(s116[10].name == "s11");
    CHECK(s116[11].name == "alpha10");
    CHECK(s116[17].name == "alpha16");

    const Semigroup s219 = build_semigroup(2, 19, cats());
    CHECK(s219.size() == 31 + 7 + 7);
    CHECK(s219.index_of("s31"));
    CHECK(s219.index_of("alpha13"));
    CHECK(s219.index_of("beta19"));
    CHECK_FALSE(s219.index_of("beta12"));

    const Semigroup s1314 = build_semigroup(13, 14, cats());
    CHECK(s1314.size() == 27 + 2 + 4 * 7);
    CHECK(s1314.index_of("beta1_13"));
    CHECK(s1314.index_of("beta2_13"));
    CHECK(s1314.index_of("alpha4_13"));
    CHECK(s1314.index_of("alpha1_7"));
}

TEST_CASE("extract_conjugator") {
    const Semigroup s116 = build_semigroup(1, 16, cats());
    CHECK(format(extract_conjugator(build_action(1, 16), 6, s116)) == "a1 -a2 b1 -a3 a4 -c1 a5 -a6 -a1");
    const Semigroup s219 = build_semigroup(2, 19, cats());
    CHECK(format(extract_conjugator(build_action(2, 19), 5, s219)) == "a1 -a2 b1 -a3 a4 -c1 a5 -c2 -a1");
    CHECK(extract_conjugator(Endomorphism::identity(RankContext{1, 16}), 1, s116).empty());
}

TEST_CASE("factor_positive") {
    const Semigroup s = build_semigroup(1, 16, cats());
    const auto idx = [&](const char* name) { return static_cast<int>(*s.index_of(std::string(name))); };
    const Word w = s[static_cast<std::size_t>(idx("s3"))].word * s[static_cast<std::size_t>(idx("alpha12"))].word *
                   s[static_cast<std::size_t>(idx("s1"))].word * s[static_cast<std::size_t>(idx("s11"))].word;
    CHECK(factor_positive(w, s) == std::vector<int>{idx("s3"), idx("alpha12"), idx("s1"), idx("s11")});
    CHECK(factor_positive(s[0].word, s) == std::vector<int>{0});
    CHECK_THROWS_AS(factor_positive(s[0].word.inverse(), s), NoFactorization);
}

TEST_CASE("verify_invariance on the printed base cases") {
    const VerificationReport v116 = verify_invariance(1, 16, cats());
    CHECK(v116.verified());
    CHECK(v116.k == 6);
    CHECK(factor_names(v116, "s1") == std::vector<std::string>{"s3", "alpha12", "s1", "s11"});
    CHECK(factor_names(v116, "alpha16") == std::vector<std::string>{"s2", "s7", "alpha10"});

    const VerificationReport v219 = verify_invariance(2, 19, cats());
    CHECK(v219.verified());
    CHECK(factor_names(v219, "alpha14") == std::vector<std::string>{"s15", "s2", "s18", "s19", "beta19"});

    const VerificationReport v1716 = verify_invariance(17, 16, cats());
    CHECK(v1716.verified());
    CHECK(v1716.k == 8);
    CHECK(factor_names(v1716, "alpha1_8").size() == 45);
}

TEST_CASE("verify_invariance across the small cells of every family") {
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{1, 8}, {1, 9}, {2, 7}, {7, 2}, {5, 6}, {6, 5}, {3, 6}, {6, 3}}) {
        INFO("(" << m << "," << n << ")");
        const VerificationReport vr = verify_invariance(m, n, cats());
        CHECK(vr.verified());
        CHECK(vr.cyclic_positive);
    }
}

TEST_CASE("the (1,4,5) conjugator does not linearize every generator") {
    // Frozen outcome: every image still factors cyclically, but one generator needs a rotation.
    const VerificationReport vr = verify_invariance(4, 5, cats());
    CHECK_FALSE(vr.verified());
    CHECK(vr.cyclic_positive);
    CHECK(vr.generators.size() == 21);
}

TEST_CASE("discover_generators") {
    CHECK(discover_generators(1, 8, parse("a1 a6 -a3"), 6).size() == 11);
    const CatalogInstance i18 = cats().instantiate(1, 8);
    CHECK(discover_generators(1, 8, i18.seed, 6).size() == 10);

    const Semigroup d72 = discover_generators(7, 2, parse("a1 b1 -c3 a2 -c6 -c1"), 5);
    CHECK(d72.size() == 21);
    CHECK(as_set(d72.words()) == as_set(build_semigroup(7, 2, cats()).words()));

    const CatalogInstance i45 = cats().instantiate(4, 5);
    CHECK(discover_generators(4, 5, i45.seed, 6).size() == 21);
    const CatalogInstance i56 = cats().instantiate(5, 6);
    CHECK(discover_generators(5, 6, i56.seed, 6).size() == 25);
}

TEST_CASE("anchor rotation and segmentation") {
    const Word core = parse("a6 -a3 a1");
    const auto rotated = anchor_rotation(core, Anchor::FirstA1);
    REQUIRE(rotated);
    CHECK(*rotated == parse("a1 a6 -a3"));
    CHECK_FALSE(anchor_rotation(parse("a6 -a3"), Anchor::FirstA1));

    const auto segs = anchor_segments(parse("a1 a6 -a3 a1 a7 -a3"), Anchor::FirstA1);
    CHECK(segs == std::vector<Word>{parse("a1 a6 -a3"), parse("a1 a7 -a3")});
    const auto csegs = anchor_segments(parse("a3 -c2 c1 -a2 b1 c1"), Anchor::LastC1);
    CHECK(csegs == std::vector<Word>{parse("a3 -c2 c1"), parse("-a2 b1 c1")});
}
