#include <catch_amalgamated.hpp>

#include <algorithm>

#include "fgdyn/boundary.hpp"
#include "fgdyn/error.hpp"
#include "fgdyn/family.hpp"

using namespace fgdyn;

namespace {

// Brute-force oracle: every cyclically reduced word up to max_len, kept when its image is
// conjugate to it.
std::vector<CyclicWord> brute_fixed(const Endomorphism& e, std::size_t max_len) {
    std::vector<Letter> alphabet;
    for (const Letter& g : e.ctx().generators()) {
        alphabet.push_back(g);
        alphabet.push_back(g.inverse());
    }
    std::set<CyclicWord> out;
    std::vector<std::vector<Letter>> layer{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& w : layer) {
            for (const Letter& x : alphabet) {
                if (!w.empty() && w.back() == x.inverse()) continue;
                auto v = w;
                v.push_back(x);
                next.push_back(v);
            }
        }
        for (const auto& v : next) {
            const Word w = Word::from_reduced(v);
            if (!w.is_cyclically_reduced()) continue;
            if (CyclicWord(e.apply(w)) == CyclicWord(w)) out.insert(CyclicWord(w));
        }
        layer = std::move(next);
    }
    std::vector<CyclicWord> sorted(out.begin(), out.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const CyclicWord& x, const CyclicWord& y) { return x.size() < y.size(); });
    return sorted;
}

}  // namespace

TEST_CASE("letterwise inverse and doubled words") {
    const Word w = parse("a1 -a2 b1");
    CHECK(letterwise_inverse(w) == parse("-a1 a2 -b1"));
    CHECK(doubled(w) == parse("a1 -a2 b1 -a1 a2 -b1"));
    CHECK(boundary_target(w, BoundaryForm::Single) == w);
    CHECK(boundary_target(w, BoundaryForm::Doubled) == doubled(w));
    CHECK(std::string(boundary_form_name(BoundaryForm::Doubled)) == "doubled");
}

TEST_CASE("parity rule for the predicted form") {
    CHECK(predicted_form(1, 8) == BoundaryForm::Single);   // 1+m+n = 10
    CHECK(predicted_form(1, 9) == BoundaryForm::Doubled);  // 11
    CHECK(predicted_form(2, 7) == BoundaryForm::Single);
}

TEST_CASE("the printed omega_C at (1,1,8)") {
    const Endomorphism e = build_action(1, 8);
    const Word omega = parse("a1 -a2 b1 -a3 a4 -c1 a5 -a6 a7 -a8");
    // Frozen: the single word maps to omega_C followed by -a1 b1 -c1, so it is not fixed on its own,
    // while its doubled form is fixed letter for letter.
    CHECK(e.apply(omega) == parse("a1 -a2 b1 -a3 a4 -c1 a5 -a6 a7 -a8 -a1 b1 -c1"));
    CHECK_FALSE(fixes_cyclically(e, omega));
    CHECK(e.apply(doubled(omega)) == doubled(omega));
}

TEST_CASE("boundary search at (1,1,8) and (1,1,16)") {
    const BoundarySearchResult r8 = search_boundary_word(build_action(1, 8), BoundaryForm::Doubled);
    REQUIRE(r8.omega);
    CHECK(format(*r8.omega) == "a1 -a2 b1 -a3 a4 -c1 a5 -a6 a7 -a8");

    const BoundarySearchResult single16 = search_boundary_word(build_action(1, 16), BoundaryForm::Single);
    CHECK_FALSE(single16.omega);
    CHECK(single16.exhausted);
    const BoundarySearchResult r16 = search_boundary_word(build_action(1, 16), BoundaryForm::Doubled);
    REQUIRE(r16.omega);
    CHECK(fixes_cyclically(build_action(1, 16), doubled(*r16.omega)));
}

TEST_CASE("boundary_word reports the form it found") {
    const BoundaryWord bw = boundary_word(1, 8);
    CHECK(bw.form == BoundaryForm::Doubled);
    CHECK_FALSE(bw.matches_predicted_parity);
    CHECK(bw.on_the_nose);
    CHECK(bw.omega == CyclicWord(parse("a1 -a2 b1 -a3 a4 -c1 a5 -a6 a7 -a8")));
}

TEST_CASE("pair cancellation bound is small for the family actions") {
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{1, 8}, {2, 7}, {7, 2}, {4, 5}, {5, 4}, {3, 5}, {5, 3}}) {
        const int bound = pair_cancellation_bound(build_action(m, n));
        CHECK(bound >= 1);
        CHECK(bound <= 3);
    }
    CHECK(pair_cancellation_bound(Endomorphism::identity(RankContext{1, 2})) == 0);
}

TEST_CASE("find_fixed_cyclic_words") {
    const Endomorphism id = Endomorphism::identity(RankContext{1, 2});
    const std::vector<CyclicWord> singles = find_fixed_cyclic_words(id, 1);
    CHECK(singles.size() == 8);  // four generators and their inverses

    const Endomorphism e18 = build_action(1, 8);
    // Frozen: no fixed cyclic word of length <= 5. Length 10 is out of reach for the exhaustive
    // enumeration at rank 10; the printed omega_C is checked directly above.
    CHECK(find_fixed_cyclic_words(e18, 5).empty());

    CHECK(find_fixed_cyclic_words(build_action(1, 16), 3).empty());
    CHECK_THROWS_AS(find_fixed_cyclic_words(id, 0), RangeError);
}

TEST_CASE("find_fixed_cyclic_words agrees with brute force on small lengths") {
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{1, 8}, {2, 7}, {3, 5}}) {
        const Endomorphism e = build_action(m, n);
        CHECK(find_fixed_cyclic_words(e, 4) == brute_fixed(e, 4));
    }
    const Endomorphism id = Endomorphism::identity(RankContext{1, 1});
    CHECK(find_fixed_cyclic_words(id, 3) == brute_fixed(id, 3));
}
