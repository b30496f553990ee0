#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fgdyn/word.hpp"

namespace fgdyn {

enum class FamilyKind { F11n, F12n, F1n2, F1nNp1, F1Np1n, F1mnGapUp, F1mnGapDown };

std::string family_name(FamilyKind f);
FamilyKind family_from_name(const std::string& name);  // throws ParseError

// Throws RangeError outside every family's parameter window, and for m = n.
FamilyKind family_of(int m, int n);
bool in_family_range(int m, int n);

// Longest image any single apply/iterate step may produce before BudgetExceeded is thrown.
inline constexpr std::size_t kImageLetterBudget = 10'000'000;

class Endomorphism {
public:
    Endomorphism() = default;
    // `images` is indexed by RankContext coordinate.
    Endomorphism(RankContext ctx, std::vector<Word> images);
    static Endomorphism identity(RankContext ctx);

    const RankContext& ctx() const { return ctx_; }
    const Word& image(const Letter& generator) const;  // image of the positive generator
    const std::vector<Word>& images() const { return images_; }

    Word apply(const Word& w) const;
    Word iterate(const Word& w, int k) const;

private:
    RankContext ctx_;
    std::vector<Word> images_;
    std::vector<Word> inverse_images_;
};

Endomorphism build_action(int m, int n);
inline Word apply(const Endomorphism& e, const Word& w) { return e.apply(w); }
inline Word iterate(const Endomorphism& e, const Word& w, int k) { return e.iterate(w, k); }

int period_k(int m, int n);

// Letter shared by every semigroup generator of a family: a leading a1 or a trailing c1.
enum class Anchor { FirstA1, LastC1 };
Anchor anchor_of(FamilyKind f);
Letter anchor_letter(Anchor a);

}  // namespace fgdyn
