#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fgdyn/family.hpp"
#include "fgdyn/word.hpp"

namespace fgdyn {

// Single: the candidate itself must be fixed. Doubled: the product ω·ω̄ must be fixed,
// where ω̄ inverts every letter of ω in place (no reversal).
enum class BoundaryForm { Single, Doubled };

const char* boundary_form_name(BoundaryForm f);

Word letterwise_inverse(const Word& w);
Word doubled(const Word& w);
Word boundary_target(const Word& omega, BoundaryForm form);

// True when apply(e, target) and target agree as cyclic words.
bool fixes_cyclically(const Endomorphism& e, const Word& target);

// Parity rule as printed: even 1+m+n fixes ω itself, odd 1+m+n fixes ω·ω̄.
BoundaryForm predicted_form(int m, int n);

inline constexpr std::uint64_t kBoundaryNodeBudget = 1'000'000;

// Largest number of letters cancelled when the images of two letters x, y with y != x^-1
// are concatenated. With no image fully cancelled this bounds how far appending letters can
// reach back into the image of a prefix.
int pair_cancellation_bound(const Endomorphism& e);

struct BoundarySearchResult {
    std::optional<Word> omega;
    std::uint64_t nodes = 0;
    bool exhausted = false;    // true when the pruned tree was fully explored within budget
    bool on_the_nose = false;  // apply(target) == target letter for letter
};

// Depth-first search over words that use every generator once with alternating signs, pruned
// by requiring the image of the current prefix (minus a trailing margin) to agree with the
// target. Candidates that survive are checked exactly. A negative margin selects
// pair_cancellation_bound(e).
BoundarySearchResult search_boundary_word(const Endomorphism& e, BoundaryForm form,
                                          std::uint64_t node_budget = kBoundaryNodeBudget,
                                          int stable_margin = -1);

struct BoundaryWord {
    CyclicWord omega;
    Word omega_word;  // as found by the search, before rotation to canonical form
    BoundaryForm form = BoundaryForm::Single;
    bool matches_predicted_parity = false;
    bool on_the_nose = false;
    std::uint64_t nodes = 0;
};

// Tries the predicted form first, then the other one. Throws NotAvailable when neither is found.
BoundaryWord boundary_word(int m, int n, std::uint64_t node_budget = kBoundaryNodeBudget);

// Every nonempty cyclic word of length <= max_len fixed by e up to conjugacy, sorted by length
// then lexicographically. Throws BudgetExceeded once more than node_cap words have been visited.
std::vector<CyclicWord> find_fixed_cyclic_words(const Endomorphism& e, int max_len,
                                                std::uint64_t node_cap = 50'000'000);

}  // namespace fgdyn
