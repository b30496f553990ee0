#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgdyn/catalog.hpp"
#include "fgdyn/family.hpp"
#include "fgdyn/word.hpp"

namespace fgdyn {

// Ordered, named generator list. When an anchor is set, every generator must start with a1
// (FirstA1) or end with c1 (LastC1); this makes concatenations cancellation-free.
class Semigroup {
public:
    Semigroup() = default;
    Semigroup(RankContext ctx, std::vector<NamedWord> generators, std::optional<Anchor> anchor);

    const RankContext& ctx() const { return ctx_; }
    std::optional<Anchor> anchor() const { return anchor_; }
    std::size_t size() const { return gens_.size(); }
    const std::vector<NamedWord>& generators() const { return gens_; }
    const NamedWord& operator[](std::size_t i) const { return gens_[i]; }
    std::vector<Word> words() const;
    std::optional<std::size_t> index_of(const std::string& name) const;
    std::optional<std::size_t> index_of(const Word& w) const;

private:
    RankContext ctx_;
    std::vector<NamedWord> gens_;
    std::optional<Anchor> anchor_;
};

Semigroup build_semigroup(const CatalogInstance& inst);
Semigroup build_semigroup(int m, int n, const CatalogSet& catalogs);
Semigroup build_semigroup(int m, int n);  // default catalog directory

// Common conjugator δ with iterate(e, g, k) = δ · P_g · δ⁻¹ and every P_g a positive word.
// Without an anchor the maximal cyclic conjugators must coincide. With an anchor each generator
// admits two candidates (cut the cyclic core at its first or at its last anchor letter); the
// shortest candidate shared by all generators is returned.
Word extract_conjugator(const Endomorphism& e, int k, const Semigroup& gens);

// Unique factorization of w as a concatenation of generator words.
// Throws NoFactorization when none exists and AmbiguousSegmentation when several exist.
std::vector<int> factor_positive(const Word& w, const Semigroup& gens);

enum class VerificationStatus { Verified, Failed };

struct VerificationReport {
    int m = 0;
    int n = 0;
    int k = 0;
    FamilyKind family = FamilyKind::F11n;
    Word conjugator;
    std::vector<std::string> names;
    std::vector<Word> generators;
    // factors[j] lists the generator indices of the image of generator j. When the linear
    // factorization failed for j, the entry holds the factorization of the rotated cyclic core.
    std::vector<std::vector<int>> factors;
    std::vector<bool> linear_ok;  // δ⁻¹ · f^k(g_j) · δ factored positively
    bool cyclic_positive = false;  // every cyclic core factors positively
    VerificationStatus status = VerificationStatus::Failed;
    std::string detail;

    bool verified() const { return status == VerificationStatus::Verified; }
};

VerificationReport verify_invariance(const Semigroup& s, const Endomorphism& e, int k, const Word& conjugator);
VerificationReport verify_invariance(int m, int n, const CatalogSet& catalogs, std::optional<int> k_override = std::nullopt);
VerificationReport verify_invariance(int m, int n);

// Rotation of a cyclically reduced word so that it begins with a1 (FirstA1) or ends with c1 (LastC1).
// Returns nullopt when the anchor letter does not occur.
std::optional<Word> anchor_rotation(const Word& core, Anchor anchor);
// Cuts an anchored word before every a1 (FirstA1) or after every c1 (LastC1).
std::vector<Word> anchor_segments(const Word& anchored, Anchor anchor);

inline std::size_t closure_cap(int m, int n) { return static_cast<std::size_t>(8 * (1 + m + n)); }

// Closure of {seed} under g ↦ anchor segments of the cyclic core of iterate(e, g, k).
// Generators are named g1, g2, ... in discovery order. Throws NonClosure when the set grows
// beyond closure_cap(m, n) or an image exceeds the letter budget.
Semigroup discover_generators(int m, int n, const Word& seed, int k);

}  // namespace fgdyn
