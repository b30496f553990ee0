#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fgdyn/family.hpp"
#include "fgdyn/semigroup.hpp"
#include "fgdyn/word.hpp"

namespace fgdyn {

// Nonnegative integer matrix; entry (i, j) counts generator i in the image of generator j.
class TransitionMatrix {
public:
    TransitionMatrix() = default;
    explicit TransitionMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0) {}

    int dim() const { return dim_; }
    long long at(int i, int j) const { return a_[idx(i, j)]; }
    long long& at(int i, int j) { return a_[idx(i, j)]; }
    long long column_sum(int j) const;
    bool is_nonnegative() const;

    friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;

    // Dimension line, then one line of space-separated entries per row.
    void dump(std::ostream& out) const;
    static TransitionMatrix read(std::istream& in);

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j); }
    int dim_ = 0;
    std::vector<long long> a_;
};

TransitionMatrix matrix_from_factors(int dim, const std::vector<std::vector<int>>& factors);

// Reads the counts off the report. Accepts verified reports and, failing that, reports whose
// cyclic cores all factor positively; throws SpectralError otherwise.
TransitionMatrix transition_matrix(const VerificationReport& report);

struct IrreducibilityResult {
    bool irreducible = false;
    std::vector<std::vector<int>> components;  // strongly connected components, edge j -> i when M(i,j) > 0
};
IrreducibilityResult is_irreducible(const TransitionMatrix& M);

struct PrimitivityResult {
    bool primitive = false;
    std::optional<int> diagonal_index;     // first positive diagonal entry
    std::optional<long long> wielandt_power;  // exponent checked when no diagonal entry is positive
    std::string reason;
};
PrimitivityResult is_primitive(const TransitionMatrix& M);

struct SpectralCertificate {
    bool irreducible = false;
    bool primitive = false;
    std::string primitivity_reason;
    double perron_root = 0;
    double cw_lower = 0;
    double cw_upper = 0;
    long long iterations = 0;
    std::vector<std::pair<double, double>> trace;  // (lower, upper) per step when requested
};

inline constexpr long long kPerronIterationCap = 1'000'000;

// Power iteration from the all-ones vector with max-normalization, tracking the
// Collatz–Wielandt bounds min/max (Mv)_i / v_i until upper - lower <= tol.
// Throws SpectralError for non-primitive input or when the cap is reached.
SpectralCertificate perron_root(const TransitionMatrix& M, double tol = 1e-10, bool record_trace = false,
                                long long iteration_cap = kPerronIterationCap);

struct GrowthSample {
    int j = 0;
    std::size_t length = 0;  // cyclically reduced length of iterate(e, w, j*k)
    double root = 0;         // length^(1/(j*k))
};

// Throws RangeError for the empty word, BudgetExceeded when an iterate grows past the letter budget.
std::vector<GrowthSample> growth_estimate(const Endomorphism& e, const Word& w, int k, int j_max);

// Expresses each letter of the ambient free group as a word in the free basis `basis` by
// labelled Stallings folding. Result[c] is a word over symbols a1..a_r (symbol i = basis[i-1]).
// Throws SpectralError when `basis` is not a free basis of the whole group.
std::vector<Word> express_letters_in_basis(const std::vector<Word>& basis, const RankContext& ctx);

struct FreeBasisMatrix {
    TransitionMatrix matrix;          // (1+m+n)-dimensional M_G
    std::vector<int> basis_columns;   // semigroup indices of w_1 .. w_r, w_1 = g_star
    std::vector<std::vector<long long>> recoding;  // r x |S| counts of w_i^{±1} in each generator
};

// Rewrites every semigroup generator in the basis (semigroup indices, g_star first) and returns
// R · M restricted to the basis columns.
FreeBasisMatrix free_basis_matrix(const Semigroup& s, const TransitionMatrix& M, const std::vector<int>& basis_columns);
// Full pipeline for one pair: catalog, verification, unimodular minor containing g_star, recoding.
FreeBasisMatrix free_basis_matrix(int m, int n, const CatalogSet& catalogs);

// Semigroup index of the distinguished core generator: s1 for (1,1,n), s4 for (1,n,2), s2
// otherwise; the seed (first generator) for finite-range cells.
int distinguished_generator(const CatalogInstance& inst, const Semigroup& s);

}  // namespace fgdyn
