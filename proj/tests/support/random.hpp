#pragma once

// Hand-rolled generators for the property suites. Every generator takes the engine by
// reference so that a suite seeded once is reproducible.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "fgdyn/spectral.hpp"
#include "fgdyn/word.hpp"

namespace fgdyn::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Letter random_letter(Rng& rng, const std::vector<Letter>& alphabet) {
    const Letter& g = alphabet[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(alphabet.size()) - 1))];
    return uniform_int(rng, 0, 1) ? g : g.inverse();
}

// Raw letter sequence (not reduced) over the positive generators in `alphabet`.
inline std::vector<Letter> random_raw(Rng& rng, const std::vector<Letter>& alphabet, int max_len) {
    std::vector<Letter> out(static_cast<std::size_t>(uniform_int(rng, 0, max_len)));
    for (Letter& l : out) l = random_letter(rng, alphabet);
    return out;
}

inline Word random_word(Rng& rng, const std::vector<Letter>& alphabet, int max_len) {
    return reduce(random_raw(rng, alphabet, max_len));
}

inline Word random_word(Rng& rng, const RankContext& ctx, int max_len) {
    return random_word(rng, ctx.generators(), max_len);
}

// Nonempty cyclically reduced word.
inline Word random_cyclic_word(Rng& rng, const RankContext& ctx, int max_len) {
    for (;;) {
        Word w = cyclic_reduce(random_word(rng, ctx, max_len)).core;
        if (!w.empty()) return w;
    }
}

// a_1..a_j, b_1, c_1..c_i.
inline std::vector<Letter> span_letters(int j, int i) {
    std::vector<Letter> out;
    for (int x = 1; x <= j; ++x) out.push_back(a(x));
    out.push_back(b());
    for (int x = 1; x <= i; ++x) out.push_back(c(x));
    return out;
}

// Random primitive matrix: a random Hamiltonian cycle makes it irreducible and one positive
// diagonal entry makes it aperiodic; remaining entries are sparse small integers.
inline TransitionMatrix random_primitive_matrix(Rng& rng, int dim) {
    TransitionMatrix M(dim);
    std::vector<int> perm(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < dim; ++i) {
        M.at(perm[static_cast<std::size_t>((i + 1) % dim)], perm[static_cast<std::size_t>(i)]) += 1;
    }
    M.at(uniform_int(rng, 0, dim - 1), uniform_int(rng, 0, dim - 1)) += 1;
    const int d = uniform_int(rng, 0, dim - 1);
    M.at(d, d) += 1;
    const int extra = uniform_int(rng, 0, 2 * dim);
    for (int e = 0; e < extra; ++e) M.at(uniform_int(rng, 0, dim - 1), uniform_int(rng, 0, dim - 1)) += uniform_int(rng, 1, 3);
    return M;
}

}  // namespace fgdyn::testing
