#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fgdyn/word.hpp"

namespace fgdyn {

// Labelled graph for a finitely generated subgroup of the free group on ctx.
// Vertex 0 is the basepoint; an edge (u, x, v) reads the positive generator x from u to v.
class SubgroupGraph {
public:
    struct Edge {
        int from;
        int label;  // RankContext coordinate
        int to;
        friend bool operator==(const Edge&, const Edge&) = default;
        friend auto operator<=>(const Edge&, const Edge&) = default;
    };

    // Wedge of one loop per nonempty generator, all through the basepoint.
    static SubgroupGraph wedge(const std::vector<Word>& generators, const RankContext& ctx);

    // Identifies same-labelled edges until the graph is folded. With an rng the edge
    // processing order is shuffled on every pass.
    void fold(std::mt19937_64* rng = nullptr);

    const RankContext& ctx() const { return ctx_; }
    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool is_folded() const;

    // Renumbering by breadth-first search from the basepoint, exploring outgoing labels then
    // incoming labels in coordinate order. Equal for isomorphic folded graphs.
    std::vector<Edge> canonical_edges() const;
    std::uint64_t canonical_hash() const;

private:
    RankContext ctx_;
    int vertex_count_ = 1;
    std::vector<Edge> edges_;
};

struct FoldResult {
    int rank = 0;
    std::optional<long long> index;  // nullopt means infinite index
    bool complete = false;
    int vertices = 0;
    int edges = 0;

    bool whole_group(const RankContext& ctx) const { return rank == ctx.rank() && index && *index == 1; }
};

FoldResult fold(const std::vector<Word>& generators, const RankContext& ctx);
FoldResult fold_result(const SubgroupGraph& folded);

using IntMatrix = std::vector<std::vector<long long>>;  // row-major

// (1+m+n) x |generators| matrix; column j is abelianize(generators[j]).
IntMatrix abelianization_matrix(const std::vector<Word>& generators, const RankContext& ctx);

// Exact determinant by fraction-free (Bareiss) elimination. Throws RangeError unless square.
long long exact_determinant(const IntMatrix& square);
std::string exact_determinant_string(const IntMatrix& square);

struct UnimodularMinor {
    std::vector<int> columns;  // sorted ascending
    long long determinant = 0;  // ±1, recomputed exactly
};

// Picks rows(A) columns including must_include whose square minor has determinant ±1.
// Exhaustive depth-first search (with saturation and rank pruning) when A has at most 24
// columns; otherwise seeded randomized restarts with a node budget each.
std::optional<UnimodularMinor> unimodular_minor(const IntMatrix& A, int must_include);

IntMatrix select_columns(const IntMatrix& A, const std::vector<int>& columns);

}  // namespace fgdyn
