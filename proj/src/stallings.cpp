#include "fgdyn/stallings.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "fgdyn/error.hpp"

namespace fgdyn {

using boost::multiprecision::cpp_int;

SubgroupGraph SubgroupGraph::wedge(const std::vector<Word>& generators, const RankContext& ctx) {
    SubgroupGraph g;
    g.ctx_ = ctx;
    g.vertex_count_ = 1;
    for (const Word& w : generators) {
        int v = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const int next = i + 1 == w.size() ? 0 : g.vertex_count_++;
            const int label = ctx.coordinate(w[i]);
            if (w[i].sign > 0) {
                g.edges_.push_back({v, label, next});
            } else {
                g.edges_.push_back({next, label, v});
            }
            v = next;
        }
    }
    return g;
}

void SubgroupGraph::fold(std::mt19937_64* rng) {
    std::vector<int> parent(static_cast<std::size_t>(vertex_count_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    std::vector<std::size_t> order(edges_.size());
    std::iota(order.begin(), order.end(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        if (rng) std::shuffle(order.begin(), order.end(), *rng);
        std::map<std::pair<int, int>, int> out;
        std::map<std::pair<int, int>, int> in;
        for (std::size_t idx : order) {
            const Edge& e = edges_[idx];
            const int u = find(e.from);
            const int v = find(e.to);
            if (auto [it, fresh] = out.emplace(std::make_pair(u, e.label), v); !fresh) {
                const int w = find(it->second);
                if (w != v) {
                    parent[static_cast<std::size_t>(w)] = v;
                    changed = true;
                }
            }
            const int u2 = find(e.from);
            const int v2 = find(e.to);
            if (auto [it, fresh] = in.emplace(std::make_pair(v2, e.label), u2); !fresh) {
                const int w = find(it->second);
                if (w != u2) {
                    parent[static_cast<std::size_t>(w)] = u2;
                    changed = true;
                }
            }
        }
    }
    // Compact: the basepoint's class becomes vertex 0.
    std::map<int, int> renumber;
    renumber[find(0)] = 0;
    for (int x = 0; x < vertex_count_; ++x) {
        const int r = find(x);
        if (!renumber.count(r)) {
            const int id = static_cast<int>(renumber.size());
            renumber[r] = id;
        }
    }
    std::vector<Edge> folded;
    for (const Edge& e : edges_) folded.push_back({renumber[find(e.from)], e.label, renumber[find(e.to)]});
    std::sort(folded.begin(), folded.end());
    folded.erase(std::unique(folded.begin(), folded.end()), folded.end());
    edges_ = std::move(folded);
    vertex_count_ = static_cast<int>(renumber.size());
}

bool SubgroupGraph::is_folded() const {
    std::map<std::pair<int, int>, int> out;
    std::map<std::pair<int, int>, int> in;
    for (const Edge& e : edges_) {
        if (!out.emplace(std::make_pair(e.from, e.label), e.to).second) return false;
        if (!in.emplace(std::make_pair(e.to, e.label), e.from).second) return false;
    }
    return true;
}

std::vector<SubgroupGraph::Edge> SubgroupGraph::canonical_edges() const {
    const int labels = ctx_.rank();
    std::vector<std::vector<int>> out(static_cast<std::size_t>(vertex_count_), std::vector<int>(static_cast<std::size_t>(labels), -1));
    std::vector<std::vector<int>> in = out;
    for (const Edge& e : edges_) {
        out[static_cast<std::size_t>(e.from)][static_cast<std::size_t>(e.label)] = e.to;
        in[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.label)] = e.from;
    }
    std::vector<int> id(static_cast<std::size_t>(vertex_count_), -1);
    std::deque<int> queue{0};
    id[0] = 0;
    int next = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (const auto* table : {&out, &in}) {
            for (int l = 0; l < labels; ++l) {
                const int w = (*table)[static_cast<std::size_t>(v)][static_cast<std::size_t>(l)];
                if (w >= 0 && id[static_cast<std::size_t>(w)] < 0) {
                    id[static_cast<std::size_t>(w)] = next++;
                    queue.push_back(w);
                }
            }
        }
    }
    std::vector<Edge> canon;
    for (const Edge& e : edges_) canon.push_back({id[static_cast<std::size_t>(e.from)], e.label, id[static_cast<std::size_t>(e.to)]});
    std::sort(canon.begin(), canon.end());
    return canon;
}

std::uint64_t SubgroupGraph::canonical_hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(vertex_count_));
    for (const Edge& e : canonical_edges()) {
        mix(static_cast<std::uint64_t>(e.from));
        mix(static_cast<std::uint64_t>(e.label));
        mix(static_cast<std::uint64_t>(e.to));
    }
    return h;
}

FoldResult fold_result(const SubgroupGraph& g) {
    FoldResult r;
    r.vertices = g.vertex_count();
    r.edges = static_cast<int>(g.edges().size());
    r.rank = r.edges - r.vertices + 1;
    const long long needed = static_cast<long long>(g.vertex_count()) * g.ctx().rank();
    // A folded graph has at most one edge per (vertex, label) in each direction, so it is
    // complete exactly when the edge count reaches V * rank.
    r.complete = static_cast<long long>(r.edges) == needed;
    if (r.complete) r.index = r.vertices;
    return r;
}

FoldResult fold(const std::vector<Word>& generators, const RankContext& ctx) {
    SubgroupGraph g = SubgroupGraph::wedge(generators, ctx);
    g.fold();
    return fold_result(g);
}

IntMatrix abelianization_matrix(const std::vector<Word>& generators, const RankContext& ctx) {
    IntMatrix A(static_cast<std::size_t>(ctx.rank()), std::vector<long long>(generators.size(), 0));
    for (std::size_t j = 0; j < generators.size(); ++j) {
        const AbelianVector v = abelianize(generators[j], ctx);
        for (std::size_t i = 0; i < v.size(); ++i) A[i][j] = v[i];
    }
    return A;
}

IntMatrix select_columns(const IntMatrix& A, const std::vector<int>& columns) {
    IntMatrix out(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
        for (int c : columns) out[i].push_back(A[i][static_cast<std::size_t>(c)]);
    }
    return out;
}

namespace {

cpp_int bareiss(const IntMatrix& square) {
    const std::size_t n = square.size();
    for (const auto& row : square) {
        if (row.size() != n) throw RangeError("determinant of a non-square matrix");
    }
    if (n == 0) return 1;
    std::vector<std::vector<cpp_int>> M(n, std::vector<cpp_int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] = square[i][j];
    }
    cpp_int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && M[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(M[k], M[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
            }
        }
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

}  // namespace

long long exact_determinant(const IntMatrix& square) {
    const cpp_int d = bareiss(square);
    if (d > cpp_int(std::numeric_limits<long long>::max()) || d < cpp_int(std::numeric_limits<long long>::min())) {
        throw RangeError("determinant does not fit in 64 bits");
    }
    return static_cast<long long>(d);
}

std::string exact_determinant_string(const IntMatrix& square) { return bareiss(square).str(); }

namespace {

// Rank of the given integer vectors modulo a prime p.
int rank_mod(std::vector<std::vector<long long>> rows, long long p) {
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (auto& r : rows) {
        for (auto& x : r) x = ((x % p) + p) % p;
    }
    auto inv = [&](long long a) {
        long long result = 1, base = a, e = p - 2;
        while (e > 0) {
            if (e & 1) result = static_cast<long long>((__int128)result * base % p);
            base = static_cast<long long>((__int128)base * base % p);
            e >>= 1;
        }
        return result;
    };
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows.size(); ++c) {
        std::size_t piv = row;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[row], rows[piv]);
        const long long iv = inv(rows[row][c]);
        for (std::size_t i = row + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const long long f = static_cast<long long>((__int128)rows[i][c] * iv % p);
            for (std::size_t j = c; j < cols; ++j) {
                rows[i][j] = static_cast<long long>(((__int128)rows[i][j] - (__int128)f * rows[row][j] % p + p) % p);
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

class MinorSearch {
public:
    MinorSearch(const IntMatrix& A, std::vector<int> order, std::uint64_t node_budget)
        : A_(A), r_(A.size()), order_(std::move(order)), budget_(node_budget) {}

    // Returns true when a selection was found; `exhausted` tells whether the budget held.
    bool run(int must_include) {
        std::vector<std::vector<cpp_int>> U(r_, std::vector<cpp_int>(r_));
        for (std::size_t i = 0; i < r_; ++i) U[i][i] = 1;
        if (!extend(U, 0, must_include)) return false;
        selected_.push_back(must_include);
        if (dfs(U, 1, 0)) return true;
        selected_.pop_back();
        return false;
    }

    const std::vector<int>& selected() const { return selected_; }
    bool out_of_budget() const { return out_of_budget_; }

private:
    std::vector<cpp_int> image(const std::vector<std::vector<cpp_int>>& U, int col) const {
        std::vector<cpp_int> y(r_);
        for (std::size_t i = 0; i < r_; ++i) {
            cpp_int acc = 0;
            for (std::size_t j = 0; j < r_; ++j) {
                const long long a = A_[j][static_cast<std::size_t>(col)];
                if (a != 0 && U[i][j] != 0) acc += U[i][j] * a;
            }
            y[i] = acc;
        }
        return y;
    }

    // Tries to add column `col` as the (t+1)-th basis vector. On success U maps it to e_t.
    bool extend(std::vector<std::vector<cpp_int>>& U, std::size_t t, int col) const {
        std::vector<cpp_int> y = image(U, col);
        cpp_int g = 0;
        for (std::size_t i = t; i < r_; ++i) g = boost::multiprecision::gcd(g, y[i]);
        if (g != 1) return false;
        // Euclid on the lower block, mirrored on the rows of U.
        for (;;) {
            std::size_t best = r_;
            for (std::size_t i = t; i < r_; ++i) {
                if (y[i] != 0 && (best == r_ || abs(y[i]) < abs(y[best]))) best = i;
            }
            if (best != t) {
                std::swap(y[best], y[t]);
                std::swap(U[best], U[t]);
            }
            bool done = true;
            for (std::size_t i = t + 1; i < r_; ++i) {
                if (y[i] == 0) continue;
                const cpp_int q = y[i] / y[t];
                y[i] -= q * y[t];
                for (std::size_t j = 0; j < r_; ++j) U[i][j] -= q * U[t][j];
                if (y[i] != 0) done = false;
            }
            if (done) break;
        }
        if (y[t] < 0) {
            y[t] = -y[t];
            for (auto& x : U[t]) x = -x;
        }
        for (std::size_t i = 0; i < t; ++i) {
            if (y[i] == 0) continue;
            const cpp_int q = y[i];
            for (std::size_t j = 0; j < r_; ++j) U[i][j] -= q * U[t][j];
        }
        return true;
    }

    // Necessary condition: the remaining columns reach full rank in the quotient modulo small primes.
    bool feasible(const std::vector<std::vector<cpp_int>>& U, std::size_t t, std::size_t from) const {
        const std::size_t need = r_ - t;
        if (order_.size() - from < need) return false;
        std::vector<std::vector<cpp_int>> imgs;
        for (std::size_t p = from; p < order_.size(); ++p) imgs.push_back(image(U, order_[p]));
        for (long long prime : {2LL, 3LL, 1000000007LL}) {
            std::vector<std::vector<long long>> rows;
            for (const auto& y : imgs) {
                std::vector<long long> row;
                for (std::size_t i = t; i < r_; ++i) {
                    cpp_int v = y[i] % prime;
                    if (v < 0) v += prime;
                    row.push_back(static_cast<long long>(v));
                }
                rows.push_back(std::move(row));
            }
            if (static_cast<std::size_t>(rank_mod(rows, prime)) < need) return false;
        }
        return true;
    }

    bool dfs(const std::vector<std::vector<cpp_int>>& U, std::size_t t, std::size_t from) {
        if (t == r_) return true;
        if (++nodes_ > budget_) {
            out_of_budget_ = true;
            return false;
        }
        if (!feasible(U, t, from)) return false;
        for (std::size_t p = from; p < order_.size(); ++p) {
            std::vector<std::vector<cpp_int>> next = U;
            if (!extend(next, t, order_[p])) continue;
            selected_.push_back(order_[p]);
            if (dfs(next, t + 1, p + 1)) return true;
            selected_.pop_back();
            if (out_of_budget_) return false;
        }
        return false;
    }

    const IntMatrix& A_;
    std::size_t r_;
    std::vector<int> order_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool out_of_budget_ = false;
    std::vector<int> selected_;
};

}  // namespace

std::optional<UnimodularMinor> unimodular_minor(const IntMatrix& A, int must_include) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    if (rows == 0) return UnimodularMinor{{}, 1};
    if (rows > cols) return std::nullopt;
    if (must_include < 0 || static_cast<std::size_t>(must_include) >= cols) throw RangeError("must_include out of range");

    auto finish = [&](std::vector<int> sel) -> std::optional<UnimodularMinor> {
        std::sort(sel.begin(), sel.end());
        const long long det = exact_determinant(select_columns(A, sel));
        if (det != 1 && det != -1) throw Error("internal: unimodular search produced determinant " + std::to_string(det));
        return UnimodularMinor{std::move(sel), det};
    };

    std::vector<int> rest;
    for (int c = 0; c < static_cast<int>(cols); ++c) {
        if (c != must_include) rest.push_back(c);
    }
    if (cols <= 24) {
        MinorSearch s(A, rest, std::numeric_limits<std::uint64_t>::max());
        if (s.run(must_include)) return finish(s.selected());
        return std::nullopt;
    }
    std::mt19937_64 rng(0x5eed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<int> order = rest;
        if (attempt > 0) std::shuffle(order.begin(), order.end(), rng);
        MinorSearch s(A, order, 4096);
        if (s.run(must_include)) return finish(s.selected());
    }
    return std::nullopt;
}

}  // namespace fgdyn
