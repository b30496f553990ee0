#include "fgdyn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <istream>
#include <map>
#include <ostream>

#include "fgdyn/error.hpp"
#include "fgdyn/stallings.hpp"

namespace fgdyn {

long long TransitionMatrix::column_sum(int j) const {
    long long s = 0;
    for (int i = 0; i < dim_; ++i) s += at(i, j);
    return s;
}

bool TransitionMatrix::is_nonnegative() const {
    return std::all_of(a_.begin(), a_.end(), [](long long x) { return x >= 0; });
}

void TransitionMatrix::dump(std::ostream& out) const {
    out << dim_ << '\n';
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) out << (j ? " " : "") << at(i, j);
        out << '\n';
    }
}

TransitionMatrix TransitionMatrix::read(std::istream& in) {
    int dim = 0;
    if (!(in >> dim) || dim < 0) throw ParseError("matrix dump: missing dimension line");
    TransitionMatrix M(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            if (!(in >> M.at(i, j))) throw ParseError("matrix dump: truncated at row " + std::to_string(i));
        }
    }
    return M;
}

TransitionMatrix matrix_from_factors(int dim, const std::vector<std::vector<int>>& factors) {
    TransitionMatrix M(dim);
    for (int j = 0; j < static_cast<int>(factors.size()); ++j) {
        for (int i : factors[static_cast<std::size_t>(j)]) M.at(i, j) += 1;
    }
    return M;
}

TransitionMatrix transition_matrix(const VerificationReport& report) {
    if (!report.verified() && !report.cyclic_positive) {
        throw SpectralError("transition matrix needs a positive factorization of every image: " + report.detail);
    }
    return matrix_from_factors(static_cast<int>(report.generators.size()), report.factors);
}

IrreducibilityResult is_irreducible(const TransitionMatrix& M) {
    const int d = M.dim();
    if (d < 1) throw RangeError("is_irreducible needs dim >= 1");
    // Tarjan's algorithm on the digraph with edges j -> i for M(i,j) > 0.
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) {
            if (M.at(i, j) > 0) succ[static_cast<std::size_t>(j)].push_back(i);
        }
    }
    std::vector<int> index(static_cast<std::size_t>(d), -1), low(static_cast<std::size_t>(d), 0), stack;
    std::vector<bool> on_stack(static_cast<std::size_t>(d), false);
    int counter = 0;
    IrreducibilityResult r;
    std::function<void(int)> strong = [&](int v) {
        const auto uv = static_cast<std::size_t>(v);
        index[uv] = low[uv] = counter++;
        stack.push_back(v);
        on_stack[uv] = true;
        for (int w : succ[uv]) {
            const auto uw = static_cast<std::size_t>(w);
            if (index[uw] < 0) {
                strong(w);
                low[uv] = std::min(low[uv], low[uw]);
            } else if (on_stack[uw]) {
                low[uv] = std::min(low[uv], index[uw]);
            }
        }
        if (low[uv] == index[uv]) {
            std::vector<int> comp;
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[static_cast<std::size_t>(w)] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            r.components.push_back(std::move(comp));
        }
    };
    for (int v = 0; v < d; ++v) {
        if (index[static_cast<std::size_t>(v)] < 0) strong(v);
    }
    std::sort(r.components.begin(), r.components.end());
    r.irreducible = r.components.size() == 1;
    return r;
}

namespace {

using BoolMatrix = std::vector<std::vector<std::uint64_t>>;

BoolMatrix bool_multiply(const BoolMatrix& X, const BoolMatrix& Y, int d) {
    const std::size_t words = (static_cast<std::size_t>(d) + 63) / 64;
    BoolMatrix Z(static_cast<std::size_t>(d), std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
            if ((X[static_cast<std::size_t>(i)][static_cast<std::size_t>(k) / 64] >> (k % 64)) & 1u) {
                for (std::size_t w = 0; w < words; ++w) Z[static_cast<std::size_t>(i)][w] |= Y[static_cast<std::size_t>(k)][w];
            }
        }
    }
    return Z;
}

}  // namespace

PrimitivityResult is_primitive(const TransitionMatrix& M) {
    PrimitivityResult r;
    const int d = M.dim();
    if (!is_irreducible(M).irreducible) {
        r.reason = "not irreducible";
        return r;
    }
    for (int i = 0; i < d; ++i) {
        if (M.at(i, i) > 0) {
            r.primitive = true;
            r.diagonal_index = i;
            r.reason = "positive diagonal entry at index " + std::to_string(i);
            return r;
        }
    }
    const long long p = static_cast<long long>(d) * d - 2LL * d + 2;
    r.wielandt_power = p;
    const std::size_t words = (static_cast<std::size_t>(d) + 63) / 64;
    BoolMatrix base(static_cast<std::size_t>(d), std::vector<std::uint64_t>(words, 0));
    BoolMatrix acc = base;
    for (int i = 0; i < d; ++i) {
        acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
        for (int j = 0; j < d; ++j) {
            if (M.at(i, j) > 0) base[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) / 64] |= std::uint64_t{1} << (j % 64);
        }
    }
    for (long long e = p; e > 0; e >>= 1) {
        if (e & 1) acc = bool_multiply(acc, base, d);
        if (e > 1) base = bool_multiply(base, base, d);
    }
    bool positive = true;
    for (int i = 0; i < d && positive; ++i) {
        for (int j = 0; j < d; ++j) {
            if (!((acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) / 64] >> (j % 64)) & 1u)) {
                positive = false;
                break;
            }
        }
    }
    r.primitive = positive;
    r.reason = positive ? "M^" + std::to_string(p) + " is strictly positive" : "M^" + std::to_string(p) + " has a zero entry (periodic)";
    return r;
}

SpectralCertificate perron_root(const TransitionMatrix& M, double tol, bool record_trace, long long iteration_cap) {
    if (!(tol > 0)) throw RangeError("tolerance must be positive");
    const PrimitivityResult prim = is_primitive(M);
    if (!prim.primitive) throw SpectralError("perron_root needs a primitive matrix (" + prim.reason + ")");
    SpectralCertificate cert;
    cert.irreducible = true;
    cert.primitive = true;
    cert.primitivity_reason = prim.reason;

    const int d = M.dim();
    std::vector<std::vector<std::pair<int, double>>> rows(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (M.at(i, j) != 0) rows[static_cast<std::size_t>(i)].emplace_back(j, static_cast<double>(M.at(i, j)));
        }
    }
    std::vector<double> v(static_cast<std::size_t>(d), 1.0), w(static_cast<std::size_t>(d));
    for (long long it = 1; it <= iteration_cap; ++it) {
        double lo = INFINITY, hi = 0, top = 0;
        for (int i = 0; i < d; ++i) {
            double s = 0;
            for (const auto& [j, a] : rows[static_cast<std::size_t>(i)]) s += a * v[static_cast<std::size_t>(j)];
            w[static_cast<std::size_t>(i)] = s;
            const double ratio = s / v[static_cast<std::size_t>(i)];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            top = std::max(top, s);
        }
        cert.cw_lower = lo;
        cert.cw_upper = hi;
        cert.iterations = it;
        if (record_trace) cert.trace.emplace_back(lo, hi);
        if (hi - lo <= tol) {
            cert.perron_root = (lo + hi) / 2;
            return cert;
        }
        for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / top;
    }
    throw SpectralError("power iteration did not reach tolerance within " + std::to_string(iteration_cap) + " steps");
}

std::vector<GrowthSample> growth_estimate(const Endomorphism& e, const Word& w, int k, int j_max) {
    if (w.empty()) throw RangeError("growth_estimate needs a nonempty word");
    if (k < 1 || j_max < 1) throw RangeError("growth_estimate needs k >= 1 and j_max >= 1");
    std::vector<GrowthSample> out;
    Word cur = cyclic_reduce(w).core;
    for (int j = 1; j <= j_max; ++j) {
        // The cyclic core of f(u c u⁻¹) is the cyclic core of f(c), so iterating cores suffices.
        cur = cyclic_reduce(e.iterate(cur, k)).core;
        GrowthSample g;
        g.j = j;
        g.length = cur.size();
        g.root = std::pow(static_cast<double>(cur.size()), 1.0 / (static_cast<double>(j) * k));
        out.push_back(g);
    }
    return out;
}

std::vector<Word> express_letters_in_basis(const std::vector<Word>& basis, const RankContext& ctx) {
    struct LEdge {
        int from;
        int label;
        int to;
        Word value;  // word over basis symbols a1..a_r
        bool alive = true;
    };
    std::vector<LEdge> edges;
    int vertices = 1;
    for (std::size_t bi = 0; bi < basis.size(); ++bi) {
        const Word& w = basis[bi];
        if (w.empty()) throw SpectralError("basis contains the empty word");
        int v = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const int next = i + 1 == w.size() ? 0 : vertices++;
            const int label = ctx.coordinate(w[i]);
            // The first letter of each loop carries the basis symbol, read in the direction of traversal.
            Word val = i == 0 ? Word{a(static_cast<int>(bi) + 1)} : Word{};
            if (w[i].sign > 0) {
                edges.push_back({v, label, next, val});
            } else {
                edges.push_back({next, label, v, val.inverse()});
            }
            v = next;
        }
    }

    for (;;) {
        // Half-edge key: (vertex, label, direction). Value: (edge, target, traversal value).
        std::map<std::tuple<int, int, int>, std::size_t> seen;
        bool folded = false;
        for (std::size_t ei = 0; ei < edges.size() && !folded; ++ei) {
            if (!edges[ei].alive) continue;
            for (int dir : {1, -1}) {
                const LEdge& e = edges[ei];
                const int start = dir > 0 ? e.from : e.to;
                auto [it, fresh] = seen.emplace(std::make_tuple(start, e.label, dir), ei);
                if (fresh) continue;
                const std::size_t e1 = it->second;
                std::size_t e2 = ei;
                auto target = [&](std::size_t idx) { return dir > 0 ? edges[idx].to : edges[idx].from; };
                auto value = [&](std::size_t idx) { return dir > 0 ? edges[idx].value : edges[idx].value.inverse(); };
                std::size_t keep = e1;
                int t1 = target(e1);
                int t2 = target(e2);
                if (t1 == t2) {
                    if (value(e1) != value(e2)) throw SpectralError("words do not form a free basis (a relation appears while folding)");
                    edges[e2].alive = false;
                    folded = true;
                    break;
                }
                if (t2 == 0) {
                    std::swap(keep, e2);
                    std::swap(t1, t2);
                }
                const Word g = value(e2).inverse() * value(keep);
                const Word g_inv = g.inverse();
                for (LEdge& x : edges) {
                    if (!x.alive) continue;
                    if (x.to == t2) x.value = x.value * g;
                    if (x.from == t2) x.value = g_inv * x.value;
                }
                for (LEdge& x : edges) {
                    if (!x.alive) continue;
                    if (x.to == t2) x.to = t1;
                    if (x.from == t2) x.from = t1;
                }
                edges[e2].alive = false;
                folded = true;
                break;
            }
        }
        if (!folded) break;
    }

    std::vector<std::optional<Word>> letter(static_cast<std::size_t>(ctx.rank()));
    int alive = 0;
    for (const LEdge& e : edges) {
        if (!e.alive) continue;
        ++alive;
        if (e.from != 0 || e.to != 0) throw SpectralError("words do not generate the whole group (folded graph has more than one vertex)");
        letter[static_cast<std::size_t>(e.label)] = e.value;
    }
    std::vector<Word> out;
    for (std::size_t i = 0; i < letter.size(); ++i) {
        if (!letter[i]) throw SpectralError("words do not generate the whole group (letter " + format(ctx.generator(static_cast<int>(i))) + " missing)");
        out.push_back(*letter[i]);
    }
    if (alive != ctx.rank() || static_cast<int>(basis.size()) != ctx.rank()) {
        throw SpectralError("words are not a free basis (rank mismatch)");
    }
    return out;
}

FreeBasisMatrix free_basis_matrix(const Semigroup& s, const TransitionMatrix& M, const std::vector<int>& basis_columns) {
    const RankContext& ctx = s.ctx();
    const int r = ctx.rank();
    if (static_cast<int>(basis_columns.size()) != r) throw SpectralError("basis needs exactly 1+m+n generators");
    std::vector<Word> basis;
    for (int c : basis_columns) basis.push_back(s[static_cast<std::size_t>(c)].word);
    const std::vector<Word> letters = express_letters_in_basis(basis, ctx);

    FreeBasisMatrix out;
    out.basis_columns = basis_columns;
    out.recoding.assign(static_cast<std::size_t>(r), std::vector<long long>(s.size(), 0));
    for (std::size_t l = 0; l < s.size(); ++l) {
        std::vector<Letter> raw;
        for (const Letter& x : s[l].word) {
            const Word& val = letters[static_cast<std::size_t>(ctx.coordinate(x))];
            const Word piece = x.sign > 0 ? val : val.inverse();
            raw.insert(raw.end(), piece.begin(), piece.end());
        }
        for (const Letter& sym : Word(std::move(raw))) out.recoding[static_cast<std::size_t>(sym.index - 1)][l] += 1;
    }
    out.matrix = TransitionMatrix(r);
    for (int a2 = 0; a2 < r; ++a2) {
        for (int b2 = 0; b2 < r; ++b2) {
            long long sum = 0;
            for (std::size_t i = 0; i < s.size(); ++i) {
                sum += out.recoding[static_cast<std::size_t>(a2)][i] * M.at(static_cast<int>(i), basis_columns[static_cast<std::size_t>(b2)]);
            }
            out.matrix.at(a2, b2) = sum;
        }
    }
    return out;
}

int distinguished_generator(const CatalogInstance& inst, const Semigroup& s) {
    if (!inst.general) return 0;
    const char* name = inst.family == FamilyKind::F11n ? "s1" : inst.family == FamilyKind::F1n2 ? "s4" : "s2";
    auto idx = s.index_of(std::string(name));
    if (!idx) throw CatalogError(inst.source + ": distinguished generator " + name + " missing");
    return static_cast<int>(*idx);
}

FreeBasisMatrix free_basis_matrix(int m, int n, const CatalogSet& catalogs) {
    const CatalogInstance inst = catalogs.instantiate(m, n);
    const Semigroup s = build_semigroup(inst);
    const VerificationReport report = verify_invariance(s, build_action(m, n), inst.period, inst.conjugator);
    const TransitionMatrix M = transition_matrix(report);
    const int star = distinguished_generator(inst, s);
    const auto minor = unimodular_minor(abelianization_matrix(s.words(), s.ctx()), star);
    if (!minor) throw SpectralError("no unimodular minor containing the distinguished generator");
    std::vector<int> basis{star};
    for (int c : minor->columns) {
        if (c != star) basis.push_back(c);
    }
    return free_basis_matrix(s, M, basis);
}

}  // namespace fgdyn
