#include "fgdyn/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "fgdyn/error.hpp"

namespace fgdyn {

Semigroup::Semigroup(RankContext ctx, std::vector<NamedWord> generators, std::optional<Anchor> anchor)
    : ctx_(ctx), gens_(std::move(generators)), anchor_(anchor) {
    std::set<std::string> names;
    std::unordered_map<Word, std::string> seen;
    for (const NamedWord& g : gens_) {
        if (g.word.empty()) throw CatalogError("generator " + g.name + " is the empty word");
        for (const Letter& l : g.word) {
            if (!ctx_.contains(l)) throw RangeError("generator " + g.name + " uses " + format(l) + " outside the rank context");
        }
        if (!g.word.is_cyclically_reduced()) throw CatalogError("generator " + g.name + " is not cyclically reduced");
        if (!names.insert(g.name).second) throw CatalogError("duplicate generator name " + g.name);
        if (auto [it, fresh] = seen.emplace(g.word, g.name); !fresh) {
            throw CatalogError("generators " + it->second + " and " + g.name + " are the same word");
        }
        if (anchor_) {
            const bool ok = *anchor_ == Anchor::FirstA1 ? g.word.front() == a(1) : g.word.back() == c(1);
            if (!ok) {
                throw CatalogError("generator " + g.name + " = " + format(g.word) + " lacks the anchor letter " +
                                   (*anchor_ == Anchor::FirstA1 ? "a1 at the start" : "c1 at the end"));
            }
        }
    }
}

std::vector<Word> Semigroup::words() const {
    std::vector<Word> out;
    out.reserve(gens_.size());
    for (const NamedWord& g : gens_) out.push_back(g.word);
    return out;
}

std::optional<std::size_t> Semigroup::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].name == name) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> Semigroup::index_of(const Word& w) const {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].word == w) return i;
    }
    return std::nullopt;
}

Semigroup build_semigroup(const CatalogInstance& inst) {
    return Semigroup(RankContext{inst.m, inst.n}, inst.generators, inst.anchor);
}

Semigroup build_semigroup(int m, int n, const CatalogSet& catalogs) { return build_semigroup(catalogs.instantiate(m, n)); }

Semigroup build_semigroup(int m, int n) { return build_semigroup(m, n, CatalogSet::load_default()); }

std::optional<Word> anchor_rotation(const Word& core, Anchor anchor) {
    const Letter target = anchor_letter(anchor);
    const auto& ls = core.letters();
    if (anchor == Anchor::FirstA1) {
        auto it = std::find(ls.begin(), ls.end(), target);
        if (it == ls.end()) return std::nullopt;
        return rotate(core, static_cast<std::size_t>(it - ls.begin()));
    }
    auto it = std::find(ls.rbegin(), ls.rend(), target);
    if (it == ls.rend()) return std::nullopt;
    const std::size_t last = ls.size() - 1 - static_cast<std::size_t>(it - ls.rbegin());
    return rotate(core, last + 1);
}

std::vector<Word> anchor_segments(const Word& w, Anchor anchor) {
    const Letter target = anchor_letter(anchor);
    std::vector<Word> out;
    std::vector<Letter> cur;
    for (const Letter& l : w) {
        if (anchor == Anchor::FirstA1 && l == target && !cur.empty()) {
            out.push_back(Word::from_reduced(std::move(cur)));
            cur.clear();
        }
        cur.push_back(l);
        if (anchor == Anchor::LastC1 && l == target) {
            out.push_back(Word::from_reduced(std::move(cur)));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(Word::from_reduced(std::move(cur)));
    return out;
}

Word extract_conjugator(const Endomorphism& e, int k, const Semigroup& gens) {
    if (gens.size() == 0) throw RangeError("extract_conjugator needs at least one generator");
    if (!gens.anchor()) {
        std::optional<Word> common;
        for (const NamedWord& g : gens.generators()) {
            Word u = cyclic_reduce(e.iterate(g.word, k)).conjugator;
            if (!common) {
                common = u;
            } else if (*common != u) {
                throw ConjugatorMismatch("generator " + g.name + ": conjugator " + format(u) + " differs from " + format(*common));
            }
        }
        return *common;
    }
    const Anchor anchor = *gens.anchor();
    const Letter target = anchor_letter(anchor);
    std::optional<std::set<Word>> common;
    for (const NamedWord& g : gens.generators()) {
        const CyclicSplit split = cyclic_reduce(e.iterate(g.word, k));
        const auto& core = split.core.letters();
        const std::size_t len = core.size();
        std::vector<std::size_t> cuts;
        for (std::size_t i = 0; i < len; ++i) {
            if (core[i] == target) cuts.push_back(anchor == Anchor::FirstA1 ? i : (i + 1) % len);
        }
        std::set<Word> cands;
        if (!cuts.empty()) {
            std::sort(cuts.begin(), cuts.end());
            const std::size_t first = cuts.front();
            const std::size_t last = cuts.back();
            cands.insert(split.conjugator * split.core.subword(0, first));
            cands.insert(split.conjugator * split.core.subword(last, len - last).inverse());
        }
        if (!common) {
            common = std::move(cands);
        } else {
            std::set<Word> keep;
            std::set_intersection(common->begin(), common->end(), cands.begin(), cands.end(), std::inserter(keep, keep.begin()));
            common = std::move(keep);
        }
        if (common->empty()) {
            throw ConjugatorMismatch("generator " + g.name + ": no anchor cut of its image is shared by the preceding generators");
        }
    }
    return *std::min_element(common->begin(), common->end(), [](const Word& x, const Word& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
}

namespace {

// Trie over generator words with a right-to-left count of factorizations (capped at 2).
class Factorizer {
public:
    explicit Factorizer(const Semigroup& s) {
        nodes_.emplace_back();
        for (std::size_t gi = 0; gi < s.size(); ++gi) {
            int node = 0;
            for (const Letter& l : s[gi].word) {
                auto& children = nodes_[static_cast<std::size_t>(node)].children;
                auto it = children.find(l.code());
                if (it == children.end()) {
                    const int fresh = static_cast<int>(nodes_.size());
                    children.emplace(l.code(), fresh);
                    nodes_.emplace_back();
                    node = fresh;
                } else {
                    node = it->second;
                }
            }
            nodes_[static_cast<std::size_t>(node)].terminal = static_cast<int>(gi);
        }
    }

    // Returns the unique factorization; throws on none or several.
    std::vector<int> factor(const Word& w, const Semigroup& s) const {
        const std::size_t len = w.size();
        if (len == 0) throw NoFactorization("the empty word is not a positive product");
        std::vector<int> count(len + 1, 0);
        std::vector<int> choice(len + 1, -1);  // generator starting at i along the counted path
        count[len] = 1;
        for (std::size_t i = len; i-- > 0;) {
            int node = 0;
            int total = 0;
            for (std::size_t j = i; j < len; ++j) {
                const auto& children = nodes_[static_cast<std::size_t>(node)].children;
                auto it = children.find(w[j].code());
                if (it == children.end()) break;
                node = it->second;
                const int term = nodes_[static_cast<std::size_t>(node)].terminal;
                if (term >= 0 && count[j + 1] > 0) {
                    total += count[j + 1];
                    if (choice[i] < 0 || s[static_cast<std::size_t>(term)].word.size() > s[static_cast<std::size_t>(choice[i])].word.size()) {
                        choice[i] = term;  // longest match first
                    }
                }
            }
            count[i] = std::min(total, 2);
        }
        if (count[0] == 0) throw NoFactorization("word " + abbreviate(w) + " is not a concatenation of generators");
        if (count[0] > 1) throw AmbiguousSegmentation("word " + abbreviate(w) + " has more than one generator factorization");
        std::vector<int> out;
        std::size_t i = 0;
        while (i < len) {
            const int g = choice[i];
            out.push_back(g);
            i += s[static_cast<std::size_t>(g)].word.size();
        }
        return out;
    }

    static std::string abbreviate(const Word& w) {
        if (w.size() <= 24) return "'" + format(w) + "'";
        return "'" + format(w.subword(0, 12)) + " ... " + format(w.subword(w.size() - 12, 12)) + "' (" +
               std::to_string(w.size()) + " letters)";
    }

private:
    struct Node {
        std::map<std::uint32_t, int> children;
        int terminal = -1;
    };
    std::vector<Node> nodes_;
};

}  // namespace

std::vector<int> factor_positive(const Word& w, const Semigroup& gens) { return Factorizer(gens).factor(w, gens); }

VerificationReport verify_invariance(const Semigroup& s, const Endomorphism& e, int k, const Word& conjugator) {
    VerificationReport r;
    r.m = s.ctx().m;
    r.n = s.ctx().n;
    r.k = k;
    r.conjugator = conjugator;
    for (const NamedWord& g : s.generators()) {
        r.names.push_back(g.name);
        r.generators.push_back(g.word);
    }
    const Factorizer fz(s);
    const Word delta_inv = conjugator.inverse();
    r.cyclic_positive = true;
    std::vector<std::string> problems;
    for (std::size_t j = 0; j < s.size(); ++j) {
        const std::string& name = s[j].name;
        Word image;
        try {
            image = e.iterate(s[j].word, k);
        } catch (const BudgetExceeded& ex) {
            problems.push_back(name + ": " + ex.what());
            r.factors.emplace_back();
            r.linear_ok.push_back(false);
            r.cyclic_positive = false;
            continue;
        }
        try {
            r.factors.push_back(fz.factor(delta_inv * image * conjugator, s));
            r.linear_ok.push_back(true);
            continue;
        } catch (const Error& ex) {
            problems.push_back(name + ": " + ex.what());
            r.linear_ok.push_back(false);
        }
        std::vector<int> cyc;
        if (s.anchor()) {
            if (auto rot = anchor_rotation(cyclic_reduce(image).core, *s.anchor())) {
                try {
                    cyc = fz.factor(*rot, s);
                } catch (const Error&) {
                    cyc.clear();
                }
            }
        }
        if (cyc.empty()) r.cyclic_positive = false;
        r.factors.push_back(std::move(cyc));
    }
    if (problems.empty()) {
        r.status = VerificationStatus::Verified;
    } else {
        r.status = VerificationStatus::Failed;
        r.detail = std::to_string(problems.size()) + " of " + std::to_string(s.size()) +
                   " images are not positive after stripping the conjugator; first: " + problems.front();
        if (r.cyclic_positive) r.detail += " (every cyclic core still factors positively)";
    }
    return r;
}

VerificationReport verify_invariance(int m, int n, const CatalogSet& catalogs, std::optional<int> k_override) {
    const CatalogInstance inst = catalogs.instantiate(m, n);
    const Semigroup s = build_semigroup(inst);
    const Endomorphism e = build_action(m, n);
    VerificationReport r = verify_invariance(s, e, k_override.value_or(inst.period), inst.conjugator);
    r.family = inst.family;
    return r;
}

VerificationReport verify_invariance(int m, int n) { return verify_invariance(m, n, CatalogSet::load_default()); }

Semigroup discover_generators(int m, int n, const Word& seed, int k) {
    const FamilyKind fam = family_of(m, n);
    const Anchor anchor = anchor_of(fam);
    const Endomorphism e = build_action(m, n);
    const std::size_t cap = closure_cap(m, n);
    if (!seed.is_cyclically_reduced()) throw RangeError("seed must be cyclically reduced");

    std::vector<Word> found{seed};
    std::unordered_map<Word, std::size_t> index{{seed, 0}};
    for (std::size_t i = 0; i < found.size(); ++i) {
        Word image;
        try {
            image = e.iterate(found[i], k);
        } catch (const BudgetExceeded& ex) {
            throw NonClosure(std::string("discovery aborted: ") + ex.what());
        }
        auto rot = anchor_rotation(cyclic_reduce(image).core, anchor);
        if (!rot) throw NonClosure("image of " + format(found[i]) + " has no anchor letter");
        for (Word& seg : anchor_segments(*rot, anchor)) {
            if (index.count(seg)) continue;
            index.emplace(seg, found.size());
            found.push_back(std::move(seg));
            if (found.size() > cap) {
                throw NonClosure("more than " + std::to_string(cap) + " generators without closing");
            }
        }
    }
    std::vector<NamedWord> named;
    for (std::size_t i = 0; i < found.size(); ++i) named.push_back({"g" + std::to_string(i + 1), found[i]});
    return Semigroup(RankContext{m, n}, std::move(named), anchor);
}

}  // namespace fgdyn
