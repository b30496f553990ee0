#include "fgdyn/boundary.hpp"

#include <algorithm>
#include <map>

#include "fgdyn/error.hpp"

namespace fgdyn {

const char* boundary_form_name(BoundaryForm f) { return f == BoundaryForm::Single ? "single" : "doubled"; }

Word letterwise_inverse(const Word& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (const Letter& l : w) out.push_back(l.inverse());
    return Word(std::move(out));
}

Word doubled(const Word& w) { return w * letterwise_inverse(w); }

Word boundary_target(const Word& omega, BoundaryForm form) {
    return form == BoundaryForm::Single ? omega : doubled(omega);
}

bool fixes_cyclically(const Endomorphism& e, const Word& target) {
    return CyclicWord(e.apply(target)) == CyclicWord(target);
}

BoundaryForm predicted_form(int m, int n) {
    return (1 + m + n) % 2 == 0 ? BoundaryForm::Single : BoundaryForm::Doubled;
}

int pair_cancellation_bound(const Endomorphism& e) {
    std::vector<Letter> letters;
    for (const Letter& g : e.ctx().generators()) {
        letters.push_back(g);
        letters.push_back(g.inverse());
    }
    auto image = [&](const Letter& l) { return l.sign > 0 ? e.image(l) : e.image(l.positive()).inverse(); };
    std::size_t bound = 0;
    for (const Letter& x : letters) {
        const Word fx = image(x);
        for (const Letter& y : letters) {
            if (y.is_inverse_of(x)) continue;
            const Word fy = image(y);
            std::size_t c = 0;
            while (c < fx.size() && c < fy.size() && fx[fx.size() - 1 - c].is_inverse_of(fy[c])) ++c;
            bound = std::max(bound, c);
        }
    }
    return static_cast<int>(bound);
}

namespace {

struct BoundarySearch {
    const Endomorphism& e;
    BoundaryForm form;
    std::uint64_t budget;
    int margin;

    std::vector<Letter> gens;
    std::size_t L = 0;
    std::vector<Letter> w;
    std::vector<bool> used;
    std::vector<std::vector<Letter>> images;  // images[j] = reduced image of w[0..j)
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::optional<Word> found;

    void extend_image(const Letter& l) {
        std::vector<Letter> img = images.back();
        for (const Letter& x : (l.sign > 0 ? e.image(l.positive()) : e.image(l.positive()).inverse())) {
            if (!img.empty() && img.back().is_inverse_of(x)) {
                img.pop_back();
            } else {
                img.push_back(x);
            }
        }
        images.push_back(std::move(img));
    }

    // Returns false when out of budget or a solution was found.
    bool dfs(int phase) {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        const std::size_t j = w.size();
        if (j == L) {
            Word omega = Word::from_reduced(w);
            Word target = boundary_target(omega, form);
            if (e.apply(target) == target) {
                found = omega;
                return false;
            }
            return true;
        }
        const std::vector<Letter>& fp = images.back();
        const std::size_t total = form == BoundaryForm::Doubled ? 2 * L : L;
        const std::size_t stable = fp.size() > static_cast<std::size_t>(margin) ? fp.size() - static_cast<std::size_t>(margin) : 0;
        std::map<std::size_t, Letter> forced;
        for (std::size_t i = 0; i < stable; ++i) {
            if (i >= total) return true;
            const Letter& x = fp[i];
            const std::size_t pos = i < L ? i : i - L;
            const Letter val = i < L ? x : x.inverse();
            if (pos < j) {
                if (w[pos] != val) return true;
            } else {
                auto [it, inserted] = forced.emplace(pos, val);
                if (!inserted && it->second != val) return true;
            }
        }
        const int sign = ((j % 2 == 0) == (phase == 1)) ? 1 : -1;
        std::vector<Letter> candidates;
        if (auto it = forced.find(j); it != forced.end()) {
            candidates.push_back(it->second);
        } else {
            for (const Letter& g : gens) candidates.push_back(Letter{g.family, g.index, static_cast<std::int8_t>(sign)});
        }
        for (const Letter& cand : candidates) {
            if (cand.sign != sign) continue;
            const auto coord = static_cast<std::size_t>(e.ctx().coordinate(cand));
            if (used[coord]) continue;
            w.push_back(cand);
            used[coord] = true;
            extend_image(cand);
            const bool go_on = dfs(phase);
            images.pop_back();
            used[coord] = false;
            w.pop_back();
            if (!go_on) return false;
        }
        return true;
    }
};

}  // namespace

BoundarySearchResult search_boundary_word(const Endomorphism& e, BoundaryForm form, std::uint64_t node_budget,
                                          int stable_margin) {
    const int margin = stable_margin < 0 ? pair_cancellation_bound(e) : stable_margin;
    BoundarySearch s{e, form, node_budget, margin, {}, 0, {}, {}, {}, 0, false, std::nullopt};
    s.gens = e.ctx().generators();
    s.L = s.gens.size();
    s.used.assign(s.L, false);
    s.images.emplace_back();
    for (int phase : {1, -1}) {
        if (!s.dfs(phase)) break;
    }
    BoundarySearchResult r;
    r.nodes = std::min(s.nodes, node_budget);
    r.exhausted = !s.out_of_budget && !s.found;
    r.omega = s.found;
    r.on_the_nose = s.found.has_value();
    return r;
}

BoundaryWord boundary_word(int m, int n, std::uint64_t node_budget) {
    const Endomorphism e = build_action(m, n);
    const BoundaryForm first = predicted_form(m, n);
    const BoundaryForm second = first == BoundaryForm::Single ? BoundaryForm::Doubled : BoundaryForm::Single;
    std::uint64_t nodes = 0;
    for (BoundaryForm form : {first, second}) {
        BoundarySearchResult r = search_boundary_word(e, form, node_budget);
        nodes += r.nodes;
        if (r.omega) {
            BoundaryWord out;
            out.omega = CyclicWord(*r.omega);
            out.omega_word = *r.omega;
            out.form = form;
            out.matches_predicted_parity = form == first;
            out.on_the_nose = r.on_the_nose;
            out.nodes = nodes;
            return out;
        }
    }
    throw NotAvailable("no boundary word found for (1," + std::to_string(m) + "," + std::to_string(n) + ") within " +
                       std::to_string(node_budget) + " nodes per form");
}

namespace {

struct FixedWordEnumerator {
    const Endomorphism& e;
    std::size_t max_len;
    std::uint64_t cap;
    std::vector<Letter> alphabet;  // sorted
    std::vector<Letter> w;
    std::uint64_t nodes = 0;
    std::vector<CyclicWord> out;

    void visit() {
        if (++nodes > cap) throw BudgetExceeded("fixed cyclic word enumeration exceeded " + std::to_string(cap) + " nodes");
        Word word = Word::from_reduced(w);
        if (word.is_cyclically_reduced() && least_rotation(w) == 0) {
            CyclicWord cw(word);
            if (cw.word() == word && CyclicWord(e.apply(word)) == cw) out.push_back(cw);
        }
        if (w.size() == max_len) return;
        for (const Letter& l : alphabet) {
            if (l < w.front()) continue;  // a least rotation starts with its smallest letter
            if (w.back().is_inverse_of(l)) continue;
            w.push_back(l);
            visit();
            w.pop_back();
        }
    }
};

}  // namespace

std::vector<CyclicWord> find_fixed_cyclic_words(const Endomorphism& e, int max_len, std::uint64_t node_cap) {
    if (max_len < 1) throw RangeError("max_len must be at least 1");
    FixedWordEnumerator en{e, static_cast<std::size_t>(max_len), node_cap, {}, {}, 0, {}};
    for (const Letter& g : e.ctx().generators()) {
        en.alphabet.push_back(g);
        en.alphabet.push_back(g.inverse());
    }
    std::sort(en.alphabet.begin(), en.alphabet.end());
    for (const Letter& first : en.alphabet) {
        en.w.assign(1, first);
        en.visit();
    }
    std::sort(en.out.begin(), en.out.end(), [](const CyclicWord& x, const CyclicWord& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return en.out;
}

}  // namespace fgdyn
