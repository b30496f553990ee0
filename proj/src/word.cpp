#include "fgdyn/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "fgdyn/error.hpp"

namespace fgdyn {

bool RankContext::contains(const Letter& l) const {
    switch (l.family) {
        case Family::A: return l.index >= 1 && l.index <= n;
        case Family::B: return l.index == 1;
        case Family::C: return l.index >= 1 && l.index <= m;
    }
    return false;
}

int RankContext::coordinate(const Letter& l) const {
    if (!contains(l)) {
        throw RangeError("letter " + format(l) + " outside rank context (m=" + std::to_string(m) +
                         ", n=" + std::to_string(n) + ")");
    }
    switch (l.family) {
        case Family::A: return l.index - 1;
        case Family::B: return n;
        case Family::C: return n + l.index;
    }
    return -1;
}

Letter RankContext::generator(int coord) const {
    if (coord < 0 || coord >= rank()) throw RangeError("generator coordinate out of range");
    if (coord < n) return a(coord + 1);
    if (coord == n) return b();
    return c(coord - n);
}

std::vector<Letter> RankContext::generators() const {
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(rank()));
    for (int i = 0; i < rank(); ++i) out.push_back(generator(i));
    return out;
}

Word reduce(const std::vector<Letter>& raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (const Letter& l : raw) {
        if (!out.empty() && out.back().is_inverse_of(l)) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return Word::from_reduced(std::move(out));
}

Word::Word(std::vector<Letter> raw) : letters_(reduce(raw).letters_) {}

Word::Word(std::initializer_list<Letter> raw) : Word(std::vector<Letter>(raw)) {}

Word Word::from_reduced(std::vector<Letter> letters) {
    Word w;
    w.letters_ = std::move(letters);
    return w;
}

Word Word::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
    return from_reduced(std::move(out));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    pos = std::min(pos, letters_.size());
    len = std::min(len, letters_.size() - pos);
    return from_reduced(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                            letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool Word::is_cyclically_reduced() const {
    return letters_.size() < 2 || !letters_.front().is_inverse_of(letters_.back());
}

std::pair<int, int> Word::max_indices() const {
    int ma = 0;
    int mc = 0;
    for (const Letter& l : letters_) {
        if (l.family == Family::A) ma = std::max(ma, l.index);
        if (l.family == Family::C) mc = std::max(mc, l.index);
    }
    return {ma, mc};
}

Word operator*(const Word& u, const Word& v) {
    std::vector<Letter> out(u.letters_);
    out.reserve(u.size() + v.size());
    std::size_t i = 0;
    while (i < v.size() && !out.empty() && out.back().is_inverse_of(v[i])) {
        out.pop_back();
        ++i;
    }
    out.insert(out.end(), v.letters_.begin() + static_cast<std::ptrdiff_t>(i), v.letters_.end());
    return Word::from_reduced(std::move(out));
}

std::size_t Word::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (const Letter& l : letters_) {
        h ^= l.code();
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

CyclicSplit cyclic_reduce(const Word& w) {
    std::size_t i = 0;
    std::size_t j = w.size();
    while (j - i >= 2 && w[i].is_inverse_of(w[j - 1])) {
        ++i;
        --j;
    }
    return {w.subword(0, i), w.subword(i, j - i)};
}

std::size_t least_rotation(const std::vector<Letter>& s) {
    // Booth's algorithm over the doubled sequence.
    const std::size_t n = s.size();
    if (n == 0) return 0;
    std::vector<std::ptrdiff_t> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const Letter& sj = s[j % n];
        std::ptrdiff_t i = f[j - k - 1];
        while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
            if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
            i = f[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
            if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

Word rotate(const Word& w, std::size_t r) {
    if (w.empty()) return w;
    r %= w.size();
    std::vector<Letter> out;
    out.reserve(w.size());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
    return Word::from_reduced(std::move(out));
}

CyclicWord::CyclicWord(const Word& w) {
    Word core = cyclic_reduce(w).core;
    canonical_ = rotate(core, least_rotation(core.letters()));
}

AbelianVector abelianize(const Word& w, const RankContext& ctx) {
    AbelianVector v(static_cast<std::size_t>(ctx.rank()), 0);
    for (const Letter& l : w) v[static_cast<std::size_t>(ctx.coordinate(l))] += l.sign;
    return v;
}

Letter parse_letter(std::string_view token) {
    const std::string_view original = token;
    std::int8_t sign = 1;
    if (!token.empty() && token.front() == '-') {
        sign = -1;
        token.remove_prefix(1);
    }
    if (token.size() < 2) throw ParseError("malformed letter token '" + std::string(original) + "'");
    Family family;
    switch (token.front()) {
        case 'a': family = Family::A; break;
        case 'b': family = Family::B; break;
        case 'c': family = Family::C; break;
        default: throw ParseError("unknown generator family in token '" + std::string(original) + "'");
    }
    token.remove_prefix(1);
    int index = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), index);
    if (ec != std::errc() || ptr != token.data() + token.size() || index < 1) {
        throw ParseError("malformed index in token '" + std::string(original) + "'");
    }
    if (family == Family::B && index != 1) throw ParseError("b index must be 1 in token '" + std::string(original) + "'");
    return {family, index, sign};
}

Word parse(std::string_view text) {
    std::vector<Letter> letters;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) letters.push_back(parse_letter(text.substr(i, j - i)));
        i = j;
    }
    return Word(std::move(letters));
}

Word parse(std::string_view text, const RankContext& ctx) {
    Word w = parse(text);
    for (const Letter& l : w) {
        if (!ctx.contains(l)) {
            throw RangeError("letter " + format(l) + " outside rank context (m=" + std::to_string(ctx.m) +
                             ", n=" + std::to_string(ctx.n) + ")");
        }
    }
    return w;
}

std::string format(const Letter& l) {
    std::string s;
    if (l.sign < 0) s += '-';
    s += l.family == Family::A ? 'a' : (l.family == Family::B ? 'b' : 'c');
    s += std::to_string(l.index);
    return s;
}

std::string format(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += format(w[i]);
    }
    return s;
}

std::vector<Word> read_words(std::istream& in) {
    std::vector<Word> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse(line));
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << format(w); }

}  // namespace fgdyn
