#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fgdyn {

enum class Family : std::uint8_t { A = 0, B = 1, C = 2 };

// A signed generator a_i, b_1 or c_j. Ordering is (family, index, sign).
struct Letter {
    Family family = Family::A;
    std::int32_t index = 1;
    std::int8_t sign = 1;

    constexpr Letter inverse() const { return {family, index, static_cast<std::int8_t>(-sign)}; }
    constexpr Letter positive() const { return {family, index, 1}; }
    constexpr bool is_inverse_of(const Letter& o) const {
        return family == o.family && index == o.index && sign == -o.sign;
    }
    constexpr bool same_generator(const Letter& o) const { return family == o.family && index == o.index; }
    // Dense integer key, distinct for distinct letters.
    constexpr std::uint32_t code() const {
        return (static_cast<std::uint32_t>(index) << 3) | (static_cast<std::uint32_t>(family) << 1) |
               (sign > 0 ? 1u : 0u);
    }

    friend constexpr bool operator==(const Letter&, const Letter&) = default;
    friend constexpr std::strong_ordering operator<=>(const Letter&, const Letter&) = default;
};

constexpr Letter a(int i, int sign = 1) { return {Family::A, i, static_cast<std::int8_t>(sign)}; }
constexpr Letter b(int sign = 1) { return {Family::B, 1, static_cast<std::int8_t>(sign)}; }
constexpr Letter c(int j, int sign = 1) { return {Family::C, j, static_cast<std::int8_t>(sign)}; }

// Free group on a_1..a_n, b_1, c_1..c_m. Coordinates follow the order a_1..a_n, b_1, c_1..c_m.
struct RankContext {
    int m = 1;
    int n = 1;

    int rank() const { return 1 + m + n; }
    bool contains(const Letter& l) const;
    int coordinate(const Letter& l) const;  // throws RangeError when out of range
    Letter generator(int coordinate) const;
    std::vector<Letter> generators() const;

    friend bool operator==(const RankContext&, const RankContext&) = default;
};

class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> raw);  // freely reduces
    Word(std::initializer_list<Letter> raw);

    // Caller guarantees that `letters` is already freely reduced.
    static Word from_reduced(std::vector<Letter> letters);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }
    const Letter& front() const { return letters_.front(); }
    const Letter& back() const { return letters_.back(); }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    Word inverse() const;
    Word subword(std::size_t pos, std::size_t len) const;
    bool is_cyclically_reduced() const;
    // Highest index of any a-letter (first) and c-letter (second) in the word.
    std::pair<int, int> max_indices() const;

    friend Word operator*(const Word& u, const Word& v);
    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& u, const Word& v) {
        return std::lexicographical_compare_three_way(u.letters_.begin(), u.letters_.end(), v.letters_.begin(),
                                                      v.letters_.end());
    }

    std::size_t hash() const;

private:
    std::vector<Letter> letters_;
};

Word reduce(const std::vector<Letter>& raw);

struct CyclicSplit {
    Word conjugator;
    Word core;
};

// w = conjugator * core * conjugator^-1 with core cyclically reduced and conjugator maximal.
CyclicSplit cyclic_reduce(const Word& w);

// Conjugacy class of a word, stored as the lexicographically least rotation of its cyclic core.
class CyclicWord {
public:
    CyclicWord() = default;
    explicit CyclicWord(const Word& w);

    const Word& word() const { return canonical_; }
    std::size_t size() const { return canonical_.size(); }

    friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
    friend std::strong_ordering operator<=>(const CyclicWord& u, const CyclicWord& v) {
        return u.canonical_ <=> v.canonical_;
    }

private:
    Word canonical_;
};

// Rotation r of a cyclically reduced word: letters r..end followed by 0..r-1.
Word rotate(const Word& w, std::size_t r);
std::size_t least_rotation(const std::vector<Letter>& s);

using AbelianVector = std::vector<long long>;

AbelianVector abelianize(const Word& w, const RankContext& ctx);

// Token grammar: `-`? (a|b|c) decimal-index, whitespace separated; b only with index 1.
Word parse(std::string_view text);
Word parse(std::string_view text, const RankContext& ctx);
Letter parse_letter(std::string_view token);
std::string format(const Letter& l);
std::string format(const Word& w);

// One word per line; `#` starts a comment; blank lines are skipped.
std::vector<Word> read_words(std::istream& in);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace fgdyn

template <>
struct std::hash<fgdyn::Word> {
    std::size_t operator()(const fgdyn::Word& w) const noexcept { return w.hash(); }
};
