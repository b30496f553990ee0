#include "fgdyn/family.hpp"

#include "fgdyn/error.hpp"

namespace fgdyn {

std::string family_name(FamilyKind f) {
    switch (f) {
        case FamilyKind::F11n: return "F11n";
        case FamilyKind::F12n: return "F12n";
        case FamilyKind::F1n2: return "F1n2";
        case FamilyKind::F1nNp1: return "F1nNp1";
        case FamilyKind::F1Np1n: return "F1Np1n";
        case FamilyKind::F1mnGapUp: return "F1mnGapUp";
        case FamilyKind::F1mnGapDown: return "F1mnGapDown";
    }
    return "?";
}

FamilyKind family_from_name(const std::string& name) {
    for (FamilyKind f : {FamilyKind::F11n, FamilyKind::F12n, FamilyKind::F1n2, FamilyKind::F1nNp1,
                         FamilyKind::F1Np1n, FamilyKind::F1mnGapUp, FamilyKind::F1mnGapDown}) {
        if (family_name(f) == name) return f;
    }
    throw ParseError("unknown family name '" + name + "'");
}

namespace {

std::string pair_text(int m, int n) { return "(1," + std::to_string(m) + "," + std::to_string(n) + ")"; }

}  // namespace

FamilyKind family_of(int m, int n) {
    auto reject = [&](const std::string& why) -> FamilyKind {
        throw RangeError("orbit data " + pair_text(m, n) + " " + why);
    };
    if (m < 1 || n < 1) return reject("has a nonpositive entry");
    if (m == n) return reject("has m = n, which no family covers");
    if (m == 1) return n >= 8 ? FamilyKind::F11n : reject("requires n >= 8 for the (1,1,n) family");
    if (n == 1) return reject("has n = 1, which no family covers");
    if (m == 2) return n >= 7 ? FamilyKind::F12n : reject("requires n >= 7 for the (1,2,n) family");
    if (n == 2) return m >= 7 ? FamilyKind::F1n2 : reject("requires m >= 7 for the (1,n,2) family");
    if (n == m + 1) return m >= 4 ? FamilyKind::F1nNp1 : reject("requires m >= 4 for the (1,n,n+1) family");
    if (m == n + 1) return n >= 4 ? FamilyKind::F1Np1n : reject("requires n >= 4 for the (1,n+1,n) family");
    if (n >= m + 2) return FamilyKind::F1mnGapUp;  // m >= 3 holds here
    return FamilyKind::F1mnGapDown;                // n >= 3 and m >= n + 2
}

bool in_family_range(int m, int n) {
    try {
        family_of(m, n);
        return true;
    } catch (const RangeError&) {
        return false;
    }
}

Endomorphism::Endomorphism(RankContext ctx, std::vector<Word> images) : ctx_(ctx), images_(std::move(images)) {
    if (images_.size() != static_cast<std::size_t>(ctx_.rank())) {
        throw RangeError("endomorphism needs exactly one image per generator");
    }
    inverse_images_.reserve(images_.size());
    for (const Word& w : images_) {
        for (const Letter& l : w) ctx_.coordinate(l);
        inverse_images_.push_back(w.inverse());
    }
}

Endomorphism Endomorphism::identity(RankContext ctx) {
    std::vector<Word> images;
    for (const Letter& g : ctx.generators()) images.push_back(Word{g});
    return Endomorphism(ctx, std::move(images));
}

const Word& Endomorphism::image(const Letter& generator) const {
    return images_[static_cast<std::size_t>(ctx_.coordinate(generator))];
}

Word Endomorphism::apply(const Word& w) const {
    std::vector<Letter> out;
    out.reserve(w.size() * 4);
    for (const Letter& l : w) {
        const std::size_t coord = static_cast<std::size_t>(ctx_.coordinate(l));
        const Word& img = l.sign > 0 ? images_[coord] : inverse_images_[coord];
        for (const Letter& x : img) {
            if (!out.empty() && out.back().is_inverse_of(x)) {
                out.pop_back();
            } else {
                out.push_back(x);
            }
        }
        if (out.size() > kImageLetterBudget) {
            throw BudgetExceeded("image exceeds " + std::to_string(kImageLetterBudget) + " letters");
        }
    }
    return Word::from_reduced(std::move(out));
}

Word Endomorphism::iterate(const Word& w, int k) const {
    if (k < 0) throw RangeError("iteration count must be nonnegative");
    Word cur = w;
    for (int i = 0; i < k; ++i) cur = apply(cur);
    return cur;
}

namespace {

class ImageTable {
public:
    explicit ImageTable(RankContext ctx) : ctx_(ctx), images_(static_cast<std::size_t>(ctx.rank())), set_(images_.size()) {}

    void set(Letter g, const Word& w) {
        const auto i = static_cast<std::size_t>(ctx_.coordinate(g));
        images_[i] = w;
        set_[i] = true;
    }
    void set(Letter g, std::initializer_list<Letter> w) { set(g, Word(w)); }

    Endomorphism finish() {
        for (std::size_t i = 0; i < set_.size(); ++i) {
            if (!set_[i]) throw RangeError("internal: generator " + format(ctx_.generator(static_cast<int>(i))) + " has no image");
        }
        return Endomorphism(ctx_, std::move(images_));
    }

private:
    RankContext ctx_;
    std::vector<Word> images_;
    std::vector<bool> set_;
};

Letter A(int i, int s = 1) { return a(i, s); }
Letter C(int j, int s = 1) { return c(j, s); }
const Letter B = b();
const Letter Bi = b(-1);

}  // namespace

Endomorphism build_action(int m, int n) {
    const FamilyKind fam = family_of(m, n);
    ImageTable t(RankContext{m, n});
    t.set(B, {A(1)});
    switch (fam) {
        case FamilyKind::F11n:
            t.set(C(1), {B});
            t.set(A(1), {A(1), A(2, -1), B, C(1, -1)});
            t.set(A(2), {A(1), Bi, A(3), C(1, -1)});
            t.set(A(3), {A(1), C(1), A(4, -1), B});
            t.set(A(4), {A(1), A(5), C(1, -1), B});
            for (int k = 5; k < n; ++k) t.set(A(k), {C(1), A(k + 1, -1), A(1, -1), B});
            t.set(A(n), {C(1)});
            break;
        case FamilyKind::F12n:
            t.set(C(1), {A(1), C(2), C(1, -1), B});
            t.set(C(2), {B});
            t.set(A(1), {A(1), A(2, -1), B, C(1, -1)});
            t.set(A(2), {A(1), Bi, A(3), C(1, -1)});
            t.set(A(3), {A(1), C(1), A(4, -1), B});
            for (int i = 4; i <= 5; ++i) t.set(A(i), {A(1), A(i + 1), C(1, -1), B});
            for (int k = 6; k < n; ++k) t.set(A(k), {C(1), A(k + 1, -1), A(1, -1), B});
            t.set(A(n), {C(1)});
            break;
        case FamilyKind::F1n2:
            t.set(A(1), {C(1), A(1, -1), A(2), Bi});
            t.set(A(2), {C(1)});
            for (int i = 1; i <= 2; ++i) t.set(C(i), {C(1), A(1, -1), C(i + 1), Bi});
            t.set(C(3), {C(1), C(4), Bi, A(1)});
            for (int k = 4; k < m; ++k) t.set(C(k), {B, C(k + 1, -1), C(1, -1), A(1)});
            t.set(C(m), {B});
            break;
        case FamilyKind::F1nNp1:
            t.set(C(1), {A(1), C(1, -1), B, C(2, -1)});
            for (int k = 2; k < m; ++k) t.set(C(k), {A(1), C(k + 1), Bi, C(1)});
            t.set(C(m), {B});
            t.set(A(1), {A(1), A(2, -1), C(1), Bi});
            t.set(A(2), {A(1), C(1, -1), B, A(3, -1)});
            for (int k = 3; k < n; ++k) t.set(A(k), {A(1), A(k + 1), Bi, C(1)});
            t.set(A(n), {C(1)});
            break;
        case FamilyKind::F1Np1n:
            t.set(C(1), {A(1), C(1, -1), B, C(2, -1)});
            for (int k = 2; k < n; ++k) t.set(C(k), {A(1), C(k + 1), Bi, C(1)});
            t.set(C(n), {B, C(n + 1, -1), A(1, -1), C(1)});
            t.set(C(n + 1), {B});
            t.set(A(1), {A(1), C(1, -1), A(2), Bi});
            t.set(A(2), {A(1), C(1, -1), B, A(3, -1)});
            for (int k = 3; k < n; ++k) t.set(A(k), {A(1), A(k + 1), Bi, C(1)});
            t.set(A(n), {C(1)});
            break;
        case FamilyKind::F1mnGapUp:
            for (int k = 1; k < m; ++k) t.set(C(k), {A(1), C(k + 1), C(1, -1), B});
            t.set(C(m), {B});
            t.set(A(1), {A(1), A(2, -1), B, C(1, -1)});
            t.set(A(2), {A(1), Bi, C(1), A(3, -1)});
            for (int i = 3; i <= m + 1; ++i) t.set(A(i), {A(1), A(i + 1), C(1, -1), B});
            for (int k = m + 2; k < n; ++k) t.set(A(k), {C(1), A(k + 1, -1), A(1, -1), B});
            t.set(A(n), {C(1)});
            break;
        case FamilyKind::F1mnGapDown:
            t.set(C(1), {A(1), C(1, -1), B, C(2, -1)});
            for (int i = 2; i < n; ++i) t.set(C(i), {A(1), C(i + 1), Bi, C(1)});
            for (int k = n; k < m; ++k) t.set(C(k), {B, C(k + 1, -1), A(1, -1), C(1)});
            t.set(C(m), {B});
            t.set(A(1), {A(1), C(1, -1), A(2), Bi});
            t.set(A(2), {A(1), C(1, -1), B, A(3, -1)});
            for (int k = 3; k < n; ++k) t.set(A(k), {A(1), A(k + 1), Bi, C(1)});
            t.set(A(n), {C(1)});
            break;
    }
    return t.finish();
}

int period_k(int m, int n) {
    switch (family_of(m, n)) {
        case FamilyKind::F11n:
        case FamilyKind::F1nNp1: return 6;
        case FamilyKind::F12n:
        case FamilyKind::F1n2: return 5;
        default: return 8;
    }
}

Anchor anchor_of(FamilyKind f) {
    return (f == FamilyKind::F1Np1n || f == FamilyKind::F1mnGapDown) ? Anchor::LastC1 : Anchor::FirstA1;
}

Letter anchor_letter(Anchor a) { return a == Anchor::FirstA1 ? fgdyn::a(1) : c(1); }

}  // namespace fgdyn
