#include "fgdyn/expr.hpp"

#include <cctype>

#include "fgdyn/error.hpp"

namespace fgdyn {

namespace {

class Parser {
public:
    Parser(std::string_view text, const ExprEnv& env) : s_(text), env_(env) {}

    long long parse_all() {
        long long v = parse_or();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("expression '" + std::string(s_) + "': " + why);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(std::string_view tok) {
        skip_ws();
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    long long parse_or() {
        long long v = parse_and();
        while (accept("||")) {
            long long r = parse_and();
            v = (v != 0 || r != 0) ? 1 : 0;
        }
        return v;
    }

    long long parse_and() {
        long long v = parse_cmp();
        while (accept("&&")) {
            long long r = parse_cmp();
            v = (v != 0 && r != 0) ? 1 : 0;
        }
        return v;
    }

    long long parse_cmp() {
        long long v = parse_sum();
        if (accept("==")) return v == parse_sum();
        if (accept("!=")) return v != parse_sum();
        if (accept("<=")) return v <= parse_sum();
        if (accept(">=")) return v >= parse_sum();
        if (accept("<")) return v < parse_sum();
        if (accept(">")) return v > parse_sum();
        return v;
    }

    long long parse_sum() {
        long long v = parse_term();
        for (;;) {
            if (accept("+")) {
                v += parse_term();
            } else if (accept("-")) {
                v -= parse_term();
            } else {
                return v;
            }
        }
    }

    long long parse_term() {
        long long v = parse_factor();
        while (accept("*")) v *= parse_factor();
        return v;
    }

    long long parse_factor() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (accept("-")) return -parse_factor();
        if (accept("(")) {
            long long v = parse_or();
            if (!accept(")")) fail("missing ')'");
            return v;
        }
        const char ch = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            long long v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = v * 10 + (s_[pos_] - '0');
                ++pos_;
            }
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string_view name = s_.substr(start, pos_ - start);
            auto it = env_.find(name);
            if (it == env_.end()) fail("unknown variable '" + std::string(name) + "'");
            return it->second;
        }
        fail(std::string("unexpected character '") + ch + "'");
    }

    std::string_view s_;
    const ExprEnv& env_;
    std::size_t pos_ = 0;
};

}  // namespace

long long eval_expr(std::string_view text, const ExprEnv& env) { return Parser(text, env).parse_all(); }

bool eval_condition(std::string_view text, const ExprEnv& env) { return eval_expr(text, env) != 0; }

std::string substitute_placeholders(std::string_view text, const ExprEnv& env) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '{') {
            const std::size_t close = text.find('}', i);
            if (close == std::string_view::npos) throw ParseError("unterminated placeholder in '" + std::string(text) + "'");
            out += std::to_string(eval_expr(text.substr(i + 1, close - i - 1), env));
            i = close + 1;
        } else {
            out += text[i++];
        }
    }
    return out;
}

}  // namespace fgdyn
