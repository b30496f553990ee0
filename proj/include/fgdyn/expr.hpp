#pragma once

#include <map>
#include <string>
#include <string_view>

namespace fgdyn {

using ExprEnv = std::map<std::string, long long, std::less<>>;

// Integer expressions over named variables: literals, + - *, parentheses, comparisons
// (== != < <= > >=), && and ||. Comparisons and logical operators yield 0 or 1.
// Throws ParseError on malformed input or unknown variables.
long long eval_expr(std::string_view text, const ExprEnv& env);
bool eval_condition(std::string_view text, const ExprEnv& env);

// Replaces every `{expr}` in `text` by the value of expr under env.
std::string substitute_placeholders(std::string_view text, const ExprEnv& env);

}  // namespace fgdyn
