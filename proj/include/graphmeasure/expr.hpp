#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "graphmeasure/integration.hpp"
#include "graphmeasure/word.hpp"

namespace graphmeasure {

/// Abstract syntax tree of the function expression language.
///
/// Grammar:
///   expr     := term (("+" | "-") term)*
///   term     := factor ("*" factor)*
///   factor   := rational | "ind" "{" wordlist "}" | "g" "[" word "]"
///             | "g" "^" integer | "(" expr ")"
///   rational := integer ["/" positive-integer]
///
/// A bare rational is the constant function with that value. Word literals
/// resolve against the graph at parse time; `g^0` is rejected.
struct FunctionExpr {
    enum class Kind { constant, indicator, neighborhood, monomial, sum, difference, product };

    Kind kind;
    int position = 0;  // 0-based offset into the source text

    Rational constant;            // Kind::constant
    std::vector<Word> words;      // Kind::indicator
    Word word;                    // Kind::neighborhood
    int exponent = 0;             // Kind::monomial
    std::unique_ptr<FunctionExpr> lhs, rhs;
};

/// Parses an expression over the given (shadowed) graph. Throws ParseError
/// with position and expected-token information.
FunctionExpr parse_expression(const Graph& g, std::string_view text);

/// Lowers an expression to a simple function over the context's active
/// reduced diagram set.
SimpleFunction evaluate_expression(const MeasureContext& ctx, const FunctionExpr& e);

}  // namespace graphmeasure
