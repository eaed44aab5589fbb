#ifndef PCLIE_EXPR_HPP
#define PCLIE_EXPR_HPP

#include <string>
#include <string_view>
#include <vector>

#include "pclie/lie_core.hpp"

namespace pclie {

// Surface-syntax AST for Lie expressions:
//   expr     := term (('+'|'-') term)*
//   term     := [rational '*'] factor
//   factor   := ident | '(' expr ',' expr ')' | '-' factor
//   rational := integer ['/' positive-integer]
struct LieExpr {
    enum class Kind { Ident, Bracket, Sum, Scale, Neg };

    Kind kind;
    Letter letter = -1;                 // Ident
    std::string name = {};              // Ident
    Rational scalar = {};               // Scale
    std::vector<LieExpr> children = {};
};

// Throws ParseError with a byte offset on syntax errors, unknown
// identifiers, or zero denominators.
LieExpr parse_expression(std::string_view text, const Alphabet& alphabet);

// Lowers the AST to a polynomial in the Lyndon-Shirshov basis; brackets are
// expanded bottom-up.
LiePolynomial to_polynomial(const LieExpr& expr);

// Parenthesis notation: a letter prints bare, a pair as (l,r).
std::string to_string(const NWord& t, const Alphabet& alphabet);
std::string to_string(const Word& w, const Alphabet& alphabet);

// Surface syntax, terms deglex-descending; "0" for the zero polynomial.
// Re-parsing yields an equal polynomial.
std::string to_string(const LiePolynomial& p, const Alphabet& alphabet);

// JSON encoding: a letter is a string, a pair is a 2-element array.
std::string to_json(const NWord& t, const Alphabet& alphabet);

}  // namespace pclie

#endif
