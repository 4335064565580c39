#pragma once

#include <string>
#include <variant>

#include "padcell/ast.hpp"

namespace padcell {

// Concrete syntax, in increasing binding strength: "or", "and", literals.
//
//   formula := or-expr
//   or-expr := and-expr { "or" and-expr }
//   and-expr := lit { "and" lit }
//   lit  := "not" lit | "(" formula ")" | atom
//   atom := "ord(" term ")" cmp "ord(" term ")"
//         | "Pn[" nat "](" [rat ","] term ")"
//         | "Qnm[" nat "," nat "](" [rat ","] term ")"
//         | "div(" term "," term ")"            sugar for ord(x) < ord(y)
//         | term "=" term
//         | "exists" var "." formula
//   term := factor { ("+" | "-") factor }
//   factor := rat | var | rat "*" factor | "(" rat ")" "*" factor
//           | "star(" term "," term ")" | "divg[" int "](" term "," term ")"
//           | "-" factor | "(" term ")"
//   rat := int | int "/" int
//
// A parenthesized group is a formula or a term depending on its content; the
// parser resolves that without backtracking. Errors are SyntaxError with the
// 1-based line and column of the offending token.

Term parse_term(const std::string& text);
Formula parse_formula(const std::string& text);

// Accepts either sort; a bare term parses as a Term, anything with a
// connective, comparison, or membership atom parses as a Formula.
std::variant<Term, Formula> parse_any(const std::string& text);

} // namespace padcell
