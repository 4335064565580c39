#pragma once

#include <map>
#include <string>

#include "padcell/ast.hpp"
#include "padcell/padic.hpp"

namespace padcell {

// Kleene truth: Undecided marks answers the working precision cannot settle,
// never a wrong answer.
enum class TriBool { False, True, Undecided };

inline TriBool tri_from(bool b) { return b ? TriBool::True : TriBool::False; }
TriBool tri_not(TriBool a);
TriBool tri_and(TriBool a, TriBool b);
TriBool tri_or(TriBool a, TriBool b);
const char* tri_str(TriBool a);

// What is known about ord x: exact values give a point interval, balls known
// only below some digit give [bound, +inf] since the true value may vanish.
struct OrdInterval {
    ExtInt lo, hi;
};
OrdInterval ord_interval(const PAdic& x);

// Compare ord a with ord b as well as the precision allows.
TriBool ord_cmp(const PAdic& a, CmpOp op, const PAdic& b);

// Restricted product star(x, y) = g(x) g(y) where g keeps units and maps
// everything else (including 0) to 1. Throws InsufficientPrecision when a
// ball is too shallow to tell a unit from a non-unit.
PAdic star(const PAdic& x, const PAdic& y);

// Guarded division: x / y when min(ord x, ord y, ord x - ord y) > gamma,
// else 0. By convention x = 0 has ord +inf and makes ord(x/y) = +inf, while
// y = 0 with x != 0 makes ord(x/y) = -inf and fails the guard.
PAdic divg(long gamma, const PAdic& x, const PAdic& y);

using Assignment = std::map<std::string, PAdic>;

// Structural evaluation. Unbound variables throw ScopeError.
PAdic eval_term(const Term& t, const Assignment& asg, const PrecisionContext& ctx);

// Atoms that fail for precision reasons come back Undecided; connectives are
// Kleene. Quantifiers are not evaluated pointwise: FExists throws
// UnsupportedTerm (use the eliminator instead).
TriBool eval_formula(const Formula& f, const Assignment& asg, const PrecisionContext& ctx);

// A term T(x, y) over +, rational scalars and star with T(x, y) = x y
// whenever ord x >= min_ord and ord y >= min_ord (min_ord = -gamma).
struct BoundedMul {
    Term term;
    long min_ord;
};
BoundedMul bounded_mul_term(long gamma, long prime);

} // namespace padcell
