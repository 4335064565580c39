#pragma once

#include <memory>
#include <set>
#include <string>
#include <variant>

#include "padcell/power_groups.hpp"
#include "padcell/rational.hpp"

namespace padcell {

struct TermNode;
struct FormulaNode;

// Immutable shared syntax trees. Subtrees are freely shared; never mutate
// through these handles.
using Term = std::shared_ptr<const TermNode>;
using Formula = std::shared_ptr<const FormulaNode>;

struct TVar {
    std::string name;
};
struct TConst {
    Rat value;
};
struct TAdd {
    Term lhs, rhs;
};
struct TSub {
    Term lhs, rhs;
};
struct TNeg {
    Term arg;
};
// coeff * arg with a rational coefficient; the only multiplication in the
// language besides the restricted product.
struct TScalar {
    Rat coeff;
    Term arg;
};
// Restricted product star(x, y) = g(x) g(y), g(u) = u when ord u = 0, else 1.
struct TStar {
    Term lhs, rhs;
};
// Guarded division divg[gamma](x, y): x / y when min(ord x, ord y,
// ord x - ord y) > gamma, else 0.
struct TDivG {
    long gamma = 0;
    Term num, den;
};

struct TermNode {
    std::variant<TVar, TConst, TAdd, TSub, TNeg, TScalar, TStar, TDivG> node;
};

enum class CmpOp { Lt, Le, Eq, Ge, Gt };

const char* cmp_op_str(CmpOp op);

// ord(lhs) op ord(rhs), valuations compared in Z with ord 0 = +infinity.
struct FOrdCmp {
    Term lhs;
    CmpOp op;
    Term rhs;
};
// arg in lambda * G for a power group G; only Pn and Qnm sorts are formula
// syntax, the Trivial and Zero sorts exist for cells.
struct FInCoset {
    Term arg;
    Rat lambda;
    CosetSpec spec;
};
struct FEq {
    Term lhs, rhs;
};
struct FAnd {
    Formula lhs, rhs;
};
struct FOr {
    Formula lhs, rhs;
};
struct FNot {
    Formula arg;
};
// Quantification is head position only: the elimination entry point takes
// exists var. body and nothing else introduces binders.
struct FExists {
    std::string var;
    Formula body;
};

struct FormulaNode {
    std::variant<FOrdCmp, FInCoset, FEq, FAnd, FOr, FNot, FExists> node;
};

// Constructors. t_neg folds the negation of a constant into the constant so
// printed forms like -1/3 reparse to the identical tree.
Term t_var(std::string name);
Term t_const(Rat value);
Term t_add(Term lhs, Term rhs);
Term t_sub(Term lhs, Term rhs);
Term t_neg(Term arg);
Term t_scalar(Rat coeff, Term arg);
Term t_star(Term lhs, Term rhs);
Term t_divg(long gamma, Term num, Term den);

Formula f_ord(Term lhs, CmpOp op, Term rhs);
// spec.kind must be Pn or Qnm and lambda nonzero; throws invalid_argument.
Formula f_coset(Term arg, Rat lambda, CosetSpec spec);
Formula f_eq(Term lhs, Term rhs);
Formula f_and(Formula lhs, Formula rhs);
Formula f_or(Formula lhs, Formula rhs);
Formula f_not(Formula arg);
Formula f_exists(std::string var, Formula body);

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);

// Capture avoiding: a binder whose variable occurs free in repl is renamed.
Term substitute(const Term& t, const std::string& name, const Term& repl);
Formula substitute(const Formula& f, const std::string& name, const Term& repl);

bool equal(const Term& a, const Term& b);
bool equal(const Formula& a, const Formula& b);

} // namespace padcell
