#include "padcell/ast.hpp"

#include <stdexcept>

namespace padcell {

namespace {

Term mk(TermNode&& n) { return std::make_shared<const TermNode>(std::move(n)); }
Formula mk(FormulaNode&& n) { return std::make_shared<const FormulaNode>(std::move(n)); }

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

} // namespace

const char* cmp_op_str(CmpOp op) {
    switch (op) {
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Eq: return "=";
        case CmpOp::Ge: return ">=";
        case CmpOp::Gt: return ">";
    }
    return "?";
}

Term t_var(std::string name) {
    require(!name.empty(), "variable name must be nonempty");
    return mk(TermNode{TVar{std::move(name)}});
}

Term t_const(Rat value) { return mk(TermNode{TConst{std::move(value)}}); }

Term t_add(Term lhs, Term rhs) {
    require(lhs && rhs, "null term");
    return mk(TermNode{TAdd{std::move(lhs), std::move(rhs)}});
}

Term t_sub(Term lhs, Term rhs) {
    require(lhs && rhs, "null term");
    return mk(TermNode{TSub{std::move(lhs), std::move(rhs)}});
}

Term t_neg(Term arg) {
    require(static_cast<bool>(arg), "null term");
    if (const auto* c = std::get_if<TConst>(&arg->node))
        return t_const(-c->value);
    return mk(TermNode{TNeg{std::move(arg)}});
}

Term t_scalar(Rat coeff, Term arg) {
    require(static_cast<bool>(arg), "null term");
    return mk(TermNode{TScalar{std::move(coeff), std::move(arg)}});
}

Term t_star(Term lhs, Term rhs) {
    require(lhs && rhs, "null term");
    return mk(TermNode{TStar{std::move(lhs), std::move(rhs)}});
}

Term t_divg(long gamma, Term num, Term den) {
    require(num && den, "null term");
    return mk(TermNode{TDivG{gamma, std::move(num), std::move(den)}});
}

Formula f_ord(Term lhs, CmpOp op, Term rhs) {
    require(lhs && rhs, "null term");
    return mk(FormulaNode{FOrdCmp{std::move(lhs), op, std::move(rhs)}});
}

Formula f_coset(Term arg, Rat lambda, CosetSpec spec) {
    require(static_cast<bool>(arg), "null term");
    require(spec.kind == CosetKind::Pn || spec.kind == CosetKind::Qnm,
            "formula coset atoms are Pn or Qnm");
    require(!rat_is_zero(lambda), "coset scale must be nonzero");
    return mk(FormulaNode{FInCoset{std::move(arg), std::move(lambda), spec}});
}

Formula f_eq(Term lhs, Term rhs) {
    require(lhs && rhs, "null term");
    return mk(FormulaNode{FEq{std::move(lhs), std::move(rhs)}});
}

Formula f_and(Formula lhs, Formula rhs) {
    require(lhs && rhs, "null formula");
    return mk(FormulaNode{FAnd{std::move(lhs), std::move(rhs)}});
}

Formula f_or(Formula lhs, Formula rhs) {
    require(lhs && rhs, "null formula");
    return mk(FormulaNode{FOr{std::move(lhs), std::move(rhs)}});
}

Formula f_not(Formula arg) {
    require(static_cast<bool>(arg), "null formula");
    return mk(FormulaNode{FNot{std::move(arg)}});
}

Formula f_exists(std::string var, Formula body) {
    require(!var.empty() && body, "exists needs a variable and a body");
    return mk(FormulaNode{FExists{std::move(var), std::move(body)}});
}

namespace {

void collect(const Term& t, std::set<std::string>& out) {
    std::visit(
        [&](const auto& n) {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, TVar>) {
                out.insert(n.name);
            } else if constexpr (std::is_same_v<N, TConst>) {
            } else if constexpr (std::is_same_v<N, TAdd> || std::is_same_v<N, TSub> ||
                                 std::is_same_v<N, TStar>) {
                collect(n.lhs, out);
                collect(n.rhs, out);
            } else if constexpr (std::is_same_v<N, TNeg>) {
                collect(n.arg, out);
            } else if constexpr (std::is_same_v<N, TScalar>) {
                collect(n.arg, out);
            } else if constexpr (std::is_same_v<N, TDivG>) {
                collect(n.num, out);
                collect(n.den, out);
            }
        },
        t->node);
}

void collect(const Formula& f, std::set<std::string>& out) {
    std::visit(
        [&](const auto& n) {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, FOrdCmp> || std::is_same_v<N, FEq>) {
                collect(n.lhs, out);
                collect(n.rhs, out);
            } else if constexpr (std::is_same_v<N, FInCoset>) {
                collect(n.arg, out);
            } else if constexpr (std::is_same_v<N, FAnd> || std::is_same_v<N, FOr>) {
                collect(n.lhs, out);
                collect(n.rhs, out);
            } else if constexpr (std::is_same_v<N, FNot>) {
                collect(n.arg, out);
            } else if constexpr (std::is_same_v<N, FExists>) {
                std::set<std::string> inner;
                collect(n.body, inner);
                inner.erase(n.var);
                out.insert(inner.begin(), inner.end());
            }
        },
        f->node);
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
    std::string name = base;
    do {
        name += '\'';
    } while (taken.count(name));
    return name;
}

} // namespace

std::set<std::string> free_vars(const Term& t) {
    std::set<std::string> out;
    collect(t, out);
    return out;
}

std::set<std::string> free_vars(const Formula& f) {
    std::set<std::string> out;
    collect(f, out);
    return out;
}

Term substitute(const Term& t, const std::string& name, const Term& repl) {
    return std::visit(
        [&](const auto& n) -> Term {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, TVar>) {
                return n.name == name ? repl : t;
            } else if constexpr (std::is_same_v<N, TConst>) {
                return t;
            } else if constexpr (std::is_same_v<N, TAdd>) {
                return t_add(substitute(n.lhs, name, repl), substitute(n.rhs, name, repl));
            } else if constexpr (std::is_same_v<N, TSub>) {
                return t_sub(substitute(n.lhs, name, repl), substitute(n.rhs, name, repl));
            } else if constexpr (std::is_same_v<N, TNeg>) {
                return t_neg(substitute(n.arg, name, repl));
            } else if constexpr (std::is_same_v<N, TScalar>) {
                return t_scalar(n.coeff, substitute(n.arg, name, repl));
            } else if constexpr (std::is_same_v<N, TStar>) {
                return t_star(substitute(n.lhs, name, repl), substitute(n.rhs, name, repl));
            } else {
                return t_divg(n.gamma, substitute(n.num, name, repl),
                              substitute(n.den, name, repl));
            }
        },
        t->node);
}

Formula substitute(const Formula& f, const std::string& name, const Term& repl) {
    return std::visit(
        [&](const auto& n) -> Formula {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, FOrdCmp>) {
                return f_ord(substitute(n.lhs, name, repl), n.op, substitute(n.rhs, name, repl));
            } else if constexpr (std::is_same_v<N, FInCoset>) {
                return f_coset(substitute(n.arg, name, repl), n.lambda, n.spec);
            } else if constexpr (std::is_same_v<N, FEq>) {
                return f_eq(substitute(n.lhs, name, repl), substitute(n.rhs, name, repl));
            } else if constexpr (std::is_same_v<N, FAnd>) {
                return f_and(substitute(n.lhs, name, repl), substitute(n.rhs, name, repl));
            } else if constexpr (std::is_same_v<N, FOr>) {
                return f_or(substitute(n.lhs, name, repl), substitute(n.rhs, name, repl));
            } else if constexpr (std::is_same_v<N, FNot>) {
                return f_not(substitute(n.arg, name, repl));
            } else {
                if (n.var == name) return f;
                auto repl_free = free_vars(repl);
                if (repl_free.count(n.var)) {
                    auto taken = free_vars(n.body);
                    taken.insert(repl_free.begin(), repl_free.end());
                    std::string nv = fresh_name(n.var, taken);
                    Formula renamed = substitute(n.body, n.var, t_var(nv));
                    return f_exists(nv, substitute(renamed, name, repl));
                }
                return f_exists(n.var, substitute(n.body, name, repl));
            }
        },
        f->node);
}

bool equal(const Term& a, const Term& b) {
    if (a == b) return true;
    if (a->node.index() != b->node.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using N = std::decay_t<decltype(x)>;
            const auto& y = std::get<N>(b->node);
            if constexpr (std::is_same_v<N, TVar>) {
                return x.name == y.name;
            } else if constexpr (std::is_same_v<N, TConst>) {
                return x.value == y.value;
            } else if constexpr (std::is_same_v<N, TAdd> || std::is_same_v<N, TSub> ||
                                 std::is_same_v<N, TStar>) {
                return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
            } else if constexpr (std::is_same_v<N, TNeg>) {
                return equal(x.arg, y.arg);
            } else if constexpr (std::is_same_v<N, TScalar>) {
                return x.coeff == y.coeff && equal(x.arg, y.arg);
            } else {
                return x.gamma == y.gamma && equal(x.num, y.num) && equal(x.den, y.den);
            }
        },
        a->node);
}

bool equal(const Formula& a, const Formula& b) {
    if (a == b) return true;
    if (a->node.index() != b->node.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using N = std::decay_t<decltype(x)>;
            const auto& y = std::get<N>(b->node);
            if constexpr (std::is_same_v<N, FOrdCmp>) {
                return x.op == y.op && equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
            } else if constexpr (std::is_same_v<N, FInCoset>) {
                return x.lambda == y.lambda && x.spec == y.spec && equal(x.arg, y.arg);
            } else if constexpr (std::is_same_v<N, FEq>) {
                return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
            } else if constexpr (std::is_same_v<N, FAnd> || std::is_same_v<N, FOr>) {
                return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
            } else if constexpr (std::is_same_v<N, FNot>) {
                return equal(x.arg, y.arg);
            } else {
                return x.var == y.var && equal(x.body, y.body);
            }
        },
        a->node);
}

} // namespace padcell
