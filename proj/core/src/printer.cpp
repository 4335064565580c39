#include "padcell/printer.hpp"

namespace padcell {

namespace {

std::string sum_str(const Term& t);

// Factor position: sums need parentheses, everything else stands alone.
std::string factor_str(const Term& t) {
    return std::visit(
        [&](const auto& n) -> std::string {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, TAdd> || std::is_same_v<N, TSub>) {
                return "(" + sum_str(t) + ")";
            } else if constexpr (std::is_same_v<N, TVar>) {
                return n.name;
            } else if constexpr (std::is_same_v<N, TConst>) {
                return to_string(n.value);
            } else if constexpr (std::is_same_v<N, TNeg>) {
                return "-" + factor_str(n.arg);
            } else if constexpr (std::is_same_v<N, TScalar>) {
                return "(" + to_string(n.coeff) + ")*" + factor_str(n.arg);
            } else if constexpr (std::is_same_v<N, TStar>) {
                return "star(" + sum_str(n.lhs) + ", " + sum_str(n.rhs) + ")";
            } else {
                return "divg[" + std::to_string(n.gamma) + "](" + sum_str(n.num) + ", " +
                       sum_str(n.den) + ")";
            }
        },
        t->node);
}

std::string sum_str(const Term& t) {
    if (const auto* a = std::get_if<TAdd>(&t->node))
        return sum_str(a->lhs) + " + " + factor_str(a->rhs);
    if (const auto* s = std::get_if<TSub>(&t->node))
        return sum_str(s->lhs) + " - " + factor_str(s->rhs);
    return factor_str(t);
}

// Connective strength: "or" 1, "and" 2, literals 3. Exists binds its whole
// tail, so it is 0 and gets parentheses anywhere but the outermost position.
int prec(const Formula& f) {
    if (std::holds_alternative<FOr>(f->node)) return 1;
    if (std::holds_alternative<FAnd>(f->node)) return 2;
    if (std::holds_alternative<FExists>(f->node)) return 0;
    return 3;
}

std::string f_str(const Formula& f, int min_prec) {
    if (prec(f) < min_prec) return "(" + f_str(f, 0) + ")";
    return std::visit(
        [&](const auto& n) -> std::string {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, FOrdCmp>) {
                return "ord(" + sum_str(n.lhs) + ") " + cmp_op_str(n.op) + " ord(" +
                       sum_str(n.rhs) + ")";
            } else if constexpr (std::is_same_v<N, FInCoset>) {
                std::string head;
                if (n.spec.kind == CosetKind::Pn) {
                    head = "Pn[" + std::to_string(n.spec.n) + "](";
                    if (n.lambda == Rat(1)) return head + sum_str(n.arg) + ")";
                } else {
                    head = "Qnm[" + std::to_string(n.spec.n) + "," +
                           std::to_string(n.spec.m) + "](";
                }
                return head + to_string(n.lambda) + ", " + sum_str(n.arg) + ")";
            } else if constexpr (std::is_same_v<N, FEq>) {
                return sum_str(n.lhs) + " = " + sum_str(n.rhs);
            } else if constexpr (std::is_same_v<N, FAnd>) {
                return f_str(n.lhs, 2) + " and " + f_str(n.rhs, 3);
            } else if constexpr (std::is_same_v<N, FOr>) {
                return f_str(n.lhs, 1) + " or " + f_str(n.rhs, 2);
            } else if constexpr (std::is_same_v<N, FNot>) {
                return "not (" + f_str(n.arg, 0) + ")";
            } else {
                return "exists " + n.var + ". " + f_str(n.body, 0);
            }
        },
        f->node);
}

} // namespace

std::string print(const Term& t) { return sum_str(t); }

std::string print(const Formula& f) { return f_str(f, 0); }

} // namespace padcell
