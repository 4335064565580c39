#include "padcell/semantics.hpp"

#include <stdexcept>

#include "padcell/errors.hpp"

namespace padcell {

TriBool tri_not(TriBool a) {
    switch (a) {
        case TriBool::False: return TriBool::True;
        case TriBool::True: return TriBool::False;
        default: return TriBool::Undecided;
    }
}

TriBool tri_and(TriBool a, TriBool b) {
    if (a == TriBool::False || b == TriBool::False) return TriBool::False;
    if (a == TriBool::True && b == TriBool::True) return TriBool::True;
    return TriBool::Undecided;
}

TriBool tri_or(TriBool a, TriBool b) {
    if (a == TriBool::True || b == TriBool::True) return TriBool::True;
    if (a == TriBool::False && b == TriBool::False) return TriBool::False;
    return TriBool::Undecided;
}

const char* tri_str(TriBool a) {
    switch (a) {
        case TriBool::False: return "false";
        case TriBool::True: return "true";
        default: return "undecided";
    }
}

OrdInterval ord_interval(const PAdic& x) {
    switch (x.state()) {
        case PAdic::State::Zero: return {ExtInt::pos_inf(), ExtInt::pos_inf()};
        case PAdic::State::Finite: return {ExtInt(x.ord()), ExtInt(x.ord())};
        default: return {ExtInt(x.ord_lower_bound()), ExtInt::pos_inf()};
    }
}

TriBool ord_cmp(const PAdic& a, CmpOp op, const PAdic& b) {
    OrdInterval x = ord_interval(a), y = ord_interval(b);
    auto lt = [](const OrdInterval& u, const OrdInterval& v) {
        if (u.hi < v.lo) return TriBool::True;
        if (u.lo >= v.hi) return TriBool::False;
        return TriBool::Undecided;
    };
    auto le = [](const OrdInterval& u, const OrdInterval& v) {
        if (u.hi <= v.lo) return TriBool::True;
        if (u.lo > v.hi) return TriBool::False;
        return TriBool::Undecided;
    };
    switch (op) {
        case CmpOp::Lt: return lt(x, y);
        case CmpOp::Le: return le(x, y);
        case CmpOp::Gt: return lt(y, x);
        case CmpOp::Ge: return le(y, x);
        case CmpOp::Eq: return tri_and(le(x, y), le(y, x));
    }
    return TriBool::Undecided;
}

namespace {

// g(u): u when ord u = 0, else 1. A ball whose known digits sit at ord >= 1
// is decisively a non-unit even though its exact value is unknown.
PAdic star_gauge(const PAdic& u) {
    PrecisionContext ctx(u.prime());
    switch (u.state()) {
        case PAdic::State::Zero: return PAdic::from_rational(1, 1, ctx);
        case PAdic::State::Finite:
            return u.ord() == 0 ? u : PAdic::from_rational(1, 1, ctx);
        default:
            if (u.ord_lower_bound() >= 1) return PAdic::from_rational(1, 1, ctx);
            throw InsufficientPrecision("unit test on a ball of unknown valuation");
    }
}

// ord(x / y) with the guarded-division conventions; never forms the quotient.
OrdInterval ord_div_interval(const PAdic& x, const PAdic& y) {
    if (x.state() == PAdic::State::Zero) return {ExtInt::pos_inf(), ExtInt::pos_inf()};
    if (y.state() == PAdic::State::Zero) {
        if (x.state() == PAdic::State::Finite)
            return {ExtInt::neg_inf(), ExtInt::neg_inf()};
        return {ExtInt::neg_inf(), ExtInt::pos_inf()};
    }
    OrdInterval ox = ord_interval(x), oy = ord_interval(y);
    ExtInt lo = oy.hi.is_pos_inf() ? ExtInt::neg_inf() : ox.lo - oy.hi;
    ExtInt hi = ox.hi.is_pos_inf() ? ExtInt::pos_inf() : ox.hi - oy.lo;
    return {lo, hi};
}

} // namespace

PAdic star(const PAdic& x, const PAdic& y) {
    if (x.prime() != y.prime()) throw std::invalid_argument("star: mixed primes");
    return star_gauge(x) * star_gauge(y);
}

PAdic divg(long gamma, const PAdic& x, const PAdic& y) {
    if (x.prime() != y.prime()) throw std::invalid_argument("divg: mixed primes");
    OrdInterval ox = ord_interval(x), oy = ord_interval(y), oq = ord_div_interval(x, y);
    ExtInt lo = ox.lo;
    if (oy.lo < lo) lo = oy.lo;
    if (oq.lo < lo) lo = oq.lo;
    ExtInt hi = ox.hi;
    if (oy.hi < hi) hi = oy.hi;
    if (oq.hi < hi) hi = oq.hi;
    ExtInt g{gamma};
    if (hi <= g) return PAdic::zero(x.prime());
    if (!(lo > g))
        throw InsufficientPrecision("guarded division cutoff undecidable at this precision");
    if (x.state() == PAdic::State::Zero) return PAdic::zero(x.prime());
    return x / y;
}

PAdic eval_term(const Term& t, const Assignment& asg, const PrecisionContext& ctx) {
    return std::visit(
        [&](const auto& n) -> PAdic {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, TVar>) {
                auto it = asg.find(n.name);
                if (it == asg.end()) throw ScopeError("unbound variable '" + n.name + "'");
                if (it->second.prime() != ctx.prime)
                    throw std::invalid_argument("assignment prime differs from context");
                return it->second;
            } else if constexpr (std::is_same_v<N, TConst>) {
                return PAdic::from_rational(n.value, ctx);
            } else if constexpr (std::is_same_v<N, TAdd>) {
                return eval_term(n.lhs, asg, ctx) + eval_term(n.rhs, asg, ctx);
            } else if constexpr (std::is_same_v<N, TSub>) {
                return eval_term(n.lhs, asg, ctx) - eval_term(n.rhs, asg, ctx);
            } else if constexpr (std::is_same_v<N, TNeg>) {
                return -eval_term(n.arg, asg, ctx);
            } else if constexpr (std::is_same_v<N, TScalar>) {
                return eval_term(n.arg, asg, ctx).scaled(n.coeff);
            } else if constexpr (std::is_same_v<N, TStar>) {
                return star(eval_term(n.lhs, asg, ctx), eval_term(n.rhs, asg, ctx));
            } else {
                return divg(n.gamma, eval_term(n.num, asg, ctx), eval_term(n.den, asg, ctx));
            }
        },
        t->node);
}

namespace {

// Atom evaluation: precision failures become Undecided, scope failures are
// real errors and propagate.
template <typename Fn>
TriBool atom(Fn&& fn) {
    try {
        return fn();
    } catch (const ScopeError&) {
        throw;
    } catch (const UnsupportedTerm&) {
        throw;
    } catch (const Error&) {
        return TriBool::Undecided;
    }
}

} // namespace

TriBool eval_formula(const Formula& f, const Assignment& asg, const PrecisionContext& ctx) {
    return std::visit(
        [&](const auto& n) -> TriBool {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, FOrdCmp>) {
                return atom([&] {
                    return ord_cmp(eval_term(n.lhs, asg, ctx), n.op,
                                   eval_term(n.rhs, asg, ctx));
                });
            } else if constexpr (std::is_same_v<N, FInCoset>) {
                return atom([&] {
                    return tri_from(in_coset(eval_term(n.arg, asg, ctx), n.lambda, n.spec));
                });
            } else if constexpr (std::is_same_v<N, FEq>) {
                return atom([&] {
                    PAdic d = eval_term(n.lhs, asg, ctx) - eval_term(n.rhs, asg, ctx);
                    switch (d.state()) {
                        case PAdic::State::Zero: return TriBool::True;
                        case PAdic::State::Finite: return TriBool::False;
                        default: return TriBool::Undecided;
                    }
                });
            } else if constexpr (std::is_same_v<N, FAnd>) {
                return tri_and(eval_formula(n.lhs, asg, ctx), eval_formula(n.rhs, asg, ctx));
            } else if constexpr (std::is_same_v<N, FOr>) {
                return tri_or(eval_formula(n.lhs, asg, ctx), eval_formula(n.rhs, asg, ctx));
            } else if constexpr (std::is_same_v<N, FNot>) {
                return tri_not(eval_formula(n.arg, asg, ctx));
            } else {
                throw UnsupportedTerm("pointwise evaluation of a quantifier");
            }
        },
        f->node);
}

BoundedMul bounded_mul_term(long gamma, long prime) {
    if (gamma < 0) throw std::invalid_argument("bounded_mul_term: gamma must be >= 0");
    Rat q(pow_int(prime, gamma + 1));
    Term x = t_var("x"), y = t_var("y");
    Term qx = t_scalar(q, x), qy = t_scalar(q, y);
    Term prod = t_star(t_add(t_const(Rat(1)), qx), t_add(t_const(Rat(1)), qy));
    Term body = t_sub(t_sub(t_sub(prod, qx), qy), t_const(Rat(1)));
    return BoundedMul{t_scalar(Rat(1) / (q * q), body), -gamma};
}

} // namespace padcell
