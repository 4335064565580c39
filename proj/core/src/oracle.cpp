#include "padcell/oracle.hpp"

#include <sstream>

namespace padcell {

namespace {

Rat prime_power_rat(long prime, long k) {
    if (k >= 0) return Rat(pow_int(prime, k));
    return Rat(Int(1), pow_int(prime, -k));
}

} // namespace

Rat GridPoint::value(long prime) const {
    if (is_zero()) return Rat(0);
    return Rat(unit) * prime_power_rat(prime, valuation);
}

PAdic GridPoint::ball(long prime) const {
    if (is_zero()) return PAdic::zero(prime);
    return PAdic::from_parts(prime, valuation, unit, depth);
}

std::string GridPoint::text(long prime) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << to_string(value(prime)) << " + O(" << prime << "^" << (valuation + depth) << ")";
    return os.str();
}

SampleGrid sample_grid(long p, int V, int D) {
    if (V < 0 || D < 1) throw std::invalid_argument("sample_grid: V >= 0 and D >= 1 required");
    SampleGrid g;
    g.prime = p;
    g.val_window = V;
    g.unit_depth = D;
    g.points.push_back(GridPoint{0, Int(0), D});
    Int pd = pow_int(p, D);
    for (long v = -V; v <= V; ++v)
        for (Int u = 1; u < pd; ++u)
            if (u % p != 0) g.points.push_back(GridPoint{v, u, D});
    return g;
}

namespace {

struct PointOutcome {
    enum class Kind { Agree, Disagree, Undecided } kind;
    TriBool lhs = TriBool::Undecided;
    TriBool rhs = TriBool::Undecided;
    GridPoint at;
};

using BallEval = std::function<TriBool(const PAdic&, const PrecisionContext&)>;

PointOutcome compare_point(const BallEval& lhs, const BallEval& rhs, const GridPoint& gp,
                           long prime, const PrecisionContext& base, int depth_cap) {
    PrecisionContext ctx(prime, std::max(base.target_precision, gp.depth + base.guard_digits),
                         base.guard_digits);
    PAdic ball = gp.ball(prime);
    TriBool s1 = lhs(ball, ctx);
    TriBool s2 = rhs(ball, ctx);
    if (s1 != TriBool::Undecided && s2 != TriBool::Undecided) {
        if (s1 == s2) return {PointOutcome::Kind::Agree, s1, s2, gp};
        return {PointOutcome::Kind::Disagree, s1, s2, gp};
    }
    if (gp.is_zero() || gp.depth >= depth_cap)
        return {PointOutcome::Kind::Undecided, s1, s2, gp};
    // Split the ball into its p children one digit deeper and require a
    // uniform verdict underneath.
    Int step = pow_int(prime, gp.depth);
    bool any_undecided = false;
    GridPoint stuck = gp;
    for (long j = 0; j < prime; ++j) {
        GridPoint child{gp.valuation, gp.unit + Int(j) * step, gp.depth + 1};
        PointOutcome sub = compare_point(lhs, rhs, child, prime, base, depth_cap);
        if (sub.kind == PointOutcome::Kind::Disagree) return sub;
        if (sub.kind == PointOutcome::Kind::Undecided) {
            any_undecided = true;
            stuck = sub.at;
        }
    }
    if (any_undecided) return {PointOutcome::Kind::Undecided, s1, s2, stuck};
    return {PointOutcome::Kind::Agree, s1, s2, gp};
}

std::string shared_variable(const Formula& lhs, const Formula& rhs) {
    std::set<std::string> fv = free_vars(lhs);
    for (const std::string& v : free_vars(rhs)) fv.insert(v);
    if (fv.size() > 1) throw ScopeError("equiv_check: formulas mention different variables");
    return fv.empty() ? "t" : *fv.begin();
}

} // namespace

EquivReport equiv_check(const Formula& lhs, const Formula& rhs, const SampleGrid& grid,
                        const PrecisionContext& ctx, int depth_cap) {
    const std::string var = shared_variable(lhs, rhs);
    EquivReport report;
    for (const GridPoint& gp : grid.points) {
        PointOutcome o = compare_point(
            [&](const PAdic& x, const PrecisionContext& pctx) {
                return eval_formula(lhs, Assignment{{var, x}}, pctx);
            },
            [&](const PAdic& x, const PrecisionContext& pctx) {
                return eval_formula(rhs, Assignment{{var, x}}, pctx);
            },
            gp, grid.prime, ctx, depth_cap);
        switch (o.kind) {
        case PointOutcome::Kind::Agree: ++report.agree_count; break;
        case PointOutcome::Kind::Disagree:
            report.disagreements.push_back(Disagreement{o.at, o.lhs, o.rhs});
            break;
        case PointOutcome::Kind::Undecided: report.undecided.push_back(o.at); break;
        }
    }
    return report;
}

bool brute_exists(const Formula& body, const std::string& var, const SampleGrid& grid,
                  const PrecisionContext& ctx) {
    // Exact evaluation at the ball centers: a hit is a genuine witness, which
    // a ball verdict could not promise for equalities.
    for (const GridPoint& gp : grid.points) {
        PrecisionContext pctx(grid.prime,
                              std::max(ctx.target_precision, gp.depth + ctx.guard_digits),
                              ctx.guard_digits);
        Assignment asg{{var, PAdic::from_rational(gp.value(grid.prime), pctx)}};
        if (eval_formula(body, asg, pctx) == TriBool::True) return true;
    }
    return false;
}

CoverReport cover_check(const Formula& f, const std::vector<Cell>& cells,
                        const SampleGrid& grid, const PrecisionContext& ctx, int depth_cap) {
    std::set<std::string> fv = free_vars(f);
    if (fv.size() > 1) throw ScopeError("cover_check: more than one free variable");
    const std::string var = fv.empty() ? "t" : *fv.begin();
    const long prime = grid.prime;

    Formula lhs = f;
    auto union_member = [&cells](const PAdic& x) {
        TriBool acc = TriBool::False;
        for (const Cell& c : cells) acc = tri_or(acc, cell_member(c, x));
        return acc;
    };

    CoverReport report;
    for (const GridPoint& gp : grid.points) {
        PointOutcome o = compare_point(
            [&](const PAdic& x, const PrecisionContext& pctx) {
                return eval_formula(lhs, Assignment{{var, x}}, pctx);
            },
            [&](const PAdic& x, const PrecisionContext&) { return union_member(x); }, gp, prime,
            ctx, depth_cap);
        switch (o.kind) {
        case PointOutcome::Kind::Agree: ++report.agree_count; break;
        case PointOutcome::Kind::Disagree:
            report.disagreements.push_back(Disagreement{o.at, o.lhs, o.rhs});
            break;
        case PointOutcome::Kind::Undecided: report.undecided.push_back(o.at); break;
        }
        // Disjointness at the exact center, where membership always decides.
        PrecisionContext pctx(prime, std::max(ctx.target_precision, gp.depth + 4));
        PAdic exact = PAdic::from_rational(gp.value(prime), pctx);
        int hits = 0;
        for (const Cell& c : cells)
            if (cell_member(c, exact) == TriBool::True) ++hits;
        if (hits > 1) report.overlaps.push_back(gp);
    }
    return report;
}

SampleGrid default_grid(long prime) {
    if (prime <= 3) return sample_grid(prime, 8, 6);
    if (prime == 5) return sample_grid(prime, 7, 4);
    if (prime == 7) return sample_grid(prime, 6, 3);
    return sample_grid(prime, 5, 2);
}

} // namespace padcell
