#include "padcell/cells.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "padcell/poly.hpp"
#include "padcell/printer.hpp"

namespace padcell {

namespace {

Rat rat_prime_power(long prime, long k) {
    if (k >= 0) return Rat(pow_int(prime, k));
    return Rat(Int(1), pow_int(prime, -k));
}

long pos_mod_long(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

// Group index of the coset constraint: congruence class size of admissible
// valuations within the cell.
long coset_index(const CosetSpec& spec) {
    switch (spec.kind) {
    case CosetKind::Pn:
    case CosetKind::Qnm: return spec.n;
    default: return 1;
    }
}

} // namespace

Rat term_const_value(const Term& t) {
    if (auto* c = std::get_if<TConst>(&t->node)) return c->value;
    if (auto* a = std::get_if<TAdd>(&t->node))
        return term_const_value(a->lhs) + term_const_value(a->rhs);
    if (auto* s = std::get_if<TSub>(&t->node))
        return term_const_value(s->lhs) - term_const_value(s->rhs);
    if (auto* n = std::get_if<TNeg>(&t->node)) return -term_const_value(n->arg);
    if (auto* m = std::get_if<TScalar>(&t->node))
        return m->coeff * term_const_value(m->arg);
    throw UnsupportedTerm("term_const_value: not a constant term");
}

Rat cell_center_value(const Cell& c) { return term_const_value(c.center); }

std::optional<long> cell_lower_ord(const Cell& c, long prime) {
    if (!c.lower) return std::nullopt;
    return ord_rat(term_const_value(c.lower->term), prime);
}

std::optional<long> cell_upper_ord(const Cell& c, long prime) {
    if (!c.upper) return std::nullopt;
    return ord_rat(term_const_value(c.upper->term), prime);
}

Cell cell_from_raw(const std::string& var, const RawCell& raw, long prime) {
    Cell out;
    out.variable = var;
    out.center = t_const(raw.center);
    if (rat_is_zero(raw.lambda)) {
        out.coset = {Rat(0), CosetSpec::zero()};
        return out;
    }
    if (raw.lo) out.lower = CellBound{t_const(rat_prime_power(prime, *raw.lo - 1)), true};
    if (raw.hi) out.upper = CellBound{t_const(rat_prime_power(prime, *raw.hi + 1)), true};
    out.coset = {raw.lambda, raw.spec};
    return out;
}

std::vector<EngineAtom> cell_atoms(const Cell& c, long prime) {
    std::vector<EngineAtom> atoms;
    const Rat center = cell_center_value(c);
    Poly shifted = {-center, Rat(1)};
    if (rat_is_zero(c.coset.lambda) || c.coset.spec.kind == CosetKind::Zero) {
        atoms.push_back(EngineAtom::coset(shifted, Rat(0), CosetSpec::zero()));
        return atoms;
    }
    if (c.lower)
        atoms.push_back(EngineAtom::ord(poly_const(term_const_value(c.lower->term)),
                                        OrdRel::Lt, shifted));
    if (c.upper)
        atoms.push_back(EngineAtom::ord(shifted, OrdRel::Lt,
                                        poly_const(term_const_value(c.upper->term))));
    atoms.push_back(EngineAtom::coset(shifted, c.coset.lambda, c.coset.spec));
    (void)prime;
    return atoms;
}

std::vector<Cell> precell_to_cells(const Region& pc, const std::string& var,
                                   long prime, int depth_cap) {
    std::vector<EngineAtom> atoms;
    for (const auto& oa : pc.ord_atoms) {
        if (poly_deg(oa.lhs) > 1 || poly_deg(oa.rhs) > 1)
            throw UnsupportedTerm("precell_to_cells: atom not linear in the variable");
        atoms.push_back(EngineAtom::ord(oa.lhs, oa.rel, oa.rhs));
    }
    for (const auto& ca : pc.coset_atoms) {
        if (poly_deg(ca.arg) > 1)
            throw UnsupportedTerm("precell_to_cells: atom not linear in the variable");
        atoms.push_back(EngineAtom::coset(ca.arg, ca.lambda, ca.spec));
    }
    RefineConfig cfg;
    cfg.prime = prime;
    cfg.depth_cap = depth_cap;
    cfg.merge_trivial = false;
    RefineStats stats;
    auto truth = [](const std::vector<TriBool>& st) {
        TriBool acc = TriBool::True;
        for (TriBool s : st) acc = tri_and(acc, s);
        return acc;
    };
    std::vector<Cell> out;
    for (const auto& raw : refine_to_cells(atoms, truth, cfg, &stats))
        out.push_back(cell_from_raw(var, raw, prime));
    return out;
}

std::vector<Cell> intersect_cells(const Cell& a, const Cell& b, long prime,
                                  int depth_cap) {
    if (a.variable != b.variable)
        throw std::invalid_argument("intersect_cells: different variables");
    std::vector<EngineAtom> atoms = cell_atoms(a, prime);
    for (auto& atom : cell_atoms(b, prime)) atoms.push_back(std::move(atom));
    RefineConfig cfg;
    cfg.prime = prime;
    cfg.depth_cap = depth_cap;
    RefineStats stats;
    auto truth = [](const std::vector<TriBool>& st) {
        TriBool acc = TriBool::True;
        for (TriBool s : st) acc = tri_and(acc, s);
        return acc;
    };
    std::vector<Cell> out;
    for (const auto& raw : refine_to_cells(atoms, truth, cfg, &stats))
        out.push_back(cell_from_raw(a.variable, raw, prime));
    return out;
}

TriBool cell_member(const Cell& c, const PAdic& t) {
    const long prime = t.prime();
    // exact centers carry their rational shadow, so a modest digit window
    // never costs accuracy; clamp away the zero-state precision sentinel
    PrecisionContext ctx(prime, std::clamp(t.precision(), 8, 64));
    PAdic d = t - PAdic::from_rational(cell_center_value(c), ctx);
    if (rat_is_zero(c.coset.lambda) || c.coset.spec.kind == CosetKind::Zero) {
        switch (d.state()) {
        case PAdic::State::Zero: return TriBool::True;
        case PAdic::State::Finite: return TriBool::False;
        default: return TriBool::Undecided;
        }
    }
    TriBool acc = TriBool::True;
    OrdInterval iv = ord_interval(d);
    if (auto lo = cell_lower_ord(c, prime)) {
        ExtInt bound = ExtInt(*lo);
        TriBool s = bound < iv.lo      ? TriBool::True
                    : !(bound < iv.hi) ? TriBool::False
                                       : TriBool::Undecided;
        acc = tri_and(acc, s);
    }
    if (auto hi = cell_upper_ord(c, prime)) {
        ExtInt bound = ExtInt(*hi);
        TriBool s = iv.hi < bound      ? TriBool::True
                    : !(iv.lo < bound) ? TriBool::False
                                       : TriBool::Undecided;
        acc = tri_and(acc, s);
    }
    if (acc == TriBool::False) return acc;
    try {
        acc = tri_and(acc, tri_from(in_coset(d, c.coset.lambda, c.coset.spec)));
    } catch (const InsufficientPrecision&) {
        acc = tri_and(acc, TriBool::Undecided);
    }
    return acc;
}

QECondition cell_qe(const Cell& c, long prime) {
    QECondition out;
    if (rat_is_zero(c.coset.lambda) || c.coset.spec.kind == CosetKind::Zero) {
        out.value = true; // the center itself is the witness
        return out;
    }
    if (!c.lower || !c.upper) {
        out.value = true; // a half-infinite valuation window always meets the class
        return out;
    }
    const long n = coset_index(c.coset.spec);
    const long omu = ord_rat(c.coset.lambda, prime);
    Rat a1, a2;
    try {
        a1 = term_const_value(c.lower->term);
        a2 = term_const_value(c.upper->term);
    } catch (const UnsupportedTerm&) {
        std::ostringstream os;
        const std::string s1 = print(c.lower->term);
        const std::string s2 = print(c.upper->term);
        for (long z = 0; z < n; ++z) {
            if (z) os << " or ";
            os << "(ord(" << s1 << ") = " << omu << " + " << z << " mod " << n
               << " and ord(" << s1 << ") + " << (n - z) << " < ord(" << s2 << "))";
        }
        out.residue_cases = os.str();
        return out;
    }
    const long o1 = ord_rat(a1, prime);
    const long o2 = ord_rat(a2, prime);
    const long zeta = pos_mod_long(o1 - omu, n);
    out.value = (o1 + n - zeta < o2);
    return out;
}

bool cell_less(const Cell& a, const Cell& b, long prime) {
    const Rat ca = cell_center_value(a), cb = cell_center_value(b);
    if (ca != cb) return ca < cb;
    const bool pa = rat_is_zero(a.coset.lambda), pb = rat_is_zero(b.coset.lambda);
    if (pa != pb) return pb; // point cell sorts last at its center
    auto la = cell_lower_ord(a, prime), lb = cell_lower_ord(b, prime);
    long lav = la ? *la : std::numeric_limits<long>::min();
    long lbv = lb ? *lb : std::numeric_limits<long>::min();
    if (lav != lbv) return lav < lbv;
    auto ua = cell_upper_ord(a, prime), ub = cell_upper_ord(b, prime);
    long uav = ua ? *ua : std::numeric_limits<long>::max();
    long ubv = ub ? *ub : std::numeric_limits<long>::max();
    if (uav != ubv) return uav < ubv;
    if (a.coset.spec.kind != b.coset.spec.kind)
        return static_cast<int>(a.coset.spec.kind) < static_cast<int>(b.coset.spec.kind);
    if (a.coset.spec.n != b.coset.spec.n) return a.coset.spec.n < b.coset.spec.n;
    if (a.coset.spec.m != b.coset.spec.m) return a.coset.spec.m < b.coset.spec.m;
    return a.coset.lambda < b.coset.lambda;
}

} // namespace padcell
