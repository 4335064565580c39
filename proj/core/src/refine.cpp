#include "padcell/refine.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <set>

#include "padcell/errors.hpp"

namespace padcell {

EngineAtom EngineAtom::ord(Poly lhs, OrdRel rel, Poly rhs) {
    EngineAtom a;
    a.kind = Kind::Ord;
    a.lhs = poly_trim(std::move(lhs));
    a.rel = rel;
    a.rhs = poly_trim(std::move(rhs));
    return a;
}

EngineAtom EngineAtom::coset(Poly arg, Rat lambda, CosetSpec spec) {
    EngineAtom a;
    a.kind = Kind::Coset;
    a.lhs = poly_trim(std::move(arg));
    a.lambda = std::move(lambda);
    a.spec = spec;
    return a;
}

namespace {

bool ext_rel(const ExtInt& a, OrdRel r, const ExtInt& b) {
    switch (r) {
        case OrdRel::Lt: return a < b;
        case OrdRel::Le: return a <= b;
        case OrdRel::Eq: return a == b;
        case OrdRel::Ne: return a != b;
        case OrdRel::Ge: return a >= b;
        case OrdRel::Gt: return a > b;
    }
    return false;
}

long floor_div(long a, long k) {
    long q = a / k, r = a % k;
    if (r != 0 && ((r < 0) != (k < 0))) --q;
    return q;
}

long ceil_div(long a, long k) { return -floor_div(-a, k); }

long pos_mod(long a, long n) { return ((a % n) + n) % n; }

Rat prime_power(long prime, long e) {
    if (e >= 0) return Rat(pow_int(prime, e));
    return Rat(Int(1), pow_int(prime, -e));
}

// Rational roots, used to fast-forward ring recursion onto a root's ball.
// Gives up on large extreme coefficients; that only costs recursion depth.
std::vector<Rat> rational_roots(Poly p) {
    p = poly_trim(std::move(p));
    std::vector<Rat> roots;
    if (poly_deg(p) < 1) return roots;
    std::size_t shift = 0;
    while (shift < p.size() && rat_is_zero(p[shift])) ++shift;
    if (shift > 0) {
        roots.push_back(Rat(0));
        p.erase(p.begin(), p.begin() + static_cast<long>(shift));
    }
    if (poly_deg(p) == 1) {
        roots.push_back(-p[0] / p[1]);
    } else if (poly_deg(p) >= 2) {
        Int den(1);
        for (const Rat& c : p) {
            Int g = boost::multiprecision::gcd(den, c.denominator());
            den = den / g * c.denominator();
        }
        std::vector<Int> a;
        for (const Rat& c : p) a.push_back((c * Rat(den)).numerator());
        Int bound("1000000000000");
        using boost::multiprecision::abs;
        if (abs(a.front()) <= bound && abs(a.back()) <= bound) {
            auto divisors = [](Int x) {
                std::vector<Int> ds;
                x = abs(x);
                for (Int d = 1; d * d <= x; ++d)
                    if (x % d == 0) {
                        ds.push_back(d);
                        ds.push_back(x / d);
                    }
                return ds;
            };
            for (const Int& r : divisors(a.front()))
                for (const Int& s : divisors(a.back())) {
                    Rat cand(r, s);
                    if (rat_is_zero(poly_eval(p, cand))) roots.push_back(cand);
                    if (rat_is_zero(poly_eval(p, -cand))) roots.push_back(-cand);
                }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Unit depth at which membership in the group is invariant: multiplying by
// a unit = 1 mod p^level never changes it. Finer than the ball decision
// level, which adds guard digits.
int group_level(const CosetSpec& spec, long prime) {
    switch (spec.kind) {
        case CosetKind::Qnm: return spec.m;
        case CosetKind::Pn: return pn_as_qnm_union(spec.n, prime).m;
        default: return 1;
    }
}

bool in_coset_rat(const Rat& x, const Rat& lambda, const CosetSpec& spec, long prime) {
    switch (spec.kind) {
        case CosetKind::Zero: return rat_is_zero(x);
        case CosetKind::Trivial: return !rat_is_zero(x);
        case CosetKind::Pn: return !rat_is_zero(x) && is_pn(x / lambda, spec.n, prime);
        case CosetKind::Qnm:
            return !rat_is_zero(x) && is_qnm(x / lambda, spec.n, spec.m, prime);
    }
    return false;
}

bool atom_at(const EngineAtom& a, const Rat& t, long prime) {
    if (a.kind == EngineAtom::Kind::Ord)
        return ext_rel(poly_ord_at(a.lhs, t, prime), a.rel, poly_ord_at(a.rhs, t, prime));
    return in_coset_rat(poly_eval(a.lhs, t), a.lambda, a.spec, prime);
}

struct Ivl {
    ExtInt lo, hi;
};

// Valuation range of p over the ball ord(t - c) >= v0. When the constant
// term strictly dominates every other contribution the range is a point.
Ivl ball_ord(const Poly& p, const Rat& c, long v0, long prime) {
    Poly q = poly_shift(p, c);
    if (poly_is_zero(q)) return {ExtInt::pos_inf(), ExtInt::pos_inf()};
    std::optional<long> o0;
    ExtInt rest = ExtInt::pos_inf();
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (rat_is_zero(q[i])) continue;
        long o = ord_rat(q[i], prime);
        if (i == 0)
            o0 = o;
        else if (ExtInt(o + static_cast<long>(i) * v0) < rest)
            rest = ExtInt(o + static_cast<long>(i) * v0);
    }
    if (o0 && ExtInt(*o0) < rest) return {ExtInt(*o0), ExtInt(*o0)};
    ExtInt lo = rest;
    if (o0 && ExtInt(*o0) < lo) lo = ExtInt(*o0);
    return {lo, ExtInt::pos_inf()};
}

TriBool ivl_rel(const Ivl& a, OrdRel r, const Ivl& b) {
    switch (r) {
        case OrdRel::Lt:
            if (a.hi < b.lo) return TriBool::True;
            if (a.lo >= b.hi) return TriBool::False;
            return TriBool::Undecided;
        case OrdRel::Le:
            if (a.hi <= b.lo) return TriBool::True;
            if (a.lo > b.hi) return TriBool::False;
            return TriBool::Undecided;
        case OrdRel::Gt: return ivl_rel(b, OrdRel::Lt, a);
        case OrdRel::Ge: return ivl_rel(b, OrdRel::Le, a);
        case OrdRel::Eq:
            if (a.lo == a.hi && b.lo == b.hi && a.lo == b.lo) return TriBool::True;
            if (a.hi < b.lo || b.hi < a.lo) return TriBool::False;
            return TriBool::Undecided;
        case OrdRel::Ne: return tri_not(ivl_rel(a, OrdRel::Eq, b));
    }
    return TriBool::Undecided;
}

// Status over the whole ball; Undecided when the ball must be refined.
TriBool atom_on_ball(const EngineAtom& a, const Rat& c, long v0, long prime) {
    if (a.kind == EngineAtom::Kind::Ord)
        return ivl_rel(ball_ord(a.lhs, c, v0, prime), a.rel, ball_ord(a.rhs, c, v0, prime));
    Poly q = poly_shift(a.lhs, c);
    if (poly_is_zero(q))
        return tri_from(a.spec.kind == CosetKind::Zero);
    if (poly_deg(q) == 0) return tri_from(in_coset_rat(q[0], a.lambda, a.spec, prime));
    // membership is ball-constant once the constant term dominates by the
    // decision margin: the value is q(0) times a unit = 1 mod p^level
    if (!rat_is_zero(q[0])) {
        long o0 = ord_rat(q[0], prime);
        long rest = LONG_MAX;
        for (std::size_t i = 1; i < q.size(); ++i) {
            if (rat_is_zero(q[i])) continue;
            rest = std::min(rest, ord_rat(q[i], prime) + static_cast<long>(i) * v0);
        }
        if (rest != LONG_MAX && rest - o0 >= group_level(a.spec, prime))
            return tri_from(in_coset_rat(q[0], a.lambda, a.spec, prime));
    }
    return TriBool::Undecided;
}

struct SideInfo {
    std::vector<long> idx; // support of the recentered polynomial
    std::vector<long> oc;  // coefficient valuations on the support
    long gap = 1;          // dominance margin this side must win by
};

struct Analysis {
    std::vector<SideInfo> sides;
    std::vector<std::pair<int, int>> atom_sides; // -1 for absent sides
    std::set<long> exceptional;                  // contested valuations
    long lo_stable = -1;                         // statuses stable for v <= this
    long hi_stable = 0;                          // statuses periodic for v >= this
};

struct Engine {
    const std::vector<EngineAtom>& atoms;
    const TruthFn& truth;
    const RefineConfig& cfg;
    RefineStats* stats;

    long N = 1; // valuation period of the emitted classes
    int M = 1;  // unit depth of the emitted classes
    CosetTable table;
    std::vector<long> units; // unit lifts mod p^M
    std::vector<Rat> roots;  // rational roots of the atom polynomials
    std::vector<RawCell> out;

    Engine(const std::vector<EngineAtom>& atoms_, const TruthFn& truth_,
           const RefineConfig& cfg_, RefineStats* stats_);

    Analysis analyze(const Rat& c) const;
    TriBool status_at(const Rat& t) const;
    TriBool status_on_ball(const Rat& c, long v0) const;
    Rat canon_lambda(long unit, long v) const;
    void emit_class(const Rat& c, std::optional<long> lo, std::optional<long> hi, long unit,
                    long v_rep);
    void scan(const Rat& c, std::optional<long> v0, int depth);
    void ring(const Rat& c, long v, int depth);
    void recurse(const Rat& c, long v0, int depth);
    void run();
};

Engine::Engine(const std::vector<EngineAtom>& atoms_, const TruthFn& truth_,
               const RefineConfig& cfg_, RefineStats* stats_)
    : atoms(atoms_), truth(truth_), cfg(cfg_), stats(stats_), table(CosetTable::build(1, 1, cfg_.prime)) {
    for (const EngineAtom& a : atoms) {
        if (a.kind != EngineAtom::Kind::Coset) continue;
        if (a.spec.kind == CosetKind::Pn || a.spec.kind == CosetKind::Qnm)
            N = std::lcm(N, a.spec.n);
        M = std::max(M, group_level(a.spec, cfg.prime));
    }
    table = CosetTable::build(N, M, cfg.prime);
    Int pm = pow_int(cfg.prime, M);
    for (Int u = 1; u < pm; ++u)
        if (u % cfg.prime != 0) units.push_back(u.convert_to<long>());
    std::set<Rat> rs;
    for (const EngineAtom& a : atoms) {
        for (const Rat& r : rational_roots(a.lhs)) rs.insert(r);
        if (a.kind == EngineAtom::Kind::Ord)
            for (const Rat& r : rational_roots(a.rhs)) rs.insert(r);
    }
    roots.assign(rs.begin(), rs.end());
}

Analysis Engine::analyze(const Rat& c) const {
    Analysis an;
    auto add_side = [&](const Poly& p, long gap) -> int {
        SideInfo s;
        s.gap = gap;
        Poly q = poly_shift(p, c);
        for (long i = 0; i <= poly_deg(q); ++i) {
            if (rat_is_zero(q[i])) continue;
            s.idx.push_back(i);
            s.oc.push_back(ord_rat(q[i], cfg.prime));
        }
        an.sides.push_back(std::move(s));
        return static_cast<int>(an.sides.size()) - 1;
    };
    for (const EngineAtom& a : atoms) {
        if (a.kind == EngineAtom::Kind::Ord)
            an.atom_sides.emplace_back(add_side(a.lhs, 1), add_side(a.rhs, 1));
        else
            an.atom_sides.emplace_back(
                add_side(a.lhs, std::max(1, group_level(a.spec, cfg.prime))), -1);
    }

    // Candidate contested valuations: where two support terms come within
    // the margin of each other. Then keep those where the minimum really
    // fails to win by the margin.
    std::set<long> cand;
    for (const SideInfo& s : an.sides)
        for (std::size_t a = 0; a < s.idx.size(); ++a)
            for (std::size_t b = a + 1; b < s.idx.size(); ++b) {
                long slope = s.idx[b] - s.idx[a];
                long delta = s.oc[a] - s.oc[b];
                long lo = ceil_div(delta - (s.gap - 1), slope);
                long hi = floor_div(delta + (s.gap - 1), slope);
                for (long v = lo; v <= hi; ++v) cand.insert(v);
            }
    for (long v : cand) {
        for (const SideInfo& s : an.sides) {
            if (s.idx.size() < 2) continue;
            long m1 = LONG_MAX, m2 = LONG_MAX;
            for (std::size_t k = 0; k < s.idx.size(); ++k) {
                long val = s.oc[k] + s.idx[k] * v;
                if (val < m1) {
                    m2 = m1;
                    m1 = val;
                } else {
                    m2 = std::min(m2, val);
                }
            }
            if (m2 - m1 < s.gap) {
                an.exceptional.insert(v);
                break;
            }
        }
    }

    // Tail thresholds: beyond them the extreme support index dominates by
    // the margin and every comparison keeps a fixed sign.
    for (const SideInfo& s : an.sides) {
        if (s.idx.size() < 2) continue;
        long i0 = s.idx.front(), o0 = s.oc.front();
        long id = s.idx.back(), od = s.oc.back();
        for (std::size_t k = 0; k < s.idx.size(); ++k) {
            if (s.idx[k] != i0)
                an.hi_stable =
                    std::max(an.hi_stable, ceil_div(s.gap + o0 - s.oc[k], s.idx[k] - i0));
            if (s.idx[k] != id)
                an.lo_stable =
                    std::min(an.lo_stable, floor_div(s.oc[k] - od - s.gap, id - s.idx[k]));
        }
    }
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].kind != EngineAtom::Kind::Ord) continue;
        const SideInfo& l = an.sides[an.atom_sides[i].first];
        const SideInfo& r = an.sides[an.atom_sides[i].second];
        if (l.idx.empty() || r.idx.empty()) continue;
        if (l.idx.front() != r.idx.front())
            an.hi_stable = std::max(
                an.hi_stable,
                floor_div(r.oc.front() - l.oc.front(), l.idx.front() - r.idx.front()) + 1);
        if (l.idx.back() != r.idx.back())
            an.lo_stable = std::min(
                an.lo_stable,
                ceil_div(r.oc.back() - l.oc.back(), l.idx.back() - r.idx.back()) - 1);
    }
    if (!an.exceptional.empty()) {
        an.hi_stable = std::max(an.hi_stable, *an.exceptional.rbegin() + 1);
        an.lo_stable = std::min(an.lo_stable, *an.exceptional.begin() - 1);
    }
    return an;
}

TriBool Engine::status_at(const Rat& t) const {
    std::vector<TriBool> st;
    st.reserve(atoms.size());
    for (const EngineAtom& a : atoms) st.push_back(tri_from(atom_at(a, t, cfg.prime)));
    return truth(st);
}

TriBool Engine::status_on_ball(const Rat& c, long v0) const {
    std::vector<TriBool> st;
    st.reserve(atoms.size());
    for (const EngineAtom& a : atoms) st.push_back(atom_on_ball(a, c, v0, cfg.prime));
    return truth(st);
}

Rat Engine::canon_lambda(long unit, long v) const {
    Rat raw = Rat(unit) * prime_power(cfg.prime, v);
    PrecisionContext ctx(cfg.prime, std::max(M + 4, table.decision_precision + 2));
    return Rat(table.rep_of(PAdic::from_rational(raw, ctx)));
}

void Engine::emit_class(const Rat& c, std::optional<long> lo, std::optional<long> hi, long unit,
                        long v_rep) {
    out.push_back(RawCell{c, lo, hi, canon_lambda(unit, v_rep), CosetSpec::qnm(N, M)});
}

void Engine::scan(const Rat& c, std::optional<long> v0, int depth) {
    Analysis an = analyze(c);
    long start;
    if (!v0) {
        long R = an.lo_stable;
        for (long r = 0; r < N; ++r) {
            long vr = R - pos_mod(R - r, N);
            for (long u : units)
                if (status_at(c + Rat(u) * prime_power(cfg.prime, vr)) == TriBool::True)
                    emit_class(c, std::nullopt, vr, u, vr);
        }
        start = R + 1;
    } else {
        start = *v0;
    }
    long V = std::max(an.hi_stable, start);
    for (long v = start; v < V; ++v) {
        if (an.exceptional.count(v)) {
            ring(c, v, depth);
            continue;
        }
        for (long u : units)
            if (status_at(c + Rat(u) * prime_power(cfg.prime, v)) == TriBool::True)
                emit_class(c, v, v, u, v);
    }
    for (long r = 0; r < N; ++r) {
        long vr = V + pos_mod(r - V, N);
        for (long u : units)
            if (status_at(c + Rat(u) * prime_power(cfg.prime, vr)) == TriBool::True)
                emit_class(c, vr, std::nullopt, u, vr);
    }
    if (status_at(c) == TriBool::True)
        out.push_back(RawCell{c, std::nullopt, std::nullopt, Rat(0), CosetSpec::zero()});
}

void Engine::ring(const Rat& c, long v, int depth) {
    if (stats) ++stats->ball_splits;
    for (long u = 1; u < cfg.prime; ++u) {
        Rat child = c + Rat(u) * prime_power(cfg.prime, v);
        const Rat* hit = nullptr;
        for (const Rat& root : roots) {
            Rat d = root - child;
            if (rat_is_zero(d) || ord_rat(d, cfg.prime) >= v + 1) {
                hit = &root;
                break;
            }
        }
        if (hit && *hit != child && stats) ++stats->recenterings;
        recurse(hit ? *hit : child, v + 1, depth + 1);
    }
}

void Engine::recurse(const Rat& c, long v0, int depth) {
    if (depth > cfg.depth_cap)
        throw DepthExceeded("refinement passed the depth cap of " +
                            std::to_string(cfg.depth_cap) + " near " + to_string(c));
    TriBool whole = status_on_ball(c, v0);
    if (whole == TriBool::False) return;
    if (whole == TriBool::True) {
        out.push_back(RawCell{c, v0, std::nullopt, Rat(1), CosetSpec::trivial()});
        out.push_back(RawCell{c, std::nullopt, std::nullopt, Rat(0), CosetSpec::zero()});
        return;
    }
    scan(c, v0, depth);
}

void Engine::run() {
    // When every atom is rooted at one point, scanning from that point keeps
    // a one-class solution set in a single cell instead of splitting it
    // across ring children.
    Rat c0(0);
    if (!roots.empty()) {
        bool common = true;
        for (const Rat& r : roots)
            if (r != roots.front()) { common = false; break; }
        if (common) c0 = roots.front();
    }
    scan(c0, std::nullopt, 0);
}

// ---- merging ----

struct CellKey {
    Rat center;
    int kind;
    long n;
    int m;
    Rat lambda;
    bool operator<(const CellKey& o) const {
        if (center != o.center) return center < o.center;
        if (kind != o.kind) return kind < o.kind;
        if (n != o.n) return n < o.n;
        if (m != o.m) return m < o.m;
        return lambda < o.lambda;
    }
};

ExtInt lo_key(const RawCell& c) {
    return c.lo ? ExtInt(*c.lo) : ExtInt::neg_inf();
}

// Smallest valuation the cell's coset admits strictly above v.
long next_admitted(const RawCell& c, long v, long prime) {
    if (c.spec.kind != CosetKind::Qnm) return v + 1;
    long r = pos_mod(ord_rat(c.lambda, prime), c.spec.n);
    return v + 1 + pos_mod(r - (v + 1), c.spec.n);
}

std::vector<RawCell> stitch(std::vector<RawCell> cells, long prime) {
    std::map<CellKey, std::vector<RawCell>> groups;
    std::vector<RawCell> out;
    for (RawCell& c : cells) {
        if (rat_is_zero(c.lambda)) {
            out.push_back(std::move(c)); // point cells pass through
            continue;
        }
        groups[CellKey{c.center, static_cast<int>(c.spec.kind), c.spec.n, c.spec.m, c.lambda}]
            .push_back(std::move(c));
    }
    for (auto& [key, list] : groups) {
        (void)key;
        std::sort(list.begin(), list.end(),
                  [](const RawCell& a, const RawCell& b) { return lo_key(a) < lo_key(b); });
        RawCell cur = list.front();
        for (std::size_t i = 1; i < list.size(); ++i) {
            const RawCell& nxt = list[i];
            bool joins = !cur.hi || (nxt.lo && *nxt.lo <= next_admitted(cur, *cur.hi, prime));
            if (joins) {
                if (cur.hi && nxt.hi && *nxt.hi > *cur.hi) cur.hi = nxt.hi;
                if (!nxt.hi) cur.hi = std::nullopt;
            } else {
                out.push_back(cur);
                cur = nxt;
            }
        }
        out.push_back(cur);
    }
    return out;
}

std::vector<RawCell> merge_trivial_families(std::vector<RawCell> cells, const CosetTable& table) {
    struct WinKey {
        Rat center;
        std::optional<long> lo, hi;
        bool operator<(const WinKey& o) const {
            if (center != o.center) return center < o.center;
            if (lo != o.lo) return lo < o.lo;
            return hi < o.hi;
        }
    };
    std::map<WinKey, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const RawCell& c = cells[i];
        if (c.spec.kind == CosetKind::Qnm && c.spec.n == table.n && c.spec.m == table.m)
            groups[WinKey{c.center, c.lo, c.hi}].push_back(i);
    }
    std::set<std::size_t> drop;
    std::vector<RawCell> added;
    for (auto& [key, idxs] : groups) {
        if (idxs.size() != table.size()) continue;
        std::set<Rat> have;
        for (std::size_t i : idxs) have.insert(cells[i].lambda);
        bool full = have.size() == table.size();
        for (const Int& rep : table.reps) full = full && have.count(Rat(rep));
        if (!full) continue;
        for (std::size_t i : idxs) drop.insert(i);
        added.push_back(RawCell{key.center, key.lo, key.hi, Rat(1), CosetSpec::trivial()});
    }
    std::vector<RawCell> out;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (!drop.count(i)) out.push_back(std::move(cells[i]));
    out.insert(out.end(), added.begin(), added.end());
    return out;
}

} // namespace

bool raw_cell_less(const RawCell& a, const RawCell& b) {
    if (a.center != b.center) return a.center < b.center;
    bool pa = rat_is_zero(a.lambda), pb = rat_is_zero(b.lambda);
    if (pa != pb) return pb; // point cell last within its center
    ExtInt alo = a.lo ? ExtInt(*a.lo) : ExtInt::neg_inf();
    ExtInt blo = b.lo ? ExtInt(*b.lo) : ExtInt::neg_inf();
    if (alo != blo) return alo < blo;
    ExtInt ahi = a.hi ? ExtInt(*a.hi) : ExtInt::pos_inf();
    ExtInt bhi = b.hi ? ExtInt(*b.hi) : ExtInt::pos_inf();
    if (ahi != bhi) return ahi < bhi;
    if (a.spec.kind != b.spec.kind)
        return static_cast<int>(a.spec.kind) < static_cast<int>(b.spec.kind);
    if (a.spec.n != b.spec.n) return a.spec.n < b.spec.n;
    if (a.spec.m != b.spec.m) return a.spec.m < b.spec.m;
    return a.lambda < b.lambda;
}

std::vector<RawCell> refine_to_cells(const std::vector<EngineAtom>& atoms, const TruthFn& truth,
                                     const RefineConfig& cfg, RefineStats* stats) {
    Engine eng(atoms, truth, cfg, stats);
    eng.run();
    std::vector<RawCell> cells = stitch(std::move(eng.out), cfg.prime);
    if (cfg.merge_trivial) {
        cells = merge_trivial_families(std::move(cells), eng.table);
        cells = stitch(std::move(cells), cfg.prime);
    }
    std::sort(cells.begin(), cells.end(), raw_cell_less);
    return cells;
}

} // namespace padcell
