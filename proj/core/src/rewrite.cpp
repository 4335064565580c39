#include "padcell/rewrite.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "padcell/errors.hpp"

namespace padcell {

OrdRel rel_of(CmpOp op) {
    switch (op) {
        case CmpOp::Lt: return OrdRel::Lt;
        case CmpOp::Le: return OrdRel::Le;
        case CmpOp::Eq: return OrdRel::Eq;
        case CmpOp::Ge: return OrdRel::Ge;
        case CmpOp::Gt: return OrdRel::Gt;
    }
    return OrdRel::Eq;
}

OrdRel rel_negate(OrdRel r) {
    switch (r) {
        case OrdRel::Lt: return OrdRel::Ge;
        case OrdRel::Le: return OrdRel::Gt;
        case OrdRel::Eq: return OrdRel::Ne;
        case OrdRel::Ne: return OrdRel::Eq;
        case OrdRel::Ge: return OrdRel::Lt;
        case OrdRel::Gt: return OrdRel::Le;
    }
    return OrdRel::Eq;
}

OrdRel rel_mirror(OrdRel r) {
    switch (r) {
        case OrdRel::Lt: return OrdRel::Gt;
        case OrdRel::Le: return OrdRel::Ge;
        case OrdRel::Ge: return OrdRel::Le;
        case OrdRel::Gt: return OrdRel::Lt;
        default: return r;
    }
}

const char* rel_str(OrdRel r) {
    switch (r) {
        case OrdRel::Lt: return "<";
        case OrdRel::Le: return "<=";
        case OrdRel::Eq: return "=";
        case OrdRel::Ne: return "!=";
        case OrdRel::Ge: return ">=";
        case OrdRel::Gt: return ">";
    }
    return "?";
}

namespace {

// Trichotomy masks: bit 1 "<", bit 2 "=", bit 4 ">".
constexpr unsigned kLt = 1, kEq = 2, kGt = 4;

unsigned rel_mask(OrdRel r) {
    switch (r) {
        case OrdRel::Lt: return kLt;
        case OrdRel::Le: return kLt | kEq;
        case OrdRel::Eq: return kEq;
        case OrdRel::Ne: return kLt | kGt;
        case OrdRel::Ge: return kEq | kGt;
        case OrdRel::Gt: return kGt;
    }
    return 0;
}

std::optional<OrdRel> rel_from_mask(unsigned m) {
    switch (m) {
        case kLt: return OrdRel::Lt;
        case kLt | kEq: return OrdRel::Le;
        case kEq: return OrdRel::Eq;
        case kLt | kGt: return OrdRel::Ne;
        case kEq | kGt: return OrdRel::Ge;
        case kGt: return OrdRel::Gt;
        default: return std::nullopt; // 0 = empty, 7 = tautology
    }
}

bool ext_rel_holds(const ExtInt& a, OrdRel r, const ExtInt& b) {
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

// ord of a constant polynomial's value.
ExtInt const_ord(const Poly& p, long prime) {
    Poly t = poly_trim(p);
    if (t.empty()) return ExtInt::pos_inf();
    return ExtInt(ord_rat(t[0], prime));
}

OrdAtom atom_canonical(OrdAtom a) {
    a.lhs = poly_trim(std::move(a.lhs));
    a.rhs = poly_trim(std::move(a.rhs));
    if (poly_less(a.rhs, a.lhs)) {
        std::swap(a.lhs, a.rhs);
        a.rel = rel_mirror(a.rel);
    }
    return a;
}

// Solution set for w = ord(t - c) over Z plus the point w = +inf (t = c):
// an interval with finitely many exclusions, and an explicit inf flag.
struct WSet {
    ExtInt lo = ExtInt::neg_inf();
    ExtInt hi = ExtInt::pos_inf();
    bool inf_ok = true;
    bool finite_empty = false;
    std::vector<long> excluded;

    void clamp_lo(long v) {
        if (lo < ExtInt(v)) lo = ExtInt(v);
    }
    void clamp_hi(long v) {
        if (ExtInt(v) < hi) hi = ExtInt(v);
    }
    bool finite_nonempty() const {
        if (finite_empty || hi < lo) return false;
        if (lo.is_neg_inf() || hi.is_pos_inf()) return true;
        long count = hi.value() - lo.value() + 1;
        long cut = 0;
        for (long e : excluded)
            if (ExtInt(e) >= lo && ExtInt(e) <= hi) ++cut;
        return count > cut;
    }
    bool empty() const { return !inf_ok && !finite_nonempty(); }
};

// How one atom reads as a statement about a single center.
struct AtomView {
    enum class Kind { Decided, Constraint, Opaque } kind = Kind::Opaque;
    bool truth = false;
    Rat center;
    long k = 1;        // k * w rel bound, k >= 1
    OrdRel rel = OrdRel::Eq;
    ExtInt bound;      // never -inf
    bool inf_truth = false; // whether t = center satisfies the atom
};

AtomView view_atom(const OrdAtom& at, long prime) {
    Poly L = poly_trim(at.lhs), R = poly_trim(at.rhs);
    long dl = poly_deg(L), dr = poly_deg(R);
    AtomView v;
    if (dl <= 0 && dr <= 0) {
        v.kind = AtomView::Kind::Decided;
        v.truth = ext_rel_holds(const_ord(L, prime), at.rel, const_ord(R, prime));
        return v;
    }
    if (dl >= 1 && dr <= 0) {
        auto pf = poly_power_form(L);
        if (!pf) return v;
        v.kind = AtomView::Kind::Constraint;
        v.center = pf->center;
        v.k = pf->k;
        v.rel = at.rel;
        v.bound = const_ord(R, prime) - ExtInt(ord_rat(pf->scale, prime));
        v.inf_truth = ext_rel_holds(ExtInt::pos_inf(), at.rel, const_ord(R, prime));
        return v;
    }
    if (dl <= 0 && dr >= 1) return view_atom(OrdAtom{R, rel_mirror(at.rel), L}, prime);
    auto pl = poly_power_form(L), pr = poly_power_form(R);
    if (!pl || !pr || pl->center != pr->center) return v;
    long oa = ord_rat(pl->scale, prime), ob = ord_rat(pr->scale, prime);
    if (pl->k == pr->k) {
        v.kind = AtomView::Kind::Decided;
        v.truth = ext_rel_holds(ExtInt(oa), at.rel, ExtInt(ob));
        return v;
    }
    v.kind = AtomView::Kind::Constraint;
    v.center = pl->center;
    // ord lhs = oa + j w, ord rhs = ob + k w; both are +inf at t = center.
    v.inf_truth = (rel_mask(at.rel) & kEq) != 0;
    if (pl->k > pr->k) {
        v.k = pl->k - pr->k;
        v.rel = at.rel;
        v.bound = ExtInt(ob - oa);
    } else {
        v.k = pr->k - pl->k;
        v.rel = rel_mirror(at.rel);
        v.bound = ExtInt(oa - ob);
    }
    return v;
}

void apply_view(WSet& s, const AtomView& v) {
    if (!v.inf_truth) s.inf_ok = false;
    if (v.bound.is_pos_inf()) {
        switch (v.rel) {
            case OrdRel::Lt:
            case OrdRel::Le:
            case OrdRel::Ne: return; // every finite w qualifies
            default: s.finite_empty = true; return;
        }
    }
    long b = v.bound.value();
    switch (v.rel) {
        case OrdRel::Lt: s.clamp_hi(floor_div(b - 1, v.k)); break;
        case OrdRel::Le: s.clamp_hi(floor_div(b, v.k)); break;
        case OrdRel::Eq:
            if (b % v.k == 0) {
                s.clamp_lo(b / v.k);
                s.clamp_hi(b / v.k);
            } else {
                s.finite_empty = true;
            }
            break;
        case OrdRel::Ne:
            if (b % v.k == 0) s.excluded.push_back(b / v.k);
            break;
        case OrdRel::Ge: s.clamp_lo(floor_div(b + v.k - 1, v.k)); break;
        case OrdRel::Gt: s.clamp_lo(floor_div(b, v.k) + 1); break;
    }
}

WSet view_solution(const AtomView& v) {
    WSet s;
    s.inf_ok = v.inf_truth;
    apply_view(s, v);
    s.inf_ok = v.inf_truth;
    return s;
}

std::map<Rat, WSet> solve_centers(const Region& r, long prime) {
    std::map<Rat, WSet> out;
    for (const OrdAtom& a : r.ord_atoms) {
        AtomView v = view_atom(a, prime);
        if (v.kind == AtomView::Kind::Constraint) apply_view(out[v.center], v);
    }
    return out;
}

// Conservative: false only claims "not provable here".
bool wset_subset(const WSet& s, const WSet& t) {
    if (s.inf_ok && !t.inf_ok) return false;
    if (s.finite_nonempty()) {
        if (!(s.lo >= t.lo && s.hi <= t.hi) || t.finite_empty) return false;
        for (long e : t.excluded) {
            if (ExtInt(e) < s.lo || ExtInt(e) > s.hi) continue;
            bool also_cut = false;
            for (long x : s.excluded) also_cut |= (x == e);
            if (!also_cut) return false;
        }
    }
    return true;
}

bool wset_disjoint(const WSet& s, const WSet& t) {
    if (s.inf_ok && t.inf_ok) return false;
    if (!s.finite_nonempty() || !t.finite_nonempty()) return true;
    ExtInt lo = s.lo < t.lo ? t.lo : s.lo;
    ExtInt hi = s.hi < t.hi ? s.hi : t.hi;
    if (hi < lo) return true;
    if (lo == hi && lo.is_finite()) {
        long p = lo.value();
        for (long e : s.excluded)
            if (e == p) return true;
        for (long e : t.excluded)
            if (e == p) return true;
    }
    return false;
}

using AtomKey = std::pair<Poly, Poly>;
struct AtomKeyLess {
    bool operator()(const AtomKey& a, const AtomKey& b) const {
        if (poly_less(a.first, b.first)) return true;
        if (poly_less(b.first, a.first)) return false;
        return poly_less(a.second, b.second);
    }
};
using MaskMap = std::map<AtomKey, unsigned, AtomKeyLess>;

// Fold a region's ord atoms into canonical masks. nullopt = contradiction.
std::optional<MaskMap> fold_masks(const Region& r, long prime) {
    MaskMap masks;
    for (const OrdAtom& raw : r.ord_atoms) {
        OrdAtom a = atom_canonical(raw);
        if (poly_deg(a.lhs) <= 0 && poly_deg(a.rhs) <= 0) {
            if (!ext_rel_holds(const_ord(a.lhs, prime), a.rel, const_ord(a.rhs, prime)))
                return std::nullopt;
            continue;
        }
        if (a.lhs == a.rhs) {
            if (!(rel_mask(a.rel) & kEq)) return std::nullopt;
            continue;
        }
        AtomKey key{a.lhs, a.rhs};
        auto it = masks.find(key);
        unsigned m = it == masks.end() ? rel_mask(a.rel) : (it->second & rel_mask(a.rel));
        if (m == 0) return std::nullopt;
        masks[key] = m;
    }
    return masks;
}

bool coset_atom_equal(const CosetAtom& a, const CosetAtom& b) {
    return a.lambda == b.lambda && a.spec == b.spec &&
           poly_trim(a.arg) == poly_trim(b.arg);
}

std::string poly_text(const Poly& p, const std::string& var) {
    Poly q = poly_trim(p);
    if (q.empty()) return "0";
    std::string out;
    for (std::size_t i = q.size(); i > 0; --i) {
        std::size_t k = i - 1;
        if (rat_is_zero(q[k])) continue;
        Rat c = q[k];
        bool first = out.empty();
        if (!first) {
            out += c < Rat(0) ? " - " : " + ";
            if (c < Rat(0)) c = -c;
        }
        std::string coeff = to_string(c);
        if (k == 0) {
            out += coeff;
        } else {
            if (coeff != "1") out += coeff + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::string spec_text(const CosetSpec& s) {
    switch (s.kind) {
        case CosetKind::Pn: return "P" + std::to_string(s.n);
        case CosetKind::Qnm:
            return "Q(" + std::to_string(s.n) + "," + std::to_string(s.m) + ")";
        case CosetKind::Trivial: return "Kx";
        case CosetKind::Zero: return "{0}";
    }
    return "?";
}

} // namespace

Region region_conjoin(Region a, const Region& b) {
    a.ord_atoms.insert(a.ord_atoms.end(), b.ord_atoms.begin(), b.ord_atoms.end());
    a.coset_atoms.insert(a.coset_atoms.end(), b.coset_atoms.begin(), b.coset_atoms.end());
    return a;
}

std::optional<Region> region_normalize(const Region& r, long prime) {
    auto masks = fold_masks(r, prime);
    if (!masks) return std::nullopt;
    Region out;
    for (const auto& [key, m] : *masks) {
        auto rel = rel_from_mask(m);
        if (!rel) {
            if (m == 0) return std::nullopt;
            continue; // tautology
        }
        out.ord_atoms.push_back(OrdAtom{key.first, *rel, key.second});
    }
    for (auto& [c, s] : solve_centers(out, prime)) {
        (void)c;
        if (s.empty()) return std::nullopt;
    }
    for (const CosetAtom& ca : r.coset_atoms) {
        bool dup = false;
        for (const CosetAtom& have : out.coset_atoms) dup |= coset_atom_equal(have, ca);
        if (!dup) out.coset_atoms.push_back(ca);
    }
    return out;
}

std::optional<std::string> region_text(const Region& r, const std::string& var) {
    if (r.ord_atoms.empty() && r.coset_atoms.empty()) return std::nullopt;
    std::string out;
    auto sep = [&] {
        if (!out.empty()) out += " and ";
    };
    for (const OrdAtom& a : r.ord_atoms) {
        sep();
        out += "ord(" + poly_text(a.lhs, var) + ") " + rel_str(a.rel) + " ord(" +
               poly_text(a.rhs, var) + ")";
    }
    for (const CosetAtom& c : r.coset_atoms) {
        sep();
        out += poly_text(c.arg, var) + " in " + to_string(c.lambda) + "*" + spec_text(c.spec);
    }
    return out;
}

namespace {

struct GuardBranch {
    std::vector<OrdAtom> atoms;
    Poly value; // the factor g(...) contributes
};

std::vector<GuardBranch> star_branches(const Poly& p, long prime) {
    Poly one = poly_const(Rat(1));
    if (poly_is_zero(p)) return {GuardBranch{{}, one}};
    if (poly_deg(p) == 0)
        return {GuardBranch{{}, ord_rat(p[0], prime) == 0 ? p : one}};
    OrdAtom unit{p, OrdRel::Eq, one};
    OrdAtom nonunit{p, OrdRel::Ne, one};
    return {GuardBranch{{unit}, p}, GuardBranch{{nonunit}, one}};
}

Rat prime_power(long prime, long e) {
    if (e >= 0) return Rat(pow_int(prime, e));
    return Rat(Int(1), pow_int(prime, -e));
}

void push_piece(std::vector<ResolvedPiece>& out, Region region, Poly poly, long prime) {
    auto norm = region_normalize(region, prime);
    if (!norm) return;
    out.push_back(ResolvedPiece{std::move(*norm), poly_trim(std::move(poly))});
}

std::vector<ResolvedPiece> resolve_node(const Term& t, const std::string& var, long prime);

template <typename Fn>
std::vector<ResolvedPiece> cross(const std::vector<ResolvedPiece>& a,
                                 const std::vector<ResolvedPiece>& b, long prime, Fn&& fn) {
    std::vector<ResolvedPiece> out;
    for (const ResolvedPiece& x : a)
        for (const ResolvedPiece& y : b) {
            auto base = region_normalize(region_conjoin(x.region, y.region), prime);
            if (!base) continue;
            fn(out, *base, x.poly, y.poly);
        }
    return out;
}

std::vector<ResolvedPiece> resolve_node(const Term& t, const std::string& var, long prime) {
    return std::visit(
        [&](const auto& n) -> std::vector<ResolvedPiece> {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, TVar>) {
                if (n.name != var)
                    throw ScopeError("resolution is single-variable; found '" + n.name + "'");
                return {ResolvedPiece{{}, Poly{Rat(0), Rat(1)}}};
            } else if constexpr (std::is_same_v<N, TConst>) {
                return {ResolvedPiece{{}, poly_const(n.value)}};
            } else if constexpr (std::is_same_v<N, TAdd> || std::is_same_v<N, TSub>) {
                auto a = resolve_node(n.lhs, var, prime);
                auto b = resolve_node(n.rhs, var, prime);
                constexpr bool add = std::is_same_v<N, TAdd>;
                return cross(a, b, prime,
                             [&](auto& out, Region& base, const Poly& pa, const Poly& pb) {
                                 push_piece(out, std::move(base),
                                            add ? poly_add(pa, pb) : poly_sub(pa, pb), prime);
                             });
            } else if constexpr (std::is_same_v<N, TNeg>) {
                auto a = resolve_node(n.arg, var, prime);
                for (ResolvedPiece& p : a) p.poly = poly_neg(p.poly);
                return a;
            } else if constexpr (std::is_same_v<N, TScalar>) {
                auto a = resolve_node(n.arg, var, prime);
                for (ResolvedPiece& p : a) p.poly = poly_scale(n.coeff, p.poly);
                return a;
            } else if constexpr (std::is_same_v<N, TStar>) {
                auto a = resolve_node(n.lhs, var, prime);
                auto b = resolve_node(n.rhs, var, prime);
                return cross(a, b, prime,
                             [&](auto& out, Region& base, const Poly& pa, const Poly& pb) {
                                 for (const GuardBranch& ga : star_branches(pa, prime))
                                     for (const GuardBranch& gb : star_branches(pb, prime)) {
                                         Region reg = base;
                                         for (const OrdAtom& at : ga.atoms)
                                             reg.ord_atoms.push_back(at);
                                         for (const OrdAtom& at : gb.atoms)
                                             reg.ord_atoms.push_back(at);
                                         push_piece(out, std::move(reg),
                                                    poly_mul(ga.value, gb.value), prime);
                                     }
                             });
            } else {
                auto a = resolve_node(n.num, var, prime);
                auto b = resolve_node(n.den, var, prime);
                long gamma = n.gamma;
                return cross(a, b, prime, [&](auto& out, Region& base, const Poly& pn,
                                              const Poly& pd) {
                    if (poly_is_zero(pn) || poly_is_zero(pd)) {
                        // quotient and fallback agree: the value is 0 throughout
                        push_piece(out, std::move(base), Poly{}, prime);
                        return;
                    }
                    Poly cutoff = poly_const(prime_power(prime, gamma));
                    OrdAtom A{pn, OrdRel::Gt, cutoff};
                    OrdAtom B{pd, OrdRel::Gt, cutoff};
                    OrdAtom C{pn, OrdRel::Gt, poly_scale(prime_power(prime, gamma), pd)};
                    OrdAtom D{pd, OrdRel::Lt, Poly{}}; // pd != 0 pointwise
                    auto with = [&](std::initializer_list<OrdAtom> atoms, Poly val) {
                        Region reg = base;
                        for (const OrdAtom& at : atoms) reg.ord_atoms.push_back(at);
                        push_piece(out, std::move(reg), std::move(val), prime);
                    };
                    // A non-polynomial quotient only matters where the guard
                    // can hold at all.
                    Region qreg = base;
                    for (const OrdAtom& at : {A, B, C, D}) qreg.ord_atoms.push_back(at);
                    if (auto qnorm = region_normalize(qreg, prime)) {
                        auto quot = poly_div_exact(pn, pd);
                        if (!quot)
                            throw UnsupportedTerm(
                                "guarded division does not resolve to a polynomial");
                        out.push_back(
                            ResolvedPiece{std::move(*qnorm), poly_trim(std::move(*quot))});
                    }
                    with({OrdAtom{pn, OrdRel::Le, cutoff}}, Poly{});
                    with({A, OrdAtom{pd, OrdRel::Le, cutoff}}, Poly{});
                    with({A, B, OrdAtom{pn, OrdRel::Le, poly_scale(prime_power(prime, gamma), pd)}},
                         Poly{});
                    with({A, B, C, OrdAtom{pd, OrdRel::Ge, Poly{}}}, Poly{});
                });
            }
        },
        t->node);
}

std::string infer_var(const Term& t) {
    auto fv = free_vars(t);
    if (fv.size() > 1)
        throw UnsupportedTerm("term has more than one free variable");
    return fv.empty() ? std::string("t") : *fv.begin();
}

} // namespace

std::vector<ResolvedPiece> resolve(const Term& t, const std::string& var, long prime) {
    return resolve_node(t, var, prime);
}

long degree(const Term& t) {
    auto pieces = resolve_node(t, infer_var(t), 3);
    long d = 0;
    for (const ResolvedPiece& p : pieces) d = std::max(d, poly_deg(p.poly));
    return d;
}

std::vector<NormalForm> normal_form(const Term& t, long prime) {
    std::string var = infer_var(t);
    std::vector<NormalForm> out;
    for (ResolvedPiece& piece : resolve_node(t, var, prime)) {
        NormalForm nf;
        nf.region = piece.region;
        const Poly& P = piece.poly;
        long d = poly_deg(P);

        // Pick the center whose ball bound is tightest; smaller center on ties.
        std::optional<Rat> center;
        ExtInt best_lo = ExtInt::neg_inf();
        // Map order is ascending, so ties keep the smallest center.
        for (auto& [c, s] : solve_centers(piece.region, prime)) {
            ExtInt lo = s.finite_nonempty() ? s.lo : ExtInt::pos_inf();
            if (!center || best_lo < lo) {
                center = c;
                best_lo = lo;
            }
        }

        if (center && !best_lo.is_neg_inf()) {
            NormalForm::Expansion ex;
            ex.center = *center;
            ex.coeffs = poly_shift(P, *center);
            nf.expansion = ex;
        }

        if (d >= 2 && (!nf.expansion || best_lo.is_neg_inf()))
            throw UnsupportedTerm("nonlinear branch without a ball-shaped region bound");

        if (nf.expansion) {
            const auto& a = nf.expansion->coeffs;
            Rat a0 = a.size() > 0 ? a[0] : Rat(0);
            Rat a1 = a.size() > 1 ? a[1] : Rat(0);
            nf.linear_q = a1;
            nf.linear_c = a0 - a1 * nf.expansion->center;
            ExtInt tail = ExtInt::pos_inf();
            for (std::size_t i = 2; i < a.size(); ++i) {
                if (rat_is_zero(a[i])) continue;
                ExtInt contrib = best_lo.is_pos_inf()
                                     ? ExtInt::pos_inf()
                                     : ExtInt(ord_rat(a[i], prime) +
                                              static_cast<long>(i) * best_lo.value());
                if (contrib < tail) tail = contrib;
            }
            nf.tail_bound = tail;
        } else {
            nf.linear_q = d >= 1 ? P[1] : Rat(0);
            nf.linear_c = d >= 0 ? P[0] : Rat(0);
            nf.tail_bound = ExtInt::pos_inf();
        }
        out.push_back(std::move(nf));
    }
    return out;
}

std::vector<Rat> expand_around_center(const Term& t, const Rat& center, const Region& region,
                                      long prime) {
    std::string var = infer_var(t);
    auto pieces = resolve_node(t, var, prime);
    if (pieces.size() == 1) return poly_shift(pieces[0].poly, center);

    auto norm_in = region_normalize(region, prime);
    if (!norm_in) throw std::invalid_argument("expand_around_center: empty region");
    auto in_masks = fold_masks(*norm_in, prime);
    if (!in_masks) throw std::invalid_argument("expand_around_center: empty region");
    auto in_ws = solve_centers(*norm_in, prime);

    std::vector<const ResolvedPiece*> live;
    for (const ResolvedPiece& piece : pieces) {
        bool excluded = false;
        for (const OrdAtom& raw : piece.region.ord_atoms) {
            OrdAtom a = atom_canonical(raw);
            unsigned want = rel_mask(a.rel);
            auto it = in_masks->find(AtomKey{a.lhs, a.rhs});
            if (it != in_masks->end()) {
                if ((it->second & want) == 0) {
                    excluded = true;
                    break;
                }
                if ((it->second & ~want) == 0) continue; // implied
            }
            AtomView v = view_atom(raw, prime);
            if (v.kind == AtomView::Kind::Constraint) {
                auto ws = in_ws.find(v.center);
                if (ws != in_ws.end()) {
                    WSet sol = view_solution(v);
                    if (wset_disjoint(ws->second, sol)) {
                        excluded = true;
                        break;
                    }
                    if (wset_subset(ws->second, sol)) continue; // implied
                }
            }
        }
        if (!excluded) live.push_back(&piece);
    }
    if (live.size() != 1)
        throw BranchNotConstant("region leaves " + std::to_string(live.size()) +
                                " guard branches live");
    return poly_shift(live[0]->poly, center);
}

} // namespace padcell
