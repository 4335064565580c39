#include "padcell/decompose.hpp"

#include <algorithm>
#include <functional>

#include "padcell/poly.hpp"
#include "padcell/refine.hpp"
#include "padcell/rewrite.hpp"

namespace padcell {

namespace {

// Atom template: term slots are filled per sheet once every term has been
// resolved to a polynomial on that sheet.
struct AtomRef {
    enum class Kind { Ord, Coset, EqZero } kind;
    int lhs = -1, rhs = -1;
    OrdRel rel = OrdRel::Eq;
    Rat lambda;
    CosetSpec spec = CosetSpec::trivial();
};

using Eval = std::function<TriBool(const std::vector<TriBool>&, std::size_t)>;

int term_slot(std::vector<Term>& terms, const Term& t) {
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (equal(terms[i], t)) return static_cast<int>(i);
    terms.push_back(t);
    return static_cast<int>(terms.size()) - 1;
}

// Flattens the boolean skeleton into an evaluator over atom statuses and
// collects the atom templates in visit order.
Eval compile(const Formula& f, std::vector<AtomRef>& atoms, std::vector<Term>& terms) {
    if (auto* a = std::get_if<FOrdCmp>(&f->node)) {
        AtomRef ar;
        ar.kind = AtomRef::Kind::Ord;
        ar.lhs = term_slot(terms, a->lhs);
        ar.rhs = term_slot(terms, a->rhs);
        ar.rel = rel_of(a->op);
        atoms.push_back(ar);
        std::size_t i = atoms.size() - 1;
        return [i](const std::vector<TriBool>& st, std::size_t off) { return st[off + i]; };
    }
    if (auto* a = std::get_if<FInCoset>(&f->node)) {
        AtomRef ar;
        ar.kind = AtomRef::Kind::Coset;
        ar.lhs = term_slot(terms, a->arg);
        ar.lambda = a->lambda;
        ar.spec = a->spec;
        atoms.push_back(ar);
        std::size_t i = atoms.size() - 1;
        return [i](const std::vector<TriBool>& st, std::size_t off) { return st[off + i]; };
    }
    if (auto* a = std::get_if<FEq>(&f->node)) {
        AtomRef ar;
        ar.kind = AtomRef::Kind::EqZero;
        ar.lhs = term_slot(terms, a->lhs);
        ar.rhs = term_slot(terms, a->rhs);
        atoms.push_back(ar);
        std::size_t i = atoms.size() - 1;
        return [i](const std::vector<TriBool>& st, std::size_t off) { return st[off + i]; };
    }
    if (auto* a = std::get_if<FAnd>(&f->node)) {
        Eval l = compile(a->lhs, atoms, terms), r = compile(a->rhs, atoms, terms);
        return [l, r](const std::vector<TriBool>& st, std::size_t off) {
            return tri_and(l(st, off), r(st, off));
        };
    }
    if (auto* a = std::get_if<FOr>(&f->node)) {
        Eval l = compile(a->lhs, atoms, terms), r = compile(a->rhs, atoms, terms);
        return [l, r](const std::vector<TriBool>& st, std::size_t off) {
            return tri_or(l(st, off), r(st, off));
        };
    }
    if (auto* a = std::get_if<FNot>(&f->node)) {
        Eval e = compile(a->arg, atoms, terms);
        return [e](const std::vector<TriBool>& st, std::size_t off) {
            return tri_not(e(st, off));
        };
    }
    throw UnsupportedTerm("decompose: quantified subformula");
}

} // namespace

Decomposition decompose(const Formula& f, const DecomposeConfig& cfg) {
    Decomposition dec;
    dec.input = f;
    dec.undecided_budget = cfg.depth_cap;

    auto fv = free_vars(f);
    if (fv.size() > 1) throw ScopeError("decompose: more than one free variable");
    dec.variable = fv.empty() ? "t" : *fv.begin();

    std::vector<AtomRef> arefs;
    std::vector<Term> terms;
    Eval eval = compile(f, arefs, terms);

    std::vector<std::vector<ResolvedPiece>> pieces;
    pieces.reserve(terms.size());
    for (const Term& t : terms) {
        pieces.push_back(resolve(t, dec.variable, cfg.prime));
        if (pieces.back().empty()) return dec;
    }

    RefineConfig rcfg;
    rcfg.prime = cfg.prime;
    rcfg.depth_cap = cfg.depth_cap;
    rcfg.merge_trivial = true;
    RefineStats stats;

    std::vector<RawCell> raws;
    std::vector<std::size_t> pick(terms.size(), 0);
    for (;;) {
        Region sheet;
        bool live = true;
        for (std::size_t i = 0; i < terms.size() && live; ++i) {
            sheet = region_conjoin(std::move(sheet), pieces[i][pick[i]].region);
            auto norm = region_normalize(sheet, cfg.prime);
            if (!norm) live = false;
            else sheet = std::move(*norm);
        }
        if (live) {
            std::vector<EngineAtom> eatoms;
            for (const OrdAtom& oa : sheet.ord_atoms)
                eatoms.push_back(EngineAtom::ord(oa.lhs, oa.rel, oa.rhs));
            for (const CosetAtom& ca : sheet.coset_atoms)
                eatoms.push_back(EngineAtom::coset(ca.arg, ca.lambda, ca.spec));
            const std::size_t guards = eatoms.size();
            for (const AtomRef& ar : arefs) {
                const Poly& pl = pieces[ar.lhs][pick[ar.lhs]].poly;
                switch (ar.kind) {
                case AtomRef::Kind::Ord:
                    eatoms.push_back(
                        EngineAtom::ord(pl, ar.rel, pieces[ar.rhs][pick[ar.rhs]].poly));
                    break;
                case AtomRef::Kind::Coset:
                    eatoms.push_back(EngineAtom::coset(pl, ar.lambda, ar.spec));
                    break;
                case AtomRef::Kind::EqZero:
                    eatoms.push_back(EngineAtom::coset(
                        poly_sub(pl, pieces[ar.rhs][pick[ar.rhs]].poly), Rat(0),
                        CosetSpec::zero()));
                    break;
                }
            }
            auto truth = [&eval, guards](const std::vector<TriBool>& st) {
                TriBool g = TriBool::True;
                for (std::size_t i = 0; i < guards; ++i) g = tri_and(g, st[i]);
                if (g == TriBool::False) return g;
                return tri_and(g, eval(st, guards));
            };
            for (RawCell& rc : refine_to_cells(eatoms, truth, rcfg, &stats))
                raws.push_back(std::move(rc));
        }
        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == pieces[k].size()) pick[k++] = 0;
        if (k == pick.size()) break;
    }

    std::sort(raws.begin(), raws.end(), raw_cell_less);
    for (const RawCell& rc : raws) dec.cells.push_back(cell_from_raw(dec.variable, rc, cfg.prime));
    dec.ball_splits = stats.ball_splits;
    dec.recenterings = stats.recenterings;
    return dec;
}

bool eliminate_exists(const Formula& f, const DecomposeConfig& cfg) {
    auto* ex = std::get_if<FExists>(&f->node);
    if (!ex) throw UnsupportedTerm("eliminate_exists: formula is not exists var. body");
    auto fv = free_vars(ex->body);
    for (const std::string& v : fv)
        if (v != ex->var) throw ScopeError("eliminate_exists: free parameter " + v);
    Decomposition dec = decompose(ex->body, cfg);
    for (const Cell& c : dec.cells) {
        QECondition q = cell_qe(c, cfg.prime);
        if (q.value && *q.value) return true;
    }
    return false;
}

} // namespace padcell
