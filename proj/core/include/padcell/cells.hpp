#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padcell/ast.hpp"
#include "padcell/padic.hpp"
#include "padcell/power_groups.hpp"
#include "padcell/refine.hpp"
#include "padcell/rewrite.hpp"
#include "padcell/semantics.hpp"

namespace padcell {

// One side of a valuation window. Bounds are always strict: a lower bound
// means ord a < ord(t - c), an upper bound means ord(t - c) < ord a.
struct CellBound {
    Term term; // constant term whose valuation is the bound
    bool strict = true;
};

// Coset constraint on t - center. lambda = 0 encodes the single point
// t = center; otherwise lambda is the canonical representative of its class.
struct CellCoset {
    Rat lambda;
    CosetSpec spec;
};

/**
 * One cell of a decomposition: the set of t with
 *
 *   ord a1 < ord(t - c) < ord a2   and   t - c in lambda * G
 *
 * where either bound may be absent and G is the coset kind. Cells produced
 * by the same decomposition are pairwise disjoint.
 */
struct Cell {
    std::string variable;
    Term center; // constant term
    std::optional<CellBound> lower;
    std::optional<CellBound> upper;
    CellCoset coset;
    std::optional<Region> base; // parameter constraints; unused without parameters
};

// Folds a closed term made of constants, +, -, and integer scaling down to
// its rational value. Throws UnsupportedTerm on variables, star, or divg.
Rat term_const_value(const Term& t);

Rat cell_center_value(const Cell& c);
// Valuations of the bound constants, when the bounds are present.
std::optional<long> cell_lower_ord(const Cell& c, long prime);
std::optional<long> cell_upper_ord(const Cell& c, long prime);

// Converts an engine window cell into bound form: a window lo <= ord(t-c)
// becomes the bound ord p^(lo-1) < ord(t-c), and ord(t-c) <= hi becomes
// ord(t-c) < ord p^(hi+1).
Cell cell_from_raw(const std::string& var, const RawCell& raw, long prime);

// Atom conjunction equivalent to the cell, suitable for the refinement
// engine. Trivial cosets contribute a membership atom so the center stays
// excluded; lambda = 0 contributes a zero-coset atom.
std::vector<EngineAtom> cell_atoms(const Cell& c, long prime);

/**
 * Splits a conjunction of atoms linear in the variable into disjoint cells
 * whose union is the conjunction's solution set. Every atom argument must
 * have degree at most one. Cells keep the finest coset granularity; full
 * families are not collapsed to trivial cosets.
 */
std::vector<Cell> precell_to_cells(const Region& pc, const std::string& var,
                                   long prime, int depth_cap = 12);

// Disjoint cells covering the intersection of two cells over one variable.
std::vector<Cell> intersect_cells(const Cell& a, const Cell& b, long prime,
                                  int depth_cap = 12);

// Membership of a point, as far as its precision allows.
TriBool cell_member(const Cell& c, const PAdic& t);

/**
 * Witness condition for "some t lies in the cell". With constant bounds the
 * answer is a boolean; otherwise residue_cases carries the case split over
 * the class of ord a1 mod n.
 */
struct QECondition {
    std::optional<bool> value;
    std::string residue_cases;
};

// Exactness: a doubly bounded cell with coset scale lambda and group index n
// is nonempty iff ord a1 + n - zeta < ord a2 where zeta = (ord a1 - ord
// lambda) mod n. Singly bounded and point cells are always nonempty.
QECondition cell_qe(const Cell& c, long prime);

bool cell_less(const Cell& a, const Cell& b, long prime);

} // namespace padcell
