#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padcell/ast.hpp"
#include "padcell/poly.hpp"
#include "padcell/power_groups.hpp"

namespace padcell {

// Region atoms compare valuations of polynomial values, with Ne for the
// complement of a star guard. ord of the zero polynomial is +inf, so
// (f, Ge, 0-poly) pins f = 0 and (f, Lt, 0-poly) pins f != 0.
enum class OrdRel { Lt, Le, Eq, Ne, Ge, Gt };

OrdRel rel_of(CmpOp op);
OrdRel rel_negate(OrdRel r);
OrdRel rel_mirror(OrdRel r);
const char* rel_str(OrdRel r);

struct OrdAtom {
    Poly lhs;
    OrdRel rel = OrdRel::Eq;
    Poly rhs;
};

struct CosetAtom {
    Poly arg;
    Rat lambda;
    CosetSpec spec;
};

// A precell-shaped conjunction: valuation comparisons plus coset membership,
// all about one variable. Empty lists mean the whole line.
struct Region {
    std::vector<OrdAtom> ord_atoms;
    std::vector<CosetAtom> coset_atoms;
};

Region region_conjoin(Region a, const Region& b);

// Canonicalize: decide constant atoms, fold duplicates, and check integer
// feasibility of the valuation constraints center by center. nullopt means
// provably empty; a surviving region may still hide a deeper contradiction.
std::optional<Region> region_normalize(const Region& r, long prime);

// Conjunction as a printable formula over var; nullopt for the full line.
// Valuations of nonlinear polynomial values print through star powers of
// (var - c) when possible, otherwise through an ord-of-product spelling.
std::optional<std::string> region_text(const Region& r, const std::string& var);

// On each region the term equals the polynomial exactly.
struct ResolvedPiece {
    Region region;
    Poly poly;
};

// Partition of the line for the term's guards (star unit tests, guarded
// division cutoffs). Throws ScopeError on variables other than var and
// UnsupportedTerm when a guarded division has a non-dividing denominator.
std::vector<ResolvedPiece> resolve(const Term& t, const std::string& var, long prime);

// Max polynomial degree across guard branches (prime-independent for star
// splits; constant guards are folded at a fixed small prime).
long degree(const Term& t);

struct NormalForm {
    Region region;
    // term = linear_q * t + linear_c + tail on the region, ord tail >= tail_bound
    Rat linear_q;
    Rat linear_c;
    ExtInt tail_bound; // +inf when the tail vanishes identically
    struct Expansion {
        Rat center;
        std::vector<Rat> coeffs; // term = sum coeffs[i] (t - center)^i exactly
    };
    std::optional<Expansion> expansion; // present when the region pins a ball
};

// Linear-plus-bounded split of a one-variable term. Regions partition the
// line. Throws UnsupportedTerm when a degree >= 2 piece has no ball-shaped
// region to bound its tail.
std::vector<NormalForm> normal_form(const Term& t, long prime);

// Taylor coefficients of the term at the center, valid on the region. The
// region must freeze every guard (star unit tests, division cutoffs); throws
// BranchNotConstant when more than one branch stays live.
std::vector<Rat> expand_around_center(const Term& t, const Rat& center, const Region& region,
                                      long prime);

} // namespace padcell
