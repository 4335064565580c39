#pragma once

#include <string>
#include <vector>

#include "padcell/ast.hpp"
#include "padcell/cells.hpp"

namespace padcell {

struct DecomposeConfig {
    long prime = 3;
    int depth_cap = 12;
};

// Cells of a one-variable quantifier-free formula: pairwise disjoint, their
// union is exactly the solution set, ordered deterministically.
struct Decomposition {
    Formula input;
    std::string variable;
    std::vector<Cell> cells;
    int undecided_budget = 0; // refinement depth cap that was in force
    long ball_splits = 0;     // ring subdivisions performed
    long recenterings = 0;    // ring children re-rooted onto a polynomial root
};

/**
 * Decomposes a quantifier-free formula in at most one variable. Detected
 * failure modes throw: ScopeError for extra variables, UnsupportedTerm for
 * quantified subformulas or non-realizable guarded divisions, DepthExceeded
 * when refinement passes the cap (reported with the offending ball, never
 * silently dropped).
 */
Decomposition decompose(const Formula& f, const DecomposeConfig& cfg = {});

// Decides exists var. body for a parameter-free body: decomposes the body
// and asks each cell for a witness.
bool eliminate_exists(const Formula& f, const DecomposeConfig& cfg = {});

} // namespace padcell
