#pragma once

#include <functional>
#include <string>
#include <vector>

#include "padcell/ast.hpp"
#include "padcell/padic.hpp"
#include "padcell/cells.hpp"
#include "padcell/semantics.hpp"

namespace padcell {

// One grid point: the ball p^valuation (unit + p^depth Z_p), or exact zero.
struct GridPoint {
    long valuation = 0;
    Int unit = 0; // least positive lift; 0 marks the zero point
    int depth = 1;

    bool is_zero() const { return unit == 0; }
    Rat value(long prime) const; // ball center as an exact rational
    PAdic ball(long prime) const;
    std::string text(long prime) const;
};

/**
 * Finite sample of Q_p: all p^v u for |v| <= val_window and u a unit residue
 * mod p^unit_depth lifted to its least positive integer, plus the point 0.
 * Point count: (2V+1)(p-1)p^(D-1) + 1.
 */
struct SampleGrid {
    long prime = 3;
    int val_window = 8;
    int unit_depth = 6;
    std::vector<GridPoint> points;
};

SampleGrid sample_grid(long p, int V, int D);

struct Disagreement {
    GridPoint point;
    TriBool lhs = TriBool::Undecided;
    TriBool rhs = TriBool::Undecided;
};

// Decided, disagreeing, and undecided points partition the grid.
struct EquivReport {
    long agree_count = 0;
    std::vector<Disagreement> disagreements;
    std::vector<GridPoint> undecided;

    bool equivalent() const { return disagreements.empty() && undecided.empty(); }
};

/**
 * Pointwise comparison of two formulas over the same variable. Each point is
 * evaluated on its ball at guard precision depth + guard_digits; a point that
 * stays undecided is split into its p sub-balls and retried down to
 * depth_cap digits before landing in `undecided`.
 */
EquivReport equiv_check(const Formula& lhs, const Formula& rhs, const SampleGrid& grid,
                        const PrecisionContext& ctx, int depth_cap = 12);

/**
 * One-sided existence search by exact evaluation at the grid centers: true
 * means a genuine witness was found. False only says the grid found none.
 */
bool brute_exists(const Formula& body, const std::string& var, const SampleGrid& grid,
                  const PrecisionContext& ctx);

// Formula versus a cell union, pointwise over the grid with the same local
// refinement as equiv_check, plus exact-center disjointness of the cells.
struct CoverReport {
    long agree_count = 0;
    std::vector<Disagreement> disagreements;
    std::vector<GridPoint> undecided;
    std::vector<GridPoint> overlaps; // centers claimed by two cells

    bool sound() const { return disagreements.empty() && overlaps.empty(); }
};

CoverReport cover_check(const Formula& f, const std::vector<Cell>& cells,
                        const SampleGrid& grid, const PrecisionContext& ctx,
                        int depth_cap = 12);

// Default oracle scale for a prime: V=8 D=6 for small primes, narrower for
// larger ones so grids stay around a few thousand points.
SampleGrid default_grid(long prime);

} // namespace padcell
