#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "padcell/poly.hpp"
#include "padcell/power_groups.hpp"
#include "padcell/rewrite.hpp"
#include "padcell/semantics.hpp"

namespace padcell {

// One tracked condition: a valuation comparison between two polynomial
// values, or membership of a polynomial value in lambda * G.
struct EngineAtom {
    enum class Kind { Ord, Coset };
    Kind kind = Kind::Ord;
    Poly lhs;
    OrdRel rel = OrdRel::Eq; // Ord only
    Poly rhs;                // Ord only
    Rat lambda;              // Coset only; ignored for the Zero sort
    CosetSpec spec;          // Coset only

    static EngineAtom ord(Poly lhs, OrdRel rel, Poly rhs);
    static EngineAtom coset(Poly arg, Rat lambda, CosetSpec spec);
};

// Piece of the line: a center, an inclusive window on ord(t - center), and a
// coset constraint on t - center. lambda = 0 selects the point t = center;
// any other lambda is the canonical representative of its class and the
// piece excludes the center. Missing window ends mean unbounded.
struct RawCell {
    Rat center;
    std::optional<long> lo;
    std::optional<long> hi;
    Rat lambda;
    CosetSpec spec;
};

// Deterministic order: center, then window, then coset.
bool raw_cell_less(const RawCell& a, const RawCell& b);

struct RefineConfig {
    long prime = 3;
    int depth_cap = 12;
    bool merge_trivial = true; // collapse full rep families to one cell
};

struct RefineStats {
    long ball_splits = 0;
    long recenterings = 0;
};

// truth maps the per-atom statuses to the tracked condition's status.
using TruthFn = std::function<TriBool(const std::vector<TriBool>&)>;

// Disjoint cells covering exactly {t : truth(atom statuses at t) = True}.
// Rays where every atom's dominant Taylor term wins by its decision margin
// are read off directly; the finitely many contested rays are split into
// rings and re-centered, preferring rational roots of the atom polynomials.
// Throws DepthExceeded when contested rays survive past cfg.depth_cap.
std::vector<RawCell> refine_to_cells(const std::vector<EngineAtom>& atoms, const TruthFn& truth,
                                     const RefineConfig& cfg, RefineStats* stats = nullptr);

} // namespace padcell
