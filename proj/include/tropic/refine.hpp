#pragma once
// Common refinements and refinement maps.

#include "tropic/complex.hpp"

namespace tropic {

struct RefinementMap {
  // source cell index -> inclusion-minimal target cell index
  std::vector<int> cell_assignment;
};

struct CommonRefinement {
  WeightedComplex refined;
  RefinementMap from_X;  // refined cell -> X cell
  RefinementMap from_Y;  // refined cell -> Y cell
};

// Cells are the nonempty intersections of X and Y cells; weights pulled back
// from X. Requires |X| = |Y| (spot-verified on relative interior points).
CommonRefinement common_refinement(const WeightedComplex& X, const WeightedComplex& Y);

// Certifies that `fine` refines `coarse`: every fine cell inside a coarse
// cell, equal support (spot-checked), weights pulled back on the nonzero
// part. Returns the cell assignment.
std::optional<RefinementMap> certify_refinement(const WeightedComplex& fine,
                                                const WeightedComplex& coarse);

}  // namespace tropic
