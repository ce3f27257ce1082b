#pragma once
// Tropical orbit spaces: weighted complexes with group actions, given by a
// finite fundamental set of class representatives. Cells of the full complex
// are materialized lazily as g(rep) for bounded words; all global checks run
// on class representatives and their finite local stars.

#include "tropic/action.hpp"
#include "tropic/balance.hpp"

namespace tropic {

struct OrbitSpace {
  WeightedComplex complex;  // cells = one representative per class
  GroupAction action;
  // Optional explicit stars: codim-1 rep index -> adjacent facet cones with
  // weights (for complexes given only locally).
  std::optional<StarOverride> stars;
};

// ω(σ)/|G_σ| with the pointwise stabilizer.
Rat class_weight(const Poly& facet, const Rat& weight, const GroupAction& action);

struct StarCone {
  Poly cone;
  Rat weight;
  int rep = -1;        // class representative index it is a translate of
  AffineMap element;   // cone = element(cells[rep])
};

// Facet cones adjacent to the representative cell `tau_index`, found by
// bounded word materialization (or the explicit override). Throws
// bound_too_small when a new adjacent facet first appears at the bound.
std::vector<StarCone> local_star(const OrbitSpace& S, int tau_index);

struct LambdaEntry {
  Poly facet;
  int rep = -1;
  Rat weight;        // ω(σ)
  Rat class_weight;  // [ω]([σ]) = ω(σ)/|G_σ|
  Rat lambda;        // λ_{σ/τ}
  Rat coefficient;   // λ·[ω]
  int orbit = -1;    // G_τ-orbit id within the star
  IntVec normal;     // u_{σ/τ} representative
};

struct LambdaRow {
  int tau = -1;
  int stabilizer_order = 1;  // |G_τ|
  std::vector<LambdaEntry> entries;
  bool lambda_ok = false;  // λ-feasibility path
  bool fan_ok = false;     // underlying-complex balancing path
  RatVec defect;           // weighted normal sum when the fan path fails
};

struct LambdaCertificate {
  std::vector<LambdaRow> rows;
  bool ok() const {
    for (auto& r : rows)
      if (!r.lambda_ok) return false;
    return true;
  }
};

// Both balancing paths per codim-1 class: exact λ-feasibility (preferring the
// uniform λ within each G_τ-orbit) and the local check on the underlying
// complex. The two verdicts must agree; disagreement throws.
LambdaCertificate check_tropical_orbit_space(const OrbitSpace& S);

// For finite groups and closed cones: (fan_balanced, orbit_balanced) on the
// fully materialized complex; the contract is that the booleans are equal.
std::pair<bool, bool> check_equivalence_finite(const OrbitSpace& S);

// Materialize the whole complex (finite groups): every g(rep), deduplicated,
// with transported weights.
WeightedComplex materialize(const OrbitSpace& S);

// Find (element, rep) with element(cells[rep]) == cell, within the word
// bound; nullopt if not found.
std::optional<std::pair<AffineMap, int>> class_of(const OrbitSpace& S, const Poly& cell);

}  // namespace tropic
