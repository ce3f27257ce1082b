#pragma once
// Morphisms of orbit spaces: a linear map on supports plus a group morphism
// on generators; certification of conditions (a)-(d), image orbit spaces,
// and the point-count degree.

#include "tropic/orbit.hpp"

namespace tropic {

struct degenerate_point : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OrbitMorphism {
  RatMat L;                          // linear map source ambient -> target ambient
  std::vector<AffineMap> gen_images; // f2 image of each source generator
};

struct MorphismReport {
  bool cells_into_cells = false;       // (a)
  bool lattice_ok = false;             // (b): L maps source lattice into target lattice
  bool overlap_ok = false;             // (c) on the given cells
  bool equivariant = false;            // (d)
  std::vector<std::string> notes;
  bool ok() const { return cells_into_cells && lattice_ok && overlap_ok && equivariant; }
};

// Certifies (a)-(d) for the given cell structure; (c) is checked exactly on
// the facet representatives and their bounded-word translates. The library
// does not search for refinements; supply a refined S if certification fails.
MorphismReport certify_morphism(const OrbitMorphism& f, const OrbitSpace& S,
                                const OrbitSpace& T);

// Image orbit space: cells f(σ) for facets σ on which f is injective,
// deduplicated, with weights ω(σ') = Σ_{[f(σ)]=[σ']} ω(σ)·|Λ'_{σ'}/f(Λ_σ)|.
// Throws if the collected images do not already form a complex (a proper
// refinement would be required).
OrbitSpace image_orbit_space(const OrbitMorphism& f, const OrbitSpace& S,
                             const GroupAction& target_action);

// Σ over preimage classes [P] of (ω_{X/G}(σ_P)/ω_{Y/H}(σ'_Q))·|Λ'/f(Λ_σ)| at
// the point Q. Throws degenerate_point when Q must be resampled. Implemented
// for targets with trivial group action.
Rat morphism_degree(const OrbitMorphism& f, const OrbitSpace& S, const OrbitSpace& T,
                    const RatVec& Q);

}  // namespace tropic
