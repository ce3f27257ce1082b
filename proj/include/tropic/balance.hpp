#pragma once
// Lattice normal vectors and the fan-level balancing check.

#include "tropic/complex.hpp"

namespace tropic {

// Representative in Λ_sigma of the unique generator u_{sigma/tau} of
// Λ_sigma/Λ_tau on the sigma side, in Hermite-reduced coset form.
// Requires dim tau = dim sigma - 1 and tau a face of sigma.
IntVec lattice_normal_vector(const Poly& sigma, const Poly& tau,
                             const Sublattice& lambda);
IntVec lattice_normal_vector(const Poly& sigma, const Poly& tau);  // Z^n lattice

// Same, without the face/dim validation (callers that already know).
IntVec lattice_normal_vector_unchecked(const Poly& sigma, const PolyInfo& sig_info,
                                       const Poly& tau, const PolyInfo& tau_info,
                                       const Sublattice& lambda);

struct BalanceEntry {
  int facet = -1;       // cell index (or position in the override list)
  Rat weight;
  IntVec normal;        // coset-reduced representative of u_{sigma/tau}
};

struct BalanceRow {
  int tau = -1;
  std::vector<BalanceEntry> entries;
  RatVec weighted_sum;  // sum of weight * normal
  bool balanced = false;  // weighted_sum ∈ V_tau
};

struct BalanceReport {
  std::vector<BalanceRow> rows;
  bool balanced() const {
    for (auto& r : rows)
      if (!r.balanced) return false;
    return true;
  }
};

// Adjacency override for complexes given only locally: explicit facet cones
// around each codim-1 cell, bypassing face-description matching.
struct StarOverride {
  // tau index -> facets adjacent to it, each with its weight
  std::map<int, std::vector<std::pair<Poly, Rat>>> stars;
};

BalanceReport check_fan_balancing(const WeightedComplex& X,
                                  const StarOverride* override_stars = nullptr);

// Single local check: facets (cone, weight) around one codim-1 cell tau.
BalanceRow check_local_balancing(const Poly& tau,
                                 const std::vector<std::pair<Poly, Rat>>& star,
                                 const Sublattice& lambda);

}  // namespace tropic
