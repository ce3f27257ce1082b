#pragma once
// The abstract moduli space of genus-1 n-marked curves as a tropical orbit
// space: cells are the images of the cut-tree cones of the combinatorial
// types, subdivided along fixed walls of setwise self-maps, one
// representative per class.

#include "tropic/dist.hpp"
#include "tropic/orbit.hpp"

namespace tropic {

struct ModuliCell {
  Poly cone;                // in lattice coordinates (R^rank, lattice Z^rank)
  std::string type;         // canonical combinatorial type of the curves
  int dim = -1;
};

struct ModuliComplex {
  int n = 0;
  OrbitSpace space;               // complex over R^rank with moduli generators
  std::vector<ModuliCell> cells;  // aligned with space.complex.cells
};

// Enumerate all genus-1 n-marked combinatorial types (valences >= 3),
// returned with unit edge lengths.
std::vector<AbstractCurve> enumerate_abstract_types(int n);

// Build X_n/G_n with all weights 1. Facets carry weight 1.
ModuliComplex build_moduli_complex(int n);

}  // namespace tropic
