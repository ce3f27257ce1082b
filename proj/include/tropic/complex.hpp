#pragma once
// Weighted polyhedral complexes realized in a single ambient space with
// inclusion charts. Star-fan data is computed on demand from the ambient
// coordinates; the weight-compatibility with induced star fans is then
// automatic and not re-checked.

#include <map>

#include "tropic/cone.hpp"

namespace tropic {

struct WeightedComplex {
  int ambient = 0;
  std::vector<Poly> cells;
  std::map<int, Rat> weights;  // facet index -> weight
  int dim = -1;
  // Ambient lattice for balancing/normal vectors. Default: Z^ambient.
  std::optional<Sublattice> lattice;

  Sublattice ambient_lattice() const {
    return lattice ? *lattice : Sublattice::standard(ambient);
  }
  Rat weight_of(int cell_index) const {
    auto it = weights.find(cell_index);
    return it == weights.end() ? Rat(0) : it->second;
  }
};

struct Violation {
  std::string condition;  // "a", "d", "pure", ...
  int cell_i = -1, cell_j = -1;
  std::string note;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Precomplex/complex conditions on the embedded realization:
//  (a) pairwise intersections are faces of both and are cells,
//  (d) relative interiors are disjoint and faces are covered by cells,
//  purity when weighted.
ValidationReport validate_complex(const WeightedComplex& X);

// Cells lying under some facet of nonzero weight.
WeightedComplex nonzero_part(const WeightedComplex& X);

// Sorts cells by description key; remaps weights. Deterministic ordering.
void sort_cells(WeightedComplex& X);

std::vector<int> cells_of_dim(const WeightedComplex& X, int d,
                              std::vector<PolyInfo>* infos_out = nullptr);

}  // namespace tropic
