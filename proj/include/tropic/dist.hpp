#pragma once
// The distance embedding of genus-1 curves: dist_n into V_n/G_n, curve
// reconstruction from distance data, and class equality in the quotient.

#include "tropic/moduli_group.hpp"

namespace tropic {

struct DistancePoint {
  int N = 0;
  RatVec raw;          // honest distance vector of a cut of the curve
  RatVec normal_form;  // raw reduced modulo Φ_N(R^N) + <s>
  RatVec coords;       // coordinates in the split-vector lattice basis
};

// Distance point of a genus-1 curve via the canonical cut.
DistancePoint dist_n(const AbstractCurve& c);
// Distance point of a given cut curve.
DistancePoint dist_point_of_cut(const CutCurve& cc);

struct Reconstruction {
  Rat j;
  RatVec d;                               // d_i, distance of mark i to the cycle
  std::vector<std::vector<Rat>> d_pair;   // circle distance of attachment points
  AbstractCurve curve;                    // reconstructed curve (unit data from x)
  std::string type;                       // canonical combinatorial type
};

struct not_in_image : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invert dist_n on its image: j from the {A,B} coordinate, the d_i and
// d_{i,k} by the explicit formulas, hanging trees from the G-fixed
// coordinates. Throws not_in_image on inconsistent data.
Reconstruction reconstruct(const RatVec& raw, int N);

// Class equality in V_N/G_N: combinatorial pre-keying by the reconstructed
// invariants, then bounded generator-word search (bound 2(N+2)).
bool same_class(const DistancePoint& a, const DistancePoint& b);

}  // namespace tropic
