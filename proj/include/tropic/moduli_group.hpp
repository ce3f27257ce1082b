#pragma once
// The distance-coordinate machinery for N-marked cut curves: pair-indexed
// coordinates on R^{C(N+2,2)}, the vector s, the matrices I and M_p, the
// quotient V_N = R^C/(Φ_N(R^N)+<s>) realized as a coordinate normal form,
// and the split-vector lattice that gives V_N its integral structure.

#include "tropic/action.hpp"
#include "tropic/curve.hpp"

namespace tropic {

// s, I, M_p on raw pair coordinates; marks 1..N, A = N+1, B = N+2.
IntVec s_vector(int N);
IntMat I_matrix(int N);
IntMat M_matrix(int N, int p);

// Split vector of I ⊂ {1..N+2}: 1 on pairs separated by I.
IntVec split_vector(int N, const std::vector<int>& I);

// Quotient machinery: normal form with zeros at the pivot coordinates of
// span{Φ(e_1..e_N), s}, pivots chosen lexicographically first.
struct DistQuotient {
  int N = 0;       // marks
  int m = 0;       // N + 2
  int C = 0;       // C(m, 2)
  std::vector<RatVec> reduced_rows;  // RREF of the spanning vectors
  std::vector<int> pivots;

  RatVec normal_form(const RatVec& raw) const;
  bool in_kernel(const RatVec& v) const;  // v ∈ span{Φ, s}
};

DistQuotient make_quotient(int N);

// Coordinates on V_N: a basis B of the split-vector lattice Λ_N inside the
// normal-form subspace. Complexes over V_N live in R^rank with the standard
// lattice Z^rank; to_coords/to_ambient convert between the two pictures.
struct ModuliAmbient {
  DistQuotient Q;
  int rank = 0;
  RatMat B;      // C x rank, columns = lattice basis (normal forms)
  IntVec j_row_support;  // unused marker

  RatVec to_coords(const RatVec& ambient_normal_form) const;   // solve B c = x
  RatVec to_ambient(const RatVec& coords) const;               // B c
  RatVec coords_of_raw(const RatVec& raw) const;               // to_coords ∘ nf
  // linear functional on coords induced by a raw-coordinate functional that
  // kills Φ and s (e.g. the j-coordinate {A,B})
  RatVec pullback_form(const RatVec& raw_form) const;
  // the induced action of a raw C x C matrix on coords; must be integral and
  // unimodular for the moduli generators (checked)
  AffineMap induced_map(const IntMat& raw) const;
};

// Cached per N (the lattice accumulation is the expensive part).
const ModuliAmbient& moduli_ambient(int N);

// Generators I, M_1..M_N as maps on coords. For spaces where consecutive
// M-products act trivially on V_N the list still carries all of them; word
// searches deduplicate.
std::vector<AffineMap> moduli_generators(int N);

}  // namespace tropic
