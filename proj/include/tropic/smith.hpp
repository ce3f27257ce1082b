#pragma once
// Integer lattice linear algebra: Smith and Hermite normal forms, integer
// kernels, sublattices, lattice indices, coset-reduced normal vectors.

#include <optional>

#include "tropic/exact.hpp"

namespace tropic {

struct SmithForm {
  IntMat U, D, V;  // U*M*V = D, U and V unimodular, D diagonal, d_i | d_{i+1}
};

SmithForm smith_form(const IntMat& M);

// Column-style Hermite normal form: returns H = M*V with V unimodular, H in
// column echelon form (pivots positive, entries right of a pivot reduced to
// [0, pivot) in the pivot row... we use the lower-triangular column HNF).
struct HermiteForm {
  IntMat H, V;  // H = M * V, V unimodular
};
HermiteForm hermite_col(const IntMat& M);

// Basis of { x integer : M x = 0 }.
std::vector<IntVec> int_kernel(const IntMat& M);

// A sublattice of Z^ambient given by generators; stores a Hermite-reduced
// basis (columns of basis matrix, linearly independent).
struct Sublattice {
  int ambient = 0;
  std::vector<IntVec> basis;  // Hermite-reduced, independent

  int rank() const { return int(basis.size()); }
  static Sublattice standard(int n);
  static Sublattice from_generators(int ambient, const std::vector<IntVec>& gens);

  // membership: integer coefficients expressing v in the basis
  std::optional<IntVec> coords_of(const IntVec& v) const;
  bool contains(const IntVec& v) const;
};

// |target / f(source)| where f acts on ambient coordinates. Returns nullopt
// for the infinite case (f(source) not of full rank in target). The value is
// the covolume ratio, a positive rational; it is the group-theoretic index
// when f(source) is contained in target.
std::optional<Rat> lattice_index(const RatMat& f, const Sublattice& source,
                                 const Sublattice& target);
std::optional<Rat> lattice_index(const IntMat& f, const Sublattice& source,
                                 const Sublattice& target);

// Lattice of span(vectors) ∩ Λ, where Λ is given by a basis of Z^ambient
// (pass Sublattice::standard for the plain integer lattice).
Sublattice span_lattice(const std::vector<RatVec>& span_vectors, const Sublattice& lambda);

// The unique generator of Λ_sigma / Λ_tau lying on the positive side of the
// functional `side` (which vanishes on tau's span and is positive on the
// sigma side). Returns a representative in Λ_sigma; the coset representative
// is normalized by reduce_coset below.
IntVec quotient_generator(const Sublattice& lat_sigma, const Sublattice& lat_tau,
                          const RatVec& side_form);

// Coset representative of v modulo the sublattice `mod`: deterministic
// Hermite-pivot reduction, then the lexicographically smallest all-nonnegative
// residue within a bounded search window (falls back to the pivot reduction
// when no nonnegative residue is found).
IntVec reduce_coset(const IntVec& v, const Sublattice& mod);

}  // namespace tropic
