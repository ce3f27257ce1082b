#pragma once
// Exact rational elimination: rref, affine solving, kernels, determinants.
// Infeasible systems are ordinary return values, not errors.

#include <optional>

#include "tropic/vecmat.hpp"

namespace tropic {

struct Rref {
  RatMat m;                 // reduced row echelon form
  std::vector<int> pivots;  // pivot column per pivot row
  int rank = 0;
};

Rref rref(RatMat m);

// Exact description of the solution set of A x = b.
struct AffineSolution {
  RatVec particular;
  std::vector<RatVec> kernel_basis;
};

// nullopt <=> infeasible
std::optional<AffineSolution> solve_affine(const RatMat& A, const RatVec& b);

std::vector<RatVec> kernel_basis(const RatMat& A);

int rank(const RatMat& A);
int rank(const IntMat& A);

Rat det(const RatMat& A);  // square only

// Is v in the column span of B? If yes, return coefficients.
std::optional<RatVec> in_span(const std::vector<RatVec>& basis, const RatVec& v);

// Rows spanning the orthogonal complement of span(rows of A) -- i.e. linear
// forms vanishing exactly on the row span. Integer output.
std::vector<IntVec> cokernel_forms(const std::vector<RatVec>& span_vectors, int dim);

}  // namespace tropic
