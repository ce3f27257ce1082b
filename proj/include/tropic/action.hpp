#pragma once
// Integer-affine invertible maps and finitely generated group actions with
// bounded word exploration. Exceeding the word bound is an error, never a
// silent truncation.

#include <functional>
#include <stdexcept>

#include "tropic/cone.hpp"

namespace tropic {

struct bound_too_small : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AffineMap {
  RatMat A;      // invertible; integer w.r.t. the acting lattice
  RatVec t;
  RatMat A_inv;  // stored inverse
  RatVec t_inv;  // inverse translation: g^{-1}(x) = A_inv x + t_inv

  static AffineMap identity(int n);
  static AffineMap linear(const IntMat& M);
  static AffineMap make(const RatMat& A, const RatVec& t);

  int dim() const { return A.rows; }
  RatVec apply(const RatVec& x) const;
  Poly apply(const Poly& p) const;
  AffineMap compose(const AffineMap& g) const;  // (*this) after g
  AffineMap inverse() const;
  bool operator==(const AffineMap& o) const { return A == o.A && t == o.t; }
  bool is_identity() const;
};

struct GroupAction {
  int ambient = 0;
  std::vector<AffineMap> generators;
  int word_bound = 0;  // 0 = use default 2*(#generators + ambient dimension)

  int effective_bound() const {
    return word_bound > 0 ? word_bound : 2 * (int(generators.size()) + ambient);
  }
};

struct WordEnum {
  std::vector<AffineMap> elements;  // deduplicated as maps; [0] = identity
  std::vector<int> length;          // word length at first discovery
  bool closed = false;              // no new elements appeared at the last level
};

// BFS over words in the generators and their inverses up to `bound`.
WordEnum enumerate_words(const GroupAction& a, int bound);

// All group elements fixing `cell` pointwise, found within the word bound.
// Throws bound_too_small if a new stabilizer element first appears exactly at
// the bound.
std::vector<AffineMap> stabilizer(const Poly& cell, const GroupAction& a);
int stabilizer_order(const Poly& cell, const GroupAction& a);

// Does g fix `cell` pointwise (identity on its affine hull)?
bool fixes_pointwise(const AffineMap& g, const PolyInfo& cell_info);

}  // namespace tropic
