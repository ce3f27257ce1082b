#pragma once
// General cones and general polyhedra: sets cut out by integral linear
// equalities, inequalities and strict inequalities (with rational offsets in
// the polyhedron case). Half-open cells are first-class.

#include <optional>
#include <string>

#include "tropic/lp.hpp"
#include "tropic/smith.hpp"

namespace tropic {

struct Poly {
  int ambient = 0;
  IntMat eq{0, 0};
  RatVec eq_rhs;
  IntMat ge{0, 0};
  RatVec ge_rhs;
  IntMat gt{0, 0};
  RatVec gt_rhs;

  static Poly whole_space(int n);
  // cone {x : eq*x = 0, ge*x >= 0, gt*x > 0}
  static Poly cone(int n, const std::vector<IntVec>& eqs, const std::vector<IntVec>& ges,
                   const std::vector<IntVec>& gts = {});
  // closed cone spanned by the given rays (uses span equations + recovered
  // coordinate functionals; rays must be extreme or at least generate).
  static Poly cone_hull(int n, const std::vector<IntVec>& rays);

  bool is_cone() const;  // all offsets zero
  bool closed() const { return gt.rows == 0; }

  void add_eq(const IntVec& f, const Rat& r);
  void add_ge(const IntVec& f, const Rat& r);
  void add_gt(const IntVec& f, const Rat& r);

  // deterministic description key (for ordering; not a set-level canonical form)
  std::string description_key() const;
};

// Derived exact data, computed on demand; Poly itself stays a plain value.
struct PolyInfo {
  bool empty = true;
  int dim = -1;                   // -1 for the empty set
  RatVec relint;                  // a relative-interior point (when nonempty)
  std::vector<int> implicit_ge;   // indices of ge rows that are forced tight
  std::vector<IntVec> hull_forms; // affine-hull forms (eq + implicit ge)
  RatVec hull_rhs;
  std::vector<RatVec> span;       // basis of the direction space
};

PolyInfo analyze(const Poly& p);

bool contains_point(const Poly& p, const RatVec& x);
bool is_empty(const Poly& p);
bool subset_of(const Poly& inner, const Poly& outer);
bool set_equal(const Poly& a, const Poly& b);
Poly intersect(const Poly& a, const Poly& b);

// Face obtained by turning the listed non-strict inequality rows into
// equalities.
Poly face_by(const Poly& p, const std::vector<int>& ge_rows);

// All distinct nonempty faces (p itself included).
std::vector<Poly> faces(const Poly& p);

// Is f a face of p (obtainable from p by tightening non-strict rows)?
bool is_face_of(const Poly& f, const Poly& p);

// Apply x -> A x + t; A invertible rational, exactness preserved.
Poly transform(const Poly& p, const RatMat& A_inv, const RatVec& t);

// Exact coordinate projection by Fourier-Motzkin elimination: keep the
// coordinates listed in `keep` (in that order). Strictness is propagated
// (ge+gt combine to gt).
Poly project_to(const Poly& p, const std::vector<int>& keep);

// Image of p under a linear map given by rows L (rational): computed as the
// projection of the graph {(x, y) : x in p, y = L x}.
Poly linear_image(const Poly& p, const RatMat& L);

// Lattice of the linear span: span(p) ∩ lambda.
Sublattice span_lattice_of(const Poly& p, const PolyInfo& info, const Sublattice& lambda);

}  // namespace tropic
