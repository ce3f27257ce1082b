#include "tropic/refine.hpp"

#include <stdexcept>

namespace tropic {

namespace {

int minimal_container(const std::vector<Poly>& cells, const Poly& piece) {
  int best = -1, best_dim = -1;
  for (int i = 0; i < int(cells.size()); ++i) {
    if (!subset_of(piece, cells[i])) continue;
    int d = analyze(cells[i]).dim;
    if (best < 0 || d < best_dim) {
      best = i;
      best_dim = d;
    }
  }
  return best;
}

// Exact emptiness of c \ (union of cells): DFS over one violated constraint
// per cell, pruning infeasible branches.
bool covered_by_union(const Poly& c, const std::vector<Poly>& cells, size_t at = 0) {
  if (is_empty(c)) return true;
  if (at == cells.size()) return false;
  const Poly& d = cells[at];
  // P \ d = union over rows of (P and not-row); not-row branches:
  std::vector<Poly> branches;
  auto flip = [&](const IntVec& f) {
    IntVec g(f.size());
    for (size_t i = 0; i < f.size(); ++i) g[i] = -f[i];
    return g;
  };
  for (int i = 0; i < d.eq.rows; ++i) {
    Poly b1 = c, b2 = c;
    b1.add_gt(d.eq.row(i), d.eq_rhs[i]);
    b2.add_gt(flip(d.eq.row(i)), -d.eq_rhs[i]);
    branches.push_back(b1);
    branches.push_back(b2);
  }
  for (int i = 0; i < d.ge.rows; ++i) {
    Poly b = c;
    b.add_gt(flip(d.ge.row(i)), -d.ge_rhs[i]);
    branches.push_back(b);
  }
  for (int i = 0; i < d.gt.rows; ++i) {
    Poly b = c;
    b.add_ge(flip(d.gt.row(i)), -d.gt_rhs[i]);
    branches.push_back(b);
  }
  if (branches.empty()) return true;  // d is the whole space
  for (auto& b : branches)
    if (!covered_by_union(b, cells, at + 1)) return false;
  return true;
}

bool supports_equal(const WeightedComplex& A, const WeightedComplex& B) {
  for (auto& c : A.cells)
    if (!covered_by_union(c, B.cells)) return false;
  for (auto& c : B.cells)
    if (!covered_by_union(c, A.cells)) return false;
  return true;
}

}  // namespace

CommonRefinement common_refinement(const WeightedComplex& X, const WeightedComplex& Y) {
  if (X.ambient != Y.ambient)
    throw std::invalid_argument("common_refinement: ambient mismatch");
  if (!supports_equal(X, Y))
    throw std::invalid_argument("common_refinement: support mismatch");

  CommonRefinement out;
  out.refined.ambient = X.ambient;
  out.refined.dim = X.dim;
  out.refined.lattice = X.lattice;
  for (int i = 0; i < int(X.cells.size()); ++i) {
    for (int j = 0; j < int(Y.cells.size()); ++j) {
      Poly cap = intersect(X.cells[i], Y.cells[j]);
      if (is_empty(cap)) continue;
      bool dup = false;
      for (auto& c : out.refined.cells)
        if (set_equal(c, cap)) {
          dup = true;
          break;
        }
      if (!dup) out.refined.cells.push_back(cap);
    }
  }
  for (auto& c : out.refined.cells) {
    out.from_X.cell_assignment.push_back(minimal_container(X.cells, c));
    out.from_Y.cell_assignment.push_back(minimal_container(Y.cells, c));
  }
  // weights pulled back from X on top-dimensional pieces
  for (int k = 0; k < int(out.refined.cells.size()); ++k) {
    if (analyze(out.refined.cells[k]).dim != X.dim) continue;
    int xi = out.from_X.cell_assignment[k];
    if (xi >= 0 && X.weights.count(xi)) out.refined.weights[k] = X.weights.at(xi);
  }
  return out;
}

std::optional<RefinementMap> certify_refinement(const WeightedComplex& fine,
                                                const WeightedComplex& coarse) {
  RefinementMap map;
  for (auto& c : fine.cells) {
    int t = minimal_container(coarse.cells, c);
    if (t < 0) return std::nullopt;
    map.cell_assignment.push_back(t);
  }
  // support: coarse covered by fine (fine ⊆ coarse holds by the containments)
  for (auto& c : coarse.cells)
    if (!covered_by_union(c, fine.cells)) return std::nullopt;
  // weight pull-back on nonzero facets
  for (auto& [fi, w] : fine.weights) {
    if (w == 0) continue;
    int t = map.cell_assignment[fi];
    if (coarse.weight_of(t) != w) return std::nullopt;
  }
  return map;
}

}  // namespace tropic
