#include "tropic/complex.hpp"

#include <algorithm>

namespace tropic {

std::vector<int> cells_of_dim(const WeightedComplex& X, int d,
                              std::vector<PolyInfo>* infos_out) {
  std::vector<int> out;
  for (int i = 0; i < int(X.cells.size()); ++i) {
    PolyInfo info = analyze(X.cells[i]);
    if (info.dim == d) {
      out.push_back(i);
      if (infos_out) infos_out->push_back(std::move(info));
    }
  }
  return out;
}

ValidationReport validate_complex(const WeightedComplex& X) {
  ValidationReport rep;
  int n = int(X.cells.size());
  std::vector<PolyInfo> info(n);
  for (int i = 0; i < n; ++i) {
    info[i] = analyze(X.cells[i]);
    if (info[i].empty)
      rep.violations.push_back({"nonempty", i, -1, "cell is empty"});
  }
  // purity when weighted
  if (!X.weights.empty()) {
    for (int i = 0; i < n; ++i) {
      if (info[i].empty) continue;
      bool maximal = true;
      for (int j = 0; j < n && maximal; ++j)
        if (j != i && subset_of(X.cells[i], X.cells[j]) && info[j].dim > info[i].dim)
          maximal = false;
      if (maximal && info[i].dim != X.dim)
        rep.violations.push_back({"pure", i, -1, "maximal cell of wrong dimension"});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (info[i].empty || info[j].empty) continue;
      Poly cap = intersect(X.cells[i], X.cells[j]);
      if (is_empty(cap)) continue;
      PolyInfo ci = analyze(cap);
      if (ci.dim == info[i].dim && ci.dim == info[j].dim) {
        rep.violations.push_back({"d", i, j, "relative interiors overlap"});
        continue;
      }
      if (!is_face_of(cap, X.cells[i]) || !is_face_of(cap, X.cells[j])) {
        rep.violations.push_back({"a", i, j, "intersection is not a common face"});
        continue;
      }
      bool found = false;
      for (int k = 0; k < n && !found; ++k)
        if (set_equal(cap, X.cells[k])) found = true;
      if (!found)
        rep.violations.push_back({"a", i, j, "intersection is not a cell of the complex"});
    }
  }
  // coverage of faces by cells (relative interiors partition the support)
  for (int i = 0; i < n; ++i) {
    if (info[i].empty || !X.cells[i].closed()) continue;
    for (auto& f : faces(X.cells[i])) {
      PolyInfo fi = analyze(f);
      if (fi.empty) continue;
      bool covered = false;
      for (int k = 0; k < n && !covered; ++k) {
        if (!contains_point(X.cells[k], fi.relint)) continue;
        PolyInfo ki = analyze(X.cells[k]);
        (void)ki;
        covered = true;
      }
      if (!covered)
        rep.violations.push_back({"d", i, -1, "face of a cell not covered by cells"});
    }
  }
  return rep;
}

WeightedComplex nonzero_part(const WeightedComplex& X) {
  WeightedComplex Y;
  Y.ambient = X.ambient;
  Y.dim = X.dim;
  Y.lattice = X.lattice;
  std::vector<int> keep;
  for (int i = 0; i < int(X.cells.size()); ++i) {
    bool under = false;
    for (auto& [fi, w] : X.weights) {
      if (w == 0) continue;
      if (fi == i || subset_of(X.cells[i], X.cells[fi])) {
        under = true;
        break;
      }
    }
    if (under) keep.push_back(i);
  }
  std::map<int, int> remap;
  for (int i : keep) {
    remap[i] = int(Y.cells.size());
    Y.cells.push_back(X.cells[i]);
  }
  for (auto& [fi, w] : X.weights)
    if (remap.count(fi) && w != 0) Y.weights[remap[fi]] = w;
  return Y;
}

void sort_cells(WeightedComplex& X) {
  std::vector<int> order(X.cells.size());
  for (int i = 0; i < int(order.size()); ++i) order[i] = i;
  std::vector<std::string> keys(X.cells.size());
  for (int i = 0; i < int(order.size()); ++i) keys[i] = X.cells[i].description_key();
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<Poly> cells;
  std::map<int, Rat> weights;
  std::vector<int> inv(order.size());
  for (int pos = 0; pos < int(order.size()); ++pos) {
    cells.push_back(X.cells[order[pos]]);
    inv[order[pos]] = pos;
  }
  for (auto& [fi, w] : X.weights) weights[inv[fi]] = w;
  X.cells = std::move(cells);
  X.weights = std::move(weights);
}

}  // namespace tropic
