#include "tropic/morphism.hpp"

namespace tropic {

namespace {

// pullback of a target cell: f^{-1}(τ̃) = {x : L x ∈ τ̃}
Poly pullback(const RatMat& L, const Poly& target_cell, int source_ambient) {
  Poly out = Poly::whole_space(source_ambient);
  auto conv = [&](const IntMat& M, const RatVec& rhs, int kind) {
    for (int i = 0; i < M.rows; ++i) {
      RatVec row(source_ambient, Rat(0));
      for (int k = 0; k < L.rows; ++k)
        if (M(i, k) != 0)
          for (int j = 0; j < source_ambient; ++j) row[j] += Rat(M(i, k)) * L(k, j);
      Int lcm = 1;
      for (auto& x : row) lcm = lcm / gcd_int(lcm, den(x)) * den(x);
      IntVec f(source_ambient);
      for (int j = 0; j < source_ambient; ++j) f[j] = num(row[j]) * (lcm / den(row[j]));
      Rat r = rhs[i] * Rat(lcm);
      if (kind == 0)
        out.add_eq(f, r);
      else if (kind == 1)
        out.add_ge(f, r);
      else
        out.add_gt(f, r);
    }
  };
  conv(target_cell.eq, target_cell.eq_rhs, 0);
  conv(target_cell.ge, target_cell.ge_rhs, 1);
  conv(target_cell.gt, target_cell.gt_rhs, 2);
  return out;
}

int image_dim(const RatMat& L, const PolyInfo& cell_info) {
  std::vector<RatVec> imgs;
  for (auto& v : cell_info.span) imgs.push_back(mul(L, v));
  RatMat M(int(imgs.size()), L.rows);
  for (int i = 0; i < M.rows; ++i) M.set_row(i, imgs[i]);
  return rank(M);
}

}  // namespace

MorphismReport certify_morphism(const OrbitMorphism& f, const OrbitSpace& S,
                                const OrbitSpace& T) {
  MorphismReport rep;
  // (a): every source rep cell maps into some target cell
  rep.cells_into_cells = true;
  for (auto& c : S.complex.cells) {
    bool inside = false;
    for (auto& d : T.complex.cells)
      if (subset_of(c, pullback(f.L, d, S.complex.ambient))) {
        inside = true;
        break;
      }
    if (!inside) {
      rep.cells_into_cells = false;
      rep.notes.push_back("a cell image is not contained in any target cell");
      break;
    }
  }
  // (b): lattice condition (induces morphisms of the star fans in the
  // embedded realization)
  rep.lattice_ok = true;
  Sublattice src = S.complex.ambient_lattice();
  Sublattice tgt = T.complex.ambient_lattice();
  for (auto& b : src.basis) {
    RatVec img = mul(f.L, to_rat(b));
    IntVec iv(img.size());
    bool integral = true;
    for (size_t i = 0; i < img.size(); ++i) {
      if (den(img[i]) != 1) {
        integral = false;
        break;
      }
      iv[i] = num(img[i]);
    }
    if (!integral || !tgt.contains(iv)) {
      rep.lattice_ok = false;
      rep.notes.push_back("source lattice does not map into the target lattice");
      break;
    }
  }
  // (c): pairwise image-overlap dimension test on facets (reps and their
  // bounded-word translates)
  rep.overlap_ok = true;
  std::vector<Poly> facets;
  {
    WordEnum we = enumerate_words(S.action, std::min(S.action.effective_bound(), 3));
    for (int i = 0; i < int(S.complex.cells.size()); ++i) {
      if (analyze(S.complex.cells[i]).dim != S.complex.dim) continue;
      for (auto& g : we.elements) {
        Poly c = g.apply(S.complex.cells[i]);
        bool dup = false;
        for (auto& d : facets)
          if (set_equal(c, d)) {
            dup = true;
            break;
          }
        if (!dup) facets.push_back(std::move(c));
      }
    }
  }
  std::vector<Poly> images;
  std::vector<int> idims;
  for (auto& c : facets) {
    images.push_back(linear_image(c, f.L));
    idims.push_back(analyze(images.back()).dim);
  }
  for (size_t i = 0; i < images.size() && rep.overlap_ok; ++i)
    for (size_t j = i + 1; j < images.size() && rep.overlap_ok; ++j) {
      Poly cap = intersect(images[i], images[j]);
      if (is_empty(cap)) continue;
      int dc = analyze(cap).dim;
      if (dc == idims[i] && dc == idims[j] && !set_equal(images[i], images[j])) {
        rep.overlap_ok = false;
        rep.notes.push_back("equal-dimensional image overlap with unequal images (needs refinement)");
      }
    }
  // (d): equivariance f1 ∘ g = f2(g) ∘ f1 as affine maps
  rep.equivariant = true;
  if (f.gen_images.size() != S.action.generators.size()) {
    rep.equivariant = false;
    rep.notes.push_back("generator image list has wrong length");
  } else {
    for (size_t k = 0; k < S.action.generators.size(); ++k) {
      const AffineMap& g = S.action.generators[k];
      const AffineMap& h = f.gen_images[k];
      RatMat lhs = mul(f.L, g.A);
      RatMat rhs = mul(h.A, f.L);
      RatVec lt = mul(f.L, g.t);
      if (!(lhs == rhs) || lt != h.t) {
        rep.equivariant = false;
        rep.notes.push_back("equivariance fails on a generator");
        break;
      }
    }
  }
  return rep;
}

OrbitSpace image_orbit_space(const OrbitMorphism& f, const OrbitSpace& S,
                             const GroupAction& target_action) {
  OrbitSpace out;
  out.action = target_action;
  out.complex.ambient = f.L.rows;
  out.complex.dim = S.complex.dim;
  Sublattice src_lat = S.complex.ambient_lattice();
  Sublattice tgt_lat = Sublattice::standard(f.L.rows);

  struct Piece {
    Poly image;
    Rat weight;
  };
  std::vector<Piece> pieces;
  bool any_facet = false;
  for (int i = 0; i < int(S.complex.cells.size()); ++i) {
    PolyInfo info = analyze(S.complex.cells[i]);
    if (info.dim != S.complex.dim) continue;
    any_facet = true;
    if (image_dim(f.L, info) != info.dim) continue;  // f not injective here
    Poly img = linear_image(S.complex.cells[i], f.L);
    Sublattice lat_sigma = span_lattice(info.span, src_lat);
    PolyInfo img_info = analyze(img);
    Sublattice lat_img = span_lattice(img_info.span, tgt_lat);
    auto idx = lattice_index(f.L, lat_sigma, lat_img);
    if (!idx) continue;
    Rat w = S.complex.weight_of(i) * (*idx);
    // merge with an existing equal image (or a target-action translate)
    bool merged = false;
    WordEnum we = enumerate_words(target_action, std::min(target_action.effective_bound(), 3));
    for (auto& p : pieces) {
      for (auto& h : we.elements)
        if (set_equal(h.apply(p.image), img)) {
          p.weight += w;
          merged = true;
          break;
        }
      if (merged) break;
    }
    if (!merged) pieces.push_back({std::move(img), w});
  }
  if (pieces.empty()) {
    if (!any_facet) throw std::invalid_argument("image_orbit_space: empty image");
    throw std::invalid_argument("image_orbit_space: no injective facet");
  }
  // the collected images must already form a complex (plus faces)
  for (size_t i = 0; i < pieces.size(); ++i)
    for (size_t j = i + 1; j < pieces.size(); ++j) {
      Poly cap = intersect(pieces[i].image, pieces[j].image);
      if (is_empty(cap)) continue;
      if (!is_face_of(cap, pieces[i].image) || !is_face_of(cap, pieces[j].image))
        throw std::runtime_error("image_orbit_space: images need a proper refinement");
    }
  for (auto& p : pieces) {
    int idx = int(out.complex.cells.size());
    out.complex.cells.push_back(p.image);
    out.complex.weights[idx] = p.weight;
  }
  // add faces / pairwise intersections as lower cells
  size_t nfacets = out.complex.cells.size();
  for (size_t i = 0; i < nfacets; ++i)
    for (size_t j = i + 1; j < nfacets; ++j) {
      Poly cap = intersect(out.complex.cells[i], out.complex.cells[j]);
      if (is_empty(cap)) continue;
      bool dup = false;
      for (auto& c : out.complex.cells)
        if (set_equal(c, cap)) {
          dup = true;
          break;
        }
      if (!dup) out.complex.cells.push_back(cap);
    }
  return out;
}

namespace {

// Q strictly inside the relative interior of cell (non-implicit rows strict)?
bool strictly_interior(const Poly& c, const PolyInfo& info, const RatVec& x) {
  if (!contains_point(c, x)) return false;
  std::vector<bool> implicit(c.ge.rows, false);
  for (int r : info.implicit_ge) implicit[r] = true;
  for (int r = 0; r < c.ge.rows; ++r) {
    if (implicit[r]) continue;
    Rat v = 0;
    for (int k = 0; k < c.ambient; ++k)
      if (c.ge(r, k) != 0) v += Rat(c.ge(r, k)) * x[k];
    if (v == c.ge_rhs[r]) return false;
  }
  return true;
}

}  // namespace

Rat morphism_degree(const OrbitMorphism& f, const OrbitSpace& S, const OrbitSpace& T,
                    const RatVec& Q) {
  // target facet with Q in its relative interior
  int tq = -1;
  PolyInfo tq_info;
  for (int i = 0; i < int(T.complex.cells.size()); ++i) {
    PolyInfo info = analyze(T.complex.cells[i]);
    if (info.dim != T.complex.dim) continue;
    if (!contains_point(T.complex.cells[i], Q)) continue;
    if (!strictly_interior(T.complex.cells[i], info, Q))
      throw degenerate_point("resample Q: on a facet boundary of the target");
    tq = i;
    tq_info = info;
    break;
  }
  if (tq < 0) throw degenerate_point("resample Q: not in a facet interior of the target");

  // H-orbit of Q (classes [Q]); preimages are solved against every orbit point
  std::vector<RatVec> q_orbit{Q};
  {
    WordEnum we = enumerate_words(T.action, T.action.effective_bound());
    for (auto& h : we.elements) {
      RatVec q = h.apply(Q);
      bool dup = false;
      for (auto& o : q_orbit)
        if (o == q) {
          dup = true;
          break;
        }
      if (!dup) q_orbit.push_back(std::move(q));
    }
  }

  Sublattice src_lat = S.complex.ambient_lattice();
  Sublattice tgt_lat = T.complex.ambient_lattice();
  Sublattice lat_q = span_lattice(tq_info.span, tgt_lat);
  Rat wq = class_weight(T.complex.cells[tq], T.complex.weight_of(tq), T.action);

  Rat total = 0;
  for (int i = 0; i < int(S.complex.cells.size()); ++i) {
    PolyInfo info = analyze(S.complex.cells[i]);
    if (info.dim != S.complex.dim) continue;
    const Poly& c = S.complex.cells[i];
    std::vector<RatVec> points;  // distinct preimages inside this rep facet
    for (auto& q : q_orbit) {
      Poly pre = c;
      for (int r = 0; r < f.L.rows; ++r) {
        RatVec row = f.L.row(r);
        Int lcm = 1;
        for (auto& x : row) lcm = lcm / gcd_int(lcm, den(x)) * den(x);
        IntVec fi(row.size());
        for (size_t k = 0; k < row.size(); ++k) fi[k] = num(row[k]) * (lcm / den(row[k]));
        pre.add_eq(fi, q[r] * Rat(lcm));
      }
      PolyInfo pi = analyze(pre);
      if (pi.empty) continue;
      if (pi.dim > 0)
        throw degenerate_point("resample Q: positive-dimensional preimage in a facet");
      if (!strictly_interior(c, info, pi.relint))
        throw degenerate_point("resample Q: preimage on a facet boundary");
      bool dup = false;
      for (auto& p : points)
        if (p == pi.relint) {
          dup = true;
          break;
        }
      if (!dup) points.push_back(pi.relint);
    }
    if (points.empty()) continue;
    Sublattice lat_sigma = span_lattice(info.span, src_lat);
    auto idx = lattice_index(f.L, lat_sigma, lat_q);
    if (!idx) throw degenerate_point("resample Q: non-injective facet hit");
    Rat wp = class_weight(c, S.complex.weight_of(i), S.action);
    total += Rat(int(points.size())) * wp / wq * (*idx);
  }
  return total;
}

}  // namespace tropic
