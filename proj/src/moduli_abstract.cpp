#include "tropic/moduli_abstract.hpp"

#include <algorithm>
#include <map>

namespace tropic {

namespace {

// set partitions of items into >= min_blocks nonempty blocks
void set_partitions(const std::vector<int>& items, size_t at,
                    std::vector<std::vector<int>>& blocks,
                    std::vector<std::vector<std::vector<int>>>& out) {
  if (at == items.size()) {
    out.push_back(blocks);
    return;
  }
  for (size_t b = 0; b <= blocks.size(); ++b) {
    if (b == blocks.size()) {
      blocks.push_back({items[at]});
      set_partitions(items, at + 1, blocks, out);
      blocks.pop_back();
    } else {
      blocks[b].push_back(items[at]);
      set_partitions(items, at + 1, blocks, out);
      blocks[b].pop_back();
    }
  }
}

// rooted subtrees with leaf set S hanging off a parent vertex: returns, for
// each shape, a builder that attaches it to the parent and returns nothing.
// A shape is encoded as a function applied to (curve, parent_vertex).
using Attach = std::function<void(AbstractCurve&, int)>;

std::vector<Attach> rooted_subtrees(const std::vector<int>& S) {
  std::vector<Attach> out;
  if (S.size() == 1) {
    int mark = S[0];
    out.push_back([mark](AbstractCurve& c, int parent) { c.add_leaf(parent, mark); });
    return out;
  }
  // internal root u joined to the parent; children = blocks of a partition
  std::vector<std::vector<std::vector<int>>> parts;
  std::vector<std::vector<int>> blocks;
  set_partitions(S, 0, blocks, parts);
  for (auto& part : parts) {
    if (part.size() < 2) continue;  // root needs >= 2 children
    // enumerate child shapes per block
    std::vector<std::vector<Attach>> choices;
    for (auto& b : part) choices.push_back(rooted_subtrees(b));
    std::vector<size_t> pick(part.size(), 0);
    while (true) {
      std::vector<Attach> chosen;
      for (size_t i = 0; i < part.size(); ++i) chosen.push_back(choices[i][pick[i]]);
      out.push_back([chosen](AbstractCurve& c, int parent) {
        int u = c.add_vertex();
        c.add_bounded(parent, u, Rat(1));
        for (auto& ch : chosen) ch(c, u);
      });
      size_t i = 0;
      while (i < pick.size() && pick[i] + 1 == choices[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
      ++pick[i];
    }
  }
  return out;
}

// everything a cycle vertex can carry: >= 1 subtree shapes over mark set S
std::vector<Attach> vertex_payload(const std::vector<int>& S) {
  std::vector<Attach> out;
  std::vector<std::vector<std::vector<int>>> parts;
  std::vector<std::vector<int>> blocks;
  set_partitions(S, 0, blocks, parts);
  for (auto& part : parts) {
    std::vector<std::vector<Attach>> choices;
    for (auto& b : part) choices.push_back(rooted_subtrees(b));
    std::vector<size_t> pick(part.size(), 0);
    while (true) {
      std::vector<Attach> chosen;
      for (size_t i = 0; i < part.size(); ++i) chosen.push_back(choices[i][pick[i]]);
      out.push_back([chosen](AbstractCurve& c, int v) {
        for (auto& ch : chosen) ch(c, v);
      });
      size_t i = 0;
      while (i < pick.size() && pick[i] + 1 == choices[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
      ++pick[i];
    }
  }
  return out;
}

}  // namespace

std::vector<AbstractCurve> enumerate_abstract_types(int n) {
  std::vector<AbstractCurve> out;
  std::map<std::string, bool> seen;
  std::vector<int> marks;
  for (int i = 1; i <= n; ++i) marks.push_back(i);
  for (int c = 1; c <= std::max(1, n); ++c) {
    // ordered distributions of marks into c nonempty groups (cyclic order
    // duplicated; deduplicated by canonical form)
    std::vector<std::vector<std::vector<int>>> parts;
    std::vector<std::vector<int>> blocks;
    set_partitions(marks, 0, blocks, parts);
    for (auto& part : parts) {
      if (int(part.size()) != c) continue;
      // arrangements of the blocks around the cycle: permutations
      std::vector<int> perm(c);
      for (int i = 0; i < c; ++i) perm[i] = i;
      do {
        // payload choices per group
        std::vector<std::vector<Attach>> choices;
        for (int i = 0; i < c; ++i) choices.push_back(vertex_payload(part[perm[i]]));
        std::vector<size_t> pick(c, 0);
        while (true) {
          AbstractCurve curve;
          std::vector<int> ring;
          for (int i = 0; i < c; ++i) ring.push_back(curve.add_vertex());
          if (c == 1) {
            curve.add_bounded(ring[0], ring[0], Rat(1));
          } else {
            for (int i = 0; i < c; ++i)
              curve.add_bounded(ring[i], ring[(i + 1) % c], Rat(1));
          }
          for (int i = 0; i < c; ++i) choices[i][pick[i]](curve, ring[i]);
          auto chk = check_curve(curve);
          if (chk.ok() && chk.genus == 1) {
            std::string key = canonical_type(curve);
            if (!seen.count(key)) {
              seen[key] = true;
              out.push_back(curve);
            }
          }
          size_t i = 0;
          while (i < pick.size() && pick[i] + 1 == choices[i].size()) pick[i++] = 0;
          if (i == pick.size()) break;
          ++pick[i];
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return out;
}

namespace {

// all cut specs of a type (every mid-edge cut, every vertex cut with every
// side assignment)
std::vector<CutSpec> all_cuts(const AbstractCurve& c) {
  std::vector<CutSpec> out;
  auto cyc = cycle_edges(c);
  for (int e : cyc) {
    CutSpec s;
    s.edge = e;
    s.offset = c.edges[e].length / 2;
    out.push_back(s);
  }
  std::vector<int> cyc_verts;
  for (int e : cyc) {
    cyc_verts.push_back(c.edges[e].v);
    cyc_verts.push_back(c.edges[e].w);
  }
  std::sort(cyc_verts.begin(), cyc_verts.end());
  cyc_verts.erase(std::unique(cyc_verts.begin(), cyc_verts.end()), cyc_verts.end());
  for (int v : cyc_verts) {
    std::vector<int> incident;  // non-cycle incident edges
    for (int ei = 0; ei < int(c.edges.size()); ++ei) {
      if (std::find(cyc.begin(), cyc.end(), ei) != cyc.end()) continue;
      if (c.edges[ei].v == v || c.edges[ei].w == v) incident.push_back(ei);
    }
    std::vector<int> cyc_at;
    for (int e : cyc) {
      auto& ed = c.edges[e];
      if (ed.v == v && ed.w == v) cyc_at = {e, e};
      else if (ed.v == v || ed.w == v) cyc_at.push_back(e);
    }
    for (int choice = 0; choice < (cyc_at[0] == cyc_at[1] ? 1 : 2); ++choice)
      for (uint64_t mask = 0; mask < (uint64_t(1) << incident.size()); ++mask) {
        CutSpec s;
        s.vertex = v;
        s.cycle_a = cyc_at[choice];
        for (size_t k = 0; k < incident.size(); ++k)
          if (mask & (uint64_t(1) << k)) s.a_side.push_back(incident[k]);
        out.push_back(s);
      }
  }
  return out;
}

// the cone of a cut tree in lattice coordinates, with j > 0 strict
std::optional<Poly> cut_cone(const CutCurve& cc, const ModuliAmbient& ma) {
  const AbstractCurve& t = cc.tree;
  int m = t.nmarks();
  // split columns per bounded edge
  std::vector<IntVec> cols;
  for (int ei = 0; ei < int(t.edges.size()); ++ei) {
    if (t.edges[ei].w < 0) continue;
    // leaf set on the v-side of edge ei
    std::vector<int> side;
    std::vector<bool> visited(t.nverts, false);
    std::vector<int> stack{t.edges[ei].v};
    visited[t.edges[ei].v] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e2 = 0; e2 < int(t.edges.size()); ++e2) {
        if (e2 == ei || t.edges[e2].w < 0) continue;
        int o = -1;
        if (t.edges[e2].v == v) o = t.edges[e2].w;
        else if (t.edges[e2].w == v) o = t.edges[e2].v;
        if (o >= 0 && !visited[o]) {
          visited[o] = true;
          stack.push_back(o);
        }
      }
    }
    for (int mk = 1; mk <= m; ++mk)
      if (visited[t.leaf_vertex(mk)]) side.push_back(mk);
    RatVec q = ma.coords_of_raw(to_rat(split_vector(cc.n_marks_original, side)));
    IntVec qi(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
      if (den(q[i]) != 1) throw std::logic_error("split column not in the lattice");
      qi[i] = num(q[i]);
    }
    cols.push_back(std::move(qi));
  }
  // deduplicate equal columns (the two cut stubs collapse under the s-shift)
  std::vector<IntVec> rays;
  for (auto& q : cols) {
    if (is_zero(q)) continue;
    bool dup = false;
    for (auto& r : rays)
      if (r == q) dup = true;
    if (!dup) rays.push_back(q);
  }
  Poly cone = Poly::cone_hull(int(ma.rank), rays);
  // j > 0: the {A,B} raw coordinate pulled back to coords
  int mfull = cc.n_marks_original + 2;
  RatVec jraw(pair_count(mfull), Rat(0));
  jraw[pair_index(mfull - 1, mfull, mfull)] = 1;
  RatVec jrow = ma.pullback_form(jraw);
  cone.add_gt(primitive_vector(jrow), 0);
  if (is_empty(cone)) return std::nullopt;
  return cone;
}

}  // namespace

ModuliComplex build_moduli_complex(int n) {
  ModuliComplex M;
  M.n = n;
  const ModuliAmbient& ma = moduli_ambient(n);
  int r = ma.rank;
  M.space.complex.ambient = r;
  M.space.complex.dim = n;
  M.space.action.ambient = r;
  M.space.action.generators = moduli_generators(n);
  M.space.action.word_bound = 2 * (n + 2);

  auto types = enumerate_abstract_types(n);
  struct RawCell {
    Poly cone;
    std::string type;
    int dim;
    RatVec relint;
  };
  std::vector<RawCell> cells;
  auto push_cell = [&](Poly cone, const std::string& type) {
    PolyInfo info = analyze(cone);
    if (info.empty) return;
    for (auto& c : cells) {
      if (c.dim != info.dim) continue;
      if (!contains_point(c.cone, info.relint)) continue;  // cheap pre-test
      if (set_equal(c.cone, cone)) return;
    }
    cells.push_back({std::move(cone), type, info.dim, info.relint});
  };
  for (auto& ty : types) {
    std::string key = canonical_type(ty);
    for (auto& spec : all_cuts(ty)) {
      auto cc = cut(ty, spec);
      auto cone = cut_cone(cc, ma);
      if (cone) push_cell(std::move(*cone), key);
    }
  }

  // wall subdivision. A setwise self-map of a cell fixes a hyperplane; the
  // cell is split along it so cells embed into the quotient. A wall crossing
  // the interior of a face of the cell restricts to a self-map of that face,
  // so per-cell discovery plus iteration reaches all needed splits; walls are
  // also propagated to cells contained in the carrier as a safety net.
  WordEnum we = enumerate_words(M.space.action, std::min(M.space.action.effective_bound(), 6));
  struct Wall {
    Poly carrier;
    IntVec form;
  };
  std::vector<Wall> walls;
  bool changed = true;
  while (changed) {
    changed = false;
    // discover self-map walls on current cells
    for (auto& cell : cells) {
      PolyInfo info = analyze(cell.cone);
      for (size_t ei = 1; ei < we.elements.size(); ++ei) {
        const AffineMap& g = we.elements[ei];
        if (fixes_pointwise(g, info)) continue;
        Poly img = g.apply(cell.cone);
        if (!contains_point(img, info.relint)) continue;
        if (!set_equal(img, cell.cone)) continue;
        RatMat D = g.A;
        for (int i = 0; i < r; ++i) D(i, i) -= 1;
        for (int i = 0; i < r; ++i) {
          RatVec row = D.row(i);
          if (is_zero(row)) continue;
          IntVec f = primitive_vector(row);
          // the wall must actually cross this cell
          Poly plus = cell.cone, minus = cell.cone;
          plus.add_gt(f, 0);
          IntVec neg(f.size());
          for (size_t k = 0; k < f.size(); ++k) neg[k] = -f[k];
          minus.add_gt(neg, 0);
          if (is_empty(plus) || is_empty(minus)) continue;
          bool dup = false;
          for (auto& w : walls)
            if ((w.form == f || [&] {
                  IntVec nf(f.size());
                  for (size_t k = 0; k < f.size(); ++k) nf[k] = -f[k];
                  return w.form == nf;
                }()) &&
                set_equal(w.carrier, cell.cone))
              dup = true;
          if (!dup) walls.push_back({cell.cone, f});
        }
      }
    }
    // split cells crossed by a wall whose carrier contains them
    for (size_t ci = 0; ci < cells.size(); ++ci) {
      for (auto& w : walls) {
        Poly plus = cells[ci].cone, minus = cells[ci].cone;
        plus.add_gt(w.form, 0);
        IntVec neg(w.form.size());
        for (size_t k = 0; k < w.form.size(); ++k) neg[k] = -w.form[k];
        minus.add_gt(neg, 0);
        if (is_empty(plus) || is_empty(minus)) continue;
        if (!subset_of(cells[ci].cone, w.carrier)) continue;
        Poly upper = cells[ci].cone, lower = cells[ci].cone, mid = cells[ci].cone;
        upper.add_ge(w.form, 0);
        lower.add_ge(neg, 0);
        mid.add_eq(w.form, 0);
        std::string type = cells[ci].type;
        cells.erase(cells.begin() + ci);
        push_cell(std::move(upper), type);
        push_cell(std::move(lower), type);
        push_cell(std::move(mid), type);
        changed = true;
        break;
      }
      if (changed) break;
    }
  }

  // class deduplication: pre-key by (type, dim), then bounded word matching
  std::vector<int> reps;
  std::vector<PolyInfo> infos(cells.size());
  for (size_t i = 0; i < cells.size(); ++i) infos[i] = analyze(cells[i].cone);
  for (size_t i = 0; i < cells.size(); ++i) {
    bool dup = false;
    for (int rj : reps) {
      if (dup) break;
      if (cells[rj].dim != cells[i].dim) continue;
      if (cells[rj].type != cells[i].type) continue;
      for (size_t ei = 0; ei < we.elements.size(); ++ei) {
        Poly img = we.elements[ei].apply(cells[i].cone);
        if (!contains_point(img, infos[rj].relint)) continue;
        if (set_equal(img, cells[rj].cone)) {
          dup = true;
          break;
        }
      }
    }
    if (!dup) reps.push_back(int(i));
  }
  for (int ri : reps) {
    int idx = int(M.space.complex.cells.size());
    M.space.complex.cells.push_back(cells[ri].cone);
    M.cells.push_back({cells[ri].cone, cells[ri].type, cells[ri].dim});
    if (cells[ri].dim == n) M.space.complex.weights[idx] = 1;
  }

  // explicit local stars: the enumerated cut-cone list is closed under the
  // group action (group moves permute cut data), so the star of a codim-1
  // representative is exactly the set of facet cones having it as a face.
  StarOverride stars;
  for (int idx = 0; idx < int(M.cells.size()); ++idx) {
    if (M.cells[idx].dim != n - 1) continue;
    std::vector<std::pair<Poly, Rat>> star;
    const Poly& tau = M.space.complex.cells[idx];
    for (auto& c : cells) {
      if (c.dim != n) continue;
      if (!contains_point(c.cone, analyze(tau).relint)) {
        // the representative's relative interior must lie in the candidate
        continue;
      }
      if (!is_face_of(tau, c.cone)) continue;
      star.push_back({c.cone, Rat(1)});
    }
    stars.stars[idx] = std::move(star);
  }
  M.space.stars = stars;
  return M;
}

}  // namespace tropic
