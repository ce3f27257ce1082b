#include "tropic/dist.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropic {

DistancePoint dist_point_of_cut(const CutCurve& cc) {
  DistancePoint d;
  d.N = cc.n_marks_original;
  const ModuliAmbient& ma = moduli_ambient(d.N);
  d.raw = leaf_distances(cc.tree);
  d.normal_form = ma.Q.normal_form(d.raw);
  d.coords = ma.to_coords(d.normal_form);
  return d;
}

DistancePoint dist_n(const AbstractCurve& c) { return dist_point_of_cut(canonical_cut(c)); }

namespace {

// exact tree reconstruction from a leaf metric; leaves carry mark labels
// (label 0 = the circle attachment, realized as a distinguished vertex).
struct TreeBuilder {
  AbstractCurve curve;
  int root_vertex = -1;  // vertex of the label-0 pseudo-leaf
};

// D is a full symmetric metric on k items; labels[i] = mark label (0 allowed
// once for the root). Returns the tree with leaf edges for labels > 0.
TreeBuilder tree_from_metric(std::vector<int> labels,
                             std::vector<std::vector<Rat>> D) {
  int k = int(labels.size());
  // cluster zero-distance items
  std::vector<int> cluster(k, -1);
  std::vector<std::vector<int>> clusters;
  for (int i = 0; i < k; ++i) {
    if (cluster[i] >= 0) continue;
    cluster[i] = int(clusters.size());
    clusters.push_back({i});
    for (int j = i + 1; j < k; ++j) {
      if (cluster[j] >= 0) continue;
      if (D[i][j] == 0) {
        for (int l = 0; l < k; ++l)
          if (l != i && l != j && D[i][l] != D[j][l])
            throw not_in_image("zero-distance items with inconsistent metric");
        cluster[j] = cluster[i];
        clusters.back().push_back(j);
      }
    }
  }
  int C = int(clusters.size());
  std::vector<std::vector<Rat>> M(C, std::vector<Rat>(C, Rat(0)));
  for (int a = 0; a < C; ++a)
    for (int b = a + 1; b < C; ++b) {
      Rat v = D[clusters[a][0]][clusters[b][0]];
      if (v <= 0) throw not_in_image("non-positive distance between clusters");
      M[a][b] = M[b][a] = v;
    }

  TreeBuilder tb;
  // active items: cluster index -> vertex id (built bottom-up)
  std::vector<int> vert(C, -1);
  std::vector<int> active;
  for (int a = 0; a < C; ++a) {
    vert[a] = tb.curve.add_vertex();
    active.push_back(a);
  }
  // reduce cherries until two remain
  while (active.size() > 2) {
    bool reduced = false;
    for (size_t ii = 0; ii < active.size() && !reduced; ++ii) {
      for (size_t jj = ii + 1; jj < active.size() && !reduced; ++jj) {
        int a = active[ii], b = active[jj];
        // heights via any third item; must be independent of it
        Rat ha, hb;
        bool first = true, consistent = true;
        for (size_t ll = 0; ll < active.size(); ++ll) {
          int l = active[ll];
          if (l == a || l == b) continue;
          Rat va = (M[a][b] + M[a][l] - M[b][l]) / 2;
          if (first) {
            ha = va;
            first = false;
          } else if (va != ha) {
            consistent = false;
            break;
          }
        }
        if (!consistent || first) continue;
        hb = M[a][b] - ha;
        if (ha < 0 || hb < 0) continue;
        // verify this is actually a cherry: no other item projects inside
        // (heights consistent suffices for exact tree metrics)
        // join vertex
        int join = tb.curve.add_vertex();
        if (ha > 0)
          tb.curve.add_bounded(vert[a], join, ha);
        else
          join = vert[a];  // a sits at the join
        if (hb > 0)
          tb.curve.add_bounded(vert[b], join, hb);
        else {
          if (ha == 0) throw not_in_image("distinct clusters at distance 0");
          // b sits at the join: merge vertices
          // (relink: make join the b vertex)
          if (join != vert[b]) {
            // replace join by vert[b] in edges
            for (auto& e : tb.curve.edges) {
              if (e.v == join) e.v = vert[b];
              if (e.w == join) e.w = vert[b];
            }
            join = vert[b];
          }
        }
        // replace a by a virtual item at the join
        std::vector<Rat> row(C + 1, Rat(0));
        // extend M with the new item
        for (auto& r : M) r.push_back(Rat(0));
        M.push_back(std::vector<Rat>(C + 1, Rat(0)));
        int nw = C;
        ++C;
        vert.push_back(join);
        for (size_t ll = 0; ll < active.size(); ++ll) {
          int l = active[ll];
          if (l == a || l == b) continue;
          Rat va = M[a][l] - ha;
          Rat vb = M[b][l] - hb;
          if (va != vb || va <= 0) throw not_in_image("metric is not a tree metric");
          M[nw][l] = M[l][nw] = va;
        }
        std::vector<int> next;
        for (int l : active)
          if (l != a && l != b) next.push_back(l);
        next.push_back(nw);
        active = std::move(next);
        reduced = true;
      }
    }
    if (!reduced) throw not_in_image("no cherry found; not a tree metric");
  }
  if (active.size() == 2) {
    int a = active[0], b = active[1];
    if (M[a][b] <= 0) throw not_in_image("final edge without positive length");
    tb.curve.add_bounded(vert[a], vert[b], M[a][b]);
  }
  // attach leaf edges for the original items
  for (int a0 = 0; a0 < int(clusters.size()); ++a0)
    for (int item : clusters[a0]) {
      if (labels[item] > 0)
        tb.curve.add_leaf(vert[a0], labels[item]);
      else
        tb.root_vertex = vert[a0];
    }
  if (tb.root_vertex < 0) throw std::logic_error("tree_from_metric: missing root item");
  return tb;
}

}  // namespace

Reconstruction reconstruct(const RatVec& raw, int N) {
  int m = N + 2, A = N + 1, B = N + 2;
  if (int(raw.size()) != pair_count(m))
    throw std::invalid_argument("reconstruct: wrong coordinate count");
  auto at = [&](int i, int j) { return raw[pair_index(std::min(i, j), std::max(i, j), m)]; };
  Reconstruction rec;
  rec.j = at(A, B);
  if (rec.j <= 0) throw not_in_image("j must be positive");
  rec.d.resize(N + 1);
  RatVec t(N + 1);  // positions along the cut circle, from the A end
  for (int i = 1; i <= N; ++i) {
    rec.d[i] = (at(i, A) + at(i, B) - rec.j) / 2;
    if (rec.d[i] < 0) throw not_in_image("negative distance to the circle");
    t[i] = at(i, A) - rec.d[i];
    if (t[i] < 0 || t[i] > rec.j) throw not_in_image("attachment outside the circle");
  }
  rec.d_pair.assign(N + 1, std::vector<Rat>(N + 1, Rat(0)));
  for (int i = 1; i <= N; ++i)
    for (int k = 1; k <= N; ++k) {
      if (i == k) continue;
      Rat diff = t[i] - t[k];
      if (diff < 0) diff = -diff;
      rec.d_pair[i][k] = diff;  // cut-path circle distance, per the formulas
    }
  // cross-position consistency: distances through the cut path
  for (int i = 1; i <= N; ++i)
    for (int k = i + 1; k <= N; ++k) {
      if (t[i] == t[k]) continue;  // same chart position: hanging tree data
      Rat gap = t[i] > t[k] ? t[i] - t[k] : t[k] - t[i];
      Rat expect = rec.d[i] + rec.d[k] + gap;
      if (at(i, k) != expect)
        throw not_in_image("cross-group distance inconsistent with the circle");
    }
  // groups by circle position; t = j is the cut point again (t = 0)
  std::map<Rat, std::vector<int>> groups;
  for (int i = 1; i <= N; ++i) {
    Rat pos = (t[i] == rec.j) ? Rat(0) : t[i];
    groups[pos].push_back(i);
  }
  // build the curve: circle vertices at the distinct positions
  AbstractCurve c;
  std::vector<std::pair<Rat, int>> pos;  // (position, circle vertex)
  std::vector<TreeBuilder> hang;
  for (auto& [ti, gi] : groups) {
    // hanging tree on the group plus the root
    std::vector<int> labels{0};
    std::vector<int> items{-1};
    for (int i : gi) {
      labels.push_back(i);
      items.push_back(i);
    }
    int k = int(labels.size());
    std::vector<std::vector<Rat>> D(k, std::vector<Rat>(k, Rat(0)));
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        Rat v;
        if (items[a] < 0)
          v = rec.d[items[b]];
        else if (items[b] < 0)
          v = rec.d[items[a]];
        else if (t[items[a]] == t[items[b]])
          v = at(items[a], items[b]);
        else
          // marks at the same circle point seen from opposite sides of the
          // cut: the chart distance includes the full circle; the honest
          // hanging distance passes through the attachment vertex
          v = rec.d[items[a]] + rec.d[items[b]];
        D[a][b] = D[b][a] = v;
      }
    TreeBuilder tb = tree_from_metric(labels, D);
    // splice into c
    int off = c.nverts;
    c.nverts += tb.curve.nverts;
    for (auto& e : tb.curve.edges) {
      CurveEdge ne = e;
      ne.v += off;
      if (ne.w >= 0) ne.w += off;
      c.edges.push_back(ne);
    }
    pos.push_back({ti, tb.root_vertex + off});
  }
  // circle edges between consecutive positions (and the closing arc)
  std::sort(pos.begin(), pos.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  int P = int(pos.size());
  if (P == 1) {
    c.add_bounded(pos[0].second, pos[0].second, rec.j);  // loop
  } else {
    for (int a = 0; a + 1 < P; ++a)
      c.add_bounded(pos[a].second, pos[a + 1].second, pos[a + 1].first - pos[a].first);
    Rat back = rec.j - (pos[P - 1].first - pos[0].first);
    if (back <= 0) throw not_in_image("circle closes with non-positive arc");
    c.add_bounded(pos[P - 1].second, pos[0].second, back);
  }
  auto chk = check_curve(c);
  if (!chk.connected || chk.genus != 1 || !chk.marks_ok || !chk.lengths_ok)
    throw not_in_image("reconstructed graph is not a genus-1 curve");
  if (!chk.valences_ok) throw not_in_image("reconstructed curve has a vertex of valence < 3");
  rec.curve = std::move(c);
  rec.type = canonical_type(rec.curve);
  return rec;
}

bool same_class(const DistancePoint& a, const DistancePoint& b) {
  if (a.N != b.N) return false;
  int N = a.N;
  // combinatorial pre-keying by the reconstructed invariants
  Reconstruction ra = reconstruct(a.raw, N), rb = reconstruct(b.raw, N);
  if (ra.j != rb.j) return false;
  for (int i = 1; i <= N; ++i)
    if (ra.d[i] != rb.d[i]) return false;
  for (int i = 1; i <= N; ++i)
    for (int k = 1; k <= N; ++k) {
      auto norm = [&](const Rat& x, const Rat& j) {
        Rat other = j - x;
        return x < other ? x : other;
      };
      if (norm(ra.d_pair[i][k], ra.j) != norm(rb.d_pair[i][k], rb.j)) return false;
    }
  if (ra.type != rb.type) return false;
  // bounded generator-word search on the point orbit
  if (a.coords == b.coords) return true;
  std::vector<AffineMap> steps;
  for (auto& g : moduli_generators(N)) {
    steps.push_back(g);
    AffineMap gi = g.inverse();
    if (!(gi == g)) steps.push_back(gi);
  }
  int bound = 2 * (N + 2);
  std::vector<RatVec> seen{a.coords};
  size_t level_start = 0;
  for (int len = 1; len <= bound; ++len) {
    size_t level_end = seen.size();
    for (size_t i = level_start; i < level_end; ++i)
      for (auto& s : steps) {
        RatVec img = s.apply(seen[i]);
        if (img == b.coords) return true;
        if (std::find(seen.begin(), seen.end(), img) == seen.end())
          seen.push_back(std::move(img));
      }
    if (seen.size() == level_end) break;  // orbit closed
    level_start = level_end;
  }
  return false;
}

}  // namespace tropic
