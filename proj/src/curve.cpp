#include "tropic/curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropic {

int AbstractCurve::valence(int v) const {
  int val = 0;
  for (auto& e : edges) {
    if (e.v == v) ++val;
    if (e.w == v) ++val;  // loops count twice
  }
  return val;
}

int AbstractCurve::nmarks() const {
  int m = 0;
  for (auto& e : edges) m = std::max(m, e.mark);
  return m;
}

int AbstractCurve::leaf_edge(int mark) const {
  for (int i = 0; i < int(edges.size()); ++i)
    if (edges[i].mark == mark) return i;
  throw std::invalid_argument("no such mark");
}

int AbstractCurve::leaf_vertex(int mark) const { return edges[leaf_edge(mark)].v; }

CurveCheck check_curve(const AbstractCurve& c) {
  CurveCheck r;
  int nb = 0;
  for (auto& e : c.edges)
    if (e.w >= 0) ++nb;
  // connectivity over bounded edges and leaf anchoring
  std::vector<int> comp(c.nverts, -1);
  std::vector<int> stack;
  if (c.nverts > 0) {
    stack.push_back(0);
    comp[0] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto& e : c.edges) {
        if (e.w < 0) continue;
        int o = -1;
        if (e.v == v) o = e.w;
        if (e.w == v) o = e.v;
        if (o >= 0 && comp[o] < 0) {
          comp[o] = 0;
          stack.push_back(o);
        }
      }
    }
  }
  r.connected = true;
  for (int v = 0; v < c.nverts; ++v)
    if (comp[v] < 0) r.connected = false;
  r.genus = nb - c.nverts + 1;
  r.valences_ok = true;
  for (int v = 0; v < c.nverts; ++v)
    if (c.valence(v) < 3) r.valences_ok = false;
  int m = c.nmarks();
  std::vector<int> seen(m + 1, 0);
  r.marks_ok = true;
  for (auto& e : c.edges)
    if (e.mark > 0) {
      if (e.w >= 0) r.marks_ok = false;  // marks are unbounded ends
      if (e.mark <= m) ++seen[e.mark];
    }
  for (int k = 1; k <= m; ++k)
    if (seen[k] != 1) r.marks_ok = false;
  r.lengths_ok = true;
  for (auto& e : c.edges)
    if (e.w >= 0 && e.length <= 0) r.lengths_ok = false;
  return r;
}

std::vector<int> cycle_edges(const AbstractCurve& c) {
  // spanning forest over bounded edges; the unique extra edge closes the cycle
  std::vector<int> parent(c.nverts, -1), parent_edge(c.nverts, -1), depth(c.nverts, 0);
  std::vector<bool> visited(c.nverts, false), tree_edge(c.edges.size(), false);
  int extra = -1;
  for (int root = 0; root < c.nverts; ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int ei = 0; ei < int(c.edges.size()); ++ei) {
        auto& e = c.edges[ei];
        if (e.w < 0 || tree_edge[ei]) continue;
        int o = -1;
        if (e.v == v)
          o = e.w;
        else if (e.w == v)
          o = e.v;
        else
          continue;
        if (e.v == e.w) {  // loop: the cycle is this single edge
          if (extra < 0) extra = ei;
          continue;
        }
        if (!visited[o]) {
          visited[o] = true;
          tree_edge[ei] = true;
          parent[o] = v;
          parent_edge[o] = ei;
          depth[o] = depth[v] + 1;
          stack.push_back(o);
        } else if (parent_edge[v] != ei && extra < 0) {
          // non-tree edge between visited vertices
          bool counted = false;
          // make sure we only take it once (e.v->e.w scan order suffices)
          if (!counted) extra = ei;
        }
      }
    }
  }
  if (extra < 0) throw std::invalid_argument("cycle_edges: genus is 0");
  auto& e = c.edges[extra];
  std::vector<int> cyc{extra};
  if (e.v == e.w) return cyc;  // loop
  // path between e.v and e.w in the tree
  int a = e.v, b = e.w;
  while (a != b) {
    if (depth[a] < depth[b]) std::swap(a, b);
    cyc.push_back(parent_edge[a]);
    a = parent[a];
  }
  return cyc;
}

Rat j_invariant(const AbstractCurve& c) {
  if (check_curve(c).genus != 1)
    throw std::invalid_argument("j_invariant: genus is not 1");
  Rat j = 0;
  for (int e : cycle_edges(c)) j += c.edges[e].length;
  return j;
}

int pair_count(int m) { return m * (m - 1) / 2; }

int pair_index(int i, int j, int m) {
  assert(1 <= i && i < j && j <= m);
  // lexicographic: (1,2),(1,3),...,(1,m),(2,3),...
  return (i - 1) * m - (i - 1) * i / 2 + (j - i) - 1;
}

RatVec leaf_distances(const AbstractCurve& tree) {
  int m = tree.nmarks();
  // distances between all vertices via repeated relaxation over bounded edges
  std::vector<int> lv(m + 1);
  for (int k = 1; k <= m; ++k) lv[k] = tree.leaf_vertex(k);
  RatVec out(pair_count(m));
  for (int src = 1; src <= m; ++src) {
    std::vector<std::optional<Rat>> dist(tree.nverts);
    dist[lv[src]] = Rat(0);
    std::vector<int> stack{lv[src]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto& e : tree.edges) {
        if (e.w < 0) continue;
        int o = -1;
        if (e.v == v) o = e.w;
        if (e.w == v) o = e.v;
        if (o < 0 || dist[o]) continue;
        dist[o] = *dist[v] + e.length;
        stack.push_back(o);
      }
    }
    for (int k = src + 1; k <= m; ++k) {
      if (!dist[lv[k]]) throw std::invalid_argument("leaf_distances: disconnected tree");
      out[pair_index(src, k, m)] = *dist[lv[k]];
    }
  }
  return out;
}

CutCurve cut(const AbstractCurve& c, const CutSpec& where) {
  if (check_curve(c).genus != 1) throw std::invalid_argument("cut: genus is not 1");
  auto cyc = cycle_edges(c);
  int m = c.nmarks();
  CutCurve out;
  out.n_marks_original = m;
  AbstractCurve t = c;
  if (where.edge >= 0) {
    bool on_cycle = std::find(cyc.begin(), cyc.end(), where.edge) != cyc.end();
    if (!on_cycle) throw std::invalid_argument("cut: point not on the cycle");
    auto e = t.edges[where.edge];
    if (where.offset <= 0 || where.offset >= e.length)
      throw std::invalid_argument("cut: offset not interior to the edge");
    // remove e; attach stubs with 2-valent vertices carrying A and B.
    // A sits on the v-side of the edge.
    t.edges.erase(t.edges.begin() + where.edge);
    int va = t.add_vertex();
    int vb = t.add_vertex();
    t.add_bounded(e.v, va, where.offset);
    t.add_bounded(vb, e.w, e.length - where.offset);
    t.add_leaf(va, m + 1);
    t.add_leaf(vb, m + 2);
  } else {
    int v = where.vertex;
    // v must lie on the cycle
    bool on_cycle = false;
    std::vector<int> cyc_at;
    for (int ei : cyc) {
      auto& e = c.edges[ei];
      if (e.v == v || e.w == v) {
        on_cycle = true;
        if (e.v == e.w)
          cyc_at = {ei, ei};  // loop: its two ends
        else
          cyc_at.push_back(ei);
      }
    }
    if (!on_cycle) throw std::invalid_argument("cut: vertex not on the cycle");
    if (int(cyc_at.size()) != 2)
      throw std::invalid_argument("cut: cycle does not pass the vertex twice");
    int va = t.add_vertex();  // A-side copy of v
    int vb = t.add_vertex();  // B-side copy
    int cyc_a = where.cycle_a >= 0 ? where.cycle_a : cyc_at[0];
    if (cyc_a != cyc_at[0] && cyc_a != cyc_at[1])
      throw std::invalid_argument("cut: cycle_a is not a cycle edge at the vertex");
    auto reattach = [&](int ei, int end, int nv) {
      if (end == 0)
        t.edges[ei].v = nv;
      else
        t.edges[ei].w = nv;
    };
    if (cyc_at[0] == cyc_at[1]) {
      // loop at v
      reattach(cyc_at[0], 0, va);
      reattach(cyc_at[0], 1, vb);
    } else {
      for (int k = 0; k < 2; ++k) {
        int ei = cyc_at[k];
        int nv = (ei == cyc_a) ? va : vb;
        if (t.edges[ei].v == v) reattach(ei, 0, nv);
        else reattach(ei, 1, nv);
      }
    }
    // assign the remaining incident edges
    for (int ei = 0; ei < int(t.edges.size()); ++ei) {
      if (ei == cyc_at[0] || ei == cyc_at[1]) continue;
      bool to_a = std::find(where.a_side.begin(), where.a_side.end(), ei) !=
                  where.a_side.end();
      int nv = to_a ? va : vb;
      if (t.edges[ei].v == v) t.edges[ei].v = nv;
      if (t.edges[ei].w == v) t.edges[ei].w = nv;
    }
    t.add_leaf(va, m + 1);
    t.add_leaf(vb, m + 2);
    // the old vertex v is now isolated; relabel the last vertex onto it to
    // keep vertex ids dense
    // (simply leave it; distance code only visits reachable vertices, but
    //  connectivity checks need density, so compact:)
    // compact by swapping v with the last vertex if v became isolated
    bool isolated = true;
    for (auto& e : t.edges)
      if (e.v == v || e.w == v) isolated = false;
    if (isolated) {
      int last = t.nverts - 1;
      if (v != last) {
        for (auto& e : t.edges) {
          if (e.v == last) e.v = v;
          if (e.w == last) e.w = v;
        }
      }
      --t.nverts;
    }
  }
  out.tree = std::move(t);
  return out;
}

AbstractCurve reglue(const CutCurve& cc) {
  int m = cc.n_marks_original;
  AbstractCurve c = cc.tree;
  int ea = c.leaf_edge(m + 1);
  int eb = c.leaf_edge(m + 2);
  int va = c.edges[ea].v, vb = c.edges[eb].v;
  std::vector<int> rm{ea, eb};
  std::sort(rm.begin(), rm.end());
  c.edges.erase(c.edges.begin() + rm[1]);
  c.edges.erase(c.edges.begin() + rm[0]);
  // identify va and vb
  if (va != vb) {
    for (auto& e : c.edges) {
      if (e.v == vb) e.v = va;
      if (e.w == vb) e.w = va;
    }
    int last = c.nverts - 1;
    if (vb != last)
      for (auto& e : c.edges) {
        if (e.v == last) e.v = vb;
        if (e.w == last) e.w = vb;
      }
    --c.nverts;
  }
  // suppress 2-valent vertices created by cutting (merge their two bounded edges)
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < c.nverts && !changed; ++v) {
      std::vector<int> inc;
      for (int ei = 0; ei < int(c.edges.size()); ++ei) {
        if (c.edges[ei].v == v && c.edges[ei].w == v) {
          inc.push_back(ei);
          inc.push_back(ei);
        } else if (c.edges[ei].v == v || c.edges[ei].w == v) {
          inc.push_back(ei);
        }
      }
      if (inc.size() != 2) continue;
      if (inc[0] == inc[1]) continue;  // a loop vertex of valence 2: keep (degenerate)
      int e1 = inc[0], e2 = inc[1];
      if (c.edges[e1].w < 0 || c.edges[e2].w < 0) continue;  // leaf stub; keep
      int o1 = c.edges[e1].v == v ? c.edges[e1].w : c.edges[e1].v;
      int o2 = c.edges[e2].v == v ? c.edges[e2].w : c.edges[e2].v;
      Rat len = c.edges[e1].length + c.edges[e2].length;
      c.edges[e1] = {o1, o2, len, 0};
      c.edges.erase(c.edges.begin() + e2);
      // drop vertex v
      int last = c.nverts - 1;
      for (auto& e : c.edges) {
        if (e.v == v) e.v = -2;
        if (e.w == v) e.w = -2;
      }
      if (v != last)
        for (auto& e : c.edges) {
          if (e.v == last) e.v = v;
          if (e.w == last) e.w = v;
        }
      --c.nverts;
      changed = true;
    }
  }
  return c;
}

CutCurve canonical_cut(const AbstractCurve& c) {
  auto cyc = cycle_edges(c);
  int e = *std::min_element(cyc.begin(), cyc.end());
  CutSpec spec;
  spec.edge = e;
  spec.offset = c.edges[e].length / 2;
  return cut(c, spec);
}

}  // namespace tropic
