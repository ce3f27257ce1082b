#pragma once
// Abstract n-marked tropical curves: connected metric (multi)graphs with
// marked unbounded ends, genus = first Betti number. Genus-1 curves carry a
// unique simple cycle; cutting a cycle point yields a marked tree with two
// extra ends A and B.

#include <optional>
#include <string>
#include <vector>

#include "tropic/vecmat.hpp"

namespace tropic {

struct CurveEdge {
  int v = -1, w = -1;  // endpoints; w = -1 for unbounded (leaf) edges
  Rat length;          // bounded edges; leaf edges have length infinity
  int mark = 0;        // leaf label 1..m for unbounded edges, 0 otherwise
};

struct AbstractCurve {
  int nverts = 0;
  std::vector<CurveEdge> edges;

  int add_vertex() { return nverts++; }
  void add_leaf(int v, int mark) { edges.push_back({v, -1, Rat(0), mark}); }
  void add_bounded(int v, int w, const Rat& len) { edges.push_back({v, w, len, 0}); }

  bool bounded(int e) const { return edges[e].w >= 0; }
  int valence(int v) const;
  int nmarks() const;
  int leaf_edge(int mark) const;    // edge index carrying the mark
  int leaf_vertex(int mark) const;  // vertex adjacent to the mark
};

struct CurveCheck {
  bool connected = false;
  int genus = -1;
  bool valences_ok = false;  // all >= 3
  bool marks_ok = false;     // marks 1..m each exactly once
  bool lengths_ok = false;   // bounded lengths > 0
  bool ok() const { return connected && valences_ok && marks_ok && lengths_ok; }
};

CurveCheck check_curve(const AbstractCurve& c);

// Edge indices of the unique simple cycle; requires genus 1.
std::vector<int> cycle_edges(const AbstractCurve& c);

// Sum of the cycle edge lengths; requires genus 1.
Rat j_invariant(const AbstractCurve& c);

// Pairwise distances between the leaf vertices of marks 1..m (trees only),
// indexed by pairs {i,j}, i < j, in lexicographic order.
RatVec leaf_distances(const AbstractCurve& tree);

int pair_index(int i, int j, int m);  // 1-based labels, lex order
int pair_count(int m);

// --- cutting -------------------------------------------------------------

struct CutSpec {
  // Either a point on a cycle edge...
  int edge = -1;
  Rat offset;  // distance from edges[edge].v along the edge, in (0, length)
  // ...or a cycle vertex with a side assignment.
  int vertex = -1;
  // For a vertex cut: non-cycle incident items assigned to the A side.
  // Entries are edge indices (leaf edges included); the two cycle edges at
  // the vertex split as: cycle_a goes to the A side, the other to B.
  std::vector<int> a_side;
  int cycle_a = -1;
};

struct CutCurve {
  AbstractCurve tree;  // (m+2)-marked genus-0 curve; A = m+1, B = m+2
  int n_marks_original = 0;
};

// Cut a genus-1 curve along a point of its cycle.
CutCurve cut(const AbstractCurve& c, const CutSpec& where);

// Re-glue A to B; inverse of cut up to isomorphism.
AbstractCurve reglue(const CutCurve& cc);

// Canonical cut: midpoint of the smallest-index cycle edge.
CutCurve canonical_cut(const AbstractCurve& c);

// --- combinatorial types ---------------------------------------------------

// Canonical form of the combinatorial type (lengths forgotten, marks kept,
// cycle edges flagged). Deterministic across isomorphic presentations.
// The optional payload gives per-edge extra data entering the code (such as
// direction vectors in the parameterized theory): per edge, the payload seen
// from the v-end and from the w-end.
std::string canonical_type(
    const AbstractCurve& c,
    const std::vector<std::pair<std::string, std::string>>* edge_payload = nullptr);

}  // namespace tropic
