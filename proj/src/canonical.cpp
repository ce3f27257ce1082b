#include <algorithm>
#include <map>

#include "tropic/curve.hpp"

namespace tropic {

namespace {

struct TypeGraph {
  int n = 0;
  // per vertex: incident items as (payload string, other endpoint or -1)
  std::vector<std::vector<std::pair<std::string, int>>> inc;
};

// The code of the graph under a full vertex ordering.
std::string code_under(const TypeGraph& g, const std::vector<int>& order) {
  std::vector<int> pos(g.n);
  for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
  std::string out;
  for (int i = 0; i < g.n; ++i) {
    int v = order[i];
    std::vector<std::string> items;
    for (auto& [payload, o] : g.inc[v])
      items.push_back(payload + (o >= 0 ? "@" + std::to_string(pos[o]) : "@end"));
    std::sort(items.begin(), items.end());
    out += "[";
    for (auto& s : items) out += s + " ";
    out += "]";
  }
  return out;
}

void search_min(const TypeGraph& g, std::vector<std::string> color,
                std::string& best, bool& have_best) {
  // refine colors to a stable partition
  while (true) {
    std::vector<std::string> next(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::vector<std::string> around;
      for (auto& [payload, o] : g.inc[v])
        around.push_back(payload + "/" + (o >= 0 ? color[o] : "$"));
      std::sort(around.begin(), around.end());
      next[v] = color[v] + "|";
      for (auto& s : around) next[v] += s + ";";
    }
    // compress to ranks for stability comparison
    std::vector<std::string> sorted = next;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::string> ranked(g.n);
    for (int v = 0; v < g.n; ++v) {
      int r = int(std::lower_bound(sorted.begin(), sorted.end(), next[v]) - sorted.begin());
      ranked[v] = std::to_string(r);
    }
    if (ranked == color) break;
    color = std::move(ranked);
  }
  // count color classes
  std::map<std::string, std::vector<int>> classes;
  for (int v = 0; v < g.n; ++v) classes[color[v]].push_back(v);
  // discrete?
  bool discrete = true;
  for (auto& [c, vs] : classes)
    if (vs.size() > 1) discrete = false;
  if (discrete) {
    std::vector<int> order;
    for (auto& [c, vs] : classes) order.push_back(vs[0]);
    std::string code = code_under(g, order);
    if (!have_best || code < best) {
      best = code;
      have_best = true;
    }
    return;
  }
  // individualize in the first non-singleton class
  for (auto& [c, vs] : classes) {
    if (vs.size() == 1) continue;
    for (int v : vs) {
      auto col = color;
      col[v] = col[v] + "*";
      search_min(g, col, best, have_best);
    }
    return;
  }
}

}  // namespace

std::string canonical_type(
    const AbstractCurve& c,
    const std::vector<std::pair<std::string, std::string>>* edge_payload) {
  std::vector<int> cyc;
  if (check_curve(c).genus == 1) cyc = cycle_edges(c);
  std::vector<bool> on_cycle(c.edges.size(), false);
  for (int e : cyc) on_cycle[e] = true;

  TypeGraph g;
  g.n = c.nverts;
  g.inc.resize(g.n);
  for (int ei = 0; ei < int(c.edges.size()); ++ei) {
    auto& e = c.edges[ei];
    std::string payload;
    if (e.mark > 0)
      payload = "m" + std::to_string(e.mark);
    else
      payload = on_cycle[ei] ? "c" : "b";
    std::string pv = payload, pw = payload;
    if (edge_payload) {
      if (!(*edge_payload)[ei].first.empty()) pv += ":" + (*edge_payload)[ei].first;
      if (!(*edge_payload)[ei].second.empty()) pw += ":" + (*edge_payload)[ei].second;
    }
    if (e.w < 0) {
      g.inc[e.v].push_back({pv, -1});
    } else if (e.v == e.w) {
      // loop: two incidences at the same vertex, self-referencing
      g.inc[e.v].push_back({pv + "(loop)", e.v});
      g.inc[e.v].push_back({pw + "(loop)", e.v});
    } else {
      g.inc[e.v].push_back({pv, e.w});
      g.inc[e.w].push_back({pw, e.v});
    }
  }
  std::vector<std::string> color(g.n, "0");
  std::string best;
  bool have_best = false;
  search_min(g, color, best, have_best);
  return best;
}

}  // namespace tropic
