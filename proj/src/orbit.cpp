#include "tropic/orbit.hpp"

#include <map>

namespace tropic {

Rat class_weight(const Poly& facet, const Rat& weight, const GroupAction& action) {
  return weight / Rat(stabilizer_order(facet, action));
}

std::vector<StarCone> local_star(const OrbitSpace& S, int tau_index) {
  const Poly& tau = S.complex.cells[tau_index];
  std::vector<StarCone> star;
  if (S.stars) {
    auto it = S.stars->stars.find(tau_index);
    if (it != S.stars->stars.end()) {
      for (auto& [cone, w] : it->second) {
        StarCone sc;
        sc.cone = cone;
        sc.weight = w;
        sc.element = AffineMap::identity(S.complex.ambient);
        star.push_back(std::move(sc));
      }
      return star;
    }
  }
  int bound = S.action.effective_bound();
  WordEnum we = enumerate_words(S.action, bound);
  PolyInfo tau_info = analyze(tau);
  std::vector<int> facet_reps;
  for (int i = 0; i < int(S.complex.cells.size()); ++i)
    if (analyze(S.complex.cells[i]).dim == S.complex.dim) facet_reps.push_back(i);
  for (size_t e = 0; e < we.elements.size(); ++e) {
    for (int rep : facet_reps) {
      Poly cone = we.elements[e].apply(S.complex.cells[rep]);
      if (!contains_point(cone, tau_info.relint)) continue;  // cheap pre-test
      if (!is_face_of(tau, cone)) continue;
      bool dup = false;
      for (auto& sc : star)
        if (set_equal(sc.cone, cone)) {
          dup = true;
          break;
        }
      if (dup) continue;
      if (!we.closed && we.length[e] == bound)
        throw bound_too_small("adjacent facet first found at the word bound; raise word_bound");
      StarCone sc;
      sc.cone = std::move(cone);
      sc.weight = S.complex.weight_of(rep);
      sc.rep = rep;
      sc.element = we.elements[e];
      star.push_back(std::move(sc));
    }
  }
  return star;
}

namespace {

// G_tau-orbit partition of the star cones.
std::vector<int> star_orbits(const std::vector<StarCone>& star,
                             const std::vector<AffineMap>& g_tau) {
  int n = int(star.size());
  std::vector<int> orbit(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (orbit[i] >= 0) continue;
    orbit[i] = next;
    for (auto& g : g_tau) {
      Poly img = g.apply(star[i].cone);
      for (int j = 0; j < n; ++j)
        if (orbit[j] < 0 && set_equal(img, star[j].cone)) orbit[j] = next;
    }
    // saturate (orbits under the generated subgroup; g_tau is a full list)
    bool changed = true;
    while (changed) {
      changed = false;
      for (int j = 0; j < n; ++j) {
        if (orbit[j] != next) continue;
        for (auto& g : g_tau) {
          Poly img = g.apply(star[j].cone);
          for (int k = 0; k < n; ++k)
            if (orbit[k] < 0 && set_equal(img, star[k].cone)) {
              orbit[k] = next;
              changed = true;
            }
        }
      }
    }
    ++next;
  }
  return orbit;
}

}  // namespace

LambdaCertificate check_tropical_orbit_space(const OrbitSpace& S) {
  LambdaCertificate cert;
  Sublattice lambda_lat = S.complex.ambient_lattice();
  for (int t = 0; t < int(S.complex.cells.size()); ++t) {
    PolyInfo ti = analyze(S.complex.cells[t]);
    if (ti.dim != S.complex.dim - 1) continue;
    LambdaRow row;
    row.tau = t;
    auto star = local_star(S, t);
    auto g_tau = stabilizer(S.complex.cells[t], S.action);
    row.stabilizer_order = int(g_tau.size());
    auto orbits = star_orbits(star, g_tau);
    int norbits = 0;
    for (int o : orbits) norbits = std::max(norbits, o + 1);
    std::vector<int> orbit_size(norbits, 0);
    for (int o : orbits) ++orbit_size[o];

    // normals + fan path
    std::vector<std::pair<Poly, Rat>> plain;
    for (auto& sc : star) plain.push_back({sc.cone, sc.weight});
    BalanceRow fan = check_local_balancing(S.complex.cells[t], plain, lambda_lat);
    row.fan_ok = fan.balanced;
    if (!fan.balanced) row.defect = fan.weighted_sum;

    int n = int(star.size());
    // stabilizer orders are class invariants: compute once per representative
    std::map<int, int> stab_by_rep;
    RatVec cw(n);
    for (int i = 0; i < n; ++i) {
      int so;
      if (star[i].rep >= 0) {
        auto it = stab_by_rep.find(star[i].rep);
        if (it == stab_by_rep.end()) {
          so = stabilizer_order(S.complex.cells[star[i].rep], S.action);
          stab_by_rep[star[i].rep] = so;
        } else {
          so = it->second;
        }
      } else {
        so = stabilizer_order(star[i].cone, S.action);
      }
      cw[i] = star[i].weight / Rat(so);
    }

    // λ path: try the uniform choice λ = 1/|X_{σ/τ}| first
    RatVec lam(n);
    for (int i = 0; i < n; ++i) lam[i] = Rat(1) / Rat(orbit_size[orbits[i]]);
    auto weighted_sum = [&](const RatVec& l) {
      RatVec s(S.complex.ambient, Rat(0));
      for (int i = 0; i < n; ++i)
        for (int c = 0; c < S.complex.ambient; ++c)
          s[c] += l[i] * cw[i] * Rat(fan.entries[i].normal[c]);
      return s;
    };
    bool lambda_ok = in_span(ti.span, weighted_sum(lam)).has_value();
    if (!lambda_ok) {
      // exact LP feasibility: λ_i >= 0, per-orbit sums = 1,
      // Σ λ_i [ω]_i u_i - Σ_j μ_j span_j = 0
      int vt = int(ti.span.size());
      LinProblem p;
      p.nvars = n + vt;
      for (int i = 0; i < n; ++i) {
        RatVec r(p.nvars, Rat(0));
        r[i] = 1;
        p.add_ge(r, Rat(0));
      }
      for (int o = 0; o < norbits; ++o) {
        RatVec r(p.nvars, Rat(0));
        for (int i = 0; i < n; ++i)
          if (orbits[i] == o) r[i] = 1;
        p.add_eq(r, Rat(1));
      }
      for (int c = 0; c < S.complex.ambient; ++c) {
        RatVec r(p.nvars, Rat(0));
        for (int i = 0; i < n; ++i) r[i] = cw[i] * Rat(fan.entries[i].normal[c]);
        for (int j = 0; j < vt; ++j) r[n + j] = -ti.span[j][c];
        p.add_eq(r, Rat(0));
      }
      LpResult res = lp_solve(p);
      if (res.status == LpStatus::Optimal) {
        lambda_ok = true;
        for (int i = 0; i < n; ++i) lam[i] = res.x[i];
      }
    }
    row.lambda_ok = lambda_ok;

    if (row.lambda_ok != row.fan_ok)
      throw std::logic_error(
          "balancing paths disagree: λ-feasibility vs underlying-complex check");

    for (int i = 0; i < n; ++i) {
      LambdaEntry e;
      e.facet = star[i].cone;
      e.rep = star[i].rep;
      e.weight = star[i].weight;
      e.class_weight = cw[i];
      e.lambda = lambda_ok ? lam[i] : Rat(0);
      e.coefficient = e.lambda * e.class_weight;
      e.orbit = orbits[i];
      e.normal = fan.entries[i].normal;
      row.entries.push_back(std::move(e));
    }
    cert.rows.push_back(std::move(row));
  }
  return cert;
}

WeightedComplex materialize(const OrbitSpace& S) {
  WordEnum we = enumerate_words(S.action, S.action.effective_bound());
  if (!we.closed)
    throw std::invalid_argument("materialize: group did not close within the word bound");
  WeightedComplex X;
  X.ambient = S.complex.ambient;
  X.dim = S.complex.dim;
  X.lattice = S.complex.lattice;
  for (int rep = 0; rep < int(S.complex.cells.size()); ++rep) {
    for (auto& g : we.elements) {
      Poly cone = g.apply(S.complex.cells[rep]);
      bool dup = false;
      for (auto& c : X.cells)
        if (set_equal(c, cone)) {
          dup = true;
          break;
        }
      if (dup) continue;
      int idx = int(X.cells.size());
      X.cells.push_back(std::move(cone));
      if (S.complex.weights.count(rep)) X.weights[idx] = S.complex.weights.at(rep);
    }
  }
  return X;
}

std::pair<bool, bool> check_equivalence_finite(const OrbitSpace& S) {
  for (auto& c : S.complex.cells)
    if (!c.closed())
      throw std::invalid_argument("check_equivalence_finite: cones must be closed");
  WeightedComplex X = materialize(S);  // throws if the group is not finite
  bool fan_balanced = check_fan_balancing(X).balanced();
  bool orbit_balanced = check_tropical_orbit_space(S).ok();
  return {fan_balanced, orbit_balanced};
}

std::optional<std::pair<AffineMap, int>> class_of(const OrbitSpace& S, const Poly& cell) {
  WordEnum we = enumerate_words(S.action, S.action.effective_bound());
  for (auto& g : we.elements)
    for (int rep = 0; rep < int(S.complex.cells.size()); ++rep)
      if (set_equal(g.apply(S.complex.cells[rep]), cell))
        return std::make_pair(g, rep);
  return std::nullopt;
}

}  // namespace tropic
