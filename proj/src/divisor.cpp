#include "tropic/divisor.hpp"

namespace tropic {

namespace {

// φ on a translate g(rep): x ↦ φ_rep(g^{-1} x); linear part composed.
RatVec translated_linear(const RationalFn& fn, int rep, const AffineMap& g) {
  int n = int(fn.linear[rep].size());
  RatVec out(n, Rat(0));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (fn.linear[rep][k] != 0) out[j] += fn.linear[rep][k] * g.A_inv(k, j);
  return out;
}

}  // namespace

FnReport validate_rational_fn(const RationalFn& fn, const OrbitSpace& S) {
  FnReport rep;
  int ncells = int(S.complex.cells.size());
  if (int(fn.linear.size()) != ncells || int(fn.offset.size()) != ncells) {
    rep.problems.push_back("piece count does not match cell count");
    return rep;
  }
  std::vector<PolyInfo> info(ncells);
  for (int i = 0; i < ncells; ++i) info[i] = analyze(S.complex.cells[i]);
  // continuity across shared faces of representatives
  for (int i = 0; i < ncells; ++i)
    for (int j = i + 1; j < ncells; ++j) {
      Poly cap = intersect(S.complex.cells[i], S.complex.cells[j]);
      if (is_empty(cap)) continue;
      PolyInfo ci = analyze(cap);
      Rat vi = fn.value_on(i, ci.relint), vj = fn.value_on(j, ci.relint);
      if (vi != vj) {
        rep.problems.push_back("discontinuous across cells " + std::to_string(i) + "," +
                               std::to_string(j));
        continue;
      }
      for (auto& d : ci.span) {
        Rat si = 0, sj = 0;
        for (size_t c = 0; c < d.size(); ++c) {
          si += fn.linear[i][c] * d[c];
          sj += fn.linear[j][c] * d[c];
        }
        if (si != sj)
          rep.problems.push_back("linear parts disagree on shared face of " +
                                 std::to_string(i) + "," + std::to_string(j));
      }
    }
  // invariance: φ(g x) = φ(x) for generators, checked on every rep pair where
  // g(cell_i) meets cell_j
  for (auto& g : S.action.generators) {
    for (int i = 0; i < ncells; ++i) {
      Poly gi = g.apply(S.complex.cells[i]);
      for (int j = 0; j < ncells; ++j) {
        Poly cap = intersect(gi, S.complex.cells[j]);
        if (is_empty(cap)) continue;
        PolyInfo ci = analyze(cap);
        // φ_j on the overlap must equal φ_i ∘ g^{-1}
        RatVec lin_i = translated_linear(fn, i, g);
        RatVec ginv_rel = g.inverse().apply(ci.relint);
        Rat vi = fn.value_on(i, ginv_rel);
        Rat vj = fn.value_on(j, ci.relint);
        if (vi != vj) {
          rep.problems.push_back("not invariant under generator (value) at cells " +
                                 std::to_string(i) + "," + std::to_string(j));
          continue;
        }
        for (auto& d : ci.span) {
          Rat si = 0, sj = 0;
          for (size_t c = 0; c < d.size(); ++c) {
            si += lin_i[c] * d[c];
            sj += fn.linear[j][c] * d[c];
          }
          if (si != sj)
            rep.problems.push_back("not invariant under generator (slope) at cells " +
                                   std::to_string(i) + "," + std::to_string(j));
        }
      }
    }
  }
  return rep;
}

DivisorResult divisor(const RationalFn& fn, const OrbitSpace& S,
                      const LambdaCertificate& cert) {
  DivisorResult out;
  out.skeleton.action = S.action;
  out.skeleton.complex.ambient = S.complex.ambient;
  out.skeleton.complex.dim = S.complex.dim - 1;
  out.skeleton.complex.lattice = S.complex.lattice;

  std::vector<PolyInfo> info(S.complex.cells.size());
  for (size_t i = 0; i < S.complex.cells.size(); ++i) info[i] = analyze(S.complex.cells[i]);

  std::map<int, int> rep_to_new;
  for (int i = 0; i < int(S.complex.cells.size()); ++i) {
    if (info[i].dim >= S.complex.dim) continue;
    rep_to_new[i] = int(out.skeleton.complex.cells.size());
    out.skeleton.complex.cells.push_back(S.complex.cells[i]);
  }

  for (auto& row : cert.rows) {
    const int t = row.tau;
    auto star = local_star(S, t);
    RatVec total(S.complex.ambient, Rat(0));
    Rat acc = 0;
    for (size_t k = 0; k < star.size(); ++k) {
      // match the certificate entry for this star cone
      const LambdaEntry* ent = nullptr;
      for (auto& e : row.entries)
        if (set_equal(e.facet, star[k].cone)) {
          ent = &e;
          break;
        }
      if (!ent) throw std::logic_error("divisor: star cone missing from certificate");
      RatVec lin = star[k].rep >= 0
                       ? translated_linear(fn, star[k].rep, star[k].element)
                       : RatVec();
      if (lin.empty()) throw std::invalid_argument("divisor: star cone without rep data");
      RatVec v(S.complex.ambient);
      for (int c = 0; c < S.complex.ambient; ++c)
        v[c] = ent->lambda * ent->weight * Rat(ent->normal[c]);
      Rat phi_v = 0;
      for (int c = 0; c < S.complex.ambient; ++c)
        if (lin[c] != 0) phi_v += lin[c] * v[c];
      acc += phi_v;
      for (int c = 0; c < S.complex.ambient; ++c) total[c] += v[c];
    }
    Rat phi_tau_total = 0;
    for (int c = 0; c < S.complex.ambient; ++c)
      if (fn.linear[t][c] != 0) phi_tau_total += fn.linear[t][c] * total[c];
    Rat w = acc - phi_tau_total;
    out.weight_by_rep[t] = w;
    int nt = rep_to_new.at(t);
    out.skeleton.complex.weights[nt] = w;
    if (w == 0) out.zero_weight.push_back(t);
  }
  return out;
}

}  // namespace tropic
