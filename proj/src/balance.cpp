#include "tropic/balance.hpp"

#include <stdexcept>

namespace tropic {

namespace {

// A functional vanishing on tau's span and positive at the point x.
RatVec side_functional(const PolyInfo& tau_info, const RatVec& x, int ambient) {
  for (auto& f : cokernel_forms(tau_info.span, ambient)) {
    Rat v = 0;
    for (int i = 0; i < ambient; ++i)
      if (f[i] != 0) v += Rat(f[i]) * x[i];
    if (v > 0) return to_rat(f);
    if (v < 0) {
      RatVec g(ambient);
      for (int i = 0; i < ambient; ++i) g[i] = -Rat(f[i]);
      return g;
    }
  }
  throw std::runtime_error("side_functional: point lies in the span of tau");
}

}  // namespace

IntVec lattice_normal_vector_unchecked(const Poly& sigma, const PolyInfo& sig_info,
                                       const Poly& tau, const PolyInfo& tau_info,
                                       const Sublattice& lambda) {
  (void)sigma;
  (void)tau;
  Sublattice lat_sigma = span_lattice(sig_info.span, lambda);
  Sublattice lat_tau = span_lattice(tau_info.span, lambda);
  RatVec side = side_functional(tau_info, sig_info.relint, int(sig_info.relint.size()));
  IntVec u = quotient_generator(lat_sigma, lat_tau, side);
  return reduce_coset(u, lat_tau);
}

IntVec lattice_normal_vector(const Poly& sigma, const Poly& tau,
                             const Sublattice& lambda) {
  PolyInfo si = analyze(sigma), ti = analyze(tau);
  if (si.empty || ti.empty)
    throw std::invalid_argument("lattice_normal_vector: empty input");
  if (ti.dim != si.dim - 1)
    throw std::invalid_argument("lattice_normal_vector: dimension gap is not 1");
  if (!is_face_of(tau, sigma))
    throw std::invalid_argument("lattice_normal_vector: tau is not a face of sigma");
  return lattice_normal_vector_unchecked(sigma, si, tau, ti, lambda);
}

IntVec lattice_normal_vector(const Poly& sigma, const Poly& tau) {
  return lattice_normal_vector(sigma, tau, Sublattice::standard(sigma.ambient));
}

BalanceRow check_local_balancing(const Poly& tau,
                                 const std::vector<std::pair<Poly, Rat>>& star,
                                 const Sublattice& lambda) {
  BalanceRow row;
  PolyInfo ti = analyze(tau);
  RatVec sum(tau.ambient, Rat(0));
  for (auto& [sigma, w] : star) {
    PolyInfo si = analyze(sigma);
    BalanceEntry e;
    e.weight = w;
    e.normal = lattice_normal_vector_unchecked(sigma, si, tau, ti, lambda);
    for (int i = 0; i < tau.ambient; ++i) sum[i] += w * Rat(e.normal[i]);
    row.entries.push_back(std::move(e));
  }
  row.weighted_sum = sum;
  row.balanced = in_span(ti.span, sum).has_value();
  return row;
}

BalanceReport check_fan_balancing(const WeightedComplex& X,
                                  const StarOverride* override_stars) {
  BalanceReport rep;
  Sublattice lambda = X.ambient_lattice();
  if (override_stars) {
    for (auto& [ti, star] : override_stars->stars) {
      BalanceRow row = check_local_balancing(X.cells[ti], star, lambda);
      row.tau = ti;
      rep.rows.push_back(std::move(row));
    }
    return rep;
  }
  std::vector<PolyInfo> info(X.cells.size());
  for (int i = 0; i < int(X.cells.size()); ++i) info[i] = analyze(X.cells[i]);
  for (int t = 0; t < int(X.cells.size()); ++t) {
    if (info[t].dim != X.dim - 1) continue;
    std::vector<std::pair<Poly, Rat>> star;
    std::vector<int> facet_ids;
    for (int s = 0; s < int(X.cells.size()); ++s) {
      if (info[s].dim != X.dim) continue;
      if (!is_face_of(X.cells[t], X.cells[s])) continue;
      star.push_back({X.cells[s], X.weight_of(s)});
      facet_ids.push_back(s);
    }
    BalanceRow row = check_local_balancing(X.cells[t], star, lambda);
    row.tau = t;
    for (int k = 0; k < int(row.entries.size()); ++k) row.entries[k].facet = facet_ids[k];
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace tropic
