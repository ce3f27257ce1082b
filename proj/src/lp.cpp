#include "tropic/lp.hpp"

namespace tropic {

void LinProblem::add_eq(const RatVec& row, const Rat& rhs) {
  assert(int(row.size()) == nvars);
  if (A_eq.cols == 0) A_eq = RatMat(0, nvars);
  A_eq = vstack(A_eq, from_rows<Rat>({row}, nvars));
  b_eq.push_back(rhs);
}

void LinProblem::add_ge(const RatVec& row, const Rat& rhs) {
  assert(int(row.size()) == nvars);
  if (A_ge.cols == 0) A_ge = RatMat(0, nvars);
  A_ge = vstack(A_ge, from_rows<Rat>({row}, nvars));
  b_ge.push_back(rhs);
}

namespace {

// Dense tableau simplex over Q with Bland's rule.
// Rows: constraints (A x = b with b >= 0, x >= 0). basis[i] = basic var of row i.
struct Tableau {
  int m, n;             // constraints, variables
  RatMat T;             // m x (n+1), last col = rhs
  RatVec cost;          // size n, reduced against basis
  Rat cost_rhs = 0;     // objective value (negated convention below)
  std::vector<int> basis;

  void pivot(int r, int c) {
    Rat inv = Rat(1) / T(r, c);
    for (int j = 0; j <= n; ++j) T(r, j) *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || T(i, c) == 0) continue;
      Rat f = T(i, c);
      for (int j = 0; j <= n; ++j) T(i, j) -= f * T(r, j);
    }
    if (cost[c] != 0) {
      Rat f = cost[c];
      for (int j = 0; j < n; ++j) cost[j] -= f * T(r, j);
      cost_rhs += f * T(r, n);
    }
    basis[r] = c;
  }

  // maximize: returns false if unbounded
  bool run(const std::vector<bool>& allowed) {
    while (true) {
      int c = -1;
      for (int j = 0; j < n; ++j)  // Bland: first improving column
        if (allowed[j] && cost[j] > 0) {
          c = j;
          break;
        }
      if (c < 0) return true;
      int r = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (T(i, c) <= 0) continue;
        Rat ratio = T(i, n) / T(i, c);
        if (r < 0 || ratio < best || (ratio == best && basis[i] < basis[r])) {
          best = ratio;
          r = i;
        }
      }
      if (r < 0) return false;
      pivot(r, c);
    }
  }
};

}  // namespace

LpResult lp_solve(const LinProblem& p) {
  // Variables: x = u - w with u, w >= 0 (2*nvars), slack per ge row.
  int nf = p.nvars;
  int n_ge = p.A_ge.rows, n_eq = p.A_eq.rows;
  int m = n_ge + n_eq;
  int n = 2 * nf + n_ge + m;  // + artificials (one per row)
  Tableau tb;
  tb.m = m;
  tb.n = n;
  tb.T = RatMat(m, n + 1);
  tb.basis.assign(m, -1);

  auto fill_row = [&](int r, const RatVec& coef, const Rat& rhs, int slack_idx) {
    for (int j = 0; j < nf; ++j) {
      tb.T(r, j) = coef[j];
      tb.T(r, nf + j) = -coef[j];
    }
    if (slack_idx >= 0) tb.T(r, 2 * nf + slack_idx) = -1;  // A x - s = b
    tb.T(r, n) = rhs;
  };
  for (int i = 0; i < n_ge; ++i) fill_row(i, p.A_ge.row(i), p.b_ge[i], i);
  for (int i = 0; i < n_eq; ++i) fill_row(n_ge + i, p.A_eq.row(i), p.b_eq[i], -1);

  // make rhs nonnegative, add artificial basis
  for (int i = 0; i < m; ++i) {
    if (tb.T(i, n) < 0)
      for (int j = 0; j <= n; ++j) tb.T(i, j) = -tb.T(i, j);
    int art = 2 * nf + n_ge + i;
    tb.T(i, art) = 1;
    tb.basis[i] = art;
  }

  // Phase 1: maximize -(sum of artificials); z expressed in nonbasic vars
  tb.cost.assign(n, Rat(0));
  tb.cost_rhs = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) tb.cost[j] += tb.T(i, j);
    tb.cost_rhs -= tb.T(i, n);
  }
  for (int i = 0; i < m; ++i) tb.cost[2 * nf + n_ge + i] = 0;  // reduced vs basis
  std::vector<bool> allowed(n, true);
  tb.run(allowed);
  if (tb.cost_rhs != 0) return {LpStatus::Infeasible, 0, {}};
  // drive artificials out of the basis where possible
  for (int i = 0; i < m; ++i) {
    if (tb.basis[i] < 2 * nf + n_ge) continue;
    int c = -1;
    for (int j = 0; j < 2 * nf + n_ge; ++j)
      if (tb.T(i, j) != 0) {
        c = j;
        break;
      }
    if (c >= 0) tb.pivot(i, c);
    // else: redundant row, leave the artificial at value 0
  }
  for (int j = 2 * nf + n_ge; j < n; ++j) allowed[j] = false;

  // Phase 2
  tb.cost.assign(n, Rat(0));
  tb.cost_rhs = 0;
  if (!p.obj.empty()) {
    for (int j = 0; j < nf; ++j) {
      tb.cost[j] = p.obj[j];
      tb.cost[nf + j] = -p.obj[j];
    }
    // reduce against current basis
    for (int i = 0; i < m; ++i) {
      int b = tb.basis[i];
      if (tb.cost[b] == 0) continue;
      Rat f = tb.cost[b];
      for (int j = 0; j < n; ++j) tb.cost[j] -= f * tb.T(i, j);
      tb.cost_rhs += f * tb.T(i, n);
    }
    if (!tb.run(allowed)) return {LpStatus::Unbounded, 0, {}};
  }

  RatVec x(nf, Rat(0));
  for (int i = 0; i < m; ++i) {
    int b = tb.basis[i];
    if (b < nf)
      x[b] += tb.T(i, n);
    else if (b < 2 * nf)
      x[b - nf] -= tb.T(i, n);
  }
  Rat val = 0;
  for (int j = 0; j < nf && j < int(p.obj.size()); ++j) val += p.obj[j] * x[j];
  return {LpStatus::Optimal, val, x};
}

std::optional<RatVec> strict_feasible_point(const StrictSystem& s) {
  // max t, t <= 1, strict rows become  row . x - t >= rhs;  feasible with
  // t > 0 iff the strict system has a solution.
  LinProblem p;
  p.nvars = s.nvars + 1;
  int tv = s.nvars;
  for (int i = 0; i < s.A_eq.rows; ++i) {
    RatVec r = s.A_eq.row(i);
    r.push_back(0);
    p.add_eq(r, s.b_eq[i]);
  }
  for (int i = 0; i < s.A_ge.rows; ++i) {
    RatVec r = s.A_ge.row(i);
    r.push_back(0);
    p.add_ge(r, s.b_ge[i]);
  }
  for (int i = 0; i < s.A_gt.rows; ++i) {
    RatVec r = s.A_gt.row(i);
    r.push_back(-1);
    p.add_ge(r, s.b_gt[i]);
  }
  RatVec cap(p.nvars, Rat(0));
  cap[tv] = -1;
  p.add_ge(cap, Rat(-1));  // t <= 1
  p.obj.assign(p.nvars, Rat(0));
  p.obj[tv] = 1;
  LpResult r = lp_solve(p);
  if (r.status != LpStatus::Optimal || r.value <= 0) return std::nullopt;
  RatVec x(r.x.begin(), r.x.begin() + s.nvars);
  return x;
}

}  // namespace tropic
