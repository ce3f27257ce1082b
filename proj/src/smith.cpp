#include "tropic/smith.hpp"

#include <stdexcept>

namespace tropic {

namespace {

// Locate the nonzero entry of smallest absolute value in M[s:, s:].
bool find_min_entry(const IntMat& M, int s, int& bi, int& bj) {
  bool found = false;
  Int best = 0;
  for (int i = s; i < M.rows; ++i)
    for (int j = s; j < M.cols; ++j) {
      if (M(i, j) == 0) continue;
      Int a = abs(M(i, j));
      if (!found || a < best) {
        best = a;
        bi = i;
        bj = j;
        found = true;
      }
    }
  return found;
}

void swap_rows(IntMat& M, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < M.cols; ++j) std::swap(M(a, j), M(b, j));
}
void swap_cols(IntMat& M, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < M.rows; ++i) std::swap(M(i, a), M(i, b));
}
// row a -= q * row b
void row_axpy(IntMat& M, int a, int b, const Int& q) {
  if (q == 0) return;
  for (int j = 0; j < M.cols; ++j) M(a, j) -= q * M(b, j);
}
void col_axpy(IntMat& M, int a, int b, const Int& q) {
  if (q == 0) return;
  for (int i = 0; i < M.rows; ++i) M(i, a) -= q * M(i, b);
}

}  // namespace

SmithForm smith_form(const IntMat& M) {
  SmithForm s;
  s.D = M;
  s.U = IntMat::identity(M.rows);
  s.V = IntMat::identity(M.cols);
  IntMat& D = s.D;
  int n = std::min(M.rows, M.cols);
  for (int k = 0; k < n; ++k) {
    int bi, bj;
    if (!find_min_entry(D, k, bi, bj)) break;
    swap_rows(D, k, bi);
    swap_rows(s.U, k, bi);
    swap_cols(D, k, bj);
    swap_cols(s.V, k, bj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = k + 1; i < D.rows; ++i) {
        if (D(i, k) == 0) continue;
        Int q = floor_div(D(i, k), D(k, k));
        row_axpy(D, i, k, q);
        row_axpy(s.U, i, k, q);
        if (D(i, k) != 0) {  // remainder smaller than pivot: swap up
          swap_rows(D, k, i);
          swap_rows(s.U, k, i);
          clean = false;
        }
      }
      for (int j = k + 1; j < D.cols; ++j) {
        if (D(k, j) == 0) continue;
        Int q = floor_div(D(k, j), D(k, k));
        col_axpy(D, j, k, q);
        col_axpy(s.V, j, k, q);
        if (D(k, j) != 0) {
          swap_cols(D, k, j);
          swap_cols(s.V, k, j);
          clean = false;
        }
      }
      if (clean) {
        // divisibility: pivot must divide the remaining block
        for (int i = k + 1; i < D.rows && clean; ++i)
          for (int j = k + 1; j < D.cols && clean; ++j)
            if (D(i, j) % D(k, k) != 0) {
              // add row i to row k, retry
              row_axpy(D, k, i, Int(-1));
              row_axpy(s.U, k, i, Int(-1));
              clean = false;
            }
      }
    }
    if (D(k, k) < 0) {
      for (int j = 0; j < D.cols; ++j) D(k, j) = -D(k, j);
      for (int j = 0; j < s.U.cols; ++j) s.U(k, j) = -s.U(k, j);
    }
  }
  return s;
}

HermiteForm hermite_col(const IntMat& M) {
  // Column echelon: process rows top-down, for each row clear all but one
  // column among the active columns using gcd column ops.
  HermiteForm h;
  h.H = M;
  h.V = IntMat::identity(M.cols);
  IntMat& H = h.H;
  int lead = 0;  // next column to place a pivot in
  for (int row = 0; row < M.rows && lead < M.cols; ++row) {
    // find a column >= lead with nonzero entry in this row, minimize |entry|
    while (true) {
      int best = -1;
      Int bestAbs = 0;
      for (int j = lead; j < M.cols; ++j) {
        if (H(row, j) == 0) continue;
        Int a = abs(H(row, j));
        if (best < 0 || a < bestAbs) {
          best = j;
          bestAbs = a;
        }
      }
      if (best < 0) break;  // row has no pivot among active cols
      swap_cols(H, lead, best);
      swap_cols(h.V, lead, best);
      bool again = false;
      for (int j = lead + 1; j < M.cols; ++j) {
        if (H(row, j) == 0) continue;
        Int q = floor_div(H(row, j), H(row, lead));
        col_axpy(H, j, lead, q);
        col_axpy(h.V, j, lead, q);
        if (H(row, j) != 0) again = true;
      }
      if (!again) {
        if (H(row, lead) < 0) {
          for (int i = 0; i < M.rows; ++i) H(i, lead) = -H(i, lead);
          for (int i = 0; i < h.V.rows; ++i) h.V(i, lead) = -h.V(i, lead);
        }
        // reduce earlier columns against this pivot
        for (int j = 0; j < lead; ++j) {
          Int q = floor_div(H(row, j), H(row, lead));
          col_axpy(H, j, lead, q);
          col_axpy(h.V, j, lead, q);
        }
        ++lead;
        break;
      }
    }
  }
  return h;
}

std::vector<IntVec> int_kernel(const IntMat& M) {
  HermiteForm h = hermite_col(M);
  std::vector<IntVec> out;
  for (int j = 0; j < M.cols; ++j) {
    bool zero = true;
    for (int i = 0; i < M.rows; ++i)
      if (h.H(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) out.push_back(h.V.col(j));
  }
  return out;
}

Sublattice Sublattice::standard(int n) {
  Sublattice s;
  s.ambient = n;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, Int(0));
    e[i] = 1;
    s.basis.push_back(std::move(e));
  }
  return s;
}

Sublattice Sublattice::from_generators(int ambient, const std::vector<IntVec>& gens) {
  Sublattice s;
  s.ambient = ambient;
  if (gens.empty()) return s;
  IntMat M(ambient, int(gens.size()));
  for (int j = 0; j < int(gens.size()); ++j) {
    assert(int(gens[j].size()) == ambient);
    for (int i = 0; i < ambient; ++i) M(i, j) = gens[j][i];
  }
  HermiteForm h = hermite_col(M);
  for (int j = 0; j < h.H.cols; ++j) {
    IntVec c = h.H.col(j);
    if (!is_zero(c)) s.basis.push_back(std::move(c));
  }
  return s;
}

std::optional<IntVec> Sublattice::coords_of(const IntVec& v) const {
  assert(int(v.size()) == ambient);
  if (basis.empty()) {
    if (is_zero(v)) return IntVec{};
    return std::nullopt;
  }
  RatMat A(ambient, rank());
  for (int j = 0; j < rank(); ++j)
    for (int i = 0; i < ambient; ++i) A(i, j) = Rat(basis[j][i]);
  auto s = solve_affine(A, to_rat(v));
  if (!s) return std::nullopt;
  IntVec k(rank());
  for (int j = 0; j < rank(); ++j) {
    if (den(s->particular[j]) != 1) return std::nullopt;
    k[j] = num(s->particular[j]);
  }
  return k;
}

bool Sublattice::contains(const IntVec& v) const { return coords_of(v).has_value(); }

static std::optional<Rat> lattice_index_impl(const RatMat& f, const Sublattice& source,
                                             const Sublattice& target) {
  if (f.cols != source.ambient || f.rows != target.ambient)
    throw std::invalid_argument("lattice_index: dimension mismatch");
  if (source.rank() != target.rank()) return std::nullopt;
  int r = source.rank();
  if (r == 0) return Rat(1);
  // express f(source basis) in target basis coordinates
  RatMat T(target.ambient, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < target.ambient; ++i) T(i, j) = Rat(target.basis[j][i]);
  RatMat X(r, r);
  for (int j = 0; j < r; ++j) {
    RatVec img = mul(f, to_rat(source.basis[j]));
    auto sol = solve_affine(T, img);
    if (!sol) throw std::invalid_argument("lattice_index: image not in target span");
    for (int i = 0; i < r; ++i) X(i, j) = sol->particular[i];
  }
  Rat d = det(X);
  if (d == 0) return std::nullopt;
  return d < 0 ? -d : d;
}

std::optional<Rat> lattice_index(const RatMat& f, const Sublattice& source,
                                 const Sublattice& target) {
  return lattice_index_impl(f, source, target);
}
std::optional<Rat> lattice_index(const IntMat& f, const Sublattice& source,
                                 const Sublattice& target) {
  return lattice_index_impl(to_rat(f), source, target);
}

Sublattice span_lattice(const std::vector<RatVec>& span_vectors, const Sublattice& lambda) {
  // { B k : C B k = 0, k integer } where B = lambda basis, C = forms cutting
  // out the span. Integer kernel computation after clearing denominators.
  int m = lambda.ambient;
  auto forms = cokernel_forms(span_vectors, m);
  if (forms.empty()) return lambda;  // span is everything
  if (lambda.rank() == 0) return lambda;
  IntMat CB(int(forms.size()), lambda.rank());
  for (int i = 0; i < int(forms.size()); ++i)
    for (int j = 0; j < lambda.rank(); ++j) {
      Int s = 0;
      for (int t = 0; t < m; ++t) s += forms[i][t] * lambda.basis[j][t];
      CB(i, j) = s;
    }
  std::vector<IntVec> gens;
  for (auto& k : int_kernel(CB)) {
    IntVec v(m, Int(0));
    for (int j = 0; j < lambda.rank(); ++j)
      for (int t = 0; t < m; ++t) v[t] += k[j] * lambda.basis[j][t];
    gens.push_back(std::move(v));
  }
  return Sublattice::from_generators(m, gens);
}

IntVec quotient_generator(const Sublattice& lat_sigma, const Sublattice& lat_tau,
                          const RatVec& side_form) {
  if (lat_sigma.rank() != lat_tau.rank() + 1)
    throw std::invalid_argument("quotient_generator: rank gap is not 1");
  // Build the matrix of lat_sigma basis, quotient by lat_tau: use Smith on
  // coordinates of tau basis inside sigma basis.
  int r = lat_sigma.rank();
  RatMat S(lat_sigma.ambient, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < lat_sigma.ambient; ++i) S(i, j) = Rat(lat_sigma.basis[j][i]);
  IntMat Tc(r, lat_tau.rank());
  for (int j = 0; j < lat_tau.rank(); ++j) {
    auto sol = solve_affine(S, to_rat(lat_tau.basis[j]));
    assert(sol);
    for (int i = 0; i < r; ++i) {
      assert(den(sol->particular[i]) == 1);
      Tc(i, j) = num(sol->particular[i]);
    }
  }
  // Smith: U * Tc * V = D. The quotient Z^r / im(Tc) is generated by the
  // U^{-1} e_k for D_kk = 0 (here exactly one such k, and the nonzero D_kk
  // are 1 because lat_tau is saturated in lat_sigma).
  SmithForm sf = smith_form(Tc);
  int free_k = -1;
  for (int k = 0; k < r; ++k) {
    Int dk = (k < sf.D.cols) ? sf.D(k, k) : Int(0);
    if (dk == 0) {
      free_k = k;
      break;
    }
  }
  assert(free_k >= 0);
  // row free_k of U spans the functional; generator = solve U g = e_free
  // i.e. g = U^{-1} e_free. U unimodular integer.
  auto sol = solve_affine(to_rat(sf.U), to_rat([&] {
                            IntVec e(r, Int(0));
                            e[free_k] = 1;
                            return e;
                          }()));
  assert(sol);
  IntVec g_coords(r);
  for (int i = 0; i < r; ++i) {
    assert(den(sol->particular[i]) == 1);
    g_coords[i] = num(sol->particular[i]);
  }
  IntVec g(lat_sigma.ambient, Int(0));
  for (int j = 0; j < r; ++j)
    for (int t = 0; t < lat_sigma.ambient; ++t) g[t] += g_coords[j] * lat_sigma.basis[j][t];
  // orient to the sigma side
  Rat side = 0;
  for (int t = 0; t < lat_sigma.ambient; ++t) side += side_form[t] * Rat(g[t]);
  assert(side != 0);
  if (side < 0)
    for (auto& x : g) x = -x;
  return g;
}

IntVec reduce_coset(const IntVec& v, const Sublattice& mod) {
  if (mod.rank() == 0) return v;
  int n = mod.ambient;
  // Pivot reduction: mod.basis is column-Hermite; find pivot row of each
  // basis vector (first nonzero entry) and reduce v there.
  IntVec w = v;
  std::vector<int> pivot_row(mod.rank());
  for (int j = 0; j < mod.rank(); ++j) {
    int p = 0;
    while (p < n && mod.basis[j][p] == 0) ++p;
    pivot_row[j] = p;
  }
  for (int j = 0; j < mod.rank(); ++j) {
    int p = pivot_row[j];
    if (p >= n) continue;
    Int q = floor_div(w[p], mod.basis[j][p]);
    if (q != 0)
      for (int t = 0; t < n; ++t) w[t] -= q * mod.basis[j][t];
  }
  // Bounded search for the lexicographically smallest all-nonnegative
  // residue around the pivot reduction. Window +-B per basis vector.
  const int B = 4;
  std::optional<IntVec> best;
  std::vector<int> k(mod.rank(), -B);
  while (true) {
    IntVec cand = w;
    for (int j = 0; j < mod.rank(); ++j)
      if (k[j] != 0)
        for (int t = 0; t < n; ++t) cand[t] += Int(k[j]) * mod.basis[j][t];
    bool nonneg = true;
    for (auto& x : cand)
      if (x < 0) {
        nonneg = false;
        break;
      }
    if (nonneg && (!best || cand < *best)) best = cand;
    int j = 0;
    while (j < mod.rank() && k[j] == B) k[j++] = -B;
    if (j == mod.rank()) break;
    ++k[j];
  }
  return best ? *best : w;
}

}  // namespace tropic
