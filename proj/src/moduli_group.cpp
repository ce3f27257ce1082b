#include "tropic/moduli_group.hpp"

#include <map>
#include <mutex>

namespace tropic {

IntVec s_vector(int N) {
  int m = N + 2, A = N + 1, B = N + 2;
  IntVec s(pair_count(m), Int(0));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      bool hasA = (i == A || j == A), hasB = (i == B || j == B);
      if (hasA && !hasB) s[pair_index(i, j, m)] = 1;
      if (hasB && !hasA) s[pair_index(i, j, m)] = -1;
    }
  return s;
}

IntMat I_matrix(int N) {
  int m = N + 2, A = N + 1, B = N + 2;
  int C = pair_count(m);
  IntMat M(C, C);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      int row = pair_index(i, j, m);
      bool hasA = (i == A || j == A), hasB = (i == B || j == B);
      if (hasA && hasB) {
        M(row, row) = 1;  // {A,B} fixed
      } else if (hasA) {
        int k = (i == A) ? j : i;  // {k, A} -> reads {k, B}
        M(row, pair_index(std::min(k, B), std::max(k, B), m)) = 1;
      } else if (hasB) {
        int k = (i == B) ? j : i;
        M(row, pair_index(std::min(k, A), std::max(k, A), m)) = 1;
      } else {
        M(row, row) = 1;
      }
    }
  return M;
}

IntMat M_matrix(int N, int p) {
  // Case table read with the generic second index j outside {A, B}; the rows
  // {p,A} and {p,B} carry only the explicit ±x_{A,B} terms. This is the
  // version the cut-invariance identity validates.
  int m = N + 2, A = N + 1, B = N + 2;
  int C = pair_count(m);
  IntMat M(C, C);
  auto idx = [&](int a, int b) { return pair_index(std::min(a, b), std::max(a, b), m); };
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      int row = pair_index(i, j, m);
      M(row, row) = 1;  // identity part
      bool hasP = (i == p || j == p);
      if (!hasP) continue;
      int q = (i == p) ? j : i;  // the other index
      if (q == A) {
        M(row, idx(A, B)) -= 1;  // x_{p,A} - x_{A,B}
      } else if (q == B) {
        M(row, idx(A, B)) += 1;  // x_{p,B} + x_{A,B}
      } else {
        // x_{p,q} + x_{q,A} + x_{p,B} + x_{A,B} - x_{q,B} - x_{p,A}
        M(row, idx(q, A)) += 1;
        M(row, idx(p, B)) += 1;
        M(row, idx(A, B)) += 1;
        M(row, idx(q, B)) -= 1;
        M(row, idx(p, A)) -= 1;
      }
    }
  return M;
}

IntVec split_vector(int N, const std::vector<int>& I) {
  int m = N + 2;
  std::vector<bool> in(m + 1, false);
  for (int k : I) in[k] = true;
  IntVec v(pair_count(m), Int(0));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (in[i] != in[j]) v[pair_index(i, j, m)] = 1;
  return v;
}

RatVec DistQuotient::normal_form(const RatVec& raw) const {
  RatVec x = raw;
  for (size_t k = 0; k < reduced_rows.size(); ++k) {
    int p = pivots[k];
    if (x[p] == 0) continue;
    Rat f = x[p] / reduced_rows[k][p];
    for (int c = 0; c < C; ++c)
      if (reduced_rows[k][c] != 0) x[c] -= f * reduced_rows[k][c];
  }
  return x;
}

bool DistQuotient::in_kernel(const RatVec& v) const { return is_zero(normal_form(v)); }

DistQuotient make_quotient(int N) {
  DistQuotient q;
  q.N = N;
  q.m = N + 2;
  q.C = pair_count(q.m);
  // spanning vectors: Φ(e_i) for i <= N, then s
  std::vector<RatVec> rows;
  for (int i = 1; i <= N; ++i) {
    RatVec r(q.C, Rat(0));
    for (int j = 1; j <= q.m; ++j) {
      if (j == i) continue;
      r[pair_index(std::min(i, j), std::max(i, j), q.m)] = 1;
    }
    rows.push_back(std::move(r));
  }
  rows.push_back(to_rat(s_vector(N)));
  // RREF with lex-first pivoting
  for (size_t k = 0; k < rows.size(); ++k) {
    // reduce against previous
    for (size_t t = 0; t < q.reduced_rows.size(); ++t) {
      int p = q.pivots[t];
      if (rows[k][p] == 0) continue;
      Rat f = rows[k][p] / q.reduced_rows[t][p];
      for (int c = 0; c < q.C; ++c)
        if (q.reduced_rows[t][c] != 0) rows[k][c] -= f * q.reduced_rows[t][c];
    }
    int piv = -1;
    for (int c = 0; c < q.C; ++c)
      if (rows[k][c] != 0) {
        piv = c;
        break;
      }
    if (piv < 0) throw std::logic_error("quotient spanning vectors are dependent");
    // back-substitute into earlier rows for full RREF
    for (size_t t = 0; t < q.reduced_rows.size(); ++t) {
      if (q.reduced_rows[t][piv] == 0) continue;
      Rat f = q.reduced_rows[t][piv] / rows[k][piv];
      for (int c = 0; c < q.C; ++c)
        if (rows[k][c] != 0) q.reduced_rows[t][c] -= f * rows[k][c];
    }
    q.reduced_rows.push_back(rows[k]);
    q.pivots.push_back(piv);
  }
  return q;
}

namespace {

// incremental integer lattice accumulation (column HNF style, by pivot rows)
struct LatticeAccum {
  int ambient;
  std::vector<IntVec> basis;  // sorted by pivot position

  int pivot_of(const IntVec& v) const {
    for (int i = 0; i < ambient; ++i)
      if (v[i] != 0) return i;
    return ambient;
  }

  bool add(IntVec v) {
    bool grew = false;
    while (true) {
      int pv = pivot_of(v);
      if (pv == ambient) return grew;
      // find basis vector with the same pivot
      size_t k = 0;
      for (; k < basis.size(); ++k)
        if (pivot_of(basis[k]) >= pv) break;
      if (k == basis.size() || pivot_of(basis[k]) > pv) {
        if (v[pv] < 0)
          for (auto& x : v) x = -x;
        basis.insert(basis.begin() + k, v);
        return true;
      }
      IntVec& b = basis[k];
      if (v[pv] % b[pv] == 0) {
        Int f = v[pv] / b[pv];
        for (int i = 0; i < ambient; ++i) v[i] -= f * b[i];
      } else {
        // gcd combine
        Int a = b[pv], c = v[pv];
        Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
        Int aa = a, cc = c;
        while (cc != 0) {
          Int qd = aa / cc;
          Int r = aa - qd * cc;
          Int nx = x0 - qd * x1, ny = y0 - qd * y1;
          aa = cc; cc = r;
          x0 = x1; y0 = y1;
          x1 = nx; y1 = ny;
        }
        // aa = gcd = x0*a + y0*c
        IntVec nb(ambient), nv(ambient);
        for (int i = 0; i < ambient; ++i) {
          nb[i] = x0 * b[i] + y0 * v[i];
          nv[i] = (a / aa) * v[i] - (c / aa) * b[i];
        }
        b = std::move(nb);
        v = std::move(nv);
        grew = true;  // pivot entry shrank to the gcd
      }
    }
  }
};

}  // namespace

RatVec ModuliAmbient::to_coords(const RatVec& x) const {
  auto sol = solve_affine(B, x);
  if (!sol) throw std::invalid_argument("vector not in the moduli subspace");
  return sol->particular;
}

RatVec ModuliAmbient::to_ambient(const RatVec& coords) const { return mul(B, coords); }

RatVec ModuliAmbient::coords_of_raw(const RatVec& raw) const {
  return to_coords(Q.normal_form(raw));
}

RatVec ModuliAmbient::pullback_form(const RatVec& raw_form) const {
  // (form ∘ B) as a row on coords
  RatVec out(rank, Rat(0));
  for (int c = 0; c < rank; ++c)
    for (int i = 0; i < Q.C; ++i)
      if (raw_form[i] != 0 && B(i, c) != 0) out[c] += raw_form[i] * B(i, c);
  return out;
}

AffineMap ModuliAmbient::induced_map(const IntMat& raw) const {
  // coords -> nf(raw * B * coords) in coords
  RatMat M(rank, rank);
  for (int c = 0; c < rank; ++c) {
    RatVec col(Q.C, Rat(0));
    for (int i = 0; i < Q.C; ++i) col[i] = B(i, c);
    RatVec img(Q.C, Rat(0));
    for (int i = 0; i < Q.C; ++i) {
      for (int j = 0; j < Q.C; ++j)
        if (raw(i, j) != 0 && col[j] != 0) img[i] += Rat(raw(i, j)) * col[j];
    }
    RatVec cimg = to_coords(Q.normal_form(img));
    for (int i = 0; i < rank; ++i) M(i, c) = cimg[i];
  }
  for (auto& x : M.a)
    if (den(x) != 1)
      throw std::logic_error("moduli generator does not preserve the lattice");
  AffineMap g = AffineMap::make(M, RatVec(rank, Rat(0)));
  Rat d = det(M);
  if (d != 1 && d != -1)
    throw std::logic_error("moduli generator is not unimodular on the lattice");
  return g;
}

const ModuliAmbient& moduli_ambient(int N) {
  static std::map<int, ModuliAmbient> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;

  ModuliAmbient ma;
  ma.Q = make_quotient(N);
  int m = N + 2, C = ma.Q.C;
  // all proper nonempty splits with A inside (complement-symmetric)
  int A = N + 1;
  LatticeAccum acc;
  acc.ambient = C;
  Int denom_lcm = 1;
  std::vector<RatVec> nfs;
  for (long long mask = 0; mask < (1LL << (m - 1)); ++mask) {
    // subsets of {1..m} containing A: encode the other m-1 elements
    std::vector<int> I{A};
    for (int b = 0, k = 1; k <= m; ++k) {
      if (k == A) continue;
      if (mask & (1LL << b)) I.push_back(k);
      ++b;
    }
    if (int(I.size()) == m) continue;  // improper
    RatVec nf = ma.Q.normal_form(to_rat(split_vector(N, I)));
    if (is_zero(nf)) continue;
    for (auto& x : nf) denom_lcm = denom_lcm / gcd_int(denom_lcm, den(x)) * den(x);
    nfs.push_back(std::move(nf));
  }
  for (auto& nf : nfs) {
    IntVec v(C);
    for (int i = 0; i < C; ++i) v[i] = num(nf[i]) * (denom_lcm / den(nf[i]));
    acc.add(std::move(v));
  }
  ma.rank = int(acc.basis.size());
  // normalize to a canonical Hermite basis, then scale back by denom_lcm
  Sublattice latt = Sublattice::from_generators(C, acc.basis);
  ma.B = RatMat(C, ma.rank);
  for (int c = 0; c < ma.rank; ++c)
    for (int i = 0; i < C; ++i) ma.B(i, c) = Rat(latt.basis[c][i]) / Rat(denom_lcm);
  auto [pos, ok] = cache.emplace(N, std::move(ma));
  (void)ok;
  return pos->second;
}

std::vector<AffineMap> moduli_generators(int N) {
  const ModuliAmbient& ma = moduli_ambient(N);
  std::vector<AffineMap> gens;
  gens.push_back(ma.induced_map(I_matrix(N)));
  for (int p = 1; p <= N; ++p) gens.push_back(ma.induced_map(M_matrix(N, p)));
  // drop duplicates and inverse-duplicates
  std::vector<AffineMap> out;
  for (auto& g : gens) {
    bool dup = false;
    for (auto& h : out)
      if (g == h || g == h.inverse()) dup = true;
    if (!dup && !g.is_identity()) out.push_back(g);
  }
  return out;
}

}  // namespace tropic
