#include "tropic/exact.hpp"

namespace tropic {

Rref rref(RatMat m) {
  Rref r;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(row, j));
    Rat inv = Rat(1) / m(row, col);
    for (int j = col; j < m.cols; ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (int j = col; j < m.cols; ++j) m(i, j) -= f * m(row, j);
    }
    r.pivots.push_back(col);
    ++row;
  }
  r.rank = row;
  r.m = std::move(m);
  return r;
}

std::optional<AffineSolution> solve_affine(const RatMat& A, const RatVec& b) {
  assert(int(b.size()) == A.rows);
  RatMat aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
    aug(i, A.cols) = b[i];
  }
  Rref r = rref(std::move(aug));
  for (int i = 0; i < int(r.pivots.size()); ++i)
    if (r.pivots[i] == A.cols) return std::nullopt;  // 0 = 1 row

  AffineSolution sol;
  sol.particular.assign(A.cols, Rat(0));
  std::vector<bool> is_pivot(A.cols, false);
  for (int i = 0; i < int(r.pivots.size()); ++i) {
    is_pivot[r.pivots[i]] = true;
    sol.particular[r.pivots[i]] = r.m(i, A.cols);
  }
  for (int j = 0; j < A.cols; ++j) {
    if (is_pivot[j]) continue;
    RatVec v(A.cols, Rat(0));
    v[j] = 1;
    for (int i = 0; i < int(r.pivots.size()); ++i) v[r.pivots[i]] = -r.m(i, j);
    sol.kernel_basis.push_back(std::move(v));
  }
  return sol;
}

std::vector<RatVec> kernel_basis(const RatMat& A) {
  auto s = solve_affine(A, RatVec(A.rows, Rat(0)));
  return s->kernel_basis;
}

int rank(const RatMat& A) { return rref(A).rank; }
int rank(const IntMat& A) { return rref(to_rat(A)).rank; }

Rat det(const RatMat& A) {
  assert(A.rows == A.cols);
  RatMat m = A;
  Rat d = 1;
  int n = m.rows;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      d = -d;
    }
    d *= m(col, col);
    Rat inv = Rat(1) / m(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      Rat f = m(i, col) * inv;
      for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return d;
}

std::optional<RatVec> in_span(const std::vector<RatVec>& basis, const RatVec& v) {
  if (basis.empty()) {
    if (is_zero(v)) return RatVec{};
    return std::nullopt;
  }
  int dim = int(basis[0].size());
  RatMat A(dim, int(basis.size()));
  for (int j = 0; j < int(basis.size()); ++j)
    for (int i = 0; i < dim; ++i) A(i, j) = basis[j][i];
  auto s = solve_affine(A, v);
  if (!s) return std::nullopt;
  return s->particular;
}

std::vector<IntVec> cokernel_forms(const std::vector<RatVec>& span_vectors, int dim) {
  RatMat A(int(span_vectors.size()), dim);
  for (int i = 0; i < A.rows; ++i) A.set_row(i, span_vectors[i]);
  std::vector<IntVec> out;
  for (auto& k : kernel_basis(A))  // forms f with <f, v> = 0 for all span v
    out.push_back(primitive_vector(k));
  return out;
}

}  // namespace tropic
