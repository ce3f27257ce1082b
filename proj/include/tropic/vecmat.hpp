#pragma once
// Dense vectors and matrices over Int / Rat with explicit dimensions.

#include <cassert>
#include <initializer_list>
#include <vector>

#include "tropic/rat.hpp"

namespace tropic {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}
  Mat(std::initializer_list<std::initializer_list<T>> rs) {
    rows = int(rs.size());
    cols = rows ? int(rs.begin()->size()) : 0;
    a.reserve(size_t(rows) * cols);
    for (auto& r : rs) {
      assert(int(r.size()) == cols);
      for (auto& x : r) a.push_back(x);
    }
  }
  T& operator()(int i, int j) {
    assert(i >= 0 && i < rows && j >= 0 && j < cols);
    return a[size_t(i) * cols + j];
  }
  const T& operator()(int i, int j) const {
    assert(i >= 0 && i < rows && j >= 0 && j < cols);
    return a[size_t(i) * cols + j];
  }
  std::vector<T> row(int i) const {
    std::vector<T> r(cols);
    for (int j = 0; j < cols; ++j) r[j] = (*this)(i, j);
    return r;
  }
  std::vector<T> col(int j) const {
    std::vector<T> c(rows);
    for (int i = 0; i < rows; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_row(int i, const std::vector<T>& r) {
    assert(int(r.size()) == cols);
    for (int j = 0; j < cols; ++j) (*this)(i, j) = r[j];
  }
  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

IntMat mul(const IntMat& A, const IntMat& B);
RatMat mul(const RatMat& A, const RatMat& B);
RatVec mul(const RatMat& A, const RatVec& x);
IntVec mul(const IntMat& A, const IntVec& x);

RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& c, const RatVec& v);
bool is_zero(const RatVec& v);
bool is_zero(const IntVec& v);

RatMat to_rat(const IntMat& m);
RatVec to_rat(const IntVec& v);
IntVec to_int(const RatVec& v);  // asserts all entries integral

// Clears denominators and divides by the gcd of the entries: the unique
// primitive integer vector on the ray spanned by v. Errors on v == 0.
IntVec primitive_vector(const RatVec& v);
IntVec primitive_vector(const IntVec& v);

// Stack rows of B under A (same column count).
template <class T>
Mat<T> vstack(const Mat<T>& A, const Mat<T>& B) {
  assert(A.cols == B.cols || A.rows == 0 || B.rows == 0);
  int cols = A.rows ? A.cols : B.cols;
  Mat<T> R(A.rows + B.rows, cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < cols; ++j) R(i, j) = A(i, j);
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < cols; ++j) R(A.rows + i, j) = B(i, j);
  return R;
}

template <class T>
Mat<T> from_rows(const std::vector<std::vector<T>>& rows, int cols_hint = 0) {
  Mat<T> m(int(rows.size()), rows.empty() ? cols_hint : int(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) m.set_row(i, rows[i]);
  return m;
}

}  // namespace tropic
