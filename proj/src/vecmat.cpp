#include "tropic/vecmat.hpp"

#include <stdexcept>

namespace tropic {

IntMat mul(const IntMat& A, const IntMat& B) {
  assert(A.cols == B.rows);
  IntMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Int& aik = A(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j) C(i, j) += aik * B(k, j);
    }
  return C;
}

RatMat mul(const RatMat& A, const RatMat& B) {
  assert(A.cols == B.rows);
  RatMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Rat& aik = A(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j) C(i, j) += aik * B(k, j);
    }
  return C;
}

RatVec mul(const RatMat& A, const RatVec& x) {
  assert(int(x.size()) == A.cols);
  RatVec y(A.rows);
  for (int i = 0; i < A.rows; ++i) {
    Rat s = 0;
    for (int j = 0; j < A.cols; ++j)
      if (A(i, j) != 0) s += A(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

IntVec mul(const IntMat& A, const IntVec& x) {
  assert(int(x.size()) == A.cols);
  IntVec y(A.rows);
  for (int i = 0; i < A.rows; ++i) {
    Int s = 0;
    for (int j = 0; j < A.cols; ++j)
      if (A(i, j) != 0) s += A(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

RatVec add(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const Rat& c, const RatVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool is_zero(const RatVec& v) {
  for (auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const IntVec& v) {
  for (auto& x : v)
    if (x != 0) return false;
  return true;
}

RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
  return r;
}

RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

IntVec to_int(const RatVec& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    assert(den(v[i]) == 1);
    r[i] = num(v[i]);
  }
  return r;
}

IntVec primitive_vector(const RatVec& v) {
  if (is_zero(v)) throw std::invalid_argument("no primitive representative");
  Int lcm = 1;
  for (auto& x : v) {
    Int d = den(x);
    lcm = lcm / gcd_int(lcm, d) * d;
  }
  IntVec w(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = num(v[i]) * (lcm / den(v[i]));
    g = gcd_int(g, w[i]);
  }
  for (auto& x : w) x /= g;
  return w;
}

IntVec primitive_vector(const IntVec& v) { return primitive_vector(to_rat(v)); }

}  // namespace tropic
