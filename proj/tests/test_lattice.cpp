#include <random>

#include "doctest.h"
#include "tropic/smith.hpp"

using namespace tropic;

namespace {

bool is_unimodular(const IntMat& M) {
  Rat d = det(to_rat(M));
  return d == 1 || d == -1;
}

bool divisibility_chain(const IntMat& D) {
  int n = std::min(D.rows, D.cols);
  for (int i = 0; i + 1 < n; ++i) {
    if (D(i, i) == 0 && D(i + 1, i + 1) != 0) return false;
    if (D(i, i) != 0 && D(i + 1, i + 1) % D(i, i) != 0) return false;
  }
  for (int i = 0; i < D.rows; ++i)
    for (int j = 0; j < D.cols; ++j)
      if (i != j && D(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("smith_form on spec fixtures") {
  SUBCASE("identity") {
    auto s = smith_form(IntMat::identity(2));
    CHECK(s.D == IntMat::identity(2));
  }
  SUBCASE("diag(2,3) -> diag(1,6)") {
    IntMat M{{Int(2), Int(0)}, {Int(0), Int(3)}};
    auto s = smith_form(M);
    CHECK(s.D(0, 0) == 1);
    CHECK(s.D(1, 1) == 6);
    CHECK(mul(mul(s.U, M), s.V) == s.D);
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
  }
  SUBCASE("[[1,1],[1,-1]] -> diag(1,2), cokernel of size 2") {
    IntMat M{{Int(1), Int(1)}, {Int(1), Int(-1)}};
    auto s = smith_form(M);
    CHECK(s.D(0, 0) == 1);
    CHECK(s.D(1, 1) == 2);
    // brute-force coset count of the image in Z^2 over a window
    Sublattice img = Sublattice::from_generators(2, {M.col(0), M.col(1)});
    int classes = 0;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        if (true) {
          // count residues (x,y) mod img among window reps
          (void)x;
          (void)y;
        }
    // enumerate residues of the 4 unit-square points
    std::vector<IntVec> reps;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        IntVec v{Int(x), Int(y)};
        bool fresh = true;
        for (auto& r : reps) {
          IntVec d{r[0] - v[0], r[1] - v[1]};
          if (img.contains(d)) fresh = false;
        }
        if (fresh) reps.push_back(v);
      }
    classes = int(reps.size());
    CHECK(classes == 2);
  }
}

TEST_CASE("smith_form randomized: U*M*V = D exactly, transforms unimodular") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 5), val(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    IntMat M(dim(rng), dim(rng));
    for (auto& x : M.a) x = val(rng);
    auto s = smith_form(M);
    CHECK(mul(mul(s.U, M), s.V) == s.D);
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    CHECK(divisibility_chain(s.D));
  }
}

TEST_CASE("hermite_col and int_kernel") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(1, 5), val(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    IntMat M(dim(rng), dim(rng));
    for (auto& x : M.a) x = val(rng);
    auto h = hermite_col(M);
    CHECK(mul(M, h.V) == h.H);
    CHECK(is_unimodular(h.V));
    for (auto& k : int_kernel(M)) CHECK(is_zero(mul(M, k)));
    // kernel count matches rank deficiency
    CHECK(int(int_kernel(M).size()) == M.cols - rank(M));
  }
}

TEST_CASE("solve_affine spec fixtures") {
  SUBCASE("identity") {
    RatMat A = RatMat::identity(3);
    RatVec b{Rat(1), Rat(2, 3), Rat(-5)};
    auto s = solve_affine(A, b);
    REQUIRE(s.has_value());
    CHECK(s->particular == b);
    CHECK(s->kernel_basis.empty());
  }
  SUBCASE("one equation x + y = 0") {
    RatMat A{{Rat(1), Rat(1)}};
    auto s = solve_affine(A, RatVec{Rat(0)});
    REQUIRE(s.has_value());
    REQUIRE(s->kernel_basis.size() == 1);
    RatVec k = s->kernel_basis[0];
    CHECK(k[0] == -k[1]);
    CHECK(k[0] != 0);
  }
  SUBCASE("infeasible") {
    RatMat A{{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
    auto s = solve_affine(A, RatVec{Rat(0), Rat(1)});
    CHECK(!s.has_value());
  }
}

TEST_CASE("lattice_index") {
  Sublattice z2 = Sublattice::standard(2);
  SUBCASE("identity -> 1") {
    auto idx = lattice_index(IntMat::identity(2), z2, z2);
    REQUIRE(idx.has_value());
    CHECK(*idx == 1);
  }
  SUBCASE("[[1,1],[1,-1]] -> 2") {
    IntMat f{{Int(1), Int(1)}, {Int(1), Int(-1)}};
    auto idx = lattice_index(f, z2, z2);
    REQUIRE(idx.has_value());
    CHECK(*idx == 2);
  }
  SUBCASE("rank-deficient -> infinite") {
    IntMat f{{Int(1), Int(1)}, {Int(1), Int(1)}};
    CHECK(!lattice_index(f, z2, z2).has_value());
  }
  SUBCASE("multiplicativity on composable maps") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
      IntMat f(2, 2), g(2, 2);
      for (auto& x : f.a) x = val(rng);
      for (auto& x : g.a) x = val(rng);
      auto fi = lattice_index(f, z2, z2);
      auto gi = lattice_index(g, z2, z2);
      auto fg = lattice_index(mul(f, g), z2, z2);
      if (fi && gi) {
        REQUIRE(fg.has_value());
        CHECK(*fg == (*fi) * (*gi));
      } else {
        CHECK(!fg.has_value());
      }
    }
  }
}

TEST_CASE("span_lattice saturates") {
  // span of (2,0) in Z^2 contains (1,0)
  auto lat = span_lattice({RatVec{Rat(2), Rat(0)}}, Sublattice::standard(2));
  REQUIRE(lat.rank() == 1);
  CHECK(lat.contains(IntVec{1, 0}));
  // span of (1,1)/2 direction
  auto lat2 = span_lattice({RatVec{Rat(1, 2), Rat(1, 2)}}, Sublattice::standard(2));
  REQUIRE(lat2.rank() == 1);
  CHECK(lat2.contains(IntVec{1, 1}));
  CHECK(!lat2.contains(IntVec{1, 0}));
}

TEST_CASE("quotient_generator picks the sigma-side primitive generator") {
  // sigma = cone spanned by (0,1),(1,1): Lambda_sigma = Z^2;
  // tau = ray (0,1): normal vector reduces to (1,0) in Hermite coset form.
  Sublattice lat_sigma = Sublattice::standard(2);
  Sublattice lat_tau = Sublattice::from_generators(2, {IntVec{0, 1}});
  RatVec side{Rat(1), Rat(0)};  // positive on the sigma side
  IntVec u = quotient_generator(lat_sigma, lat_tau, side);
  IntVec r = reduce_coset(u, lat_tau);
  CHECK(r == IntVec{1, 0});
}

TEST_CASE("reduce_coset prefers lex-min nonnegative residue") {
  // paper M_{1,2} wall fixture: reduce (1,1,1,2,0,2) by Z*(0,1,0,1,0,1)
  Sublattice mod = Sublattice::from_generators(6, {IntVec{0, 1, 0, 1, 0, 1}});
  CHECK(reduce_coset(IntVec{1, 1, 1, 2, 0, 2}, mod) == IntVec{1, 0, 1, 1, 0, 1});
  CHECK(reduce_coset(IntVec{0, 1, 1, 1, 1, 0}, mod) == IntVec{0, 1, 1, 1, 1, 0});
  // coset equality of any two valid representatives
  Sublattice z{6, {}};
  IntVec a{1, 1, 1, 2, 0, 2};
  IntVec b{1, 0, 1, 1, 0, 1};
  IntVec d(6);
  for (int i = 0; i < 6; ++i) d[i] = a[i] - b[i];
  CHECK(mod.contains(d));
}
