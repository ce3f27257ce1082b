#include "doctest.h"
#include "tropic/balance.hpp"
#include "tropic/cone.hpp"

using namespace tropic;

TEST_CASE("cone basics: dim, relint, emptiness") {
  Poly ray = Poly::cone_hull(2, {IntVec{1, 1}});
  PolyInfo i = analyze(ray);
  CHECK(!i.empty);
  CHECK(i.dim == 1);
  CHECK(contains_point(ray, RatVec{Rat(2), Rat(2)}));
  CHECK(!contains_point(ray, RatVec{Rat(-1), Rat(-1)}));
  CHECK(contains_point(ray, i.relint));

  Poly full = Poly::cone_hull(2, {IntVec{1, 0}, IntVec{1, 1}});
  CHECK(analyze(full).dim == 2);
  CHECK(contains_point(full, RatVec{Rat(3), Rat(1)}));
  CHECK(!contains_point(full, RatVec{Rat(0), Rat(1)}));

  Poly empty = Poly::cone(1, {}, {}, {IntVec{1}, IntVec{-1}});  // x>0 and -x>0
  CHECK(is_empty(empty));
}

TEST_CASE("faces of a ray: origin and the ray itself") {
  Poly ray = Poly::cone_hull(2, {IntVec{1, 1}});
  auto fs = faces(ray);
  REQUIRE(fs.size() == 2);
  int dims[2] = {analyze(fs[0]).dim, analyze(fs[1]).dim};
  CHECK(((dims[0] == 0 && dims[1] == 1) || (dims[0] == 1 && dims[1] == 0)));
}

TEST_CASE("faces of a 2-cone: origin, two rays, the cone") {
  Poly c = Poly::cone_hull(2, {IntVec{1, 0}, IntVec{1, 1}});
  auto fs = faces(c);
  CHECK(fs.size() == 4);
  int count_by_dim[3] = {0, 0, 0};
  for (auto& f : fs) ++count_by_dim[analyze(f).dim];
  CHECK(count_by_dim[0] == 1);
  CHECK(count_by_dim[1] == 2);
  CHECK(count_by_dim[2] == 1);
}

TEST_CASE("faces of a half-open cell come from non-strict rows only") {
  // {x >= 0, y > 0}: itself and {x = 0, y > 0}
  Poly p = Poly::cone(2, {}, {IntVec{1, 0}}, {IntVec{0, 1}});
  auto fs = faces(p);
  REQUIRE(fs.size() == 2);
  for (auto& f : fs) {
    PolyInfo i = analyze(f);
    CHECK(!i.empty);
    CHECK(i.relint[1] > 0);
  }
}

TEST_CASE("face lattice closure under intersection for closed cones") {
  Poly c = Poly::cone_hull(2, {IntVec{1, 0}, IntVec{1, 1}});
  auto fs = faces(c);
  for (auto& f : fs)
    for (auto& g : fs) {
      Poly cap = intersect(f, g);
      if (is_empty(cap)) continue;
      bool found = false;
      for (auto& h : fs)
        if (set_equal(cap, h)) found = true;
      CHECK(found);
    }
}

TEST_CASE("is_face_of") {
  Poly c = Poly::cone_hull(2, {IntVec{1, 0}, IntVec{1, 1}});
  Poly ray = Poly::cone_hull(2, {IntVec{1, 1}});
  Poly origin = Poly::cone_hull(2, {});
  Poly other = Poly::cone_hull(2, {IntVec{2, 1}});
  CHECK(is_face_of(ray, c));
  CHECK(is_face_of(origin, c));
  CHECK(is_face_of(c, c));
  CHECK(!is_face_of(other, c));
}

TEST_CASE("transform by unimodular map with translation") {
  Poly ray = Poly::cone_hull(2, {IntVec{1, 0}});
  // rotate by [[0,-1],[1,0]] then translate by (1,2): inverse of rotation
  RatMat A_inv{{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}};
  RatVec t{Rat(1), Rat(2)};
  Poly img = transform(ray, A_inv, t);
  // image should contain (1,2) + s*(0,1)
  CHECK(contains_point(img, RatVec{Rat(1), Rat(5)}));
  CHECK(!contains_point(img, RatVec{Rat(2), Rat(2)}));
}

TEST_CASE("lattice_normal_vector spec fixtures") {
  Sublattice z2 = Sublattice::standard(2);
  SUBCASE("ray (1,1) over the origin") {
    Poly sigma = Poly::cone_hull(2, {IntVec{1, 1}});
    Poly tau = Poly::cone_hull(2, {});
    CHECK(lattice_normal_vector(sigma, tau, z2) == IntVec{1, 1});
  }
  SUBCASE("cone{(0,1),(1,1)} over ray (0,1): Hermite coset rep (1,0)") {
    Poly sigma = Poly::cone_hull(2, {IntVec{0, 1}, IntVec{1, 1}});
    Poly tau = Poly::cone_hull(2, {IntVec{0, 1}});
    CHECK(lattice_normal_vector(sigma, tau, z2) == IntVec{1, 0});
  }
  SUBCASE("ray (2,2) over origin: primitivity forced") {
    Poly sigma = Poly::cone_hull(2, {IntVec{2, 2}});
    Poly tau = Poly::cone_hull(2, {});
    CHECK(lattice_normal_vector(sigma, tau, z2) == IntVec{1, 1});
  }
  SUBCASE("errors") {
    Poly sigma = Poly::cone_hull(2, {IntVec{0, 1}, IntVec{1, 1}});
    Poly tau = Poly::cone_hull(2, {});
    CHECK_THROWS(lattice_normal_vector(sigma, tau, z2));  // gap 2
    Poly not_face = Poly::cone_hull(2, {IntVec{1, 0}});
    CHECK_THROWS(lattice_normal_vector(sigma, not_face, z2));
  }
  SUBCASE("coset equality of representatives") {
    // any valid representative differs from the reduced one by Λ_tau
    Poly sigma = Poly::cone_hull(2, {IntVec{0, 1}, IntVec{1, 1}});
    Poly tau = Poly::cone_hull(2, {IntVec{0, 1}});
    IntVec u = lattice_normal_vector(sigma, tau, z2);
    IntVec raw{1, 1};  // also a valid representative
    IntVec diff{raw[0] - u[0], raw[1] - u[1]};
    Sublattice lat_tau = span_lattice({RatVec{Rat(0), Rat(1)}}, z2);
    CHECK(lat_tau.contains(diff));
  }
}
