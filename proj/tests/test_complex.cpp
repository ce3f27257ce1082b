#include "doctest.h"
#include "tropic/balance.hpp"
#include "tropic/refine.hpp"

using namespace tropic;

namespace {

// the standard tropical line: rays (-1,0), (0,-1), (1,1) with the origin
WeightedComplex tropical_line(Rat w0 = 1, Rat w1 = 1, Rat w2 = 1) {
  WeightedComplex X;
  X.ambient = 2;
  X.dim = 1;
  X.cells.push_back(Poly::cone_hull(2, {}));                // 0: origin
  X.cells.push_back(Poly::cone_hull(2, {IntVec{-1, 0}}));   // 1
  X.cells.push_back(Poly::cone_hull(2, {IntVec{0, -1}}));   // 2
  X.cells.push_back(Poly::cone_hull(2, {IntVec{1, 1}}));    // 3
  X.weights[1] = w0;
  X.weights[2] = w1;
  X.weights[3] = w2;
  return X;
}

}  // namespace

TEST_CASE("validate_complex: the tropical line is valid") {
  CHECK(validate_complex(tropical_line()).ok());
}

TEST_CASE("validate_complex: overlapping rays violate (a)") {
  WeightedComplex X;
  X.ambient = 2;
  X.dim = 1;
  // ray from origin along +x, and the ray from (1,0) along +x
  Poly r1 = Poly::cone(2, {IntVec{0, 1}}, {IntVec{1, 0}});
  Poly r2 = r1;
  r2.ge_rhs[0] = 1;  // x >= 1
  X.cells = {r1, r2};
  X.weights[0] = 1;
  X.weights[1] = 1;
  auto rep = validate_complex(X);
  CHECK(!rep.ok());
  bool has_d_or_a = false;
  for (auto& v : rep.violations)
    if (v.condition == "a" || v.condition == "d") has_d_or_a = true;
  CHECK(has_d_or_a);
}

TEST_CASE("validate_complex: relint overlap violates (d)") {
  WeightedComplex X;
  X.ambient = 1;
  X.dim = 1;
  Poly all = Poly::whole_space(1);
  Poly right = Poly::cone(1, {}, {IntVec{1}});
  X.cells = {all, right};
  X.weights[0] = 1;
  X.weights[1] = 1;
  auto rep = validate_complex(X);
  CHECK(!rep.ok());
  bool has_d = false;
  for (auto& v : rep.violations)
    if (v.condition == "d") has_d = true;
  CHECK(has_d);
}

TEST_CASE("nonzero_part") {
  SUBCASE("all weights one keeps everything") {
    auto X = tropical_line();
    CHECK(nonzero_part(X).cells.size() == X.cells.size());
  }
  SUBCASE("zero weight drops the ray but keeps shared origin") {
    auto X = tropical_line(0, 1, 1);
    auto Y = nonzero_part(X);
    CHECK(Y.cells.size() == 3);  // origin + two rays
    CHECK(Y.weights.size() == 2);
  }
  SUBCASE("all zero -> empty") {
    auto X = tropical_line(0, 0, 0);
    CHECK(nonzero_part(X).cells.empty());
  }
}

TEST_CASE("check_fan_balancing on the tropical line") {
  SUBCASE("weights (1,1,1): (-1,0)+(0,-1)+(1,1) = (0,0)") {
    auto rep = check_fan_balancing(tropical_line());
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].balanced);
    CHECK(rep.rows[0].entries.size() == 3);
    CHECK(is_zero(to_int(rep.rows[0].weighted_sum)));
  }
  SUBCASE("weights (2,1,1): defect (-1,0) at the origin") {
    auto rep = check_fan_balancing(tropical_line(2, 1, 1));
    REQUIRE(rep.rows.size() == 1);
    CHECK(!rep.rows[0].balanced);
    CHECK(rep.rows[0].weighted_sum == RatVec{Rat(-1), Rat(0)});
  }
}

TEST_CASE("shear strip: local balancing at a ray with non-orthogonal cones") {
  // facets cone{(x,1),(x+1,1)} for x = -1, 0 around the ray (0,1):
  // normals sum to a multiple of (0,1), inside V_tau.
  Poly tau = Poly::cone_hull(2, {IntVec{0, 1}});
  std::vector<std::pair<Poly, Rat>> star = {
      {Poly::cone_hull(2, {IntVec{-1, 1}, IntVec{0, 1}}), Rat(1)},
      {Poly::cone_hull(2, {IntVec{0, 1}, IntVec{1, 1}}), Rat(1)},
  };
  auto row = check_local_balancing(tau, star, Sublattice::standard(2));
  CHECK(row.balanced);
}

TEST_CASE("balancing is invariant under refinement") {
  // the line R (one cell) vs R split at 0; weight 1; 1-dim balanced complexes
  WeightedComplex X;
  X.ambient = 1;
  X.dim = 1;
  X.cells = {Poly::whole_space(1)};
  X.weights[0] = 1;

  WeightedComplex Y;
  Y.ambient = 1;
  Y.dim = 1;
  Y.cells = {Poly::cone(1, {}, {IntVec{1}}), Poly::cone(1, {}, {IntVec{-1}}),
             Poly::cone_hull(1, {})};
  Y.weights[0] = 1;
  Y.weights[1] = 1;

  auto ref = common_refinement(Y, X);
  CHECK(ref.refined.cells.size() == 3);
  auto rep = check_fan_balancing(ref.refined);
  CHECK(rep.balanced());
}

TEST_CASE("common_refinement: R split at 0 vs R split at 1") {
  auto split_at = [](const Rat& c) {
    WeightedComplex X;
    X.ambient = 1;
    X.dim = 1;
    Poly right = Poly::whole_space(1), left = Poly::whole_space(1), pt = Poly::whole_space(1);
    right.add_ge(IntVec{1}, c);
    left.add_ge(IntVec{-1}, -c);
    pt.add_eq(IntVec{1}, c);
    X.cells = {right, left, pt};
    X.weights[0] = 1;
    X.weights[1] = 1;
    return X;
  };
  auto ref = common_refinement(split_at(0), split_at(1));
  // cells: (-inf,0], {0}, [0,1], {1}, [1,inf)
  CHECK(ref.refined.cells.size() == 5);
  int by_dim[2] = {0, 0};
  for (auto& c : ref.refined.cells) ++by_dim[analyze(c).dim];
  CHECK(by_dim[0] == 2);
  CHECK(by_dim[1] == 3);
  CHECK(validate_complex(ref.refined).ok());
}

TEST_CASE("common_refinement: X with itself is X") {
  auto X = tropical_line();
  auto ref = common_refinement(X, X);
  CHECK(ref.refined.cells.size() == X.cells.size());
  for (auto& c : ref.refined.cells) {
    bool found = false;
    for (auto& d : X.cells)
      if (set_equal(c, d)) found = true;
    CHECK(found);
  }
}

TEST_CASE("common_refinement rejects support mismatch") {
  WeightedComplex X;
  X.ambient = 1;
  X.dim = 1;
  X.cells = {Poly::cone(1, {}, {IntVec{1}})};
  X.weights[0] = 1;
  WeightedComplex Y;
  Y.ambient = 1;
  Y.dim = 1;
  Y.cells = {Poly::whole_space(1)};
  Y.weights[0] = 1;
  CHECK_THROWS(common_refinement(X, Y));
}

TEST_CASE("certify_refinement") {
  WeightedComplex coarse;
  coarse.ambient = 1;
  coarse.dim = 1;
  coarse.cells = {Poly::whole_space(1)};
  coarse.weights[0] = Rat(3);

  WeightedComplex fine;
  fine.ambient = 1;
  fine.dim = 1;
  fine.cells = {Poly::cone(1, {}, {IntVec{1}}), Poly::cone(1, {}, {IntVec{-1}}),
                Poly::cone_hull(1, {})};
  fine.weights[0] = Rat(3);
  fine.weights[1] = Rat(3);

  auto map = certify_refinement(fine, coarse);
  REQUIRE(map.has_value());
  CHECK(map->cell_assignment == std::vector<int>{0, 0, 0});

  fine.weights[1] = Rat(2);  // weight pull-back broken
  CHECK(!certify_refinement(fine, coarse).has_value());
}
