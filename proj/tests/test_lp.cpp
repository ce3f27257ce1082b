#include "doctest.h"
#include "tropic/lp.hpp"

using namespace tropic;

TEST_CASE("lp feasibility and optimization") {
  SUBCASE("bounded maximum") {
    // max x + y st x <= 2, y <= 3, x,y >= 0
    LinProblem p;
    p.nvars = 2;
    p.add_ge({Rat(-1), Rat(0)}, Rat(-2));
    p.add_ge({Rat(0), Rat(-1)}, Rat(-3));
    p.add_ge({Rat(1), Rat(0)}, Rat(0));
    p.add_ge({Rat(0), Rat(1)}, Rat(0));
    p.obj = {Rat(1), Rat(1)};
    auto r = lp_solve(p);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == 5);
  }
  SUBCASE("infeasible") {
    LinProblem p;
    p.nvars = 1;
    p.add_ge({Rat(1)}, Rat(1));
    p.add_ge({Rat(-1)}, Rat(0));  // x <= 0 and x >= 1
    auto r = lp_solve(p);
    CHECK(r.status == LpStatus::Infeasible);
  }
  SUBCASE("unbounded") {
    LinProblem p;
    p.nvars = 1;
    p.add_ge({Rat(1)}, Rat(0));
    p.obj = {Rat(1)};
    CHECK(lp_solve(p).status == LpStatus::Unbounded);
  }
  SUBCASE("equality with fractions") {
    // max y st 2x + 3y = 1, y <= 1/7
    LinProblem p;
    p.nvars = 2;
    p.add_eq({Rat(2), Rat(3)}, Rat(1));
    p.add_ge({Rat(0), Rat(-1)}, Rat(-1, 7));
    p.obj = {Rat(0), Rat(1)};
    auto r = lp_solve(p);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == Rat(1, 7));
    CHECK(r.x[0] == (Rat(1) - Rat(3, 7)) / 2);
  }
}

TEST_CASE("strict_feasible_point") {
  SUBCASE("open quadrant") {
    StrictSystem s;
    s.nvars = 2;
    s.A_gt = RatMat{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    s.b_gt = {Rat(0), Rat(0)};
    auto pt = strict_feasible_point(s);
    REQUIRE(pt.has_value());
    CHECK((*pt)[0] > 0);
    CHECK((*pt)[1] > 0);
  }
  SUBCASE("strictness cannot hold on a forced equality") {
    StrictSystem s;
    s.nvars = 1;
    s.A_eq = RatMat{{Rat(1)}};
    s.b_eq = {Rat(0)};
    s.A_gt = RatMat{{Rat(1)}};
    s.b_gt = {Rat(0)};
    CHECK(!strict_feasible_point(s).has_value());
  }
  SUBCASE("empty system is feasible") {
    StrictSystem s;
    s.nvars = 2;
    CHECK(strict_feasible_point(s).has_value());
  }
}
