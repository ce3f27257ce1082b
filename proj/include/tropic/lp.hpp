#pragma once
// Exact rational linear programming, feasibility-first. Variables are free;
// the wrapper handles equalities, inequalities and strict inequalities
// (strictness via an auxiliary margin variable).

#include <optional>

#include "tropic/vecmat.hpp"

namespace tropic {

enum class LpStatus { Infeasible, Optimal, Unbounded };

struct LpResult {
  LpStatus status;
  Rat value;   // objective value when Optimal
  RatVec x;    // optimizer (or feasible point) when not Infeasible
};

// maximize obj . x  subject to  A_eq x = b_eq,  A_ge x >= b_ge  (x free)
struct LinProblem {
  int nvars = 0;
  RatMat A_eq{0, 0};
  RatVec b_eq;
  RatMat A_ge{0, 0};
  RatVec b_ge;
  RatVec obj;  // empty = pure feasibility

  void add_eq(const RatVec& row, const Rat& rhs);
  void add_ge(const RatVec& row, const Rat& rhs);
};

LpResult lp_solve(const LinProblem& p);

// Feasibility of {eq = 0-rhs, ge, gt} systems with strict rows: returns a
// point satisfying every strict row strictly, or nullopt if none exists.
struct StrictSystem {
  int nvars = 0;
  RatMat A_eq{0, 0};
  RatVec b_eq;
  RatMat A_ge{0, 0};
  RatVec b_ge;
  RatMat A_gt{0, 0};
  RatVec b_gt;
};

std::optional<RatVec> strict_feasible_point(const StrictSystem& s);

}  // namespace tropic
