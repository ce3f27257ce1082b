#pragma once
// Rational functions on orbit spaces and their divisors.

#include "tropic/orbit.hpp"

namespace tropic {

// Piecewise affine function, one affine piece per representative cell of the
// orbit space; extended to translates by invariance. Linear parts may be
// rational (the moduli functions carry half-integer coefficients on the
// ambient coordinates while staying integral on the relevant lattices).
struct RationalFn {
  std::vector<RatVec> linear;  // per cell
  RatVec offset;               // per cell

  Rat value_on(int cell, const RatVec& x) const {
    Rat s = offset[cell];
    for (size_t i = 0; i < x.size(); ++i)
      if (linear[cell][i] != 0) s += linear[cell][i] * x[i];
    return s;
  }
};

struct FnReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

// Continuity across shared faces of representatives and their bounded-word
// translates, and G-invariance (f ∘ g = f).
FnReport validate_rational_fn(const RationalFn& fn, const OrbitSpace& S);

struct DivisorResult {
  OrbitSpace skeleton;              // cells of dimension <= dim-1 (reps)
  std::vector<int> zero_weight;     // codim-1 reps whose divisor weight is 0
  std::map<int, Rat> weight_by_rep; // divisor weights ω_φ on codim-1 reps
};

// The orbit space divisor φ·(X/G): weights on the codimension-1 skeleton via
//   ω_φ(τ) = Σ_{σ>τ} φ_σ(λ_{σ/τ} ω(σ) v_{σ/τ}) − φ_τ(Σ λ_{σ/τ} ω(σ) v_{σ/τ}),
// linear parts applied to the normal representatives. Requires a
// λ-certificate of S; throws if φ is not affine on some cell of the star.
DivisorResult divisor(const RationalFn& fn, const OrbitSpace& S,
                      const LambdaCertificate& cert);

}  // namespace tropic
