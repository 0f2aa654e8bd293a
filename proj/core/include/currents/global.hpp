#pragma once

#include "currents/fusion.hpp"
#include "currents/hw_algebra.hpp"
#include "currents/module_ops.hpp"

namespace currents {

// M[t] = M tensor C[t] with the action
//   (x t^l)(m t^k) = sum_j (-1)^{l-j} binom(l,j) (x t^j m) t^{l+k-j},
// truncated at total degree cap.  Requires M graded, complete and cyclic
// with the positive-degree Cartan currents killing the cyclic vector.
struct PromotedModule {
  CurrentModule mod;
  // basis index -> (index in M, power of t)
  std::vector<std::pair<std::int32_t, int>> pairs;
  std::map<std::pair<std::int32_t, int>, std::int32_t> index;
};
PromotedModule promote(const CurrentModule& m, int cap);

// Cyclic span of the product of the factors' cyclic vectors inside the
// tensor product of their promotions, truncated at total degree cap;
// carries the commuting right action of the Cartan currents (the
// highest-weight algebra generators) restricted to the span.
struct GlobalModule {
  CurrentModule mod;            // graded, cyclic vector at index 0
  std::vector<Weight> factor_hw;  // highest weights of the factors
  // hw_gen_action[i-1][s-1]: right action of h_i t^s, 1 <= s <= cap.
  std::vector<std::vector<SparseMat>> hw_gen_action;

  int cap() const { return mod.cap(); }
  // <factor_hw[j], h_i> lookup used by fiber relations.
  int pairing(int j, int i) const { return factor_hw[j].coords[i - 1]; }
};
GlobalModule global_module(const std::vector<const CurrentModule*>& factors,
                           int cap);

// Global Demazure-type module for a collection of dominant coweights.
GlobalModule global_demazure(std::shared_ptr<const RootSystem> rs, int level,
                             const std::vector<Coweight>& lambdas, int cap);

// Fiber at the origin: quotient by the saturated span of the positive-degree
// Cartan currents applied to the cyclic vector.  Graded; exact per degree.
CurrentModule fiber_at_origin(const GlobalModule& r);

// Fiber at a rational point: quotient by the saturated span of
// (h_i t^s - sum_j <hw_j, h_i> c_j^s) v, s >= 1.  The relations are
// inhomogeneous, so a single cap gives only an approximation; the result
// records the quotient dimension for the stabilization policy.
struct FiberResult {
  Character ungraded;   // weights only (q = 0)
  std::int64_t dim = 0;
};
FiberResult fiber_at_point(const GlobalModule& r, const std::vector<Rat>& c);

// Stabilization policy: computes the fiber at caps D and D+1 and accepts
// only if the two quotients agree; otherwise throws InconclusiveAtCapError.
FiberResult fiber_at_point_checked(std::shared_ptr<const RootSystem> rs,
                                   int level,
                                   const std::vector<Coweight>& lambdas,
                                   const std::vector<Rat>& c, int cap);

// The ell-th cyclic power over the highest-weight algebra: the tensor power
// of R over its commuting algebra, followed by the cyclic span of the
// power of the cyclic vector.
CurrentModule cyclic_power_over_hw(const GlobalModule& r, int ell);

// Base change of the global module along the inclusion of its
// highest-weight algebra into the product of the factors' one-variable
// highest-weight algebras: realized directly as the current-algebra
// saturation of the product of the factors' highest-weight lines inside
// the tensor product of their promotions.
CurrentModule hw_base_change(std::shared_ptr<const RootSystem> rs, int level,
                             const std::vector<Coweight>& lambdas, int cap);

// Graded character of the dual of the global module over its
// highest-weight algebra: Hilbert series times the q-inverted character of
// the fiber at the origin.  Refuses to run when the freeness identity
// fails at the cap.
Character dual_character(std::shared_ptr<const RootSystem> rs, int level,
                         const std::vector<Coweight>& lambdas, int cap);

}  // namespace currents
