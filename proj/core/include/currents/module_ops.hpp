#pragma once

#include <map>
#include <memory>
#include <vector>

#include "currents/current_module.hpp"

namespace currents {

// One-dimensional trivial module (weight 0, degree 0).
CurrentModule trivial_module(std::shared_ptr<const RootSystem> rs, int cap);

// Irreducible evaluation module V(mu)(c): the highest-weight-mu module of
// the underlying simple Lie algebra with x t^s acting as c^s x.  Type A
// only; mu must be dominant.  Graded exactly when c = 0.
CurrentModule evaluation_module(std::shared_ptr<const RootSystem> rs,
                                const Weight& mu, const Rat& c, int cap);

// Twist by the line automorphism t -> t - c: the action of x t^l becomes
// the binomial expansion of x (t-c)^l in the original module.
CurrentModule twist(const CurrentModule& m, const Rat& c);

// Tensor product of several factors over the same root system, with tuple
// index bookkeeping retained.  If truncate is set and all factors are
// graded, basis tuples of total degree > cap are dropped (degreewise exact
// because the action never lowers degree).
struct TensorSpace {
  CurrentModule product;
  std::vector<std::vector<std::int32_t>> tuples;  // product index -> tuple
  std::map<std::vector<std::int32_t>, std::int32_t> index;

  std::int32_t index_of(const std::vector<std::int32_t>& tuple) const;
};
TensorSpace tensor_space(const std::vector<const CurrentModule*>& factors,
                         int cap, bool truncate);
CurrentModule tensor_product(const CurrentModule& a, const CurrentModule& b,
                             bool truncate = false);

// Smallest action-closed subspace containing v, as a module.
CurrentModule cyclic_span(const CurrentModule& m, const SparseVec& v);

// Cyclic power: the span of v^{tensor ell} inside M^{tensor ell}.
CurrentModule cyclic_power(const CurrentModule& m, int ell);

int top_degree(const CurrentModule& m);

}  // namespace currents
