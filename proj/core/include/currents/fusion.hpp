#pragma once

#include "currents/module_ops.hpp"

namespace currents {

// Fusion product of graded cyclic modules at pairwise distinct rational
// points: the associated graded of the twisted tensor product with respect
// to the t-degree filtration through the product of cyclic vectors.
// The result is graded, complete and cyclic (cyclic vector at index 0,
// degree 0); its tables cover max(cap, top filtration degree).
CurrentModule fusion_product(const std::vector<const CurrentModule*>& modules,
                             const std::vector<Rat>& points, int cap);

// Level-ell Demazure module of highest weight ell * iota(lambda), realized
// as the fusion of fundamental evaluation modules followed by the ell-th
// cyclic power.  `points` overrides the default evaluation points 0,1,2,...
CurrentModule demazure_module(std::shared_ptr<const RootSystem> rs, int level,
                              const Coweight& lambda, int cap);
CurrentModule demazure_module(std::shared_ptr<const RootSystem> rs, int level,
                              const Coweight& lambda, int cap,
                              const std::vector<Rat>& points);

}  // namespace currents
