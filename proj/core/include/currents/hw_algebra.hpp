#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "currents/linalg.hpp"
#include "currents/root_system.hpp"

namespace currents {

// The commutative highest-weight algebra of a global module attached to a
// collection of dominant coweights: the subalgebra of Q[z_1..z_k] generated
// by the weighted power sums
//   sum_j <hw_j, h_i> z_j^s,  s >= 1, i = 1..r,
// with per-degree bases and Hilbert coefficients up to the cap.
struct HwAlgebra {
  int k = 0;                                // number of variables
  std::vector<std::vector<int>> pairings;   // [j][i-1] = <hw_j, h_i>
  // bases[d]: reduced basis of the degree-d component, as coefficient
  // vectors over the degree-d monomials of Q[z_1..z_k] in lex order.
  std::vector<std::vector<SparseVec>> bases;
  std::vector<std::int64_t> hilbert;        // dims per degree, 0..cap

  int cap() const { return static_cast<int>(hilbert.size()) - 1; }
};

HwAlgebra build_hw_algebra(const RootSystem& rs,
                           const std::vector<Coweight>& lambdas, int cap);

// Closed-form Hilbert series of the algebra for a single dominant coweight
// lambda = sum m_i omega_i: prod_i prod_{j<=m_i} (1-q^j)^{-1}, truncated.
std::vector<std::int64_t> hilbert_from_partition(const RootSystem& rs,
                                                 const Coweight& lambda,
                                                 int cap);

// Independent recomputation of the Hilbert series from the colored
// configuration arrangement: restrict the symmetric-group invariants of the
// big polynomial ring to the saturated diagonal subspace, degree by degree.
std::vector<std::int64_t> hilbert_via_arrangement(
    const RootSystem& rs, const std::vector<Coweight>& lambdas, int cap);

// Verifies the surjection from the algebra of the full fundamental
// decomposition of sum(lambdas) onto the algebra of the collection, via the
// variable-identification map, degree by degree up to the cap.
struct SurjectionReport {
  bool ok = true;
  int witness_degree = -1;
  std::vector<std::int64_t> source_hilbert;
  std::vector<std::int64_t> target_hilbert;
};
SurjectionReport check_surjection(const RootSystem& rs,
                                  const std::vector<Coweight>& lambdas,
                                  int cap);

// Monomials of total degree d in k variables, lexicographic, as exponent
// vectors.  Shared by the hw-algebra computations and their tests.
std::vector<std::vector<int>> monomials_of_degree(int k, int d);

}  // namespace currents
