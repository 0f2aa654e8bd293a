#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "currents/character.hpp"
#include "currents/linalg.hpp"
#include "currents/root_system.hpp"

namespace currents {

// Chevalley generator of the underlying simple Lie algebra.
enum class GenKind { E, F, H };

struct Gen {
  GenKind kind;
  int idx;  // 1-based simple root index

  bool operator==(const Gen& o) const { return kind == o.kind && idx == o.idx; }
};

// All generators in a fixed order: e_1..e_r, f_1..f_r, h_1..h_r.
std::vector<Gen> all_generators(int rank);
int gen_flat_index(const Gen& g, int rank);
std::string to_string(const Gen& g);

struct BasisVector {
  Weight weight;
  int degree = 0;  // q-grading; filtration top-degree for filtered modules
};

// Finite-dimensional truncation of a module over the current algebra:
// a weight-and-degree-labeled basis plus one exact sparse matrix per
// generator (x, s), x a Chevalley generator, 0 <= s <= cap.
class CurrentModule {
 public:
  CurrentModule(std::shared_ptr<const RootSystem> rs, int cap)
      : rs_(std::move(rs)), cap_(cap) {}

  const RootSystem& root_system() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
  int rank() const { return rs_->rank(); }
  int cap() const { return cap_; }
  std::int32_t dim() const { return static_cast<std::int32_t>(basis_.size()); }
  const std::vector<BasisVector>& basis() const { return basis_; }
  const BasisVector& basis_vector(std::int32_t i) const { return basis_[i]; }

  bool graded() const { return graded_; }
  void set_graded(bool g) { graded_ = g; }
  // Whether the module is the whole object (finite) rather than a
  // degreewise-exact truncation at the cap.
  bool complete() const { return complete_; }
  void set_complete(bool c) { complete_ = c; }

  std::optional<std::int32_t> cyclic_vector() const { return cyclic_; }
  void set_cyclic_vector(std::int32_t i) { cyclic_ = i; }

  std::int32_t add_basis_vector(Weight w, int degree);
  // Action matrices are built empty on first access.
  SparseMat& action(const Gen& g, int s);
  const SparseMat& action(const Gen& g, int s) const;
  bool action_is_zero(const Gen& g, int s) const;

  SparseVec apply(const Gen& g, int s, const SparseVec& v) const;

  // Weight shift of x tensor t^s (independent of s).
  Weight weight_shift(const Gen& g) const;

  Character character() const;
  Character ungraded_character() const;

  // Dimension table per (weight, degree) in the character JSON scheme.
  nlohmann::ordered_json dimension_table_json() const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  int cap_;
  bool graded_ = true;
  bool complete_ = true;
  std::optional<std::int32_t> cyclic_;
  std::vector<BasisVector> basis_;
  // actions_[flat gen][s]
  std::vector<std::vector<SparseMat>> actions_;
  void ensure_tables();
};

// Verifies the commutator law [x t^a, y t^b] = [x,y] t^{a+b} for every
// stored generator pair whose bracket is again storable (zero, a Cartan
// multiple, or a single Chevalley generator), for a + b <= cap.  Returns an
// explanation of the first failure, or nullopt if the law holds.
std::optional<std::string> lie_action_violation(const CurrentModule& m);

// Fixpoint closure of the span of the seeds under the given generator set.
EchelonBasis span_closure(const CurrentModule& m,
                          const std::vector<SparseVec>& seeds,
                          const std::vector<std::pair<Gen, int>>& gens);
std::vector<std::pair<Gen, int>> all_generator_powers(const CurrentModule& m);

// Submodule on an action-closed row basis, with the induced action.
// Degrees are taken from `degrees` when given (e.g. filtration stages),
// otherwise from the leading ambient basis vector of each row.
CurrentModule restrict_to_rows(const CurrentModule& m, const EchelonBasis& rows,
                               const std::vector<int>* degrees = nullptr);

// Quotient by the action closure of the given relation seeds.
struct QuotientModule {
  CurrentModule mod;
  std::vector<std::int32_t> representative_indices;
  EchelonBasis relations;
  // Quotient coordinates of (v mod relations).
  SparseVec project(const SparseVec& v) const;
};
QuotientModule quotient_by_relations(const CurrentModule& m,
                                     const std::vector<SparseVec>& seeds);

}  // namespace currents
