#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "currents/errors.hpp"
#include "currents/rational.hpp"

namespace currents {

// Sparse rational vector: entries sorted by index, no explicit zeros.
class SparseVec {
 public:
  using Entry = std::pair<std::int32_t, Rat>;

  SparseVec() = default;
  static SparseVec unit(std::int32_t index, const Rat& value = Rat(1));

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  std::int32_t leading_index() const { return entries_.front().first; }
  const Rat& leading_value() const { return entries_.front().second; }
  const std::vector<Entry>& entries() const { return entries_; }

  Rat coeff(std::int32_t index) const;
  void set(std::int32_t index, const Rat& value);  // build helper, keeps order
  void scale(const Rat& c);
  // *this += c * other (merged in one pass).
  void add_scaled(const SparseVec& other, const Rat& c);

  bool operator==(const SparseVec& o) const { return entries_ == o.entries_; }

 private:
  std::vector<Entry> entries_;
};

// Sparse matrix stored by column: column j lists the image of basis vector j.
// Shapes are rows x cols; apply() computes A*v.
class SparseMat {
 public:
  SparseMat() = default;
  SparseMat(std::int32_t rows, std::int32_t cols)
      : rows_(rows), cols_(cols), columns_(cols) {}

  std::int32_t rows() const { return rows_; }
  std::int32_t cols() const { return cols_; }
  bool is_zero() const;

  void add_entry(std::int32_t row, std::int32_t col, const Rat& value);
  const std::vector<SparseVec::Entry>& column(std::int32_t j) const {
    return columns_[j];
  }

  SparseVec apply(const SparseVec& v) const;
  SparseVec apply_unit(std::int32_t j) const;

  // C = A*B - B*A, materialized densely column by column (small matrices).
  static SparseMat commutator(const SparseMat& a, const SparseMat& b);
  bool operator==(const SparseMat& o) const;

 private:
  std::int32_t rows_ = 0, cols_ = 0;
  // Unsorted within a column while building; finalize() sorts and merges.
  std::vector<std::vector<SparseVec::Entry>> columns_;
  void normalize_column(std::int32_t j);
  mutable std::vector<bool> dirty_;
};

// Row-echelon basis of a subspace of Q^n, reduced forward only (rows are
// never rewritten once inserted, so filtration stages stay meaningful).
// Pivot = lowest nonzero index of the row; rows are normalized to pivot 1.
// Reduction of a homogeneous vector only ever touches rows supported in the
// same weight/degree block, so the closure runs blockwise without explicit
// bucketing.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::int32_t ambient_dim);

  std::size_t dim() const { return rows_.size(); }
  std::int32_t ambient_dim() const { return ambient_dim_; }

  // Reduces v against the basis; returns the residue (empty iff v is in the
  // span).  The residue has no support on pivot indices.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  // Inserts v if independent; returns the new row id, or nullopt.
  std::optional<std::size_t> insert(SparseVec v, int stage = 0);

  // Writes v as a combination of rows; nullopt if v is not in the span.
  std::optional<std::vector<std::pair<std::size_t, Rat>>> solve(
      SparseVec v) const;

  const SparseVec& row(std::size_t id) const { return rows_[id]; }
  int stage(std::size_t id) const { return stages_[id]; }
  const std::vector<SparseVec>& rows() const { return rows_; }

  bool is_pivot(std::int32_t index) const {
    return pivot_row_.count(index) > 0;
  }
  // Ambient indices that are not pivots, in increasing order: a basis of the
  // quotient by the span.
  std::vector<std::int32_t> non_pivot_indices() const;

 private:
  std::int32_t ambient_dim_;
  std::vector<SparseVec> rows_;
  std::vector<int> stages_;
  std::unordered_map<std::int32_t, std::size_t> pivot_row_;
};

// Row-reduced span of a list of vectors (fully reduced echelon form with
// pivot-1 normalization; deterministic for a fixed input order).
std::vector<SparseVec> exact_span(const std::vector<SparseVec>& vectors,
                                  std::int32_t ambient_dim);

// Quotient of Q^ambient_dim by the span of sub.  Returns the list of ambient
// indices representing the quotient basis and a projection function mapping
// an ambient vector to quotient coordinates.
struct QuotientSpace {
  std::vector<std::int32_t> representative_indices;
  EchelonBasis sub;  // reduced subspace basis

  std::int32_t dim() const {
    return static_cast<std::int32_t>(representative_indices.size());
  }
  // Coordinates of (v mod sub) on the representative basis.
  SparseVec project(const SparseVec& v) const;
};

QuotientSpace subspace_quotient(std::int32_t ambient_dim,
                                const std::vector<SparseVec>& sub);

}  // namespace currents
