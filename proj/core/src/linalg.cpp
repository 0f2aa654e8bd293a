#include "currents/linalg.hpp"

#include <algorithm>

namespace currents {

SparseVec SparseVec::unit(std::int32_t index, const Rat& value) {
  SparseVec v;
  if (!is_zero(value)) v.entries_.push_back({index, value});
  return v;
}

Rat SparseVec::coeff(std::int32_t index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry& e, std::int32_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Rat(0);
}

void SparseVec::set(std::int32_t index, const Rat& value) {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry& e, std::int32_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) {
    if (is_zero(value)) entries_.erase(it);
    else it->second = value;
  } else if (!is_zero(value)) {
    entries_.insert(it, {index, value});
  }
}

void SparseVec::scale(const Rat& c) {
  if (is_zero(c)) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= c;
}

void SparseVec::add_scaled(const SparseVec& other, const Rat& c) {
  if (is_zero(c) || other.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() ||
        (a != entries_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.push_back({b->first, c * b->second});
      ++b;
    } else {
      Rat s = a->second + c * b->second;
      if (!is_zero(s)) out.push_back({a->first, std::move(s)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

bool SparseMat::is_zero() const {
  for (std::int32_t j = 0; j < cols_; ++j)
    if (!columns_[j].empty()) return false;
  return true;
}

void SparseMat::add_entry(std::int32_t row, std::int32_t col, const Rat& value) {
  if (is_zero(value)) return;
  auto& c = columns_.at(col);
  auto it = std::lower_bound(
      c.begin(), c.end(), row,
      [](const SparseVec::Entry& e, std::int32_t i) { return e.first < i; });
  if (it != c.end() && it->first == row) {
    it->second += value;
    if (currents::is_zero(it->second)) c.erase(it);
  } else {
    c.insert(it, {row, value});
  }
}

SparseVec SparseMat::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [j, c] : v.entries()) {
    SparseVec col;
    for (const auto& e : columns_.at(j)) col.set(e.first, e.second);
    out.add_scaled(col, c);
  }
  return out;
}

SparseVec SparseMat::apply_unit(std::int32_t j) const {
  SparseVec out;
  for (const auto& e : columns_.at(j)) out.set(e.first, e.second);
  return out;
}

SparseMat SparseMat::commutator(const SparseMat& a, const SparseMat& b) {
  SparseMat c(a.rows(), b.cols());
  for (std::int32_t j = 0; j < b.cols(); ++j) {
    SparseVec ab = a.apply(b.apply_unit(j));
    SparseVec ba = b.apply(a.apply_unit(j));
    ab.add_scaled(ba, Rat(-1));
    for (const auto& e : ab.entries()) c.add_entry(e.first, j, e.second);
  }
  return c;
}

bool SparseMat::operator==(const SparseMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  return columns_ == o.columns_;
}

EchelonBasis::EchelonBasis(std::int32_t ambient_dim)
    : ambient_dim_(ambient_dim) {}

SparseVec EchelonBasis::reduce(SparseVec v) const {
  while (!v.empty()) {
    auto it = pivot_row_.find(v.leading_index());
    if (it == pivot_row_.end()) {
      // The leading index is clear; check deeper entries too.
      bool touched = false;
      for (const auto& [idx, c] : v.entries()) {
        auto jt = pivot_row_.find(idx);
        if (jt != pivot_row_.end()) {
          v.add_scaled(rows_[jt->second], -c);
          touched = true;
          break;
        }
      }
      if (!touched) return v;
    } else {
      v.add_scaled(rows_[it->second], -v.leading_value());
    }
  }
  return v;
}

std::optional<std::size_t> EchelonBasis::insert(SparseVec v, int stage) {
  v = reduce(std::move(v));
  if (v.empty()) return std::nullopt;
  Rat inv = 1 / v.leading_value();
  v.scale(inv);
  const std::size_t id = rows_.size();
  pivot_row_[v.leading_index()] = id;
  rows_.push_back(std::move(v));
  stages_.push_back(stage);
  return id;
}

std::optional<std::vector<std::pair<std::size_t, Rat>>> EchelonBasis::solve(
    SparseVec v) const {
  std::vector<std::pair<std::size_t, Rat>> coeffs;
  while (!v.empty()) {
    auto it = pivot_row_.find(v.leading_index());
    if (it == pivot_row_.end()) {
      bool touched = false;
      for (const auto& [idx, c] : v.entries()) {
        auto jt = pivot_row_.find(idx);
        if (jt != pivot_row_.end()) {
          coeffs.push_back({jt->second, c});
          v.add_scaled(rows_[jt->second], -c);
          touched = true;
          break;
        }
      }
      if (!touched) return std::nullopt;
    } else {
      Rat c = v.leading_value();
      coeffs.push_back({it->second, c});
      v.add_scaled(rows_[it->second], -c);
    }
  }
  // Merge repeated row ids (a row can be hit more than once).
  std::sort(coeffs.begin(), coeffs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::size_t, Rat>> merged;
  for (auto& [id, c] : coeffs) {
    if (!merged.empty() && merged.back().first == id) merged.back().second += c;
    else merged.push_back({id, c});
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const auto& p) { return is_zero(p.second); }),
               merged.end());
  return merged;
}

std::vector<std::int32_t> EchelonBasis::non_pivot_indices() const {
  std::vector<std::int32_t> out;
  for (std::int32_t i = 0; i < ambient_dim(); ++i)
    if (!is_pivot(i)) out.push_back(i);
  return out;
}

std::vector<SparseVec> exact_span(const std::vector<SparseVec>& vectors,
                                  std::int32_t ambient_dim) {
  for (const auto& v : vectors)
    if (!v.empty() && v.entries().back().first >= ambient_dim)
      throw DimensionMismatchError("exact_span: vector exceeds ambient dimension");
  EchelonBasis basis(ambient_dim);
  for (const auto& v : vectors) basis.insert(v);
  // Back-substitute for a fully reduced (canonical) echelon form.
  std::vector<SparseVec> rows = basis.rows();
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rows[a].leading_index() < rows[b].leading_index();
  });
  std::vector<SparseVec> reduced;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    SparseVec r = rows[*it];
    for (const auto& done : reduced) {
      Rat c = r.coeff(done.leading_index());
      if (!is_zero(c)) r.add_scaled(done, -c);
    }
    reduced.push_back(std::move(r));
  }
  std::reverse(reduced.begin(), reduced.end());
  return reduced;
}

SparseVec QuotientSpace::project(const SparseVec& v) const {
  SparseVec residue = sub.reduce(v);
  SparseVec out;
  for (const auto& [idx, c] : residue.entries()) {
    auto it = std::lower_bound(representative_indices.begin(),
                               representative_indices.end(), idx);
    if (it == representative_indices.end() || *it != idx)
      throw Error("quotient projection: residue off the representative set");
    out.set(static_cast<std::int32_t>(it - representative_indices.begin()), c);
  }
  return out;
}

QuotientSpace subspace_quotient(std::int32_t ambient_dim,
                                const std::vector<SparseVec>& sub) {
  EchelonBasis basis(ambient_dim);
  for (const auto& v : sub) {
    if (!v.empty() && v.entries().back().first >= ambient_dim)
      throw DimensionMismatchError(
          "subspace_quotient: vector exceeds ambient dimension");
    basis.insert(v);
  }
  QuotientSpace q{basis.non_pivot_indices(), std::move(basis)};
  return q;
}

}  // namespace currents
