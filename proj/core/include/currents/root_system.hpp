#pragma once

#include <string>
#include <vector>

#include "currents/errors.hpp"

namespace currents {

// Integral weight in fundamental-weight coordinates: coords[i] is the
// pairing with the i-th simple coroot.  The additive group law is
// componentwise; dominance means all coordinates nonnegative.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_dominant() const;
  bool is_zero() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(int n) const;
  bool operator==(const Weight& o) const { return coords == o.coords; }
  bool operator!=(const Weight& o) const { return coords != o.coords; }
  bool operator<(const Weight& o) const { return coords < o.coords; }
};

// Integral coweight in fundamental-coweight coordinates.  Kept as a distinct
// strong type: coweights label the module collections, weights label the
// h-eigenvalues.
struct Coweight {
  std::vector<int> coords;

  Coweight() = default;
  explicit Coweight(std::vector<int> c) : coords(std::move(c)) {}

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_dominant() const;
  bool is_zero() const;
  // |lambda| = sum of fundamental multiplicities (dominant coweights only).
  int height() const;

  Coweight operator+(const Coweight& o) const;
  Coweight operator*(int n) const;
  bool operator==(const Coweight& o) const { return coords == o.coords; }
  bool operator<(const Coweight& o) const { return coords < o.coords; }
};

std::string to_string(const Weight& w);
std::string to_string(const Coweight& w);

// Cartan data for a simple Lie algebra plus the finite Weyl group, realized
// as integer matrices on fundamental-weight coordinates.  Module
// constructions are supported for the type A labels only; arbitrary valid
// Cartan matrices of rank <= 4 can still be stored for lattice/Weyl group
// bookkeeping.
class RootSystem {
 public:
  // label in {"A1","A2","A3"}.
  static RootSystem build(const std::string& type_label);
  // Bookkeeping constructor for any valid Cartan matrix of rank <= 4.
  static RootSystem from_cartan(std::vector<std::vector<int>> cartan);

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  bool is_type_a() const { return type_a_; }

  // i-th simple root written in the fundamental-weight basis (1-based i).
  Weight simple_root(int i) const;

  // s_i(mu) = mu - <mu, alpha_i^vee> alpha_i, 1-based i.
  Weight reflect(int i, const Weight& mu) const;
  // Applies the word left to right: word (i1,...,im) acts as s_i1 ... s_im.
  Weight weyl_act(const std::vector<int>& word, const Weight& mu) const;

  // Full Weyl group as matrices on weight coordinates (row-major, acting on
  // column coordinate vectors).  Enumerated once at construction.
  const std::vector<std::vector<std::vector<int>>>& weyl_elements() const {
    return weyl_;
  }
  std::size_t weyl_order() const { return weyl_.size(); }
  Weight apply_weyl(std::size_t element, const Weight& mu) const;
  // Index of the longest element (the unique one sending the dominant cone
  // to the antidominant cone).
  std::size_t longest_element() const { return w0_; }

  // The level-one identification of coweights with weights; the identity
  // matrix in the fundamental bases for the simply-laced types supported
  // here.
  Weight coweight_to_weight(const Coweight& cw) const;

  // Dominant lambda = sum m_i omega_i as the list of fundamental indices
  // (1-based), each repeated m_i times, in increasing index order.
  std::vector<int> dominant_decompose(const Coweight& cw) const;
  Coweight fundamental_coweight(int i) const;
  Weight fundamental_weight(int i) const;

 private:
  RootSystem() = default;
  void enumerate_weyl();

  std::string label_;
  int rank_ = 0;
  bool type_a_ = false;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<std::vector<int>>> weyl_;
  std::size_t w0_ = 0;
};

}  // namespace currents
