#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "currents/root_system.hpp"

namespace currents {

// Graded character: integer Laurent polynomial in the weight variables
// z_1..z_r and the grading variable q, truncated at |q-degree| <= cap.
// Terms are keyed by (q, weight) in lexicographic order, which is also the
// serialization order, so iteration and JSON output are deterministic.
class Character {
 public:
  using Key = std::pair<int, std::vector<int>>;  // (q degree, weight coords)

  explicit Character(int cap) : cap_(cap) {}

  int cap() const { return cap_; }
  bool empty() const { return terms_.empty(); }
  const std::map<Key, std::int64_t>& terms() const { return terms_; }

  std::int64_t coeff(const Weight& w, int q) const;
  void add_term(const Weight& w, int q, std::int64_t c);

  Character& operator+=(const Character& o);
  Character operator*(const Character& o) const;
  bool operator==(const Character& o) const { return terms_ == o.terms_; }
  bool operator!=(const Character& o) const { return !(*this == o); }

  // Restriction to a single q-degree (as a weight polynomial at q = 0).
  Character q_slice(int q) const;
  // Substitutes q -> 1 (forgets the grading).
  Character ungraded() const;
  // Substitutes q -> q^{-1}.
  Character q_inverted() const;
  // Multiplies by the truncated expansion of (1-q)^{-k}.
  Character times_inv_one_minus_q(int k) const;
  // Drops terms with q-degree outside [lo, hi].
  Character window(int lo, int hi) const;

  // Dimension of the q-degree-d piece / of everything.
  std::int64_t dim_at(int q) const;
  std::int64_t total_dim() const;

  // True if every q-slice is invariant under the finite Weyl group.
  bool is_weyl_invariant(const RootSystem& rs) const;

  // JSON: list of {"weight":[...],"q":n,"coeff":c} sorted by (q, weight).
  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;  // rows "q,w1,...,wr,coeff"
  std::string pretty() const;  // human-readable, one q-slice per line

 private:
  int cap_;
  std::map<Key, std::int64_t> terms_;
};

}  // namespace currents
