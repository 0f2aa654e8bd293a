#include "currents/character.hpp"

#include <cstdlib>
#include <sstream>

namespace currents {

std::int64_t Character::coeff(const Weight& w, int q) const {
  auto it = terms_.find({q, w.coords});
  return it == terms_.end() ? 0 : it->second;
}

void Character::add_term(const Weight& w, int q, std::int64_t c) {
  if (c == 0 || std::abs(q) > cap_) return;
  Key k{q, w.coords};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Character& Character::operator+=(const Character& o) {
  for (const auto& [k, c] : o.terms_) add_term(Weight(k.second), k.first, c);
  return *this;
}

Character Character::operator*(const Character& o) const {
  Character out(std::min(cap_, o.cap_));
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      const int q = ka.first + kb.first;
      if (std::abs(q) > out.cap_) continue;
      std::vector<int> w = ka.second;
      for (std::size_t i = 0; i < w.size() && i < kb.second.size(); ++i)
        w[i] += kb.second[i];
      if (kb.second.size() > w.size())
        throw DimensionMismatchError("character product: rank mismatch");
      out.add_term(Weight(std::move(w)), q, ca * cb);
    }
  }
  return out;
}

Character Character::q_slice(int q) const {
  Character out(cap_);
  for (const auto& [k, c] : terms_)
    if (k.first == q) out.add_term(Weight(k.second), 0, c);
  return out;
}

Character Character::ungraded() const {
  Character out(cap_);
  for (const auto& [k, c] : terms_) out.add_term(Weight(k.second), 0, c);
  return out;
}

Character Character::q_inverted() const {
  Character out(cap_);
  for (const auto& [k, c] : terms_) out.add_term(Weight(k.second), -k.first, c);
  return out;
}

Character Character::times_inv_one_minus_q(int k) const {
  // Multiplication by the truncated geometric series 1 + q + q^2 + ...,
  // repeated k times.  Exact within the q-window.
  Character out = *this;
  for (int rep = 0; rep < k; ++rep) {
    Character next(cap_);
    for (const auto& [key, c] : out.terms_) {
      for (int j = 0; key.first + j <= cap_; ++j)
        next.add_term(Weight(key.second), key.first + j, c);
    }
    out = std::move(next);
  }
  return out;
}

Character Character::window(int lo, int hi) const {
  Character out(cap_);
  for (const auto& [k, c] : terms_)
    if (k.first >= lo && k.first <= hi) out.add_term(Weight(k.second), k.first, c);
  return out;
}

std::int64_t Character::dim_at(int q) const {
  std::int64_t d = 0;
  for (const auto& [k, c] : terms_)
    if (k.first == q) d += c;
  return d;
}

std::int64_t Character::total_dim() const {
  std::int64_t d = 0;
  for (const auto& [k, c] : terms_) d += c;
  return d;
}

bool Character::is_weyl_invariant(const RootSystem& rs) const {
  for (int i = 1; i <= rs.rank(); ++i) {
    for (const auto& [k, c] : terms_) {
      Weight w = rs.reflect(i, Weight(k.second));
      if (coeff(w, k.first) != c) return false;
    }
  }
  return true;
}

nlohmann::ordered_json Character::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [k, c] : terms_) {
    nlohmann::ordered_json rec;
    rec["weight"] = k.second;
    rec["q"] = k.first;
    rec["coeff"] = c;
    arr.push_back(std::move(rec));
  }
  return arr;
}

std::string Character::to_csv() const {
  std::ostringstream os;
  std::size_t rank = terms_.empty() ? 0 : terms_.begin()->first.second.size();
  os << "q";
  for (std::size_t i = 1; i <= rank; ++i) os << ",w" << i;
  os << ",coeff\n";
  for (const auto& [k, c] : terms_) {
    os << k.first;
    for (int w : k.second) os << ',' << w;
    os << ',' << c << '\n';
  }
  return os.str();
}

std::string Character::pretty() const {
  std::ostringstream os;
  int current_q = 0;
  bool first_slice = true;
  bool open = false;
  for (const auto& [k, c] : terms_) {
    if (first_slice || k.first != current_q) {
      if (open) os << '\n';
      current_q = k.first;
      first_slice = false;
      open = true;
      os << "q^" << current_q << ": ";
    } else {
      os << " + ";
    }
    if (c != 1) os << c << "*";
    bool has_var = false;
    for (std::size_t i = 0; i < k.second.size(); ++i) {
      if (k.second[i] != 0) {
        if (has_var) os << "*";
        os << "z" << (i + 1);
        if (k.second[i] != 1) os << "^" << k.second[i];
        has_var = true;
      }
    }
    if (!has_var && c == 1) os << "1";
  }
  if (open) os << '\n';
  return os.str();
}

}  // namespace currents
