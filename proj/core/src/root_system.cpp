#include "currents/root_system.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace currents {

namespace {

bool all_nonnegative(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

}  // namespace

bool Weight::is_dominant() const { return all_nonnegative(coords); }
bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int x) { return x == 0; });
}

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  for (int i = 0; i < rank(); ++i) r.coords[i] += o.coords[i];
  return r;
}
Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  for (int i = 0; i < rank(); ++i) r.coords[i] -= o.coords[i];
  return r;
}
Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}
Weight Weight::operator*(int n) const {
  Weight r = *this;
  for (auto& c : r.coords) c *= n;
  return r;
}

bool Coweight::is_dominant() const { return all_nonnegative(coords); }
bool Coweight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int x) { return x == 0; });
}
int Coweight::height() const {
  int h = 0;
  for (int c : coords) h += c;
  return h;
}
Coweight Coweight::operator+(const Coweight& o) const {
  Coweight r = *this;
  for (int i = 0; i < rank(); ++i) r.coords[i] += o.coords[i];
  return r;
}
Coweight Coweight::operator*(int n) const {
  Coweight r = *this;
  for (auto& c : r.coords) c *= n;
  return r;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < w.rank(); ++i) {
    if (i) os << ',';
    os << w.coords[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(const Coweight& w) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < w.rank(); ++i) {
    if (i) os << ',';
    os << w.coords[i];
  }
  os << ')';
  return os.str();
}

RootSystem RootSystem::build(const std::string& type_label) {
  int r = 0;
  if (type_label == "A1") r = 1;
  else if (type_label == "A2") r = 2;
  else if (type_label == "A3") r = 3;
  else throw UnsupportedTypeError("unsupported type label: " + type_label);

  std::vector<std::vector<int>> cartan(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) {
    cartan[i][i] = 2;
    if (i + 1 < r) cartan[i][i + 1] = cartan[i + 1][i] = -1;
  }
  RootSystem rs = from_cartan(std::move(cartan));
  rs.label_ = type_label;
  rs.type_a_ = true;
  return rs;
}

RootSystem RootSystem::from_cartan(std::vector<std::vector<int>> cartan) {
  const int r = static_cast<int>(cartan.size());
  if (r == 0 || r > 4)
    throw UnsupportedTypeError("rank must be between 1 and 4");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(cartan[i].size()) != r)
      throw DimensionMismatchError("cartan matrix is not square");
    if (cartan[i][i] != 2)
      throw UnsupportedTypeError("cartan diagonal must be 2");
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0)
        throw UnsupportedTypeError("cartan off-diagonal must be <= 0");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw UnsupportedTypeError("cartan zero pattern must be symmetric");
    }
  }
  RootSystem rs;
  rs.rank_ = r;
  rs.cartan_ = std::move(cartan);
  rs.label_ = "cartan";
  rs.enumerate_weyl();
  return rs;
}

Weight RootSystem::simple_root(int i) const {
  // alpha_i = sum_j c_{ji} omega_j: column i of the Cartan matrix.
  std::vector<int> c(rank_);
  for (int j = 0; j < rank_; ++j) c[j] = cartan_[j][i - 1];
  return Weight(std::move(c));
}

Weight RootSystem::reflect(int i, const Weight& mu) const {
  const int n = mu.coords.at(i - 1);
  Weight r = mu;
  const Weight alpha = simple_root(i);
  for (int j = 0; j < rank_; ++j) r.coords[j] -= n * alpha.coords[j];
  return r;
}

Weight RootSystem::weyl_act(const std::vector<int>& word, const Weight& mu) const {
  Weight r = mu;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 1 || *it > rank_) throw Error("reflection index out of range");
    r = reflect(*it, r);
  }
  return r;
}

void RootSystem::enumerate_weyl() {
  using Mat = std::vector<std::vector<int>>;
  const int r = rank_;
  auto mat_mul = [r](const Mat& a, const Mat& b) {
    Mat c(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k)
        for (int j = 0; j < r; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };

  Mat id(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) id[i][i] = 1;

  std::vector<Mat> gens;
  for (int i = 1; i <= r; ++i) {
    // s_i on coordinates: mu |-> mu - mu_{i} * alpha_i.
    Mat s = id;
    const Weight alpha = simple_root(i);
    for (int j = 0; j < r; ++j) s[j][i - 1] -= alpha.coords[j];
    gens.push_back(std::move(s));
  }

  std::set<Mat> seen;
  std::vector<Mat> order;
  seen.insert(id);
  order.push_back(id);
  // Closure under right multiplication by generators.  The bound guards
  // against infinite (non-finite-Weyl) Cartan matrices.
  constexpr std::size_t kMaxOrder = 1152;  // largest rank-4 Weyl group (F4)
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const Mat& g : gens) {
      Mat m = mat_mul(order[head], g);
      if (seen.insert(m).second) {
        order.push_back(std::move(m));
        if (order.size() > kMaxOrder)
          throw UnsupportedTypeError("Weyl group closure did not terminate");
      }
    }
  }
  weyl_ = std::move(order);

  // Longest element: the unique w with w(rho) = -rho.
  Weight rho(std::vector<int>(r, 1));
  w0_ = 0;
  bool found = false;
  for (std::size_t e = 0; e < weyl_.size(); ++e) {
    if (apply_weyl(e, rho) == -rho) {
      w0_ = e;
      found = true;
      break;
    }
  }
  if (!found) throw Error("longest Weyl element not found");
}

Weight RootSystem::apply_weyl(std::size_t element, const Weight& mu) const {
  const auto& m = weyl_.at(element);
  std::vector<int> out(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += m[i][j] * mu.coords[j];
  return Weight(std::move(out));
}

Weight RootSystem::coweight_to_weight(const Coweight& cw) const {
  if (!type_a_)
    throw UnsupportedTypeError(
        "coweight/weight identification implemented for type A only");
  return Weight(cw.coords);
}

std::vector<int> RootSystem::dominant_decompose(const Coweight& cw) const {
  if (!cw.is_dominant()) throw Error("dominant_decompose: coweight not dominant");
  std::vector<int> parts;
  for (int i = 0; i < rank_; ++i)
    for (int m = 0; m < cw.coords[i]; ++m) parts.push_back(i + 1);
  return parts;
}

Coweight RootSystem::fundamental_coweight(int i) const {
  std::vector<int> c(rank_, 0);
  c.at(i - 1) = 1;
  return Coweight(std::move(c));
}

Weight RootSystem::fundamental_weight(int i) const {
  std::vector<int> c(rank_, 0);
  c.at(i - 1) = 1;
  return Weight(std::move(c));
}

}  // namespace currents
