#include "currents/hw_algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace currents {

std::vector<std::vector<int>> monomials_of_degree(int k, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  std::function<void(int, int)> rec = [&](int var, int rest) {
    if (var == k - 1) {
      cur[var] = rest;
      out.push_back(cur);
      return;
    }
    for (int e = rest; e >= 0; --e) {
      cur[var] = e;
      rec(var + 1, rest - e);
    }
  };
  if (k == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(0, d);
  return out;
}

namespace {

using Poly = std::map<std::vector<int>, Rat>;  // exponent vector -> coeff

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

SparseVec poly_to_vec(const Poly& p,
                      const std::map<std::vector<int>, std::int32_t>& monomial_index) {
  SparseVec v;
  for (const auto& [e, c] : p) v.set(monomial_index.at(e), c);
  return v;
}

std::vector<std::vector<int>> pairings_of(const RootSystem& rs,
                                          const std::vector<Coweight>& lambdas) {
  std::vector<std::vector<int>> out;
  for (const auto& l : lambdas) {
    if (!l.is_dominant()) throw Error("hw algebra: coweight not dominant");
    out.push_back(rs.coweight_to_weight(l).coords);
  }
  return out;
}

// Enumerates multisets of generator labels (s, i), s >= 1, i in 1..r, with
// total degree d, nonincreasing in (s, i) to avoid duplicates.
void enumerate_products(int d, int r, std::vector<std::pair<int, int>>& cur,
                        const std::function<void()>& emit) {
  if (d == 0) {
    emit();
    return;
  }
  const std::pair<int, int> bound =
      cur.empty() ? std::make_pair(d, r) : cur.back();
  for (int s = std::min(d, bound.first); s >= 1; --s) {
    const int i_max = (s == bound.first) ? bound.second : r;
    for (int i = i_max; i >= 1; --i) {
      cur.push_back({s, i});
      enumerate_products(d - s, r, cur, emit);
      cur.pop_back();
    }
  }
}

}  // namespace

HwAlgebra build_hw_algebra(const RootSystem& rs,
                           const std::vector<Coweight>& lambdas, int cap) {
  if (lambdas.empty()) throw Error("build_hw_algebra: empty collection");
  HwAlgebra a;
  a.k = static_cast<int>(lambdas.size());
  a.pairings = pairings_of(rs, lambdas);
  const int r = rs.rank();

  // Generators p_{s,i} = sum_j <hw_j, h_i> z_j^s as polynomials.
  auto generator = [&](int s, int i) {
    Poly p;
    for (int j = 0; j < a.k; ++j) {
      const int coeff = a.pairings[j][i - 1];
      if (coeff == 0) continue;
      std::vector<int> e(a.k, 0);
      e[j] = s;
      p[e] += coeff;
    }
    return p;
  };

  a.bases.resize(cap + 1);
  a.hilbert.assign(cap + 1, 0);
  for (int d = 0; d <= cap; ++d) {
    const auto monomials = monomials_of_degree(a.k, d);
    std::map<std::vector<int>, std::int32_t> monomial_index;
    for (std::size_t i = 0; i < monomials.size(); ++i)
      monomial_index[monomials[i]] = static_cast<std::int32_t>(i);

    std::vector<SparseVec> candidates;
    if (d == 0) {
      candidates.push_back(SparseVec::unit(0));
    } else {
      std::vector<std::pair<int, int>> labels;
      enumerate_products(d, r, labels, [&]() {
        Poly p;
        p[std::vector<int>(a.k, 0)] = Rat(1);
        for (const auto& [s, i] : labels) p = poly_mul(p, generator(s, i));
        if (!p.empty()) candidates.push_back(poly_to_vec(p, monomial_index));
      });
    }
    a.bases[d] =
        exact_span(candidates, static_cast<std::int32_t>(monomials.size()));
    a.hilbert[d] = static_cast<std::int64_t>(a.bases[d].size());
  }
  return a;
}

std::vector<std::int64_t> hilbert_from_partition(const RootSystem& rs,
                                                 const Coweight& lambda,
                                                 int cap) {
  if (!lambda.is_dominant())
    throw Error("hilbert_from_partition: coweight not dominant");
  std::vector<std::int64_t> series(cap + 1, 0);
  series[0] = 1;
  auto mult_inv_one_minus_qj = [&](int j) {
    // series *= (1 - q^j)^{-1}
    for (int d = j; d <= cap; ++d) series[d] += series[d - j];
  };
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 1; j <= lambda.coords[i]; ++j) mult_inv_one_minus_qj(j);
  return series;
}

std::vector<std::int64_t> hilbert_via_arrangement(
    const RootSystem& rs, const std::vector<Coweight>& lambdas, int cap) {
  if (lambdas.empty()) throw Error("hilbert_via_arrangement: empty collection");
  const int r = rs.rank();
  const int k = static_cast<int>(lambdas.size());
  Coweight total = lambdas[0];
  for (int j = 1; j < k; ++j) total = total + lambdas[j];
  if (!total.is_dominant()) throw Error("hilbert_via_arrangement: not dominant");

  // Flattened coordinates x_{b,j}: color b = 1..r, copy j = 1..m_b.
  std::vector<int> color_of;
  std::vector<int> mult(r + 1, 0);
  for (int b = 1; b <= r; ++b) {
    mult[b] = total.coords[b - 1];
    for (int j = 0; j < mult[b]; ++j) color_of.push_back(b);
  }
  const int n = static_cast<int>(color_of.size());
  if (n == 0) {
    std::vector<std::int64_t> series(cap + 1, 0);
    series[0] = 1;
    return series;
  }

  // Group assignment: group a takes the next m_{a,b} copies of each color b.
  std::vector<int> group_of(n, -1);
  {
    std::vector<int> next_copy(r + 1, 0);
    std::vector<int> color_base(r + 1, 0);
    int base = 0;
    for (int b = 1; b <= r; ++b) {
      color_base[b] = base;
      base += mult[b];
    }
    for (int a = 0; a < k; ++a) {
      for (int b = 1; b <= r; ++b) {
        for (int c = 0; c < lambdas[a].coords[b - 1]; ++c)
          group_of[color_base[b] + next_copy[b]++] = a;
      }
    }
  }

  // The color-preserving symmetric group as permutations of coordinates.
  std::vector<std::vector<int>> perms;
  {
    std::vector<std::vector<int>> per_color;
    for (int b = 1; b <= r; ++b) {
      std::vector<int> ids(mult[b]);
      std::iota(ids.begin(), ids.end(), 0);
      std::vector<std::vector<int>> ps;
      std::sort(ids.begin(), ids.end());
      do {
        ps.push_back(ids);
      } while (std::next_permutation(ids.begin(), ids.end()));
      per_color.push_back(std::move(ps));
    }
    std::vector<int> current(n);
    std::function<void(int, int)> rec = [&](int b, int base) {
      if (b > r) {
        perms.push_back(current);
        return;
      }
      for (const auto& p : per_color[b - 1]) {
        for (int j = 0; j < mult[b]; ++j) current[base + j] = base + p[j];
        rec(b + 1, base + mult[b]);
      }
    };
    rec(1, 0);
  }
  const Rat group_order(static_cast<long>(perms.size()));

  // Distinct translates of the diagonal subspace, as coordinate->parameter
  // assignments (deduplicated by the induced partition).
  std::vector<std::vector<int>> components;
  {
    std::set<std::vector<int>> seen;
    for (const auto& sigma : perms) {
      std::vector<int> assign(n);
      // sigma V = {x : x_c = y_{group(sigma^{-1} c)}}
      std::vector<int> inv(n);
      for (int c = 0; c < n; ++c) inv[sigma[c]] = c;
      for (int c = 0; c < n; ++c) assign[c] = group_of[inv[c]];
      if (seen.insert(assign).second) components.push_back(std::move(assign));
    }
  }

  std::vector<std::int64_t> series(cap + 1, 0);
  series[0] = 1;
  for (int d = 1; d <= cap; ++d) {
    const auto big_monomials = monomials_of_degree(n, d);
    std::map<std::vector<int>, std::int32_t> big_index;
    for (std::size_t i = 0; i < big_monomials.size(); ++i)
      big_index[big_monomials[i]] = static_cast<std::int32_t>(i);

    // Reynolds averages of the monomials: a spanning set of the invariants.
    std::vector<SparseVec> invariants;
    {
      std::set<std::vector<int>> done;
      for (const auto& mono : big_monomials) {
        // One representative per orbit is enough.
        std::vector<int> canon = mono;
        std::vector<int> scratch(n);
        std::vector<int> best = mono;
        for (const auto& sigma : perms) {
          for (int c = 0; c < n; ++c) scratch[sigma[c]] = mono[c];
          if (scratch < best) best = scratch;
        }
        if (!done.insert(best).second) continue;
        SparseVec avg;
        for (const auto& sigma : perms) {
          for (int c = 0; c < n; ++c) scratch[sigma[c]] = mono[c];
          SparseVec term = SparseVec::unit(big_index.at(scratch));
          avg.add_scaled(term, 1 / group_order);
        }
        invariants.push_back(std::move(avg));
      }
    }

    // Joint restriction to all components, stacked into one long vector.
    const auto small_monomials = monomials_of_degree(k, d);
    std::map<std::vector<int>, std::int32_t> small_index;
    for (std::size_t i = 0; i < small_monomials.size(); ++i)
      small_index[small_monomials[i]] = static_cast<std::int32_t>(i);
    const std::int32_t block =
        static_cast<std::int32_t>(small_monomials.size());

    EchelonBasis span(static_cast<std::int32_t>(components.size()) * block);
    for (const auto& inv : invariants) {
      SparseVec image;
      for (std::size_t comp = 0; comp < components.size(); ++comp) {
        const auto& assign = components[comp];
        for (const auto& [mi, c] : inv.entries()) {
          std::vector<int> target(k, 0);
          const auto& mono = big_monomials[mi];
          for (int v = 0; v < n; ++v) target[assign[v]] += mono[v];
          const std::int32_t pos =
              static_cast<std::int32_t>(comp) * block + small_index.at(target);
          SparseVec term = SparseVec::unit(pos);
          image.add_scaled(term, c);
        }
      }
      span.insert(std::move(image));
    }
    series[d] = static_cast<std::int64_t>(span.dim());
  }
  return series;
}

SurjectionReport check_surjection(const RootSystem& rs,
                                  const std::vector<Coweight>& lambdas,
                                  int cap) {
  SurjectionReport rep;
  const int k = static_cast<int>(lambdas.size());
  Coweight total = lambdas[0];
  for (int j = 1; j < k; ++j) total = total + lambdas[j];
  if (total.is_zero()) {
    rep.source_hilbert.assign(cap + 1, 0);
    rep.source_hilbert[0] = 1;
    rep.target_hilbert = rep.source_hilbert;
    return rep;
  }

  // Source algebra: the full fundamental decomposition of the sum.
  std::vector<Coweight> fundamentals;
  for (int part : rs.dominant_decompose(total))
    fundamentals.push_back(rs.fundamental_coweight(part));
  const int n = static_cast<int>(fundamentals.size());
  HwAlgebra source = build_hw_algebra(rs, fundamentals, cap);
  HwAlgebra target = build_hw_algebra(rs, lambdas, cap);
  rep.source_hilbert = source.hilbert;
  rep.target_hilbert = target.hilbert;

  // Variable grouping: source variable a (a copy of omega_b) goes to the
  // group whose coweight still needs a copy of omega_b.
  std::vector<int> group_of(n, -1);
  {
    std::vector<std::vector<int>> need(k, std::vector<int>(rs.rank(), 0));
    for (int a = 0; a < k; ++a)
      for (int i = 0; i < rs.rank(); ++i) need[a][i] = lambdas[a].coords[i];
    const auto parts = rs.dominant_decompose(total);
    for (int v = 0; v < n; ++v) {
      const int b = parts[v] - 1;
      for (int a = 0; a < k; ++a) {
        if (need[a][b] > 0) {
          --need[a][b];
          group_of[v] = a;
          break;
        }
      }
      if (group_of[v] < 0) throw Error("check_surjection: grouping failed");
    }
  }

  for (int d = 0; d <= cap; ++d) {
    if (target.hilbert[d] > source.hilbert[d]) {
      rep.ok = false;
      rep.witness_degree = d;
      return rep;
    }
    const auto big_monomials = monomials_of_degree(n, d);
    const auto small_monomials = monomials_of_degree(k, d);
    std::map<std::vector<int>, std::int32_t> small_index;
    for (std::size_t i = 0; i < small_monomials.size(); ++i)
      small_index[small_monomials[i]] = static_cast<std::int32_t>(i);

    EchelonBasis image(static_cast<std::int32_t>(small_monomials.size()));
    for (const auto& row : source.bases[d]) {
      SparseVec mapped;
      for (const auto& [mi, c] : row.entries()) {
        std::vector<int> target_exp(k, 0);
        const auto& mono = big_monomials[mi];
        for (int v = 0; v < n; ++v) target_exp[group_of[v]] += mono[v];
        SparseVec term = SparseVec::unit(small_index.at(target_exp));
        mapped.add_scaled(term, c);
      }
      image.insert(std::move(mapped));
    }
    for (const auto& row : target.bases[d]) {
      if (!image.contains(row)) {
        rep.ok = false;
        rep.witness_degree = d;
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace currents
