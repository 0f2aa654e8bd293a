#include "currents/module_ops.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace currents {

int top_degree(const CurrentModule& m) {
  int top = 0;
  for (const auto& bv : m.basis()) top = std::max(top, bv.degree);
  return top;
}

CurrentModule trivial_module(std::shared_ptr<const RootSystem> rs, int cap) {
  CurrentModule m(rs, cap);
  m.add_basis_vector(Weight(std::vector<int>(rs->rank(), 0)), 0);
  m.set_cyclic_vector(0);
  m.action({GenKind::H, 1}, 0);  // materialize empty tables
  return m;
}

namespace {

// The k-th fundamental module of sl_{r+1} realized on k-element subsets of
// {1..r+1} (wedge basis, lexicographic order).  Only the t^0 matrices are
// filled; the caller attaches the evaluation scaling.
CurrentModule wedge_module(std::shared_ptr<const RootSystem> rs, int k, int cap) {
  const int n = rs->rank() + 1;
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  // lexicographic enumeration of k-subsets
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      subsets.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);

  std::map<std::vector<int>, std::int32_t> idx;
  CurrentModule m(rs, cap);
  for (const auto& s : subsets) {
    std::vector<int> coords(rs->rank(), 0);
    for (int j = 1; j <= rs->rank(); ++j) {
      const bool inj = std::binary_search(s.begin(), s.end(), j);
      const bool injp = std::binary_search(s.begin(), s.end(), j + 1);
      coords[j - 1] = (inj ? 1 : 0) - (injp ? 1 : 0);
    }
    idx[s] = m.add_basis_vector(Weight(std::move(coords)), 0);
  }

  // e_j = E_{j,j+1}, f_j = E_{j+1,j}, h_j diagonal.  Replacing j+1 by j (or
  // back) in a sorted subset never reorders the rest, so all signs are +1.
  for (int j = 1; j <= rs->rank(); ++j) {
    SparseMat& e = m.action({GenKind::E, j}, 0);
    SparseMat& f = m.action({GenKind::F, j}, 0);
    SparseMat& h = m.action({GenKind::H, j}, 0);
    for (const auto& s : subsets) {
      const std::int32_t col = idx.at(s);
      const bool inj = std::binary_search(s.begin(), s.end(), j);
      const bool injp = std::binary_search(s.begin(), s.end(), j + 1);
      if (injp && !inj) {
        std::vector<int> t = s;
        *std::find(t.begin(), t.end(), j + 1) = j;
        std::sort(t.begin(), t.end());
        e.add_entry(idx.at(t), col, Rat(1));
      }
      if (inj && !injp) {
        std::vector<int> t = s;
        *std::find(t.begin(), t.end(), j) = j + 1;
        std::sort(t.begin(), t.end());
        f.add_entry(idx.at(t), col, Rat(1));
      }
      const int hv = (inj ? 1 : 0) - (injp ? 1 : 0);
      if (hv != 0) h.add_entry(col, col, Rat(hv));
    }
  }
  m.set_cyclic_vector(idx.at([&] {
    std::vector<int> top(k);
    for (int i = 0; i < k; ++i) top[i] = i + 1;
    return top;
  }()));
  return m;
}

std::vector<int> decompose_dominant_weight(const Weight& mu) {
  if (!mu.is_dominant())
    throw Error("evaluation_module: weight is not dominant");
  std::vector<int> parts;
  for (int i = 0; i < mu.rank(); ++i)
    for (int c = 0; c < mu.coords[i]; ++c) parts.push_back(i + 1);
  return parts;
}

}  // namespace

CurrentModule evaluation_module(std::shared_ptr<const RootSystem> rs,
                                const Weight& mu, const Rat& c, int cap) {
  if (!rs->is_type_a())
    throw UnsupportedTypeError("evaluation modules require type A");
  const auto parts = decompose_dominant_weight(mu);

  CurrentModule g_rep = [&]() -> CurrentModule {
    if (parts.empty()) return trivial_module(rs, 0);
    if (parts.size() == 1) return wedge_module(rs, parts[0], 0);
    std::vector<CurrentModule> factors;
    factors.reserve(parts.size());
    for (int p : parts) factors.push_back(wedge_module(rs, p, 0));
    std::vector<const CurrentModule*> ptrs;
    for (const auto& f : factors) ptrs.push_back(&f);
    TensorSpace ts = tensor_space(ptrs, 0, false);
    // U(g)-span of the product of highest weight vectors: the irreducible
    // summand generated by the top weight line.
    std::vector<std::int32_t> tuple;
    for (const auto& f : factors) tuple.push_back(*f.cyclic_vector());
    return cyclic_span(ts.product, SparseVec::unit(ts.index_of(tuple)));
  }();

  // Attach the evaluation action x t^s = c^s x.
  CurrentModule m(rs, cap);
  for (const auto& bv : g_rep.basis()) m.add_basis_vector(bv.weight, 0);
  Rat power(1);
  for (int s = 0; s <= cap; ++s) {
    if (!is_zero(power)) {
      for (const Gen& g : all_generators(rs->rank())) {
        if (g_rep.action_is_zero(g, 0)) continue;
        SparseMat& target = m.action(g, s);
        const SparseMat& source = g_rep.action(g, 0);
        for (std::int32_t j = 0; j < source.cols(); ++j)
          for (const auto& e : source.column(j))
            target.add_entry(e.first, j, e.second * power);
      }
    }
    power *= c;
  }
  m.set_graded(is_zero(c));
  m.set_complete(true);
  if (g_rep.cyclic_vector()) m.set_cyclic_vector(*g_rep.cyclic_vector());
  return m;
}

CurrentModule twist(const CurrentModule& m, const Rat& c) {
  if (is_zero(c)) return m;
  CurrentModule out(m.root_system_ptr(), m.cap());
  for (const auto& bv : m.basis()) out.add_basis_vector(bv.weight, bv.degree);
  // x (t-c)^l = sum_j binom(l,j) (-c)^{l-j} x t^j.
  for (const Gen& g : all_generators(m.rank())) {
    for (int l = 0; l <= m.cap(); ++l) {
      SparseMat& target = out.action(g, l);
      Rat binom(1);  // binom(l, j) built up incrementally
      for (int j = 0; j <= l; ++j) {
        if (j > 0) binom = binom * (l - j + 1) / j;
        if (m.action_is_zero(g, j)) continue;
        Rat factor = binom;
        for (int p = 0; p < l - j; ++p) factor *= -c;
        if (is_zero(factor)) continue;
        const SparseMat& source = m.action(g, j);
        for (std::int32_t col = 0; col < source.cols(); ++col)
          for (const auto& e : source.column(col))
            target.add_entry(e.first, col, e.second * factor);
      }
    }
  }
  out.set_graded(false);
  out.set_complete(m.complete());
  if (m.cyclic_vector()) out.set_cyclic_vector(*m.cyclic_vector());
  return out;
}

std::int32_t TensorSpace::index_of(const std::vector<std::int32_t>& tuple) const {
  auto it = index.find(tuple);
  if (it == index.end()) throw Error("tensor tuple outside the kept range");
  return it->second;
}

TensorSpace tensor_space(const std::vector<const CurrentModule*>& factors,
                         int cap, bool truncate) {
  if (factors.empty()) throw Error("tensor_space: no factors");
  const auto rs = factors[0]->root_system_ptr();
  for (const auto* f : factors)
    if (f->root_system_ptr()->label() != rs->label())
      throw DimensionMismatchError("tensor_space: mixed root systems");

  bool graded = true, complete = true;
  for (const auto* f : factors) {
    graded = graded && f->graded();
    complete = complete && f->complete();
  }
  const bool do_truncate = truncate && graded;

  TensorSpace ts{CurrentModule(rs, cap), {}, {}};
  const int k = static_cast<int>(factors.size());

  // Enumerate kept tuples in lexicographic order.
  std::vector<std::int32_t> tuple(k, 0);
  std::function<void(int, const Weight&, int)> rec = [&](int slot,
                                                         const Weight& w,
                                                         int deg) {
    if (slot == k) {
      ts.index[tuple] = ts.product.add_basis_vector(w, deg);
      ts.tuples.push_back(tuple);
      return;
    }
    const auto& f = *factors[slot];
    for (std::int32_t i = 0; i < f.dim(); ++i) {
      const auto& bv = f.basis_vector(i);
      const int d = deg + bv.degree;
      if (do_truncate && d > cap) continue;
      tuple[slot] = i;
      rec(slot + 1, w + bv.weight, d);
    }
  };
  rec(0, Weight(std::vector<int>(rs->rank(), 0)), 0);

  // Leibniz action slot by slot.
  for (const Gen& g : all_generators(rs->rank())) {
    for (int s = 0; s <= cap; ++s) {
      bool any = false;
      for (const auto* f : factors) any = any || !f->action_is_zero(g, s);
      if (!any) continue;
      SparseMat& target = ts.product.action(g, s);
      for (std::int32_t col = 0; col < ts.product.dim(); ++col) {
        const auto& tup = ts.tuples[col];
        for (int slot = 0; slot < k; ++slot) {
          const auto& f = *factors[slot];
          if (f.action_is_zero(g, s)) continue;
          for (const auto& e : f.action(g, s).column(tup[slot])) {
            std::vector<std::int32_t> t2 = tup;
            t2[slot] = e.first;
            auto it = ts.index.find(t2);
            if (it == ts.index.end()) continue;  // truncated away
            target.add_entry(it->second, col, e.second);
          }
        }
      }
    }
  }

  ts.product.set_graded(graded);
  ts.product.set_complete(complete && !do_truncate);
  bool all_cyclic = true;
  std::vector<std::int32_t> cyc(k);
  for (int slot = 0; slot < k; ++slot) {
    if (!factors[slot]->cyclic_vector()) {
      all_cyclic = false;
      break;
    }
    cyc[slot] = *factors[slot]->cyclic_vector();
  }
  if (all_cyclic) {
    auto it = ts.index.find(cyc);
    if (it != ts.index.end()) ts.product.set_cyclic_vector(it->second);
  }
  return ts;
}

CurrentModule tensor_product(const CurrentModule& a, const CurrentModule& b,
                             bool truncate) {
  return tensor_space({&a, &b}, std::max(a.cap(), b.cap()), truncate).product;
}

CurrentModule cyclic_span(const CurrentModule& m, const SparseVec& v) {
  EchelonBasis rows = span_closure(m, {v}, all_generator_powers(m));
  CurrentModule out = restrict_to_rows(m, rows);
  if (rows.dim() > 0) out.set_cyclic_vector(0);
  return out;
}

CurrentModule cyclic_power(const CurrentModule& m, int ell) {
  if (!m.cyclic_vector()) throw Error("cyclic_power: module has no cyclic vector");
  if (ell < 1) throw Error("cyclic_power: power must be positive");
  if (ell == 1) return m;
  const int cap = std::max(m.cap(), ell * top_degree(m));
  // Re-table the factor to the wider cap if needed.
  const CurrentModule* base = &m;
  CurrentModule widened(m.root_system_ptr(), cap);
  if (cap > m.cap()) {
    // Zero-extending the tables is only valid when x t^s genuinely acts by
    // zero beyond the stored range, i.e. the module is complete and graded
    // with tables covering its top degree.
    if (!(m.graded() && m.complete() && m.cap() >= top_degree(m)))
      throw Error("cyclic_power: cannot widen tables of a truncated module");
    for (const auto& bv : m.basis()) widened.add_basis_vector(bv.weight, bv.degree);
    for (const Gen& g : all_generators(m.rank()))
      for (int s = 0; s <= m.cap(); ++s) {
        if (m.action_is_zero(g, s)) continue;
        widened.action(g, s) = m.action(g, s);
      }
    widened.set_graded(true);
    widened.set_complete(true);
    widened.set_cyclic_vector(*m.cyclic_vector());
    base = &widened;
  }
  std::vector<const CurrentModule*> factors(ell, base);
  TensorSpace ts = tensor_space(factors, cap, false);
  std::vector<std::int32_t> tuple(ell, *base->cyclic_vector());
  return cyclic_span(ts.product, SparseVec::unit(ts.index_of(tuple)));
}

}  // namespace currents
