#include "currents/global.hpp"

#include <deque>
#include <functional>

namespace currents {

namespace {

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

PromotedModule promote(const CurrentModule& m, int cap) {
  if (!m.graded() || !m.complete())
    throw Error("promote: module must be graded and complete");
  if (!m.cyclic_vector()) throw Error("promote: module must be cyclic");
  const std::int32_t cyc = *m.cyclic_vector();
  if (m.basis_vector(cyc).degree > cap)
    throw Error("promote: cap too small to hold the cyclic vector");
  for (const Gen& g : all_generators(m.rank())) {
    if (g.kind != GenKind::H) continue;
    for (int s = 1; s <= m.cap(); ++s)
      if (!m.apply(g, s, SparseVec::unit(cyc)).empty())
        throw Error(
            "promote: positive-degree Cartan currents must kill the cyclic "
            "vector");
  }

  PromotedModule out{CurrentModule(m.root_system_ptr(), cap), {}, {}};
  for (std::int32_t i = 0; i < m.dim(); ++i) {
    const auto& bv = m.basis_vector(i);
    for (int a = 0; bv.degree + a <= cap; ++a) {
      const std::int32_t id =
          out.mod.add_basis_vector(bv.weight, bv.degree + a);
      out.pairs.push_back({i, a});
      out.index[{i, a}] = id;
    }
  }

  // (x t^l)(m t^a) = sum_j (-1)^{l-j} binom(l,j) (x t^j m) t^{l+a-j}.
  for (const Gen& g : all_generators(m.rank())) {
    for (int l = 0; l <= cap; ++l) {
      SparseMat& target = out.mod.action(g, l);
      for (std::int32_t col = 0; col < out.mod.dim(); ++col) {
        const auto [i, a] = out.pairs[col];
        for (int j = 0; j <= l; ++j) {
          if (m.action_is_zero(g, j)) continue;
          const Rat factor(((l - j) % 2 == 0 ? 1 : -1) * binom(l, j));
          for (const auto& e : m.action(g, j).column(i)) {
            auto it = out.index.find({e.first, l + a - j});
            if (it == out.index.end()) continue;  // above the cap
            target.add_entry(it->second, col, e.second * factor);
          }
        }
      }
    }
  }
  out.mod.set_graded(true);
  out.mod.set_complete(false);
  out.mod.set_cyclic_vector(out.index.at({cyc, 0}));
  return out;
}

GlobalModule global_module(const std::vector<const CurrentModule*>& factors,
                           int cap) {
  if (factors.empty()) throw Error("global_module: no factors");
  const auto rs = factors[0]->root_system_ptr();
  const int k = static_cast<int>(factors.size());

  std::vector<PromotedModule> proms;
  proms.reserve(k);
  for (const auto* f : factors) proms.push_back(promote(*f, cap));

  std::vector<const CurrentModule*> ptrs;
  std::vector<std::int32_t> cyc_tuple;
  for (const auto& p : proms) {
    ptrs.push_back(&p.mod);
    cyc_tuple.push_back(*p.mod.cyclic_vector());
  }
  TensorSpace ts = tensor_space(ptrs, cap, /*truncate=*/true);
  const std::int32_t seed = ts.index_of(cyc_tuple);

  EchelonBasis rows =
      span_closure(ts.product, {SparseVec::unit(seed)}, all_generator_powers(ts.product));
  CurrentModule mod = restrict_to_rows(ts.product, rows);
  mod.set_graded(true);
  mod.set_complete(false);
  mod.set_cyclic_vector(0);

  GlobalModule out{std::move(mod), {}, {}};
  for (const auto* f : factors)
    out.factor_hw.push_back(f->basis_vector(*f->cyclic_vector()).weight);

  // Right action of h_i t^s on the span: sum over slots of
  // (-1)^s <hw_j, h_i> (shift of the slot's outer t-exponent by s).
  const int r = rs->rank();
  out.hw_gen_action.assign(r, std::vector<SparseMat>());
  const std::int32_t n = static_cast<std::int32_t>(rows.dim());
  for (int i = 1; i <= r; ++i) {
    for (int s = 1; s <= cap; ++s) {
      // Ambient shift operator for this (i, s).
      SparseMat rho(ts.product.dim(), ts.product.dim());
      for (std::int32_t col = 0; col < ts.product.dim(); ++col) {
        const auto& tup = ts.tuples[col];
        for (int slot = 0; slot < k; ++slot) {
          const int pairing = out.factor_hw[slot].coords[i - 1];
          if (pairing == 0) continue;
          const auto [mi, a] = proms[slot].pairs[tup[slot]];
          auto it = proms[slot].index.find({mi, a + s});
          if (it == proms[slot].index.end()) continue;
          std::vector<std::int32_t> t2 = tup;
          t2[slot] = it->second;
          auto jt = ts.index.find(t2);
          if (jt == ts.index.end()) continue;  // total degree above cap
          rho.add_entry(jt->second, col, Rat((s % 2 == 0 ? 1 : -1) * pairing));
        }
      }
      // Restrict to the span.
      SparseMat restricted(n, n);
      for (std::int32_t row = 0; row < n; ++row) {
        SparseVec image = rho.apply(rows.row(row));
        auto combo = rows.solve(std::move(image));
        if (!combo)
          throw Error("global_module: commuting action leaves the span");
        for (const auto& [rid, c] : *combo)
          restricted.add_entry(static_cast<std::int32_t>(rid), row, c);
      }
      out.hw_gen_action[i - 1].push_back(std::move(restricted));
    }
  }
  return out;
}

GlobalModule global_demazure(std::shared_ptr<const RootSystem> rs, int level,
                             const std::vector<Coweight>& lambdas, int cap) {
  if (lambdas.empty()) throw Error("global_demazure: empty collection");
  std::vector<CurrentModule> mods;
  mods.reserve(lambdas.size());
  for (const auto& l : lambdas)
    mods.push_back(demazure_module(rs, level, l, cap));
  std::vector<const CurrentModule*> ptrs;
  for (const auto& m : mods) ptrs.push_back(&m);
  return global_module(ptrs, cap);
}

CurrentModule fiber_at_origin(const GlobalModule& r) {
  const CurrentModule& m = r.mod;
  const std::int32_t cyc = *m.cyclic_vector();
  std::vector<SparseVec> seeds;
  for (int i = 1; i <= m.rank(); ++i)
    for (int s = 1; s <= m.cap(); ++s) {
      SparseVec v = m.apply({GenKind::H, i}, s, SparseVec::unit(cyc));
      if (!v.empty()) seeds.push_back(std::move(v));
    }
  QuotientModule q = quotient_by_relations(m, seeds);
  q.mod.set_graded(true);
  q.mod.set_complete(false);
  return std::move(q.mod);
}

FiberResult fiber_at_point(const GlobalModule& r, const std::vector<Rat>& c) {
  const CurrentModule& m = r.mod;
  if (c.size() != r.factor_hw.size())
    throw DimensionMismatchError("fiber_at_point: wrong number of coordinates");
  const std::int32_t cyc = *m.cyclic_vector();
  std::vector<SparseVec> seeds;
  for (int i = 1; i <= m.rank(); ++i) {
    for (int s = 1; s <= m.cap(); ++s) {
      SparseVec v = m.apply({GenKind::H, i}, s, SparseVec::unit(cyc));
      Rat scalar(0);
      for (std::size_t j = 0; j < c.size(); ++j) {
        Rat p(1);
        for (int e = 0; e < s; ++e) p *= c[j];
        scalar += Rat(r.pairing(static_cast<int>(j), i)) * p;
      }
      v.add_scaled(SparseVec::unit(cyc), -scalar);
      if (!v.empty()) seeds.push_back(std::move(v));
    }
  }
  QuotientModule q = quotient_by_relations(m, seeds);
  FiberResult out{q.mod.ungraded_character(), q.mod.dim()};
  return out;
}

FiberResult fiber_at_point_checked(std::shared_ptr<const RootSystem> rs,
                                   int level,
                                   const std::vector<Coweight>& lambdas,
                                   const std::vector<Rat>& c, int cap) {
  GlobalModule lo = global_demazure(rs, level, lambdas, cap);
  GlobalModule hi = global_demazure(rs, level, lambdas, cap + 1);
  FiberResult a = fiber_at_point(lo, c);
  FiberResult b = fiber_at_point(hi, c);
  if (a.dim != b.dim || a.ungraded != b.ungraded)
    throw InconclusiveAtCapError(
        "fiber dimension did not stabilize between caps " +
            std::to_string(cap) + " and " + std::to_string(cap + 1),
        cap);
  return a;
}

CurrentModule cyclic_power_over_hw(const GlobalModule& r, int ell) {
  if (ell < 1) throw Error("cyclic_power_over_hw: power must be positive");
  if (ell == 1) return r.mod;
  const CurrentModule& m = r.mod;
  const int cap = m.cap();
  std::vector<const CurrentModule*> factors(ell, &m);
  TensorSpace ts = tensor_space(factors, cap, /*truncate=*/true);

  // Slot operator: the commuting generator acting on one tensor slot.
  const int rank = m.rank();
  auto slot_matrix = [&](int slot, const SparseMat& gen) {
    SparseMat out(ts.product.dim(), ts.product.dim());
    for (std::int32_t col = 0; col < ts.product.dim(); ++col) {
      const auto& tup = ts.tuples[col];
      for (const auto& e : gen.column(tup[slot])) {
        std::vector<std::int32_t> t2 = tup;
        t2[slot] = e.first;
        auto it = ts.index.find(t2);
        if (it == ts.index.end()) continue;
        out.add_entry(it->second, col, e.second);
      }
    }
    return out;
  };

  // Relation subspace: images of a.u (x) w - u (x) a.w for the algebra
  // generators, saturated under the slot operators so that the quotient is
  // the genuine tensor product over the whole algebra.
  std::vector<SparseMat> slot_ops;
  std::vector<SparseMat> relators;
  for (int i = 1; i <= rank; ++i) {
    for (int s = 1; s <= cap; ++s) {
      const SparseMat& gen = r.hw_gen_action[i - 1][s - 1];
      std::vector<SparseMat> per_slot;
      for (int p = 0; p < ell; ++p) per_slot.push_back(slot_matrix(p, gen));
      for (int p = 0; p + 1 < ell; ++p) {
        SparseMat diff(ts.product.dim(), ts.product.dim());
        for (std::int32_t col = 0; col < ts.product.dim(); ++col) {
          SparseVec v = per_slot[p].apply_unit(col);
          v.add_scaled(per_slot[p + 1].apply_unit(col), Rat(-1));
          for (const auto& e : v.entries()) diff.add_entry(e.first, col, e.second);
        }
        relators.push_back(std::move(diff));
      }
      for (auto& ps : per_slot) slot_ops.push_back(std::move(ps));
    }
  }

  EchelonBasis rel(ts.product.dim());
  std::deque<std::size_t> work;
  for (const auto& t : relators) {
    for (std::int32_t col = 0; col < ts.product.dim(); ++col) {
      SparseVec v = t.apply_unit(col);
      if (auto id = rel.insert(std::move(v))) work.push_back(*id);
    }
  }
  while (!work.empty()) {
    const std::size_t id = work.front();
    work.pop_front();
    for (const auto& op : slot_ops) {
      SparseVec v = op.apply(rel.row(id));
      if (auto nid = rel.insert(std::move(v))) work.push_back(*nid);
    }
  }

  QuotientModule q = quotient_by_relations(ts.product, rel.rows());
  q.mod.set_graded(true);
  q.mod.set_complete(false);

  // Cyclic span of the class of v^{tensor ell}.
  std::vector<std::int32_t> cyc_tuple(ell, *m.cyclic_vector());
  const std::int32_t amb_cyc = ts.index_of(cyc_tuple);
  SparseVec cyc_class = q.project(SparseVec::unit(amb_cyc));
  CurrentModule span = cyclic_span(q.mod, cyc_class);
  span.set_complete(false);
  return span;
}

CurrentModule hw_base_change(std::shared_ptr<const RootSystem> rs, int level,
                             const std::vector<Coweight>& lambdas, int cap) {
  if (lambdas.empty()) throw Error("hw_base_change: empty collection");
  std::vector<PromotedModule> proms;
  for (const auto& l : lambdas)
    proms.push_back(promote(demazure_module(rs, level, l, cap), cap));
  std::vector<const CurrentModule*> ptrs;
  for (const auto& p : proms) ptrs.push_back(&p.mod);
  TensorSpace ts = tensor_space(ptrs, cap, /*truncate=*/true);

  // Seeds: products of the factors' highest-weight lines v_i t^{a_i}.
  std::vector<SparseVec> seeds;
  const int k = static_cast<int>(lambdas.size());
  std::vector<std::int32_t> tuple(k);
  std::function<void(int, int)> rec = [&](int slot, int total) {
    if (slot == k) {
      seeds.push_back(SparseVec::unit(ts.index_of(tuple)));
      return;
    }
    const auto& prom = proms[slot];
    // Underlying highest-weight vector of the factor.
    const std::int32_t base = prom.pairs[*prom.mod.cyclic_vector()].first;
    for (int ai = 0; total + ai <= cap; ++ai) {
      auto it = prom.index.find({base, ai});
      if (it == prom.index.end()) break;
      tuple[slot] = it->second;
      rec(slot + 1, total + ai);
    }
  };
  rec(0, 0);

  EchelonBasis rows = span_closure(ts.product, seeds, all_generator_powers(ts.product));
  CurrentModule out = restrict_to_rows(ts.product, rows);
  out.set_graded(true);
  out.set_complete(false);
  out.set_cyclic_vector(0);
  return out;
}

Character dual_character(std::shared_ptr<const RootSystem> rs, int level,
                         const std::vector<Coweight>& lambdas, int cap) {
  GlobalModule r = global_demazure(rs, level, lambdas, cap);
  CurrentModule fiber = fiber_at_origin(r);
  HwAlgebra hw = build_hw_algebra(*rs, lambdas, cap);

  Character hilb(cap);
  const Weight zero(std::vector<int>(rs->rank(), 0));
  for (int d = 0; d <= cap; ++d) hilb.add_term(zero, d, hw.hilbert[d]);

  // Freeness gate: the graded character must factor through the fiber.
  Character lhs = r.mod.character().window(0, cap);
  Character rhs = (fiber.character() * hilb).window(0, cap);
  if (lhs != rhs)
    throw Error(
        "dual_character: freeness identity failed at the cap; refusing to "
        "compute");

  return (hilb * fiber.character().q_inverted()).window(-cap, cap);
}

}  // namespace currents
