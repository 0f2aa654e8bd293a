#include "currents/current_module.hpp"

#include <deque>
#include <sstream>

namespace currents {

std::vector<Gen> all_generators(int rank) {
  std::vector<Gen> out;
  for (int i = 1; i <= rank; ++i) out.push_back({GenKind::E, i});
  for (int i = 1; i <= rank; ++i) out.push_back({GenKind::F, i});
  for (int i = 1; i <= rank; ++i) out.push_back({GenKind::H, i});
  return out;
}

int gen_flat_index(const Gen& g, int rank) {
  const int base = g.kind == GenKind::E ? 0 : g.kind == GenKind::F ? 1 : 2;
  return base * rank + (g.idx - 1);
}

std::string to_string(const Gen& g) {
  std::ostringstream os;
  os << (g.kind == GenKind::E ? 'e' : g.kind == GenKind::F ? 'f' : 'h');
  os << g.idx;
  return os.str();
}

std::int32_t CurrentModule::add_basis_vector(Weight w, int degree) {
  basis_.push_back({std::move(w), degree});
  return static_cast<std::int32_t>(basis_.size()) - 1;
}

void CurrentModule::ensure_tables() {
  const int ngen = 3 * rank();
  if (actions_.empty()) actions_.resize(ngen);
  for (auto& per_gen : actions_) {
    if (per_gen.empty())
      per_gen.assign(cap_ + 1, SparseMat(dim(), dim()));
  }
}

SparseMat& CurrentModule::action(const Gen& g, int s) {
  ensure_tables();
  return actions_.at(gen_flat_index(g, rank())).at(s);
}

const SparseMat& CurrentModule::action(const Gen& g, int s) const {
  return actions_.at(gen_flat_index(g, rank())).at(s);
}

bool CurrentModule::action_is_zero(const Gen& g, int s) const {
  if (actions_.empty()) return true;
  const auto& per_gen = actions_.at(gen_flat_index(g, rank()));
  if (s >= static_cast<int>(per_gen.size())) return true;
  return per_gen[s].is_zero();
}

SparseVec CurrentModule::apply(const Gen& g, int s, const SparseVec& v) const {
  return action(g, s).apply(v);
}

Weight CurrentModule::weight_shift(const Gen& g) const {
  switch (g.kind) {
    case GenKind::E: return rs_->simple_root(g.idx);
    case GenKind::F: return -rs_->simple_root(g.idx);
    case GenKind::H: return Weight(std::vector<int>(rank(), 0));
  }
  throw Error("unreachable");
}

Character CurrentModule::character() const {
  Character ch(std::max(cap_, 1));
  for (const auto& bv : basis_) ch.add_term(bv.weight, bv.degree, 1);
  return ch;
}

Character CurrentModule::ungraded_character() const {
  Character ch(std::max(cap_, 1));
  for (const auto& bv : basis_) ch.add_term(bv.weight, 0, 1);
  return ch;
}

nlohmann::ordered_json CurrentModule::dimension_table_json() const {
  return character().to_json();
}

namespace {

SparseMat scaled(const SparseMat& m, int c) {
  SparseMat out(m.rows(), m.cols());
  if (c == 0) return out;
  for (std::int32_t j = 0; j < m.cols(); ++j)
    for (const auto& e : m.column(j)) out.add_entry(e.first, j, e.second * c);
  return out;
}

}  // namespace

std::optional<std::string> lie_action_violation(const CurrentModule& m) {
  const int r = m.rank();
  const auto& cartan = m.root_system().cartan();
  const int cap = m.cap();

  auto fail = [&](const Gen& x, int a, const Gen& y, int b,
                  const std::string& what) {
    std::ostringstream os;
    os << "commutator [" << to_string(x) << " t^" << a << ", " << to_string(y)
       << " t^" << b << "] != " << what;
    return os.str();
  };

  for (int a = 0; a <= cap; ++a) {
    for (int b = a; a + b <= cap; ++b) {
      for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r; ++j) {
          const Gen hi{GenKind::H, i}, hj{GenKind::H, j};
          const Gen ei{GenKind::E, i}, ej{GenKind::E, j};
          const Gen fi{GenKind::F, i}, fj{GenKind::F, j};

          // [h_i, h_j] = 0
          if (!SparseMat::commutator(m.action(hi, a), m.action(hj, b)).is_zero())
            return fail(hi, a, hj, b, "0");
          // [h_i, e_j] = c_{ij} e_j, [h_i, f_j] = -c_{ij} f_j
          if (!(SparseMat::commutator(m.action(hi, a), m.action(ej, b)) ==
                scaled(m.action(ej, a + b), cartan[i - 1][j - 1])))
            return fail(hi, a, ej, b, "c_ij e_j t^(a+b)");
          if (!(SparseMat::commutator(m.action(hi, a), m.action(fj, b)) ==
                scaled(m.action(fj, a + b), -cartan[i - 1][j - 1])))
            return fail(hi, a, fj, b, "-c_ij f_j t^(a+b)");
          // [e_i, f_j] = delta_ij h_i
          if (!(SparseMat::commutator(m.action(ei, a), m.action(fj, b)) ==
                scaled(m.action(hi, a + b), i == j ? 1 : 0)))
            return fail(ei, a, fj, b, i == j ? "h_i t^(a+b)" : "0");
          // Non-adjacent e/e and f/f pairs commute.
          if (i != j && cartan[i - 1][j - 1] == 0) {
            if (!SparseMat::commutator(m.action(ei, a), m.action(ej, b)).is_zero())
              return fail(ei, a, ej, b, "0");
            if (!SparseMat::commutator(m.action(fi, a), m.action(fj, b)).is_zero())
              return fail(fi, a, fj, b, "0");
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<std::pair<Gen, int>> all_generator_powers(const CurrentModule& m) {
  std::vector<std::pair<Gen, int>> out;
  for (const Gen& g : all_generators(m.rank()))
    for (int s = 0; s <= m.cap(); ++s)
      if (!m.action_is_zero(g, s)) out.push_back({g, s});
  return out;
}

EchelonBasis span_closure(const CurrentModule& m,
                          const std::vector<SparseVec>& seeds,
                          const std::vector<std::pair<Gen, int>>& gens) {
  EchelonBasis basis(m.dim());
  std::deque<std::size_t> work;
  for (const auto& s : seeds)
    if (auto id = basis.insert(s)) work.push_back(*id);
  while (!work.empty()) {
    const std::size_t id = work.front();
    work.pop_front();
    for (const auto& [g, s] : gens) {
      SparseVec image = m.apply(g, s, basis.row(id));
      if (auto nid = basis.insert(std::move(image))) work.push_back(*nid);
    }
  }
  return basis;
}

CurrentModule restrict_to_rows(const CurrentModule& m, const EchelonBasis& rows,
                               const std::vector<int>* degrees) {
  CurrentModule out(m.root_system_ptr(), m.cap());
  out.set_graded(m.graded());
  out.set_complete(m.complete());
  const std::size_t n = rows.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = rows.row(i);
    const auto& lead = m.basis_vector(r.leading_index());
    const int deg = degrees ? (*degrees)[i] : lead.degree;
    out.add_basis_vector(lead.weight, deg);
  }
  for (const Gen& g : all_generators(m.rank())) {
    for (int s = 0; s <= m.cap(); ++s) {
      if (m.action_is_zero(g, s)) continue;
      SparseMat& target = out.action(g, s);
      for (std::size_t i = 0; i < n; ++i) {
        SparseVec image = m.apply(g, s, rows.row(i));
        auto combo = rows.solve(std::move(image));
        if (!combo)
          throw Error("restrict_to_rows: row basis is not action-closed");
        for (const auto& [rid, c] : *combo)
          target.add_entry(static_cast<std::int32_t>(rid),
                           static_cast<std::int32_t>(i), c);
      }
    }
  }
  return out;
}

SparseVec QuotientModule::project(const SparseVec& v) const {
  SparseVec residue = relations.reduce(v);
  SparseVec coords;
  for (const auto& [idx, c] : residue.entries()) {
    auto it = std::lower_bound(representative_indices.begin(),
                               representative_indices.end(), idx);
    coords.set(
        static_cast<std::int32_t>(it - representative_indices.begin()), c);
  }
  return coords;
}

QuotientModule quotient_by_relations(const CurrentModule& m,
                                     const std::vector<SparseVec>& seeds) {
  EchelonBasis sub = span_closure(m, seeds, all_generator_powers(m));
  QuotientModule q{CurrentModule(m.root_system_ptr(), m.cap()),
                   sub.non_pivot_indices(), std::move(sub)};
  const auto& reps = q.representative_indices;

  q.mod.set_graded(m.graded());
  q.mod.set_complete(m.complete());
  for (std::int32_t rep : reps) {
    const auto& bv = m.basis_vector(rep);
    q.mod.add_basis_vector(bv.weight, bv.degree);
  }

  for (const Gen& g : all_generators(m.rank())) {
    for (int s = 0; s <= m.cap(); ++s) {
      if (m.action_is_zero(g, s)) continue;
      SparseMat& target = q.mod.action(g, s);
      for (std::size_t col = 0; col < reps.size(); ++col) {
        SparseVec image = m.apply(g, s, SparseVec::unit(reps[col]));
        SparseVec coords = q.project(image);
        for (const auto& [row, c] : coords.entries())
          target.add_entry(row, static_cast<std::int32_t>(col), c);
      }
    }
  }

  if (m.cyclic_vector()) {
    SparseVec image = q.project(SparseVec::unit(*m.cyclic_vector()));
    if (image.size() == 1 && image.entries()[0].second == 1)
      q.mod.set_cyclic_vector(image.entries()[0].first);
  }
  return q;
}

}  // namespace currents
