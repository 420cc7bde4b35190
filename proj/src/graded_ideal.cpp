#include "cuplen/graded_ideal.hpp"

#include <algorithm>
#include <string>

#include "cuplen/error.hpp"

namespace cuplen {

namespace {

std::uint64_t hash_exps(std::span<const int> exps) {
  std::uint64_t h = 1469598103934665603ULL;
  for (int e : exps) {
    h ^= static_cast<std::uint64_t>(e) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

void enumerate(VariableSet vars, int var, int remaining, std::vector<int>& current,
               std::vector<std::vector<int>>& out) {
  const int w = vars.weight(var);
  if (var == 0) {
    if (remaining % w == 0) {
      current[0] = remaining / w;
      out.push_back(current);
      current[0] = 0;
    }
    return;
  }
  for (int e = 0; e * w <= remaining; ++e) {
    current[static_cast<std::size_t>(var)] = e;
    enumerate(vars, var - 1, remaining - e * w, current, out);
  }
  current[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

std::vector<std::vector<int>> monomials_of_degree(VariableSet vars, int d) {
  std::vector<std::vector<int>> out;
  if (d < 0) return out;
  std::vector<int> current(static_cast<std::size_t>(vars.count()), 0);
  enumerate(vars, vars.count() - 1, d, current, out);
  return out;
}

Monomial DegreeComponent::monomial(std::size_t index, VariableSet vars) const {
  auto e = exps(index);
  return Monomial(vars, std::vector<int>(e.begin(), e.end()));
}

long DegreeComponent::find(std::span<const int> e) const {
  auto it = buckets_.find(hash_exps(e));
  if (it == buckets_.end()) return -1;
  for (std::size_t idx : it->second) {
    if (std::equal(e.begin(), e.end(), exps(idx).begin())) return static_cast<long>(idx);
  }
  return -1;
}

long DegreeComponent::times_variable(std::size_t var, std::size_t lower) const {
  const auto& table = times_var_[var];
  return lower < table.size() ? table[lower] : -1;
}

GradedIdeal::GradedIdeal(VariableSet vars, std::vector<Gf2Polynomial> generators, IdealLimits limits)
    : vars_(vars), generators_(std::move(generators)), limits_(limits) {
  for (const auto& g : generators_) {
    if (g.vars() != vars_) throw InvalidArgument("generator lives in a different variable set");
    if (!g.is_homogeneous()) throw InvalidArgument("generators must be homogeneous: " + to_string(g));
    if (g.homogeneous_degree() == 0) throw InvalidArgument("a constant generator makes the ideal trivial");
  }
  components_.resize(static_cast<std::size_t>(limits_.max_degree) + 1);
}

GradedIdeal::~GradedIdeal() = default;

const DegreeComponent& GradedIdeal::component(int d) const {
  if (d < 0) throw InvalidArgument("negative degree");
  if (d > limits_.max_degree) {
    throw CapExceeded("degree " + std::to_string(d) + " exceeds the degree cap " +
                      std::to_string(limits_.max_degree));
  }
  if (built_.load(std::memory_order_acquire) < d) {
    std::lock_guard lock(mutex_);
    for (int e = built_.load(std::memory_order_relaxed) + 1; e <= d; ++e) {
      build(e);
      built_.store(e, std::memory_order_release);
    }
  }
  return *components_[static_cast<std::size_t>(d)];
}

void GradedIdeal::build(int d) const {
  auto comp = std::make_unique<DegreeComponent>();
  DegreeComponent& c = *comp;
  const std::size_t nvars = static_cast<std::size_t>(vars_.count());
  c.degree_ = d;
  c.stride_ = nvars;

  auto all = monomials_of_degree(vars_, d);
  if (all.size() > limits_.max_basis) {
    throw CapExceeded("degree " + std::to_string(d) + " has " + std::to_string(all.size()) +
                      " monomials, above the basis cap " + std::to_string(limits_.max_basis));
  }
  c.size_ = all.size();
  c.exps_.reserve(c.size_ * nvars);
  for (std::size_t i = 0; i < all.size(); ++i) {
    c.exps_.insert(c.exps_.end(), all[i].begin(), all[i].end());
    c.buckets_[hash_exps(all[i])].push_back(i);
  }

  // Links to the degrees below, and classification: m is "reducible" when
  // some m / w_i is nonstandard, i.e. m is a multiple of a lower leading term.
  std::vector<const DegreeComponent*> lower(nvars, nullptr);
  c.times_var_.assign(nvars, {});
  for (std::size_t v = 0; v < nvars; ++v) {
    int ld = d - vars_.weight(static_cast<int>(v));
    if (ld < 0) continue;
    lower[v] = components_[static_cast<std::size_t>(ld)].get();
    c.times_var_[v].assign(lower[v]->size(), -1);
  }
  // down[m * nvars + v] = index of m / w_v in its degree, or -1.
  std::vector<long> down(c.size_ * nvars, -1);
  std::vector<int> scratch(nvars);
  for (std::size_t m = 0; m < c.size_; ++m) {
    auto e = c.exps(m);
    for (std::size_t v = 0; v < nvars; ++v) {
      if (e[v] == 0) continue;
      std::copy(e.begin(), e.end(), scratch.begin());
      --scratch[v];
      long j = lower[v]->find(scratch);
      if (j < 0) throw ConsistencyError("missing lower monomial");
      down[m * nvars + v] = j;
      c.times_var_[v][static_cast<std::size_t>(j)] = static_cast<long>(m);
    }
  }

  // primary[m] = variable used to express a reducible m, or -1 for candidates.
  std::vector<int> primary(c.size_, -1);
  std::vector<long> ucol(c.size_, -1);
  std::vector<std::size_t> candidates;
  for (std::size_t m = 0; m < c.size_; ++m) {
    for (std::size_t v = 0; v < nvars; ++v) {
      long j = down[m * nvars + v];
      if (j >= 0 && !lower[v]->is_standard(static_cast<std::size_t>(j))) {
        primary[m] = static_cast<int>(v);
        break;
      }
    }
    if (primary[m] < 0) candidates.push_back(m);
  }
  // Candidate columns run from the largest monomial down, so an echelon
  // pivot is always the leading term of its row.
  const std::size_t width = candidates.size();
  for (std::size_t col = 0; col < width; ++col) ucol[candidates[width - 1 - col]] = static_cast<long>(col);

  // Partial normal forms of reducible monomials over the candidate columns,
  // filled in ascending order: w_v * u == sum_{b in NF(u)} w_v * b with every
  // w_v * b smaller than w_v * u.
  std::vector<BitVector> pnf(c.size_);
  auto accumulate = [&](BitVector& acc, std::size_t t) {
    if (ucol[t] >= 0) {
      acc.flip(static_cast<std::size_t>(ucol[t]));
    } else {
      acc ^= pnf[t];
    }
  };
  auto accumulate_multiple = [&](BitVector& acc, std::size_t v, std::size_t u) {
    const DegreeComponent& lc = *lower[v];
    for_each_set_bit(lc.normal_form(u), [&](std::size_t s) {
      auto t = c.times_var_[v][lc.standard()[s]];
      accumulate(acc, static_cast<std::size_t>(t));
    });
  };
  for (std::size_t m = 0; m < c.size_; ++m) {
    if (primary[m] < 0) continue;
    const auto v = static_cast<std::size_t>(primary[m]);
    pnf[m] = BitVector(width);
    accumulate_multiple(pnf[m], v, static_cast<std::size_t>(down[m * nvars + v]));
  }

  // Every other way of writing a reducible m as w_v * u gives a relation
  // among candidates; so does every generator of this degree.
  BitMatrix relations(width);
  if (width > 0) {
    for (std::size_t m = 0; m < c.size_; ++m) {
      if (primary[m] < 0) continue;
      for (std::size_t v = static_cast<std::size_t>(primary[m]) + 1; v < nvars; ++v) {
        long j = down[m * nvars + v];
        if (j < 0 || lower[v]->is_standard(static_cast<std::size_t>(j))) continue;
        BitVector row = pnf[m];
        accumulate_multiple(row, v, static_cast<std::size_t>(j));
        if (row.any()) relations.add_row(std::move(row));
      }
    }
    for (const auto& g : generators_) {
      if (g.homogeneous_degree() != d) continue;
      BitVector row(width);
      for (const auto& t : g.terms()) {
        long idx = c.find(t.exps());
        accumulate(row, static_cast<std::size_t>(idx));
      }
      if (row.any()) relations.add_row(std::move(row));
    }
  }
  const EchelonBasis ech = echelonize(relations);

  std::vector<bool> pivot_col(width, false);
  std::vector<long> pivot_row_of_col(width, -1);
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    pivot_col[ech.pivots()[r]] = true;
    pivot_row_of_col[ech.pivots()[r]] = static_cast<long>(r);
  }
  c.standard_pos_.assign(c.size_, -1);
  for (std::size_t m = 0; m < c.size_; ++m) {
    if (ucol[m] >= 0 && !pivot_col[static_cast<std::size_t>(ucol[m])]) {
      c.standard_pos_[m] = static_cast<long>(c.standard_.size());
      c.standard_.push_back(m);
    }
  }
  const std::size_t nstd = c.standard_.size();
  std::vector<long> col_to_std(width, -1);
  for (std::size_t col = 0; col < width; ++col) {
    if (!pivot_col[col]) col_to_std[col] = c.standard_pos_[candidates[width - 1 - col]];
  }
  auto to_standard = [&](const BitVector& over_cols, std::size_t skip_col) {
    BitVector out(nstd);
    for_each_set_bit(over_cols, [&](std::size_t col) {
      if (col == skip_col) return;
      out.set(static_cast<std::size_t>(col_to_std[col]));
    });
    return out;
  };

  c.nf_.resize(c.size_);
  for (std::size_t m = 0; m < c.size_; ++m) {
    if (c.standard_pos_[m] >= 0) {
      c.nf_[m] = BitVector(nstd);
      c.nf_[m].set(static_cast<std::size_t>(c.standard_pos_[m]));
    } else if (ucol[m] >= 0) {
      auto col = static_cast<std::size_t>(ucol[m]);
      c.nf_[m] = to_standard(ech.rows()[static_cast<std::size_t>(pivot_row_of_col[col])], col);
    } else {
      c.nf_[m] = to_standard(reduce(pnf[m], ech), width);
      pnf[m] = BitVector();
    }
  }
  components_[static_cast<std::size_t>(d)] = std::move(comp);
}

BitVector GradedIdeal::normal_form(const Gf2Polynomial& x) const {
  if (x.vars() != vars_) throw InvalidArgument("polynomial lives in a different variable set");
  if (!x.is_homogeneous()) throw InvalidArgument("normal forms need a homogeneous polynomial: " + to_string(x));
  if (x.is_zero()) return BitVector(0);
  const DegreeComponent& c = component(*x.homogeneous_degree());
  BitVector out(c.quotient_dim());
  for (const auto& t : x.terms()) out ^= c.normal_form(static_cast<std::size_t>(c.find(t.exps())));
  return out;
}

bool GradedIdeal::contains(const Gf2Polynomial& x) const { return normal_form(x).none(); }

std::vector<Monomial> GradedIdeal::standard_monomials(int d) const {
  const DegreeComponent& c = component(d);
  std::vector<Monomial> out;
  out.reserve(c.quotient_dim());
  for (std::size_t idx : c.standard()) out.push_back(c.monomial(idx, vars_));
  return out;
}

Gf2Polynomial GradedIdeal::from_normal_form(int d, const BitVector& nf) const {
  const DegreeComponent& c = component(d);
  std::vector<Monomial> terms;
  for_each_set_bit(nf, [&](std::size_t s) { terms.push_back(c.monomial(c.standard()[s], vars_)); });
  return Gf2Polynomial(vars_, std::move(terms));
}

BitVector GradedIdeal::multiply(int d, const BitVector& nf, const Monomial& m) const {
  if (m.vars() != vars_) throw InvalidArgument("monomial lives in a different variable set");
  const DegreeComponent& src = component(d);
  const DegreeComponent& dst = component(d + m.degree());
  BitVector out(dst.quotient_dim());
  std::vector<int> e(static_cast<std::size_t>(vars_.count()));
  for_each_set_bit(nf, [&](std::size_t s) {
    auto b = src.exps(src.standard()[s]);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = b[i] + m.exps()[i];
    out ^= dst.normal_form(static_cast<std::size_t>(dst.find(e)));
  });
  return out;
}

EchelonBasis GradedIdeal::echelon(int d) const {
  const DegreeComponent& c = component(d);
  const std::size_t width = c.size();
  auto col_of = [&](std::size_t m) { return width - 1 - m; };
  std::vector<BitVector> rows;
  rows.reserve(c.ideal_rank());
  // Descending monomial order gives increasing pivot columns.
  for (std::size_t m = width; m-- > 0;) {
    if (c.is_standard(m)) continue;
    BitVector row(width);
    row.set(col_of(m));
    for_each_set_bit(c.normal_form(m), [&](std::size_t s) { row.set(col_of(c.standard()[s])); });
    rows.push_back(std::move(row));
  }
  return EchelonBasis(width, std::move(rows));
}

}  // namespace cuplen
