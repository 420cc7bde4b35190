#include "cuplen/grassmann.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "cuplen/error.hpp"
#include "cuplen/series.hpp"

namespace cuplen {

void check_grassmann_hypothesis(int n, int k) {
  if (k < 3 || 2 * k > n) {
    throw HypothesisViolation("need n >= 2k >= 6, got (n, k) = (" + std::to_string(n) + ", " +
                              std::to_string(k) + ")");
  }
}

GrassmannPresentation::GrassmannPresentation(int n, int k, GrassmannLimits limits)
    : n_(n), k_(k), formal_dim_(0), limits_(limits) {
  check_grassmann_hypothesis(n, k);
  formal_dim_ = k * (n - k);
  if (formal_dim_ > limits_.max_formal_dim) {
    throw CapExceeded("formal dimension " + std::to_string(formal_dim_) + " exceeds the cap " +
                      std::to_string(limits_.max_formal_dim));
  }
  auto comps = inverse_series_components(k, n);
  std::vector<Gf2Polynomial> gens(comps.begin() + (n - k + 1), comps.end());
  // One degree past N so that "everything above N vanishes" is observable.
  const IdealLimits ideal_limits{formal_dim_ + k + 1, limits_.max_basis};
  ideal_ = std::make_shared<const GradedIdeal>(full_variables(k), gens, ideal_limits);
  gens.push_back(Gf2Polynomial::variable(full_variables(k), 1));
  oriented_ = std::make_shared<const GradedIdeal>(full_variables(k), std::move(gens), ideal_limits);
}

GrassmannPresentation build_presentation(int n, int k, GrassmannLimits limits) {
  return GrassmannPresentation(n, k, limits);
}

std::vector<std::size_t> betti(const GrassmannPresentation& p) {
  std::vector<std::size_t> b;
  b.reserve(static_cast<std::size_t>(p.formal_dim()) + 1);
  for (int d = 0; d <= p.formal_dim(); ++d) b.push_back(p.ideal().quotient_dim(d));
  return b;
}

namespace {

bool vanishes(const GradedIdeal& ideal, int formal_dim, const Gf2Polynomial& x) {
  if (!x.is_homogeneous()) throw InvalidArgument("class must be homogeneous: " + to_string(x));
  if (x.is_zero() || *x.homogeneous_degree() > formal_dim) return true;
  return ideal.contains(x);
}

}  // namespace

bool is_zero_in_quotient(const GrassmannPresentation& p, const Gf2Polynomial& x) {
  return vanishes(p.ideal(), p.formal_dim(), x);
}

bool oriented_nonzero(const OrientedContext& ctx, const Monomial& m) {
  if (m.vars() != ctx.base().vars()) throw InvalidArgument("monomial must live in Z2[w_1..w_k]");
  if (m.exp_of(1) != 0) throw InvalidArgument("oriented queries take monomials without a w1 factor");
  return !vanishes(ctx.ideal(), ctx.formal_dim(), Gf2Polynomial(m));
}

std::vector<std::size_t> char_subalgebra_dims(const OrientedContext& ctx) {
  std::vector<std::size_t> dims;
  for (int d = 0; d <= ctx.formal_dim(); ++d) dims.push_back(ctx.ideal().quotient_dim(d));
  return dims;
}

namespace {

struct WordsHash {
  std::size_t operator()(const BitVector& v) const {
    std::uint64_t h = 0x51ed270b27c1f3a5ULL ^ v.width();
    for (std::size_t i = 0; i < v.word_count(); ++i) {
      h ^= v.words()[i];
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

struct PartialProduct {
  BitVector nf;
  ProductCertificate cert;
};

bool better(const ProductCertificate& a, const ProductCertificate& b) {
  if (a.length != b.length) return a.length > b.length;
  return a.exps < b.exps;
}

}  // namespace

ProductCertificate longest_monomial_product(const OrientedContext& ctx) {
  const GradedIdeal& ideal = ctx.ideal();
  const int top = ctx.formal_dim();
  const int k = ctx.base().k();
  const auto nreduced = static_cast<std::size_t>(k - 1);

  // levels[d]: one partial product per distinct nonzero normal form.
  std::vector<std::vector<PartialProduct>> levels(static_cast<std::size_t>(top) + 1);
  {
    BitVector one(ideal.component(0).quotient_dim());
    one.set(0);
    levels[0].push_back({one, {std::vector<int>(nreduced, 0), 0, 0}});
  }
  ProductCertificate best = levels[0].front().cert;
  auto consider_best = [&](const ProductCertificate& c) {
    int sc = c.score(top);
    int sb = best.score(top);
    if (sc > sb || (sc == sb && c.exps < best.exps)) best = c;
  };
  consider_best(best);

  for (int d = 1; d <= top; ++d) {
    const DegreeComponent& comp = ideal.component(d);
    if (comp.quotient_dim() == 0) continue;
    std::unordered_map<BitVector, std::size_t, WordsHash> seen;
    auto& level = levels[static_cast<std::size_t>(d)];
    for (int w = 2; w <= k && w <= d; ++w) {
      const auto& prev_level = levels[static_cast<std::size_t>(d - w)];
      if (prev_level.empty()) continue;
      const DegreeComponent& prev = ideal.component(d - w);
      const auto var = static_cast<std::size_t>(w - 1);
      for (const auto& pp : prev_level) {
        BitVector nf(comp.quotient_dim());
        for_each_set_bit(pp.nf, [&](std::size_t s) {
          long t = comp.times_variable(var, prev.standard()[s]);
          nf ^= comp.normal_form(static_cast<std::size_t>(t));
        });
        if (nf.none()) continue;
        ProductCertificate cert = pp.cert;
        ++cert.exps[static_cast<std::size_t>(w - 2)];
        ++cert.length;
        cert.degree = d;
        auto [it, inserted] = seen.try_emplace(nf, level.size());
        if (inserted) {
          level.push_back({std::move(nf), std::move(cert)});
        } else if (better(cert, level[it->second].cert)) {
          level[it->second].cert = std::move(cert);
        }
      }
    }
    for (const auto& pp : level) consider_best(pp.cert);
  }
  return best;
}

std::unique_ptr<GradedIdeal> k3_reduced_ideal(int n, IdealLimits limits) {
  auto gens = ideal_gens_k3(n);
  limits.max_degree = std::min(limits.max_degree, 3 * (n - 3) + 4);
  return std::make_unique<GradedIdeal>(reduced_variables(3), std::vector<Gf2Polynomial>(gens.begin(), gens.end()),
                                       limits);
}

bool k3_reduced_membership(const GradedIdeal& j, const Gf2Polynomial& x) {
  if (x.vars() != reduced_variables(3)) throw InvalidArgument("J_{n,3} lives in Z2[w2, w3]");
  if (!x.is_homogeneous()) throw InvalidArgument("class must be homogeneous: " + to_string(x));
  if (x.is_zero()) return true;
  if (*x.homogeneous_degree() > j.limits().max_degree) {
    throw CapExceeded("degree beyond the range built for this ideal");
  }
  return j.contains(x);
}

bool k3_reduced_membership(int n, const Gf2Polynomial& x) { return k3_reduced_membership(*k3_reduced_ideal(n), x); }

int available_target_dim(const GradedIdeal& j, int n) {
  const int top = 3 * (n - 3);
  const Monomial w2 = Monomial::variable(reduced_variables(3), 2);
  BitVector nf = j.normal_form(Gf2Polynomial(w2));
  if (nf.none()) return 0;
  int c = 1;
  while (2 * (c + 1) <= top) {
    BitVector next = j.multiply(2 * c, nf, w2);
    if (next.none()) break;
    nf = std::move(next);
    ++c;
  }
  return 2 * c;
}

int available_target_dim(int n) {
  if (n < 6) throw InvalidArgument("available_target_dim needs n >= 6");
  return available_target_dim(*k3_reduced_ideal(n), n);
}

}  // namespace cuplen
