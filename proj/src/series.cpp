#include "cuplen/series.hpp"

#include <bit>
#include <string>

#include "cuplen/error.hpp"

namespace cuplen {

std::vector<Gf2Polynomial> inverse_series_components(VariableSet vars, int max_deg) {
  if (max_deg < 0) throw InvalidArgument("max_deg must be non-negative");
  if (max_deg > kDefaultDegreeCap * 4) {
    throw CapExceeded("series degree " + std::to_string(max_deg) + " is beyond the supported range");
  }
  std::vector<Gf2Polynomial> comps;
  comps.reserve(static_cast<std::size_t>(max_deg) + 1);
  comps.push_back(Gf2Polynomial::one(vars));
  for (int d = 1; d <= max_deg; ++d) {
    Gf2Polynomial c(vars);
    for (int w = vars.first; w <= vars.last && w <= d; ++w) {
      const auto& prev = comps[static_cast<std::size_t>(d - w)];
      if (prev.is_zero()) continue;
      std::vector<Monomial> shifted;
      shifted.reserve(prev.size());
      Monomial var = Monomial::variable(vars, w);
      for (const auto& t : prev.terms()) shifted.push_back(t * var);
      c += Gf2Polynomial(vars, std::move(shifted));
    }
    comps.push_back(std::move(c));
  }
  return comps;
}

std::vector<Gf2Polynomial> inverse_series_components(int k, int max_deg) {
  if (k < 1) throw InvalidArgument("k must be positive");
  return inverse_series_components(full_variables(k), max_deg);
}

std::vector<Gf2Polynomial> inverse_series_by_frobenius(VariableSet vars, int max_deg) {
  if (max_deg < 0) throw InvalidArgument("max_deg must be non-negative");
  Gf2Polynomial product = Gf2Polynomial::one(vars);
  for (int step = 1; step <= max_deg; step *= 2) {
    std::vector<Monomial> factor_terms{Monomial(vars)};
    for (int w = vars.first; w <= vars.last; ++w) {
      if (w * step <= max_deg) factor_terms.push_back(Monomial::variable(vars, w, step));
    }
    product = mul_truncated(product, Gf2Polynomial(vars, std::move(factor_terms)), max_deg);
  }
  std::vector<Gf2Polynomial> comps;
  comps.reserve(static_cast<std::size_t>(max_deg) + 1);
  for (int d = 0; d <= max_deg; ++d) comps.push_back(product.homogeneous_component(d));
  return comps;
}

int binary_scale(int n) {
  if (n < 2) throw InvalidArgument("binary_scale needs n >= 2");
  return std::bit_width(static_cast<unsigned>(n - 1)) - 1;
}

Gf2Polynomial closed_form_generator_k3(int kappa) {
  const VariableSet vars = reduced_variables(3);
  std::vector<Monomial> terms;
  for (int i = (kappa + 2) / 3; 2 * i <= kappa; ++i) {
    if (lucas_parity(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(3 * i - kappa))) {
      terms.emplace_back(vars, std::vector<int>{3 * i - kappa, kappa - 2 * i});
    }
  }
  return Gf2Polynomial(vars, std::move(terms));
}

std::array<Gf2Polynomial, 3> ideal_gens_k3(int n) {
  if (n < 6) throw InvalidArgument("ideal_gens_k3 needs n >= 6, got " + std::to_string(n));
  return {closed_form_generator_k3(n - 2), closed_form_generator_k3(n - 1), closed_form_generator_k3(n)};
}

}  // namespace cuplen
