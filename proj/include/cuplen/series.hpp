#ifndef CUPLEN_SERIES_HPP
#define CUPLEN_SERIES_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "cuplen/polynomial.hpp"

namespace cuplen {

/// C(i, j) mod 2. By Lucas, odd exactly when the binary digits of j are
/// dominated by those of i; 0 when j > i.
constexpr int lucas_parity(std::uint64_t i, std::uint64_t j) { return (i & j) == j ? 1 : 0; }

/// Homogeneous components, in degrees 0..max_deg, of 1/(1 + w_first + ... + w_last),
/// via c_0 = 1 and c_d = sum_{w in vars, w <= d} w * c_{d-w}.
std::vector<Gf2Polynomial> inverse_series_components(VariableSet vars, int max_deg);
/// Same over the full ring Z2[w_1..w_k].
std::vector<Gf2Polynomial> inverse_series_components(int k, int max_deg);

/// The same components computed as prod_{j<m} (1 + w_first^{2^j} + ... + w_last^{2^j})
/// truncated at max_deg, where 2^m > max_deg. Over GF(2) this is
/// (1 + sum w)^{2^m - 1}, which equals the inverse up to degree 2^m - 1.
std::vector<Gf2Polynomial> inverse_series_by_frobenius(VariableSet vars, int max_deg);

/// s with 2^s < n <= 2^{s+1}; requires n >= 2.
int binary_scale(int n);

/// The k = 3 relation with w_1 eliminated in degree kappa:
///   g_kappa = sum_{kappa/3 <= i <= kappa/2} C(i, 3i - kappa) w2^{3i-kappa} w3^{kappa-2i}.
Gf2Polynomial closed_form_generator_k3(int kappa);

/// (g_{n-2}, g_{n-1}, g_n) in Z2[w2, w3]. Throws InvalidArgument for n < 6.
std::array<Gf2Polynomial, 3> ideal_gens_k3(int n);

}  // namespace cuplen

#endif  // CUPLEN_SERIES_HPP
