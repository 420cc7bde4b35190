#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "cuplen/error.hpp"
#include "cuplen/series.hpp"

using namespace cuplen;
using boost::multiprecision::cpp_int;

TEST_CASE("Lucas parity matches exact binomials up to 300") {
  std::vector<cpp_int> row{1};
  for (int i = 0; i <= 300; ++i) {
    for (int j = 0; j <= 300; ++j) {
      const int exact = j <= i ? static_cast<int>(row[static_cast<std::size_t>(j)] % 2) : 0;
      CHECK_MESSAGE(lucas_parity(static_cast<unsigned>(i), static_cast<unsigned>(j)) == exact, i, " ", j);
    }
    std::vector<cpp_int> next(row.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  CHECK(lucas_parity(2, 1) == 0);
  CHECK(lucas_parity(3, 2) == 1);
}

TEST_CASE("small components of the inverse series") {
  const auto c = inverse_series_components(3, 3);
  REQUIRE(c.size() == 4);
  CHECK(to_string(c[0]) == "1");
  CHECK(to_string(c[1]) == "w1");
  CHECK(to_string(c[2]) == "w2 + w1^2");
  CHECK(to_string(c[3]) == "w3 + w1^3");
  CHECK(inverse_series_components(3, 0).size() == 1);
  CHECK_THROWS_AS(inverse_series_components(0, 4), InvalidArgument);
  CHECK_THROWS_AS(inverse_series_components(3, -1), InvalidArgument);
}

TEST_CASE("the series is an inverse") {
  for (int k = 1; k <= 5; ++k) {
    const VariableSet vars = full_variables(k);
    const int top = 24;
    const auto comps = inverse_series_components(vars, top);
    Gf2Polynomial s(vars);
    for (int d = 0; d <= top; ++d) {
      CHECK(comps[static_cast<std::size_t>(d)].is_homogeneous());
      if (!comps[static_cast<std::size_t>(d)].is_zero()) CHECK(*comps[static_cast<std::size_t>(d)].homogeneous_degree() == d);
      s += comps[static_cast<std::size_t>(d)];
    }
    Gf2Polynomial total = Gf2Polynomial::one(vars);
    for (int i = 1; i <= k; ++i) total += Gf2Polynomial::variable(vars, i);
    CHECK(mul_truncated(total, s, top) == Gf2Polynomial::one(vars));
  }
}

TEST_CASE("recursion and Frobenius routes agree") {
  for (VariableSet vars : {full_variables(3), reduced_variables(3), full_variables(4), reduced_variables(5)}) {
    CHECK(inverse_series_components(vars, 40) == inverse_series_by_frobenius(vars, 40));
  }
}

TEST_CASE("binary scale") {
  CHECK(binary_scale(6) == 2);
  CHECK(binary_scale(8) == 2);
  CHECK(binary_scale(9) == 3);
  CHECK(binary_scale(16) == 3);
  CHECK(binary_scale(17) == 4);
}

TEST_CASE("closed-form generators at n = 6 and n = 9") {
  auto g6 = ideal_gens_k3(6);
  CHECK(to_string(g6[0]) == "w2^2");
  CHECK(to_string(g6[1]) == "0");
  CHECK(to_string(g6[2]) == "w3^2 + w2^3");
  auto g9 = ideal_gens_k3(9);
  CHECK(to_string(g9[0]) == "w2^2*w3");
  CHECK(to_string(g9[1]) == "w2*w3^2 + w2^4");
  CHECK(to_string(g9[2]) == "w3^3");
  CHECK_THROWS_AS(ideal_gens_k3(5), InvalidArgument);
}

TEST_CASE("closed-form generators equal the series components, 6 <= n <= 64") {
  const auto series = inverse_series_components(reduced_variables(3), 64);
  for (int n = 6; n <= 64; ++n) {
    const auto g = ideal_gens_k3(n);
    for (int i = 0; i < 3; ++i) {
      const auto& gi = g[static_cast<std::size_t>(i)];
      CHECK(gi.is_homogeneous());
      if (!gi.is_zero()) CHECK(*gi.homogeneous_degree() == n - 2 + i);
      CHECK_MESSAGE(gi == series[static_cast<std::size_t>(n - 2 + i)], "n=", n, " i=", i);
    }
  }
}

TEST_CASE("closed-form generators equal components of a truncated odd power") {
  // (1 + w2 + w3)^(2^(s+3) - 1) by plain repeated multiplication.
  const VariableSet red = reduced_variables(3);
  const Gf2Polynomial base = parse_polynomial("1 + w2 + w3", red);
  for (int n : {6, 7, 9, 12, 13, 17, 20}) {
    const int e = (1 << (binary_scale(n) + 3)) - 1;
    Gf2Polynomial p = Gf2Polynomial::one(red);
    for (int i = 0; i < e; ++i) p = mul_truncated(p, base, n);
    const auto g = ideal_gens_k3(n);
    for (int i = 0; i < 3; ++i) CHECK(g[static_cast<std::size_t>(i)] == p.homogeneous_component(n - 2 + i));
  }
}
