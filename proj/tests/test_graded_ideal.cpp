#include <doctest.h>

#include <algorithm>

#include "cuplen/error.hpp"
#include "cuplen/graded_ideal.hpp"
#include "cuplen/series.hpp"

using namespace cuplen;

namespace {

std::vector<Gf2Polynomial> grassmann_gens(int n, int k) {
  const auto c = inverse_series_components(k, n);
  return {c.begin() + (n - k + 1), c.end()};
}

// Degree-d part of the ideal as the row space of {m * g}, columns in
// descending monomial order, reduced by plain elimination.
EchelonBasis macaulay(VariableSet vars, const std::vector<Gf2Polynomial>& gens, int d) {
  auto mons = monomials_of_degree(vars, d);
  std::reverse(mons.begin(), mons.end());
  auto column = [&](const Monomial& m) {
    for (std::size_t j = 0; j < mons.size(); ++j) {
      if (std::equal(mons[j].begin(), mons[j].end(), m.exps().begin())) return j;
    }
    FAIL("monomial not found");
    return std::size_t{0};
  };
  BitMatrix mat(mons.size());
  for (const auto& g : gens) {
    if (g.is_zero() || *g.homogeneous_degree() > d) continue;
    for (const auto& e : monomials_of_degree(vars, d - *g.homogeneous_degree())) {
      const Gf2Polynomial row = Gf2Polynomial(Monomial(vars, e)) * g;
      BitVector v(mons.size());
      for (const auto& t : row.terms()) v.flip(column(t));
      mat.add_row(std::move(v));
    }
  }
  return echelonize(mat);
}

}  // namespace

TEST_CASE("monomials of a degree") {
  const auto m = monomials_of_degree(reduced_variables(3), 6);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == std::vector<int>{3, 0});
  CHECK(m[1] == std::vector<int>{0, 2});
  CHECK(monomials_of_degree(full_variables(3), 0).size() == 1);
  CHECK(monomials_of_degree(reduced_variables(3), 1).empty());
  for (int d = 0; d < 12; ++d) {
    const auto ms = monomials_of_degree(full_variables(4), d);
    for (std::size_t i = 1; i < ms.size(); ++i) CHECK(compare_exponents(ms[i - 1], ms[i]) < 0);
  }
}

TEST_CASE("reduced echelon of each degree equals the Macaulay-matrix route") {
  struct Case {
    int n, k;
  };
  for (Case c : {Case{6, 3}, Case{7, 3}, Case{8, 3}, Case{8, 4}, Case{9, 4}, Case{10, 5}}) {
    const VariableSet vars = full_variables(c.k);
    const auto gens = grassmann_gens(c.n, c.k);
    const GradedIdeal ideal(vars, gens);
    auto with_w1 = gens;
    with_w1.push_back(Gf2Polynomial::variable(vars, 1));
    const GradedIdeal oriented(vars, with_w1);
    const int top = c.k * (c.n - c.k) + 2;
    for (int d = 0; d <= top; ++d) {
      CHECK_MESSAGE(ideal.echelon(d).rows() == macaulay(vars, gens, d).rows(), c.n, ",", c.k, " d=", d);
      CHECK_MESSAGE(oriented.echelon(d).rows() == macaulay(vars, with_w1, d).rows(), c.n, ",", c.k, " d=", d);
    }
  }
}

TEST_CASE("J_{n,3} echelons match the Macaulay route") {
  for (int n = 6; n <= 14; ++n) {
    auto g = ideal_gens_k3(n);
    const std::vector<Gf2Polynomial> gens(g.begin(), g.end());
    const GradedIdeal j(reduced_variables(3), gens);
    for (int d = 0; d <= 3 * (n - 3) + 2; ++d) CHECK(j.echelon(d).rows() == macaulay(reduced_variables(3), gens, d).rows());
  }
}

TEST_CASE("normal forms, membership, multiplication") {
  const VariableSet vars = full_variables(3);
  const GradedIdeal ideal(vars, grassmann_gens(9, 3));
  const Gf2Polynomial w2 = Gf2Polynomial::variable(vars, 2);
  CHECK(ideal.contains(Gf2Polynomial(vars)));
  CHECK(ideal.contains(ideal.generators()[0]));
  CHECK_FALSE(ideal.contains(w2));
  // NF is idempotent and its polynomial differs from x by an ideal element.
  const Gf2Polynomial x = parse_polynomial("w1^2*w3^2 + w2^2*w3*w1 + w2*w3^2", vars);
  const int d = *x.homogeneous_degree();
  const Gf2Polynomial back = ideal.from_normal_form(d, ideal.normal_form(x));
  CHECK(ideal.contains(x + back));
  CHECK(ideal.normal_form(back) == ideal.normal_form(x));
  // multiply agrees with multiplying polynomials first.
  const Monomial m(vars, {1, 1, 0});
  CHECK(ideal.multiply(d, ideal.normal_form(x), m) == ideal.normal_form(x * Gf2Polynomial(m)));
  CHECK(ideal.standard_monomials(0).size() == 1);
  CHECK_THROWS_AS((void)ideal.normal_form(parse_polynomial("w1 + w2", vars)), InvalidArgument);
  CHECK_THROWS_AS((void)ideal.normal_form(parse_polynomial("w2", reduced_variables(3))), InvalidArgument);
}

TEST_CASE("constructor and caps") {
  const VariableSet vars = full_variables(3);
  CHECK_THROWS_AS(GradedIdeal(vars, {parse_polynomial("w1 + w2", vars)}), InvalidArgument);
  CHECK_THROWS_AS(GradedIdeal(vars, {Gf2Polynomial::one(vars)}), InvalidArgument);
  CHECK_THROWS_AS(GradedIdeal(vars, {parse_polynomial("w2", reduced_variables(3))}), InvalidArgument);
  const GradedIdeal small(vars, {}, IdealLimits{10, 1000});
  CHECK_THROWS_AS(small.component(11), CapExceeded);
  CHECK_THROWS_AS(small.component(-1), InvalidArgument);
  const GradedIdeal tight(full_variables(5), {}, IdealLimits{100, 20});
  CHECK_THROWS_AS(tight.component(30), CapExceeded);
}

TEST_CASE("free polynomial ring has no ideal") {
  const VariableSet vars = full_variables(3);
  const GradedIdeal free(vars, {});
  for (int d = 0; d < 15; ++d) CHECK(free.quotient_dim(d) == monomials_of_degree(vars, d).size());
}
