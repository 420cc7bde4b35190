#include <doctest.h>

#include <random>

#include "cuplen/error.hpp"
#include "cuplen/polynomial.hpp"

using namespace cuplen;

namespace {

const VariableSet kRed = reduced_variables(3);
const VariableSet kFull = full_variables(3);

Gf2Polynomial P(const char* s, VariableSet v = kRed) { return parse_polynomial(s, v); }

Gf2Polynomial random_poly(std::mt19937& rng, VariableSet vars, int max_exp, int terms) {
  std::vector<Monomial> ms;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(vars.count()));
    for (auto& x : e) x = static_cast<int>(rng() % static_cast<unsigned>(max_exp + 1));
    ms.emplace_back(vars, e);
  }
  return Gf2Polynomial(vars, ms);
}

}  // namespace

TEST_CASE("monomial degree and order") {
  Monomial m(kRed, {2, 1});
  CHECK(m.degree() == 7);
  CHECK(m.length() == 3);
  CHECK(m.exp_of(3) == 1);
  CHECK(m.exp_of(1) == 0);
  CHECK_THROWS_AS(Monomial(kRed, {1}), InvalidArgument);
  CHECK_THROWS_AS(Monomial(kRed, {-1, 0}), InvalidArgument);
  // degree first, then the last variable is most significant
  CHECK(Monomial(kRed, {3, 0}) < Monomial(kRed, {0, 2}));
  CHECK(Monomial(kRed, {1, 0}) < Monomial(kRed, {0, 1}));
  CHECK(Monomial(kRed, {2, 1}) * Monomial(kRed, {0, 1}) == Monomial(kRed, {2, 2}));
  CHECK(Monomial(kRed, {2, 1}).divide_by_variable(3) == Monomial(kRed, {2, 0}));
  CHECK_FALSE(Monomial(kRed, {2, 0}).divide_by_variable(3).has_value());
}

TEST_CASE("addition cancels in pairs") {
  CHECK(to_string(P("w2^2 + w3") + P("w3")) == "w2^2");
  const Gf2Polynomial p = P("w2^3 + w3^2 + w2*w3");
  CHECK((p + p).is_zero());
  CHECK(to_string(add(p, p)) == "0");
  CHECK(Gf2Polynomial(kRed, {Monomial(kRed, {1, 0}), Monomial(kRed, {1, 0})}).is_zero());
  CHECK_THROWS_AS(add(P("w2"), P("w2", kFull)), InvalidArgument);
}

TEST_CASE("the w2^5 identity at n = 9") {
  const Gf2Polynomial g7 = P("w2^2*w3");
  const Gf2Polynomial g8 = P("w2*w3^2 + w2^4");
  CHECK(to_string(mul(P("w3"), g7)) == "w2^2*w3^2");
  CHECK(to_string(P("w3") * g7 + P("w2") * g8) == "w2^5");
}

TEST_CASE("multiplication") {
  CHECK(to_string(P("w2") * P("w3")) == "w2*w3");
  CHECK(*(P("w2") * P("w3")).homogeneous_degree() == 5);
  CHECK(to_string(pow(P("1 + w2 + w3"), 2)) == "w3^2 + w2^2 + 1");
  CHECK(mul(P("w2"), Gf2Polynomial(kRed)).is_zero());
  CHECK_THROWS_AS(mul(P("w2"), P("w2", kFull)), InvalidArgument);
  CHECK_THROWS_AS(mul(P("w2^100"), P("w2^100"), 256), CapExceeded);
  CHECK(to_string(mul_truncated(P("1 + w2"), P("1 + w3"), 3)) == "w3 + w2 + 1");
}

TEST_CASE("Frobenius: squaring squares each term") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Gf2Polynomial p = random_poly(rng, kFull, 4, 1 + static_cast<int>(rng() % 8));
    std::vector<Monomial> squares;
    for (const auto& t : p.terms()) squares.push_back(t * t);
    CHECK(p * p == Gf2Polynomial(kFull, squares));
  }
}

TEST_CASE("(1 + w2 + w3)^(2^m) = 1 + w2^(2^m) + w3^(2^m)") {
  Gf2Polynomial x = P("1 + w2 + w3");
  for (int m = 1; m <= 8; ++m) {
    x = mul(x, x, 1 << 12);
    const int e = 1 << m;
    const Gf2Polynomial want = Gf2Polynomial::one(kRed) + Gf2Polynomial(Monomial::variable(kRed, 2, e)) +
                               Gf2Polynomial(Monomial::variable(kRed, 3, e));
    CHECK(x == want);
  }
}

TEST_CASE("homogeneity, truncation, restriction") {
  const Gf2Polynomial p = P("w1*w2 + w3 + w2^2", kFull);
  CHECK_FALSE(p.is_homogeneous());
  CHECK_FALSE(p.homogeneous_degree().has_value());
  CHECK(to_string(p.homogeneous_component(3)) == "w3 + w1*w2");
  CHECK(to_string(p.truncated(3)) == "w3 + w1*w2");
  CHECK(p.max_degree() == 4);
  CHECK(to_string(p.restricted_to(kRed)) == "w2^2 + w3");
  CHECK(Gf2Polynomial(kRed).is_homogeneous());
  CHECK(Gf2Polynomial(kRed).max_degree() == -1);
}

TEST_CASE("parser") {
  CHECK(to_string(P("w2^2*w3 + w3^3")) == "w3^3 + w2^2*w3");
  CHECK(to_string(P(" w3 *w2 ")) == "w2*w3");
  CHECK(to_string(P("w2*w2")) == "w2^2");
  CHECK(to_string(P("0")) == "0");
  CHECK(to_string(P("1")) == "1");
  CHECK(to_string(P("w2^0")) == "1");
  CHECK(to_string(P("w2 + w2")) == "0");
  CHECK_THROWS_AS(P(""), InvalidArgument);
  CHECK_THROWS_AS(P("w1"), InvalidArgument);
  CHECK_THROWS_AS(P("w2 +"), InvalidArgument);
  CHECK_THROWS_AS(P("w2^"), InvalidArgument);
  CHECK_THROWS_AS(P("x2"), InvalidArgument);
  CHECK_THROWS_AS(P("2*w2"), InvalidArgument);
  CHECK_THROWS_AS(P("w2 w3"), InvalidArgument);
}

TEST_CASE("rendering round-trips through the parser") {
  std::mt19937 rng(11);
  for (VariableSet vars : {kRed, kFull, full_variables(5)}) {
    for (int trial = 0; trial < 300; ++trial) {
      const Gf2Polynomial p = random_poly(rng, vars, 5, static_cast<int>(rng() % 7));
      CHECK(parse_polynomial(to_string(p), vars) == p);
    }
  }
}
