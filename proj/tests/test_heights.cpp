#include <doctest.h>

#include "cuplen/error.hpp"
#include "cuplen/heights.hpp"

using namespace cuplen;

namespace {

// Height by testing whole powers for membership, without the iterated
// normal-form product used by height_direct.
int height_by_powers(const GrassmannPresentation& p, const Gf2Polynomial& x) {
  int c = 0;
  while (!is_zero_in_quotient(p, pow(x, c + 1, 1 << 12))) ++c;
  return c;
}

}  // namespace

TEST_CASE("heights of w2 at small sizes") {
  const auto w2 = Gf2Polynomial::variable(full_variables(3), 2);
  const HeightRecord r = height_direct(GrassmannPresentation(9, 3), w2);
  CHECK(r.height == 7);
  CHECK(r.witness_nonzero == 14);
  CHECK(r.witness_zero == 8);
  CHECK(r.context == HeightContext::kUnoriented);
  CHECK(r.class_label == "w2");
  CHECK(height_direct(OrientedContext(9, 3), w2).height == 4);
  CHECK(height_direct(OrientedContext(6, 3), w2).height == 1);
  CHECK(height_direct(GrassmannPresentation(6, 3), w2).height == 4);
  CHECK(height_direct(OrientedContext(6, 3), Gf2Polynomial::variable(full_variables(3), 3)).height == 1);
  CHECK(to_string(HeightContext::kOrientedCharacteristic) == "oriented-characteristic");
}

TEST_CASE("direct heights agree with whole-power membership") {
  for (auto [n, k] : {std::pair{6, 3}, std::pair{9, 3}, std::pair{12, 3}, std::pair{8, 4}, std::pair{11, 4},
                      std::pair{10, 5}}) {
    const GrassmannPresentation p(n, k);
    for (const char* s : {"w2", "w3", "w1^2 + w2", "w2*w1 + w3"}) {
      const auto x = parse_polynomial(s, p.vars());
      CHECK_MESSAGE(height_direct(p, x).height == height_by_powers(p, x), n, ",", k, " ", s);
    }
  }
}

TEST_CASE("height errors") {
  const GrassmannPresentation p(9, 3);
  const OrientedContext c(9, 3);
  CHECK_THROWS_AS(height_direct(p, Gf2Polynomial(p.vars())), UndefinedQuery);
  CHECK_THROWS_AS(height_direct(p, parse_polynomial("w2^8", p.vars())), UndefinedQuery);
  CHECK_THROWS_AS(height_direct(p, parse_polynomial("w3^7", p.vars())), UndefinedQuery);
  CHECK_THROWS_AS(height_direct(c, parse_polynomial("w1", p.vars())), UndefinedQuery);
  CHECK_THROWS_AS(height_direct(p, parse_polynomial("w2 + w3", p.vars())), InvalidArgument);
  CHECK_THROWS_AS(height_direct(p, Gf2Polynomial::one(p.vars())), InvalidArgument);
}

TEST_CASE("decompositions of n cover every n exactly once") {
  using F = NDecomposition::Form;
  CHECK(decompose_n(9) == NDecomposition{3, F::kPowerPlusOne, 0, 0});
  CHECK(decompose_n(10) == NDecomposition{3, F::kPowerPlusTwo, 0, 0});
  CHECK(decompose_n(11) == NDecomposition{3, F::kTwoPowersPlusOne, 1, 0});
  CHECK(decompose_n(12) == NDecomposition{3, F::kTwoPowersPlusTail, 1, 1});
  CHECK(decompose_n(16) == NDecomposition{3, F::kTwoPowersPlusTail, 2, 3});
  CHECK_THROWS_AS(decompose_n(5), InvalidArgument);
  for (int n = 6; n <= 300; ++n) {
    const NDecomposition d = decompose_n(n);
    const int two_s = 1 << d.s;
    CHECK(two_s < n);
    CHECK(n <= 2 * two_s);
    int rebuilt = 0;
    switch (d.form) {
      case F::kPowerPlusOne:
        rebuilt = two_s + 1;
        break;
      case F::kPowerPlusTwo:
        rebuilt = two_s + 2;
        break;
      case F::kTwoPowersPlusOne:
        CHECK(d.s > d.p);
        CHECK(d.p >= 1);
        rebuilt = two_s + (1 << d.p) + 1;
        break;
      case F::kTwoPowersPlusTail:
        CHECK(d.s > d.p);
        CHECK(d.p >= 1);
        CHECK(d.t >= 1);
        CHECK(d.t <= (1 << d.p) - 1);
        rebuilt = two_s + (1 << d.p) + d.t + 1;
        break;
    }
    CHECK_MESSAGE(rebuilt == n, "n=", n);
  }
}

TEST_CASE("closed-form height of w2 against direct computation, k = 3 and 4") {
  for (int n = 6; n <= 40; ++n) {
    const GrassmannPresentation p(n, 3);
    CHECK_MESSAGE(w2_height_closed_form(n, 3) == height_direct(p, Gf2Polynomial::variable(p.vars(), 2)).height,
                  "n=", n);
  }
  for (int n = 8; n <= 20; ++n) {
    const GrassmannPresentation p(n, 4);
    CHECK_MESSAGE(w2_height_closed_form(n, 4) == height_direct(p, Gf2Polynomial::variable(p.vars(), 2)).height,
                  "n=", n);
  }
  CHECK(w2_height_closed_form(9, 3) == 7);
  CHECK(w2_height_closed_form(6, 3) == 4);
  CHECK_THROWS_AS(w2_height_closed_form(7, 4), HypothesisViolation);
}

TEST_CASE("closed-form height of w2 for k = 5 away from the known defect") {
  for (int n : {10, 11, 12, 13, 14, 15, 16, 17, 18}) {
    const GrassmannPresentation p(n, 5);
    const int direct = height_direct(p, Gf2Polynomial::variable(p.vars(), 2)).height;
    if (n >= 10 && n <= 12) {
      // The table gives 15 here; 15 * 2 > 5 (n - 5) at n = 10, so the direct
      // value is the true one.
      CHECK(w2_height_closed_form(n, 5) == 15);
      CHECK(direct == 12);
    } else {
      CHECK_MESSAGE(w2_height_closed_form(n, 5) == direct, "n=", n);
    }
  }
}

TEST_CASE("rational first Pontryagin height") {
  CHECK(rational_p1_height(8, 4) == 4);
  CHECK(rational_p1_height(9, 4) == 4);
  CHECK(rational_p1_height(10, 4) == 6);
  CHECK(rational_p1_height(11, 5) == 6);
  CHECK_THROWS_AS(rational_p1_height(9, 3), HypothesisViolation);
  CHECK_THROWS_AS(rational_p1_height(7, 4), HypothesisViolation);
  const HeightRecord r = rational_p1_record(8, 4);
  CHECK(r.height == 4);
  CHECK(r.witness_nonzero == 16);
  CHECK(r.context == HeightContext::kRationalClosedForm);
}
