#include "cuplen/heights.hpp"

#include <bit>

#include "cuplen/error.hpp"
#include "cuplen/series.hpp"

namespace cuplen {

std::string to_string(HeightContext c) {
  switch (c) {
    case HeightContext::kUnoriented:
      return "unoriented";
    case HeightContext::kOrientedCharacteristic:
      return "oriented-characteristic";
    case HeightContext::kRationalClosedForm:
      return "rational-closed-form";
  }
  return "unknown";
}

namespace {

HeightRecord height_in(const GradedIdeal& ideal, int top, const Gf2Polynomial& x, HeightContext context, int n,
                       int k) {
  if (!x.is_homogeneous()) throw InvalidArgument("height needs a homogeneous class: " + to_string(x));
  if (x.is_zero()) throw UndefinedQuery("the height of 0 is undefined");
  const int deg = *x.homogeneous_degree();
  if (deg == 0) throw InvalidArgument("height needs a class of positive degree");
  if (deg > top) throw UndefinedQuery(to_string(x) + " is zero above the formal dimension");
  BitVector power = ideal.normal_form(x);
  if (power.none()) throw UndefinedQuery(to_string(x) + " is zero in the quotient");

  int c = 1;
  while ((c + 1) * deg <= top) {
    BitVector next(ideal.component((c + 1) * deg).quotient_dim());
    for (const auto& t : x.terms()) next ^= ideal.multiply(c * deg, power, t);
    if (next.none()) break;
    power = std::move(next);
    ++c;
  }
  return {to_string(x), context, n, k, c, c * deg, c + 1};
}

}  // namespace

HeightRecord height_direct(const GrassmannPresentation& p, const Gf2Polynomial& x) {
  return height_in(p.ideal(), p.formal_dim(), x, HeightContext::kUnoriented, p.n(), p.k());
}

HeightRecord height_direct(const OrientedContext& ctx, const Gf2Polynomial& x) {
  return height_in(ctx.ideal(), ctx.formal_dim(), x, HeightContext::kOrientedCharacteristic, ctx.base().n(),
                   ctx.base().k());
}

NDecomposition decompose_n(int n) {
  if (n < 6) throw InvalidArgument("decompose_n needs n >= 6, got " + std::to_string(n));
  NDecomposition out;
  out.s = binary_scale(n);
  const int rest = n - (1 << out.s) - 1;  // 0 <= rest <= 2^s - 1
  if (rest == 0) {
    out.form = NDecomposition::Form::kPowerPlusOne;
  } else if (rest == 1) {
    out.form = NDecomposition::Form::kPowerPlusTwo;
  } else {
    out.p = std::bit_width(static_cast<unsigned>(rest)) - 1;
    out.t = rest - (1 << out.p);
    out.form = out.t == 0 ? NDecomposition::Form::kTwoPowersPlusOne : NDecomposition::Form::kTwoPowersPlusTail;
  }
  return out;
}

int w2_height_closed_form(int n, int k) {
  check_grassmann_hypothesis(n, k);
  const NDecomposition dec = decompose_n(n);
  const int two_s = 1 << dec.s;
  if (k == 3) {
    switch (dec.form) {
      case NDecomposition::Form::kPowerPlusOne:
        return two_s - 1;
      case NDecomposition::Form::kPowerPlusTwo:
        return two_s;
      case NDecomposition::Form::kTwoPowersPlusOne:
        return two_s + (2 << dec.p) - 2;
      case NDecomposition::Form::kTwoPowersPlusTail:
        return two_s + (2 << dec.p) - 1;
    }
  }
  const int offset = n - two_s;
  if (k == 4) {
    if (offset == 1) return two_s - 1;
    if (offset == 2 || offset == 3) return 2 * two_s - 4;
    return 2 * two_s - 1;
  }
  if (offset == 1) return two_s - 1;
  return 2 * two_s - 1;
}

int rational_p1_height(int n, int k) {
  if (k < 4) throw HypothesisViolation("the rational bounds need k >= 4");
  if (n < 2 * k) throw HypothesisViolation("need n >= 2k");
  return (k / 2) * ((n - k) / 2);
}

HeightRecord rational_p1_record(int n, int k) {
  const int h = rational_p1_height(n, k);
  return {"p1", HeightContext::kRationalClosedForm, n, k, h, 4 * h, h + 1};
}

}  // namespace cuplen
