#include "cuplen/bounds.hpp"

#include <numeric>
#include <string>

#include "cuplen/error.hpp"
#include "cuplen/heights.hpp"

namespace cuplen {

std::string to_string(Field f) { return f == Field::kGf2 ? "gf2" : "rational"; }

Field parse_field(const std::string& s) {
  if (s == "gf2") return Field::kGf2;
  if (s == "rational") return Field::kRational;
  throw InvalidArgument("unknown field '" + s + "' (expected gf2 or rational)");
}

void validate(const PoincareProfile& p) {
  if (p.r <= 0 || p.r >= p.formal_dim) {
    throw InvalidArgument("profile needs 0 < r < N, got r=" + std::to_string(p.r) +
                          " N=" + std::to_string(p.formal_dim));
  }
  if (p.q != 0 && (p.q < p.r || p.q >= p.formal_dim)) {
    throw InvalidArgument("profile needs r <= q < N, got q=" + std::to_string(p.q));
  }
}

std::string to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::kDimensionRatio:
      return "dim-ratio";
    case BoundMethod::kExactHeight:
      return "exact-height";
    case BoundMethod::kProduct:
      return "product";
    case BoundMethod::kNilpotency:
      return "nilpotency";
    case BoundMethod::kNilpotencyComputed:
      return "nilpotency-computed";
    case BoundMethod::kClosedForm63:
      return "closed-form-6-3";
    case BoundMethod::kClosedFormParity:
      return "closed-form-parity";
    case BoundMethod::kClosedForm9To12:
      return "closed-form-9-12";
    case BoundMethod::kClosedFormShifted:
      return "closed-form-shifted";
    case BoundMethod::kClosedFormTable:
      return "closed-form-table";
    case BoundMethod::kClosedFormRational:
      return "closed-form-rational";
  }
  return "unknown";
}

bool is_closed_form(BoundMethod m) {
  switch (m) {
    case BoundMethod::kClosedForm63:
    case BoundMethod::kClosedFormParity:
    case BoundMethod::kClosedForm9To12:
    case BoundMethod::kClosedFormShifted:
    case BoundMethod::kClosedFormTable:
    case BoundMethod::kClosedFormRational:
      return true;
    default:
      return false;
  }
}

int dimension_ratio_upper(const PoincareProfile& p) {
  validate(p);
  return p.formal_dim / p.r;
}

std::optional<int> exact_from_height(const PoincareProfile& p, int h) {
  validate(p);
  if (h < 1) throw InvalidArgument("height must be >= 1");
  if (p.r * h == p.formal_dim) return h;
  return std::nullopt;
}

int product_lower(const PoincareProfile& p, int length, int degree) {
  validate(p);
  if (length < 0 || degree < 0) throw InvalidArgument("product length and degree must be >= 0");
  if (degree > p.formal_dim) throw InvalidArgument("a nonzero product cannot sit above the formal dimension");
  return degree < p.formal_dim ? length + 1 : length;
}

int nilpotency_upper(const PoincareProfile& p, const NilpotencyData& nd) {
  validate(p);
  if (p.q == 0) throw HypothesisViolation("the nilpotency bound needs q");
  if (p.r >= p.q) throw HypothesisViolation("the nilpotency bound needs r < q");
  if (nd.exponents.empty()) throw InvalidArgument("need at least one exponent");
  int sum = 0;
  for (int e : nd.exponents) {
    if (e < 1) throw InvalidArgument("nilpotency exponents must be positive");
    sum += e;
  }
  if (p.r * sum >= p.formal_dim) {
    throw HypothesisViolation("the nilpotency bound needs r * sum(k_i) < N, got " + std::to_string(p.r * sum) +
                              " >= " + std::to_string(p.formal_dim));
  }
  const int value = sum + (p.formal_dim - p.r * sum) / p.q;
  // r < q makes this a strict improvement on N / r.
  if (p.r * value >= p.formal_dim) throw ConsistencyError("nilpotency bound failed to improve on N / r");
  return value;
}

ClosedFormLower closed_form_lower(int n, int k) {
  check_grassmann_hypothesis(n, k);
  ClosedFormLower out;
  out.certificate.exps.assign(static_cast<std::size_t>(k - 1), 0);
  if (n == 6 && k == 3) {
    // w2 w3, degree 5 < 9
    out.certificate = {{1, 1}, 2, 5};
    out.bound = {3, BoundMethod::kClosedForm63};
    return out;
  }
  // For k >= 4 the (n-k+3, 3) certificate pulls back along the standard
  // inclusion, so the k = 3 answer is reused with m = n - k + 3 >= 7.
  const int m = k == 3 ? n : n - k + 3;
  int c = 0;
  BoundMethod method = k == 3 ? BoundMethod::kClosedFormParity : BoundMethod::kClosedFormShifted;
  if (m >= 9 && m <= 12) {
    c = 4;
    if (k == 3) method = BoundMethod::kClosedForm9To12;
  } else if (m % 2 == 1) {
    c = (m + 1) / 2;
  } else {
    c = m / 2;
  }
  out.certificate.exps[0] = c;
  out.certificate.length = c;
  out.certificate.degree = 2 * c;
  out.bound = {c + 1, method};
  return out;
}

BoundEntry closed_form_upper(int n, int k) {
  check_grassmann_hypothesis(n, k);
  if (n == 6 && k == 3) return {3, BoundMethod::kClosedForm63};
  const NDecomposition dec = decompose_n(n);
  const int two_s = 1 << dec.s;
  const int offset = n - two_s;
  int value = 0;
  if (k == 3) {
    switch (dec.form) {
      case NDecomposition::Form::kPowerPlusOne:
        value = (4 * two_s - 7) / 3;
        break;
      case NDecomposition::Form::kPowerPlusTwo:
        value = (4 * two_s - 3) / 3;
        break;
      case NDecomposition::Form::kTwoPowersPlusOne:
        value = (4 * two_s + 5 * (1 << dec.p) - 8) / 3;
        break;
      case NDecomposition::Form::kTwoPowersPlusTail:
        value = (4 * two_s + 5 * (1 << dec.p) + 3 * dec.t - 7) / 3;
        break;
    }
  } else if (k == 4) {
    if (offset == 1) {
      value = (5 * two_s - 13) / 3;
    } else if (offset == 2) {
      value = 2 * two_s - 4;
    } else if (offset == 3) {
      value = 2 * two_s - 3;
    } else {
      value = (2 * two_s + 4 * n - 17) / 3;
    }
  } else if (offset == 1) {
    value = ((k + 1) * two_s + k - k * k - 1) / 3;
  } else {
    value = (2 * two_s + k * n - k * k - 1) / 3;
  }
  return {value, BoundMethod::kClosedFormTable};
}

RationalBounds rational_bounds(int n, int k) {
  const int h = rational_p1_height(n, k);
  const PoincareProfile p{k * (n - k), 4, 0, Field::kRational};
  RationalBounds out;
  out.p1_height = h;
  out.lower = {4 * h < p.formal_dim ? h + 1 : h, BoundMethod::kClosedFormRational};
  out.upper = {dimension_ratio_upper(p), BoundMethod::kDimensionRatio};
  out.exact = out.lower.value == out.upper.value;
  if (out.lower.value > out.upper.value) throw ConsistencyError("rational lower bound above the upper bound");
  return out;
}

int grossman_upper(int dim, int r) {
  if (r < 1 || dim < r) throw InvalidArgument("need dim >= r >= 1");
  return 1 + dim / r;
}

int cat_lower(int cup) {
  if (cup < 0) throw InvalidArgument("cup-length is nonnegative");
  return cup + 1;
}

namespace {

RingSummary summarize(const GrassmannPresentation& p, bool oriented) {
  RingSummary s;
  s.n = p.n();
  s.k = p.k();
  s.oriented = oriented;
  const Gf2Polynomial w2 = Gf2Polynomial::variable(p.vars(), 2);
  if (oriented) {
    const OrientedContext ctx(p);
    s.betti = char_subalgebra_dims(ctx);
    s.ht_w2 = height_direct(ctx, w2).height;
    s.longest_product = longest_monomial_product(ctx);
  } else {
    s.betti = betti(p);
    s.ht_w2 = height_direct(p, w2).height;
  }
  return s;
}

void check_summary(const RingSummary* s, int n, int k, bool oriented) {
  if (s == nullptr) throw InvalidArgument("a direct report needs both ring summaries");
  if (s->n != n || s->k != k || s->oriented != oriented) {
    throw InvalidArgument("ring summary does not match (" + std::to_string(n) + ", " + std::to_string(k) + ")");
  }
  if (s->betti.size() != static_cast<std::size_t>(k * (n - k)) + 1) {
    throw InvalidArgument("ring summary has the wrong number of degrees");
  }
  if (oriented && !s->longest_product) throw InvalidArgument("oriented summary lacks a longest product");
}

// Ties keep the earlier entry; closed forms are listed first.
BoundEntry best_lower(const std::vector<BoundEntry>& c) {
  BoundEntry best = c.front();
  for (const auto& e : c) {
    if (e.value > best.value) best = e;
  }
  return best;
}

BoundEntry best_upper(const std::vector<BoundEntry>& c) {
  BoundEntry best = c.front();
  for (const auto& e : c) {
    if (e.value < best.value) best = e;
  }
  return best;
}

void finish(BoundReport& r) {
  r.lower = best_lower(r.lower_candidates);
  r.upper = best_upper(r.upper_candidates);
  if (r.lower.value > r.upper.value) {
    throw ConsistencyError("lower bound " + std::to_string(r.lower.value) + " (" + to_string(r.lower.method) +
                           ") exceeds upper bound " + std::to_string(r.upper.value) + " (" +
                           to_string(r.upper.method) + ") at (" + std::to_string(r.n) + ", " +
                           std::to_string(r.k) + ")");
  }
  r.exact = r.lower.value == r.upper.value;
  r.cat_lower = cat_lower(r.lower.value);
  // G~_{n,k} is simply connected, so r = 2 whatever the coefficients.
  r.cat_upper = grossman_upper(r.profile.formal_dim, 2);
  r.closed_form_cat_lower = cat_lower(r.closed_form_lower.value);
}

BoundReport rational_report(int n, int k) {
  BoundReport r;
  r.n = n;
  r.k = k;
  r.field = Field::kRational;
  r.profile = {k * (n - k), 4, 0, Field::kRational};
  const RationalBounds rb = rational_bounds(n, k);
  r.closed_form_lower = rb.lower;
  r.closed_form_upper = rb.upper;
  r.lower_candidates = {rb.lower};
  r.upper_candidates = {rb.upper};
  r.p1_height = rb.p1_height;
  finish(r);
  return r;
}

}  // namespace

RingSummary summarize_ring(int n, int k, bool oriented, GrassmannLimits limits) {
  return summarize(GrassmannPresentation(n, k, limits), oriented);
}

int default_q(const RingSummary& oriented) {
  for (std::size_t d = 3; d < oriented.betti.size(); ++d) {
    if (oriented.betti[d] != 0) return static_cast<int>(d);
  }
  return 0;
}

BoundReport assemble_report(int n, int k, const ReportOptions& options, const RingSummary* oriented,
                            const RingSummary* unoriented) {
  check_grassmann_hypothesis(n, k);
  if (options.field == Field::kRational) return rational_report(n, k);
  if (options.direct) {
    check_summary(oriented, n, k, true);
    check_summary(unoriented, n, k, false);
  }

  BoundReport r;
  r.n = n;
  r.k = k;
  r.field = Field::kGf2;
  const int formal_dim = k * (n - k);
  // Without the ring, q = 3: w3 is never a multiple of w1 and I_{n,k}
  // starts in degree n - k + 1 >= 4, so degree 3 always survives.
  int q = options.direct ? default_q(*oriented) : 3;
  if (options.q_override) q = *options.q_override;
  r.profile = {formal_dim, 2, q, Field::kGf2};
  validate(r.profile);

  const ClosedFormLower cf = closed_form_lower(n, k);
  r.closed_form_lower = cf.bound;
  r.closed_form_certificate = cf.certificate;
  r.closed_form_upper = closed_form_upper(n, k);
  const int lf = w2_height_closed_form(n, k);
  r.w2_height_closed_form = lf;

  r.lower_candidates.push_back(cf.bound);
  r.upper_candidates.push_back(r.closed_form_upper);
  r.upper_candidates.push_back({dimension_ratio_upper(r.profile), BoundMethod::kDimensionRatio});
  const bool nilpotency_applies = q > r.profile.r;
  if (nilpotency_applies && 2 * lf < formal_dim) {
    r.upper_candidates.push_back({nilpotency_upper(r.profile, {{lf}}), BoundMethod::kNilpotency});
  }

  if (options.direct) {
    const int ht = oriented->ht_w2;
    r.oriented_w2_height = ht;
    r.w2_height_direct = unoriented->ht_w2;
    r.longest_product = oriented->longest_product;
    const ProductCertificate& lp = *oriented->longest_product;
    r.lower_candidates.push_back({product_lower(r.profile, lp.length, lp.degree), BoundMethod::kProduct});
    if (auto exact = exact_from_height(r.profile, ht)) {
      r.lower_candidates.push_back({*exact, BoundMethod::kExactHeight});
    }
    if (nilpotency_applies && 2 * ht < formal_dim) {
      r.upper_candidates.push_back({nilpotency_upper(r.profile, {{ht}}), BoundMethod::kNilpotencyComputed});
    }
    const auto& ce = cf.certificate.exps;
    const bool pure_power = std::accumulate(ce.begin() + 1, ce.end(), 0) == 0;
    r.closed_form_certificate_verified = pure_power ? ce[0] <= ht : cf.certificate == lp;
  }
  finish(r);
  return r;
}

BoundReport full_report(int n, int k, const ReportOptions& options) {
  check_grassmann_hypothesis(n, k);
  if (options.field == Field::kRational || !options.direct) return assemble_report(n, k, options, nullptr, nullptr);
  const GrassmannPresentation p(n, k, options.limits);
  const RingSummary oriented = summarize(p, true);
  const RingSummary unoriented = summarize(p, false);
  return assemble_report(n, k, options, &oriented, &unoriented);
}

}  // namespace cuplen
