#ifndef CUPLEN_BOUNDS_HPP
#define CUPLEN_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cuplen/grassmann.hpp"

namespace cuplen {

enum class Field { kGf2, kRational };

std::string to_string(Field f);
/// "gf2" or "rational"; throws InvalidArgument otherwise.
Field parse_field(const std::string& s);

/// The data a cup-length bound needs from a Poincare space X: its formal
/// dimension, the first two positive degrees r <= q with nonzero reduced
/// cohomology, and the coefficient field. q = 0 means "not determined"; the
/// nilpotency bound refuses to run without it.
struct PoincareProfile {
  int formal_dim = 0;
  int r = 0;
  int q = 0;
  Field field = Field::kGf2;
};

/// Throws InvalidArgument unless 0 < r < formal_dim and (q == 0 or r <= q < formal_dim).
void validate(const PoincareProfile& p);

/// Exponents k_1..k_t with a(i)^{k_i + 1} = 0 for a basis a(1)..a(t) of H^r.
struct NilpotencyData {
  std::vector<int> exponents;
};

enum class BoundMethod {
  kDimensionRatio,      // cup <= N / r
  kExactHeight,         // r * ht(x) = N forces cup = N / r
  kProduct,             // a nonzero product of L classes
  kNilpotency,          // nilpotency bound, closed-form height of w_2
  kNilpotencyComputed,  // nilpotency bound, computed height of the oriented w_2
  kClosedForm63,        // the (6,3) special case
  kClosedFormParity,    // k = 3, by the parity of n
  kClosedForm9To12,     // k = 3, n in 9..12
  kClosedFormShifted,   // k >= 4, through n -> n - k + 3
  kClosedFormTable,     // the published upper-bound tables
  kClosedFormRational,  // from the height of the first Pontryagin class
};

std::string to_string(BoundMethod m);
bool is_closed_form(BoundMethod m);

struct BoundEntry {
  int value = 0;
  BoundMethod method = BoundMethod::kDimensionRatio;

  friend bool operator==(const BoundEntry&, const BoundEntry&) = default;
};

/// floor(N / r).
int dimension_ratio_upper(const PoincareProfile& p);
/// N / r when r * h = N, where h is the height of some degree-r class.
std::optional<int> exact_from_height(const PoincareProfile& p, int h);
/// A nonzero product of `length` positive-degree classes in degree d gives
/// cup >= length + 1 when d < N (multiply by a dual class), length when d = N.
int product_lower(const PoincareProfile& p, int length, int degree);
/// sum k_i + floor((N - r sum k_i) / q). Needs r < q and r sum k_i < N.
int nilpotency_upper(const PoincareProfile& p, const NilpotencyData& nd);

/// The published Z2 lower bound for the oriented Grassmannian, with the
/// nonzero product it rests on (exponents of w_2..w_k in the (n,k) ring).
struct ClosedFormLower {
  BoundEntry bound;
  ProductCertificate certificate;
};
ClosedFormLower closed_form_lower(int n, int k);
/// The published Z2 upper bound (the tables, or 3 for (6,3)).
BoundEntry closed_form_upper(int n, int k);

struct RationalBounds {
  BoundEntry lower;
  BoundEntry upper;
  int p1_height = 0;
  bool exact = false;
};
/// Rational lower/upper bounds from ht(p_1) = floor(k/2) floor((n-k)/2).
/// Throws HypothesisViolation for k < 4.
RationalBounds rational_bounds(int n, int k);

/// 1 + floor(dim / r), for an (r-1)-connected space; connectivity is assumed.
int grossman_upper(int dim, int r);
int cat_lower(int cup);

/// What the bounds need from one ring, computed once and cacheable.
/// For the oriented mode `betti` holds the characteristic subalgebra
/// dimensions and `ht_w2` the height of the oriented w_2.
struct RingSummary {
  int n = 0;
  int k = 0;
  bool oriented = false;
  std::vector<std::size_t> betti;
  int ht_w2 = 0;
  std::optional<ProductCertificate> longest_product;

  friend bool operator==(const RingSummary&, const RingSummary&) = default;
};

RingSummary summarize_ring(int n, int k, bool oriented, GrassmannLimits limits = {});

/// First degree above 2 with a nonzero characteristic subalgebra component.
int default_q(const RingSummary& oriented);

struct ReportOptions {
  Field field = Field::kGf2;
  /// Run the ring computations; otherwise only closed forms are evaluated.
  bool direct = true;
  std::optional<int> q_override;
  GrassmannLimits limits;
};

struct BoundReport {
  int n = 0;
  int k = 0;
  Field field = Field::kGf2;
  PoincareProfile profile;

  BoundEntry lower;
  BoundEntry upper;
  /// The published values; `lower`/`upper` may improve on them.
  BoundEntry closed_form_lower;
  BoundEntry closed_form_upper;
  std::vector<BoundEntry> lower_candidates;
  std::vector<BoundEntry> upper_candidates;

  int cat_lower = 0;
  int cat_upper = 0;
  int closed_form_cat_lower = 0;
  bool exact = false;

  // Z2 certificates.
  std::optional<ProductCertificate> closed_form_certificate;
  std::optional<bool> closed_form_certificate_verified;
  std::optional<int> w2_height_closed_form;
  std::optional<int> w2_height_direct;
  std::optional<int> oriented_w2_height;
  std::optional<ProductCertificate> longest_product;
  // Rational.
  std::optional<int> p1_height;

  int gap() const { return upper.value - lower.value; }
};

/// Evaluates every applicable bound for (n,k). Throws ConsistencyError if a
/// lower bound exceeds an upper bound.
BoundReport full_report(int n, int k, const ReportOptions& options = {});
/// Same, from precomputed summaries (both required for a direct Z2 report;
/// ignored otherwise).
BoundReport assemble_report(int n, int k, const ReportOptions& options, const RingSummary* oriented,
                            const RingSummary* unoriented);

}  // namespace cuplen

#endif  // CUPLEN_BOUNDS_HPP
