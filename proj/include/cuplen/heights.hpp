#ifndef CUPLEN_HEIGHTS_HPP
#define CUPLEN_HEIGHTS_HPP

#include <string>

#include "cuplen/grassmann.hpp"
#include "cuplen/polynomial.hpp"

namespace cuplen {

enum class HeightContext { kUnoriented, kOrientedCharacteristic, kRationalClosedForm };

std::string to_string(HeightContext c);

/// ht(x) = largest c with x^c != 0, plus where that was observed.
struct HeightRecord {
  std::string class_label;
  HeightContext context = HeightContext::kUnoriented;
  int n = 0;
  int k = 0;
  int height = 0;
  /// Degree of x^height.
  int witness_nonzero = 0;
  /// The first vanishing exponent, height + 1.
  int witness_zero = 0;

  friend bool operator==(const HeightRecord&, const HeightRecord&) = default;
};

/// Height of a homogeneous class of positive degree in H*(G_{n,k}), by
/// repeated multiplication in normal form. Throws UndefinedQuery when x is
/// zero in the quotient, InvalidArgument when x is not homogeneous or has
/// degree 0.
HeightRecord height_direct(const GrassmannPresentation& p, const Gf2Polynomial& x);
/// Same in the characteristic subalgebra of the oriented Grassmannian.
HeightRecord height_direct(const OrientedContext& ctx, const Gf2Polynomial& x);

/// Shape of n used by the closed-form height of w_2: s with
/// 2^s < n <= 2^{s+1}, and for k = 3 the unique one of
///   n = 2^s + 1,  n = 2^s + 2,  n = 2^s + 2^p + 1,  n = 2^s + 2^p + t + 1
/// (s > p >= 1, 1 <= t <= 2^p - 1) that applies.
struct NDecomposition {
  enum class Form { kPowerPlusOne, kPowerPlusTwo, kTwoPowersPlusOne, kTwoPowersPlusTail };
  int s = 0;
  Form form = Form::kPowerPlusOne;
  int p = 0;
  int t = 0;

  friend bool operator==(const NDecomposition&, const NDecomposition&) = default;
};

/// Throws InvalidArgument for n < 6.
NDecomposition decompose_n(int n);

/// Closed-form ht(w_2) in H*(G_{n,k}; Z2) for n >= 2k >= 6, from the published
/// case tables for k = 3, k = 4 and k >= 5.
int w2_height_closed_form(int n, int k);

/// floor(k/2) * floor((n-k)/2), the quoted height of the first rational
/// Pontryagin class of the oriented Grassmannian. Requires k >= 4, n >= 2k.
int rational_p1_height(int n, int k);
HeightRecord rational_p1_record(int n, int k);

}  // namespace cuplen

#endif  // CUPLEN_HEIGHTS_HPP
