#ifndef CUPLEN_GRASSMANN_HPP
#define CUPLEN_GRASSMANN_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "cuplen/graded_ideal.hpp"
#include "cuplen/polynomial.hpp"

namespace cuplen {

struct GrassmannLimits {
  int max_formal_dim = 400;
  std::size_t max_basis = 200000;
};

/// Throws HypothesisViolation unless 3 <= k and 2k <= n.
void check_grassmann_hypothesis(int n, int k);

/// H*(G_{n,k}; Z2) = Z2[w_1..w_k] / I_{n,k}, where I_{n,k} is generated by the
/// components of 1/(1 + w_1 + ... + w_k) in degrees n-k+1..n. Copies share
/// the lazily built degree components.
class GrassmannPresentation {
 public:
  GrassmannPresentation(int n, int k, GrassmannLimits limits = {});

  int n() const { return n_; }
  int k() const { return k_; }
  /// k(n-k).
  int formal_dim() const { return formal_dim_; }
  VariableSet vars() const { return full_variables(k_); }
  const GrassmannLimits& limits() const { return limits_; }

  /// The k generators, in degrees n-k+1..n.
  const std::vector<Gf2Polynomial>& ideal_gens() const { return ideal_->generators(); }
  const GradedIdeal& ideal() const { return *ideal_; }
  /// I_{n,k} + (w_1), whose quotient models the image of H*(G_{n,k}) in the
  /// cohomology of the oriented Grassmannian.
  const GradedIdeal& oriented_ideal() const { return *oriented_; }

 private:
  int n_;
  int k_;
  int formal_dim_;
  GrassmannLimits limits_;
  std::shared_ptr<const GradedIdeal> ideal_;
  std::shared_ptr<const GradedIdeal> oriented_;
};

GrassmannPresentation build_presentation(int n, int k, GrassmannLimits limits = {});

/// b_0..b_N of G_{n,k}.
std::vector<std::size_t> betti(const GrassmannPresentation& p);

/// Whether a homogeneous class vanishes in H*(G_{n,k}); degrees above the
/// formal dimension always do.
bool is_zero_in_quotient(const GrassmannPresentation& p, const Gf2Polynomial& x);

/// Queries on the characteristic subalgebra of the oriented Grassmannian,
/// Z2[w_1..w_k] / (I_{n,k} + (w_1)). A product of the tilde classes is nonzero
/// exactly when the matching product of w_i is not a multiple of w_1.
class OrientedContext {
 public:
  explicit OrientedContext(GrassmannPresentation base) : base_(std::move(base)) {}
  OrientedContext(int n, int k, GrassmannLimits limits = {}) : base_(n, k, limits) {}

  const GrassmannPresentation& base() const { return base_; }
  const GradedIdeal& ideal() const { return base_.oriented_ideal(); }
  int formal_dim() const { return base_.formal_dim(); }

 private:
  GrassmannPresentation base_;
};

/// True iff m (no w_1 factor, degree <= N) survives in the characteristic
/// subalgebra. Throws InvalidArgument on a w_1 factor.
bool oriented_nonzero(const OrientedContext& ctx, const Monomial& m);

/// Per-degree dimensions 0..N of the characteristic subalgebra.
std::vector<std::size_t> char_subalgebra_dims(const OrientedContext& ctx);

/// A nonzero monomial w_2^{i_2}...w_k^{i_k} in the characteristic subalgebra.
struct ProductCertificate {
  std::vector<int> exps;  // i_2..i_k
  int length = 0;         // i_2 + ... + i_k
  int degree = 0;         // 2 i_2 + ... + k i_k

  /// length, plus one when the degree is below the formal dimension (a
  /// complementary class then extends the product).
  int score(int formal_dim) const { return length + (degree < formal_dim ? 1 : 0); }
  friend bool operator==(const ProductCertificate&, const ProductCertificate&) = default;
};

/// Maximizes ProductCertificate::score over nonzero monomials by a walk over
/// degrees in which products with equal normal forms are merged. Ties go to
/// the lexicographically smallest exponent vector.
ProductCertificate longest_monomial_product(const OrientedContext& ctx);

/// J_{n,3} in Z2[w_2, w_3], generated by the closed-form g_{n-2}, g_{n-1}, g_n.
std::unique_ptr<GradedIdeal> k3_reduced_ideal(int n, IdealLimits limits = {});
/// Membership of a homogeneous x in Z2[w_2, w_3] in J_{n,3}.
bool k3_reduced_membership(const GradedIdeal& j, const Gf2Polynomial& x);
bool k3_reduced_membership(int n, const Gf2Polynomial& x);

/// Largest even a <= 3(n-3) with w_2^{a/2} outside J_{n,3}. Throws
/// InvalidArgument for n < 6.
int available_target_dim(int n);
int available_target_dim(const GradedIdeal& j, int n);

}  // namespace cuplen

#endif  // CUPLEN_GRASSMANN_HPP
