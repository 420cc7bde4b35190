#ifndef CUPLEN_GRADED_IDEAL_HPP
#define CUPLEN_GRADED_IDEAL_HPP

#include <atomic>
#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "cuplen/gf2linalg.hpp"
#include "cuplen/polynomial.hpp"

namespace cuplen {

struct IdealLimits {
  int max_degree = 400;
  std::size_t max_basis = 200000;
};

/// One homogeneous degree of a quotient Z2[w]/I. Monomials of the degree are
/// indexed 0..size()-1 in ascending monomial order. Every monomial m has a
/// normal form NF(m) over the standard monomials (those outside the leading
/// terms of I); {m + NF(m) : m nonstandard} is the reduced echelon basis of
/// I in this degree, with NF(m) only involving monomials smaller than m.
class DegreeComponent {
 public:
  int degree() const { return degree_; }
  std::size_t size() const { return size_; }
  std::size_t variable_count() const { return stride_; }

  std::span<const int> exps(std::size_t index) const {
    return {exps_.data() + index * stride_, stride_};
  }
  Monomial monomial(std::size_t index, VariableSet vars) const;
  /// Index of the monomial with these exponents, or -1.
  long find(std::span<const int> exps) const;

  /// Dimension of the quotient in this degree.
  std::size_t quotient_dim() const { return standard_.size(); }
  /// Dimension of I in this degree.
  std::size_t ideal_rank() const { return size_ - standard_.size(); }
  bool is_standard(std::size_t index) const { return standard_pos_[index] >= 0; }
  /// Monomial indices of the standard monomials, ascending.
  const std::vector<std::size_t>& standard() const { return standard_; }
  /// NF(m) as a bit vector over positions in standard().
  const BitVector& normal_form(std::size_t index) const { return nf_[index]; }

  /// Index in this degree of w_{vars.weight(var)} times the monomial `lower`
  /// of the degree below; -1 if that degree is negative.
  long times_variable(std::size_t var, std::size_t lower) const;

 private:
  friend class GradedIdeal;

  int degree_ = 0;
  std::size_t stride_ = 0;
  std::size_t size_ = 0;
  std::vector<int> exps_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
  std::vector<std::vector<long>> times_var_;
  std::vector<long> standard_pos_;
  std::vector<std::size_t> standard_;
  std::vector<BitVector> nf_;
};

/// A homogeneous ideal of Z2[w_first..w_last] given by generators, with its
/// degree components built on demand and memoized. Degree d is derived from
/// degrees below it: I_d = sum_i w_i I_{d-w_i} + span(generators of degree d).
/// Components are immutable once built; concurrent readers are safe.
class GradedIdeal {
 public:
  GradedIdeal(VariableSet vars, std::vector<Gf2Polynomial> generators, IdealLimits limits = {});
  ~GradedIdeal();
  GradedIdeal(const GradedIdeal&) = delete;
  GradedIdeal& operator=(const GradedIdeal&) = delete;

  VariableSet vars() const { return vars_; }
  const std::vector<Gf2Polynomial>& generators() const { return generators_; }
  const IdealLimits& limits() const { return limits_; }

  /// Builds degrees 0..d if needed. Throws CapExceeded beyond the limits.
  const DegreeComponent& component(int d) const;

  std::size_t quotient_dim(int d) const { return component(d).quotient_dim(); }

  /// NF of a homogeneous polynomial of degree d over component(d).standard().
  BitVector normal_form(const Gf2Polynomial& x) const;
  /// Membership of a homogeneous polynomial.
  bool contains(const Gf2Polynomial& x) const;

  /// Standard monomials of degree d, ascending.
  std::vector<Monomial> standard_monomials(int d) const;
  /// Polynomial with the given normal-form coordinates in degree d.
  Gf2Polynomial from_normal_form(int d, const BitVector& nf) const;

  /// Product, in normal form, of the class with coordinates `nf` in degree d
  /// and the monomial m.
  BitVector multiply(int d, const BitVector& nf, const Monomial& m) const;

  /// Explicit reduced echelon basis of I_d. Column j is the j-th largest
  /// monomial of degree d, so each pivot is the leading term of its row.
  EchelonBasis echelon(int d) const;

 private:
  void build(int d) const;

  VariableSet vars_;
  std::vector<Gf2Polynomial> generators_;
  IdealLimits limits_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<DegreeComponent>> components_;
  mutable std::atomic<int> built_{-1};
};

/// Ascending list of exponent vectors of weighted degree d over vars.
std::vector<std::vector<int>> monomials_of_degree(VariableSet vars, int d);

}  // namespace cuplen

#endif  // CUPLEN_GRADED_IDEAL_HPP
