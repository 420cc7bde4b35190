#ifndef CUPLEN_POLYNOMIAL_HPP
#define CUPLEN_POLYNOMIAL_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cuplen {

/// Largest total degree a polynomial product may reach unless a caller
/// passes a different cap.
inline constexpr int kDefaultDegreeCap = 256;

/// The weighted variables w_first, ..., w_last, where w_i has degree i.
/// The full Stiefel-Whitney ring of k-planes is {1, k}; the ring with w_1
/// eliminated is {2, k}.
struct VariableSet {
  int first = 1;
  int last = 1;

  constexpr int count() const { return last - first + 1; }
  constexpr int weight(int index) const { return first + index; }
  constexpr bool contains(int weight) const { return weight >= first && weight <= last; }
  constexpr int index_of(int weight) const { return weight - first; }

  friend constexpr bool operator==(VariableSet, VariableSet) = default;
};

/// Full ring Z2[w_1..w_k].
constexpr VariableSet full_variables(int k) { return {1, k}; }
/// Ring Z2[w_2..w_k] with w_1 set to zero.
constexpr VariableSet reduced_variables(int k) { return {2, k}; }

/// Product of powers of weighted variables. Exponents are stored one per
/// variable of the ambient VariableSet; the weighted degree is cached.
class Monomial {
 public:
  explicit Monomial(VariableSet vars);
  Monomial(VariableSet vars, std::vector<int> exps);

  /// w_weight^exp.
  static Monomial variable(VariableSet vars, int weight, int exp = 1);

  VariableSet vars() const { return vars_; }
  std::span<const int> exps() const { return exps_; }
  int degree() const { return degree_; }
  int exp_of(int weight) const;
  /// Number of variable factors, counted with multiplicity.
  int length() const;
  bool is_one() const { return degree_ == 0; }

  /// This monomial divided by w_weight, if divisible.
  std::optional<Monomial> divide_by_variable(int weight) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.vars_ == b.vars_ && a.exps_ == b.exps_;
  }
  /// Graded order: weighted degree first, then lexicographic on exponents
  /// with the last variable most significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  VariableSet vars_;
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Degree-ordered comparison of raw exponent vectors, shared with code that
/// indexes monomials without building Monomial objects.
std::strong_ordering compare_exponents(std::span<const int> a, std::span<const int> b);

/// Element of Z2[w_first..w_last]: a set of monomials, each with coefficient 1.
/// Terms are kept sorted ascending in the monomial order with no repeats, so
/// equality is structural.
class Gf2Polynomial {
 public:
  explicit Gf2Polynomial(VariableSet vars) : vars_(vars) {}
  /// Builds the mod-2 sum of `terms`; repeated monomials cancel in pairs.
  Gf2Polynomial(VariableSet vars, std::vector<Monomial> terms);
  Gf2Polynomial(const Monomial& m);  // NOLINT(google-explicit-constructor)

  static Gf2Polynomial one(VariableSet vars);
  static Gf2Polynomial variable(VariableSet vars, int weight);

  VariableSet vars() const { return vars_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// True for 0 and for sums of monomials of a single degree.
  bool is_homogeneous() const;
  /// The common degree of all terms; empty for 0 or mixed degrees.
  std::optional<int> homogeneous_degree() const;
  /// Largest term degree, or -1 for 0.
  int max_degree() const;

  Gf2Polynomial homogeneous_component(int degree) const;
  /// Drops every term of degree greater than `max_degree`.
  Gf2Polynomial truncated(int max_degree) const;
  /// Image in the ring on `target` obtained by setting every variable
  /// missing from `target` to zero.
  Gf2Polynomial restricted_to(VariableSet target) const;

  Gf2Polynomial& operator+=(const Gf2Polynomial& other);
  friend Gf2Polynomial operator+(const Gf2Polynomial& a, const Gf2Polynomial& b);
  friend Gf2Polynomial operator*(const Gf2Polynomial& a, const Gf2Polynomial& b);
  friend bool operator==(const Gf2Polynomial& a, const Gf2Polynomial& b) = default;

 private:
  VariableSet vars_;
  std::vector<Monomial> terms_;
};

Gf2Polynomial add(const Gf2Polynomial& p, const Gf2Polynomial& q);
/// Product with mod-2 cancellation. Throws CapExceeded if the product would
/// contain a term above `degree_cap`.
Gf2Polynomial mul(const Gf2Polynomial& p, const Gf2Polynomial& q, int degree_cap = kDefaultDegreeCap);
/// Product keeping only terms of degree <= max_degree.
Gf2Polynomial mul_truncated(const Gf2Polynomial& p, const Gf2Polynomial& q, int max_degree);
Gf2Polynomial pow(const Gf2Polynomial& p, int exponent, int degree_cap = kDefaultDegreeCap);

/// Canonical rendering, e.g. "w3^2 + w2^3": terms from the largest down,
/// factors as wI^E with unit exponents omitted, "1" for the empty product
/// and "0" for the empty sum.
std::string to_string(const Monomial& m);
std::string to_string(const Gf2Polynomial& p);

/// Parses the canonical syntax (products of wI^E joined by '*', sums joined
/// by '+'; whitespace ignored). Throws InvalidArgument on malformed input or
/// variables outside `vars`.
Gf2Polynomial parse_polynomial(std::string_view text, VariableSet vars);

}  // namespace cuplen

#endif  // CUPLEN_POLYNOMIAL_HPP
