#include "cuplen/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

#include "cuplen/error.hpp"

namespace cuplen {

namespace {

void check_same_ring(VariableSet a, VariableSet b) {
  if (a != b) {
    throw InvalidArgument("polynomials live in different variable sets");
  }
}

int weighted_degree(VariableSet vars, std::span<const int> exps) {
  int d = 0;
  for (int i = 0; i < vars.count(); ++i) d += vars.weight(i) * exps[i];
  return d;
}

// Sort and cancel equal pairs.
void normalize(std::vector<Monomial>& terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(std::move(terms[i]));
    i = j;
  }
  terms = std::move(out);
}

}  // namespace

std::strong_ordering compare_exponents(std::span<const int> a, std::span<const int> b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

Monomial::Monomial(VariableSet vars) : vars_(vars), exps_(static_cast<std::size_t>(vars.count()), 0) {
  if (vars.first < 1 || vars.last < vars.first) {
    throw InvalidArgument("variable set must satisfy 1 <= first <= last");
  }
}

Monomial::Monomial(VariableSet vars, std::vector<int> exps) : vars_(vars), exps_(std::move(exps)) {
  if (vars.first < 1 || vars.last < vars.first) {
    throw InvalidArgument("variable set must satisfy 1 <= first <= last");
  }
  if (static_cast<int>(exps_.size()) != vars.count()) {
    throw InvalidArgument("exponent vector length does not match the variable count");
  }
  for (int e : exps_) {
    if (e < 0) throw InvalidArgument("negative exponent");
  }
  degree_ = weighted_degree(vars_, exps_);
}

Monomial Monomial::variable(VariableSet vars, int weight, int exp) {
  if (!vars.contains(weight)) {
    throw InvalidArgument("w" + std::to_string(weight) + " is not a variable of this ring");
  }
  std::vector<int> exps(static_cast<std::size_t>(vars.count()), 0);
  exps[static_cast<std::size_t>(vars.index_of(weight))] = exp;
  return Monomial(vars, std::move(exps));
}

int Monomial::exp_of(int weight) const {
  return vars_.contains(weight) ? exps_[static_cast<std::size_t>(vars_.index_of(weight))] : 0;
}

int Monomial::length() const {
  int l = 0;
  for (int e : exps_) l += e;
  return l;
}

std::optional<Monomial> Monomial::divide_by_variable(int weight) const {
  if (exp_of(weight) == 0) return std::nullopt;
  Monomial out = *this;
  --out.exps_[static_cast<std::size_t>(vars_.index_of(weight))];
  out.degree_ -= weight;
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_same_ring(a.vars_, b.vars_);
  Monomial out = a;
  for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] += b.exps_[i];
  out.degree_ += b.degree_;
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return compare_exponents(a.exps_, b.exps_);
}

Gf2Polynomial::Gf2Polynomial(VariableSet vars, std::vector<Monomial> terms)
    : vars_(vars), terms_(std::move(terms)) {
  for (const auto& t : terms_) check_same_ring(vars_, t.vars());
  normalize(terms_);
}

Gf2Polynomial::Gf2Polynomial(const Monomial& m) : vars_(m.vars()), terms_{m} {}

Gf2Polynomial Gf2Polynomial::one(VariableSet vars) { return Gf2Polynomial(Monomial(vars)); }

Gf2Polynomial Gf2Polynomial::variable(VariableSet vars, int weight) {
  return Gf2Polynomial(Monomial::variable(vars, weight));
}

bool Gf2Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.front().degree() == terms_.back().degree();
}

std::optional<int> Gf2Polynomial::homogeneous_degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.front().degree();
}

int Gf2Polynomial::max_degree() const { return terms_.empty() ? -1 : terms_.back().degree(); }

Gf2Polynomial Gf2Polynomial::homogeneous_component(int degree) const {
  Gf2Polynomial out(vars_);
  for (const auto& t : terms_) {
    if (t.degree() == degree) out.terms_.push_back(t);
  }
  return out;
}

Gf2Polynomial Gf2Polynomial::truncated(int max_degree) const {
  Gf2Polynomial out(vars_);
  for (const auto& t : terms_) {
    if (t.degree() <= max_degree) out.terms_.push_back(t);
  }
  return out;
}

Gf2Polynomial Gf2Polynomial::restricted_to(VariableSet target) const {
  std::vector<Monomial> kept;
  for (const auto& t : terms_) {
    std::vector<int> exps(static_cast<std::size_t>(target.count()), 0);
    bool vanishes = false;
    for (int i = 0; i < vars_.count(); ++i) {
      int w = vars_.weight(i);
      int e = t.exps()[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      if (!target.contains(w)) {
        vanishes = true;
        break;
      }
      exps[static_cast<std::size_t>(target.index_of(w))] = e;
    }
    if (!vanishes) kept.emplace_back(target, std::move(exps));
  }
  return Gf2Polynomial(target, std::move(kept));
}

Gf2Polynomial& Gf2Polynomial::operator+=(const Gf2Polynomial& other) {
  check_same_ring(vars_, other.vars_);
  std::vector<Monomial> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                std::back_inserter(out));
  terms_ = std::move(out);
  return *this;
}

Gf2Polynomial operator+(const Gf2Polynomial& a, const Gf2Polynomial& b) {
  Gf2Polynomial out = a;
  out += b;
  return out;
}

Gf2Polynomial operator*(const Gf2Polynomial& a, const Gf2Polynomial& b) { return mul(a, b); }

Gf2Polynomial add(const Gf2Polynomial& p, const Gf2Polynomial& q) { return p + q; }

Gf2Polynomial mul(const Gf2Polynomial& p, const Gf2Polynomial& q, int degree_cap) {
  check_same_ring(p.vars(), q.vars());
  if (!p.is_zero() && !q.is_zero() && p.max_degree() + q.max_degree() > degree_cap) {
    throw CapExceeded("product degree " + std::to_string(p.max_degree() + q.max_degree()) +
                      " exceeds the degree cap " + std::to_string(degree_cap));
  }
  return mul_truncated(p, q, degree_cap);
}

Gf2Polynomial mul_truncated(const Gf2Polynomial& p, const Gf2Polynomial& q, int max_degree) {
  check_same_ring(p.vars(), q.vars());
  std::vector<Monomial> terms;
  terms.reserve(p.size() * q.size());
  for (const auto& a : p.terms()) {
    for (const auto& b : q.terms()) {
      if (a.degree() + b.degree() <= max_degree) terms.push_back(a * b);
    }
  }
  return Gf2Polynomial(p.vars(), std::move(terms));
}

Gf2Polynomial pow(const Gf2Polynomial& p, int exponent, int degree_cap) {
  if (exponent < 0) throw InvalidArgument("negative exponent");
  Gf2Polynomial result = Gf2Polynomial::one(p.vars());
  Gf2Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base, degree_cap);
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base, degree_cap);
  }
  return result;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 0; i < m.vars().count(); ++i) {
    int e = m.exps()[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'w';
    out += std::to_string(m.vars().weight(i));
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

std::string to_string(const Gf2Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += to_string(*it);
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, VariableSet vars) : vars_(vars) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  Gf2Polynomial parse() {
    if (text_.empty()) fail("empty input");
    std::vector<Monomial> terms;
    if (auto t = term()) terms.push_back(std::move(*t));
    while (pos_ < text_.size()) {
      expect('+');
      if (auto t = term()) terms.push_back(std::move(*t));
    }
    return Gf2Polynomial(vars_, std::move(terms));
  }

 private:
  // A summand; "0" contributes nothing.
  std::optional<Monomial> term() {
    if (peek() == '0' || peek() == '1') {
      char c = text_[pos_++];
      if (peek() != '+' && peek() != '\0') fail("constant summands stand alone");
      if (c == '0') return std::nullopt;
      return Monomial(vars_);
    }
    Monomial m = factor();
    while (peek() == '*') {
      ++pos_;
      m = m * factor();
    }
    return m;
  }

  Monomial factor() {
    expect('w');
    int weight = number();
    int exp = 1;
    if (peek() == '^') {
      ++pos_;
      exp = number();
    }
    if (!vars_.contains(weight)) {
      fail("w" + std::to_string(weight) + " is not a variable of this ring");
    }
    return Monomial::variable(vars_, weight, exp);
  }

  int number() {
    int value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("cannot parse polynomial '" + text_ + "': " + what + " at offset " +
                          std::to_string(pos_));
  }

  VariableSet vars_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Gf2Polynomial parse_polynomial(std::string_view text, VariableSet vars) { return Parser(text, vars).parse(); }

}  // namespace cuplen
