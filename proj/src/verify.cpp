#include "cuplen/verify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "cuplen/bounds.hpp"
#include "cuplen/error.hpp"
#include "cuplen/gf2linalg.hpp"
#include "cuplen/heights.hpp"
#include "cuplen/series.hpp"

namespace cuplen {

const std::vector<std::string>& verify_groups() {
  static const std::vector<std::string> groups = {"generators", "membership", "heights",  "w2-height", "lower",
                                                  "upper",      "rational",   "category", "structure", "linalg"};
  return groups;
}

namespace {

struct Range {
  int k;
  int lo;
  int hi;
};

// The desk-scale sweep used by the height and bound checks.
const std::vector<Range> kHeightRanges = {{3, 6, 40}, {4, 8, 24}, {5, 10, 20}};
const std::vector<Range> kLowerRanges = {{3, 6, 33}, {4, 8, 24}, {5, 10, 20}};

class Workspace {
 public:
  explicit Workspace(GrassmannLimits limits) : limits_(limits) {}

  const GrassmannPresentation& ring(int n, int k) {
    auto& slot = rings_[{n, k}];
    if (!slot) slot = std::make_unique<GrassmannPresentation>(n, k, limits_);
    return *slot;
  }

  const OrientedContext& oriented(int n, int k) {
    auto& slot = oriented_[{n, k}];
    if (!slot) slot = std::make_unique<OrientedContext>(ring(n, k));
    return *slot;
  }

  int height(int n, int k, bool oriented_mode) {
    auto& cache = oriented_mode ? oriented_ht_ : ht_;
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
    const Gf2Polynomial w2 = Gf2Polynomial::variable(full_variables(k), 2);
    int h = oriented_mode ? height_direct(oriented(n, k), w2).height : height_direct(ring(n, k), w2).height;
    cache[{n, k}] = h;
    return h;
  }

 private:
  GrassmannLimits limits_;
  std::map<std::pair<int, int>, std::unique_ptr<GrassmannPresentation>> rings_;
  std::map<std::pair<int, int>, std::unique_ptr<OrientedContext>> oriented_;
  std::map<std::pair<int, int>, int> ht_;
  std::map<std::pair<int, int>, int> oriented_ht_;
};

std::string pair_str(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

class Runner {
 public:
  Runner(const VerifyOptions& options, const std::function<void(const CheckResult&)>& sink)
      : options_(options), sink_(sink), ws_(options.limits) {}

  std::vector<CheckResult> take() { return std::move(results_); }

  void run(const std::string& group) {
    group_ = group;
    if (group == "generators") return generators();
    if (group == "membership") return membership();
    if (group == "heights") return heights();
    if (group == "w2-height") return w2_height();
    if (group == "lower") return lower();
    if (group == "upper") return upper();
    if (group == "rational") return rational();
    if (group == "category") return category();
    if (group == "structure") return structure();
    if (group == "linalg") return linalg();
  }

 private:
  int cap(int hi) const { return options_.max_n ? std::min(hi, *options_.max_n) : hi; }

  void check(const std::string& name, bool pass, const std::string& detail = {}) {
    results_.push_back({group_, name, pass, detail});
    if (sink_) sink_(results_.back());
  }

  template <class T>
  void expect_eq(const std::string& name, const T& got, const T& want) {
    std::ostringstream os;
    os << "got " << got << ", expected " << want;
    check(name, got == want, os.str());
  }

  // Accumulates failures across a sweep into one check line.
  class Sweep {
   public:
    Sweep(Runner& r, std::string name) : r_(r), name_(std::move(name)) {}
    void fail(const std::string& what) {
      if (!detail_.empty()) detail_ += "; ";
      detail_ += what;
      ok_ = false;
    }
    void point() { ++points_; }
    ~Sweep() { r_.check(name_, ok_, ok_ ? std::to_string(points_) + " cases" : detail_); }

   private:
    Runner& r_;
    std::string name_;
    std::string detail_;
    bool ok_ = true;
    int points_ = 0;
  };

  Gf2Polynomial parse(const std::string& s, VariableSet vars) { return parse_polynomial(s, vars); }

  void generators() {
    const VariableSet red = reduced_variables(3);
    auto gens_text = [](int n) {
      auto g = ideal_gens_k3(n);
      return "(" + to_string(g[0]) + ", " + to_string(g[1]) + ", " + to_string(g[2]) + ")";
    };
    expect_eq<std::string>("n=6", gens_text(6), "(w2^2, 0, w3^2 + w2^3)");
    expect_eq<std::string>("n=9", gens_text(9), "(w2^2*w3, w2*w3^2 + w2^4, w3^3)");
    for (int n : {6, 9}) {
      GrassmannPresentation p = ws_.ring(n, 3);
      auto g = ideal_gens_k3(n);
      bool same = true;
      for (int i = 0; i < 3; ++i) same = same && p.ideal_gens()[static_cast<std::size_t>(i)].restricted_to(red) == g[static_cast<std::size_t>(i)];
      check("presentation-restricted-n=" + std::to_string(n), same);
    }
    const auto g = ideal_gens_k3(9);
    const Gf2Polynomial w2 = Gf2Polynomial::variable(red, 2);
    const Gf2Polynomial w3 = Gf2Polynomial::variable(red, 3);
    expect_eq<std::string>("w3*g7", to_string(w3 * g[0]), "w2^2*w3^2");
    expect_eq<std::string>("w3*g7+w2*g8", to_string(w3 * g[0] + w2 * g[1]), "w2^5");
    {
      Sweep s(*this, "lucas-all-odd");
      for (int sc = 0; sc <= 6; ++sc) {
        const std::uint64_t top = (std::uint64_t{1} << (sc + 3)) - 1;
        for (std::uint64_t i = 0; i <= top; ++i) {
          s.point();
          if (lucas_parity(top, i) != 1) s.fail("C(" + std::to_string(top) + "," + std::to_string(i) + ")");
        }
      }
    }
    {
      const int hi = cap(64);
      Sweep s(*this, "closed-form-vs-series n=6.." + std::to_string(hi));
      const auto series = inverse_series_components(red, std::max(hi, 6));
      for (int n = 6; n <= hi; ++n) {
        s.point();
        auto gens = ideal_gens_k3(n);
        for (int i = 0; i < 3; ++i) {
          if (gens[static_cast<std::size_t>(i)] != series[static_cast<std::size_t>(n - 2 + i)]) {
            s.fail("n=" + std::to_string(n) + " degree " + std::to_string(n - 2 + i));
          }
        }
      }
    }
  }

  void membership() {
    const VariableSet full3 = full_variables(3);
    const VariableSet red = reduced_variables(3);
    auto j6 = k3_reduced_ideal(6);
    auto j9 = k3_reduced_ideal(9);
    check("w2*w3 outside J(6)", !k3_reduced_membership(*j6, parse("w2*w3", red)));
    check("w2^5 in J(9)", k3_reduced_membership(*j9, parse("w2^5", red)));
    check("w2^4 outside J(9)", !k3_reduced_membership(*j9, parse("w2^4", red)));
    check("oriented w2*w3 nonzero (6,3)", oriented_nonzero(ws_.oriented(6, 3), Monomial(full3, {0, 1, 1})));
    check("oriented w2^4 nonzero (9,3)", oriented_nonzero(ws_.oriented(9, 3), Monomial(full3, {0, 4, 0})));
    check("oriented w2^5 zero (9,3)", !oriented_nonzero(ws_.oriented(9, 3), Monomial(full3, {0, 5, 0})));
    check("w2^8 zero (9,3)", is_zero_in_quotient(ws_.ring(9, 3), parse("w2^8", full3)));
    check("w2^7 nonzero (9,3)", !is_zero_in_quotient(ws_.ring(9, 3), parse("w2^7", full3)));
    {
      Sweep s(*this, "oriented w2 nonzero, one-dimensional degree 2");
      for (const Range& r : kHeightRanges) {
        for (int n = r.lo; n <= cap(r.hi); ++n) {
          s.point();
          const auto& ctx = ws_.oriented(n, r.k);
          const bool nz = oriented_nonzero(ctx, Monomial::variable(full_variables(r.k), 2));
          if (!nz || ctx.ideal().quotient_dim(2) != 1) s.fail(pair_str(n, r.k));
        }
      }
    }
    {
      const int hi = cap(20);
      Sweep s(*this, "J vs I+(w1) on all monomials n=6.." + std::to_string(hi));
      for (int n = 6; n <= hi; ++n) {
        auto j = k3_reduced_ideal(n);
        const auto& ctx = ws_.oriented(n, 3);
        for (int d = 0; d <= ctx.formal_dim(); ++d) {
          for (const auto& e : monomials_of_degree(red, d)) {
            s.point();
            const bool in_j = k3_reduced_membership(*j, Gf2Polynomial(Monomial(red, e)));
            const bool zero = !oriented_nonzero(ctx, Monomial(full3, {0, e[0], e[1]}));
            if (in_j != zero) s.fail("n=" + std::to_string(n) + " " + to_string(Monomial(red, e)));
          }
        }
      }
    }
  }

  void heights() {
    const Gf2Polynomial w2 = Gf2Polynomial::variable(full_variables(3), 2);
    expect_eq("oriented ht(w2) (9,3)", height_direct(ws_.oriented(9, 3), w2).height, 4);
    expect_eq("oriented ht(w2) (6,3)", height_direct(ws_.oriented(6, 3), w2).height, 1);
    expect_eq("ht(w2) (9,3)", height_direct(ws_.ring(9, 3), w2).height, 7);
    expect_eq("available target (9)", available_target_dim(9), 8);
    expect_eq("available target (6)", available_target_dim(6), 2);
    {
      Sweep s(*this, "n+1 available for odd n outside {9,11}");
      for (int n = 7; n <= cap(33); n += 2) {
        if (n == 9 || n == 11) continue;
        s.point();
        if (available_target_dim(n) < n + 1) s.fail("n=" + std::to_string(n));
      }
    }
    {
      Sweep s(*this, "2 ht(oriented w2) = available target dimension");
      for (int n = 6; n <= cap(40); ++n) {
        s.point();
        if (2 * ws_.height(n, 3, true) != available_target_dim(n)) s.fail("n=" + std::to_string(n));
      }
    }
    {
      Sweep s(*this, "oriented ht(w2) <= closed-form ht(w2)");
      for (const Range& r : kHeightRanges) {
        for (int n = r.lo; n <= cap(r.hi); ++n) {
          s.point();
          if (ws_.height(n, r.k, true) > w2_height_closed_form(n, r.k)) s.fail(pair_str(n, r.k));
        }
      }
    }
  }

  void w2_height() {
    expect_eq("closed form (9,3)", w2_height_closed_form(9, 3), 7);
    expect_eq("closed form (10,4)", w2_height_closed_form(10, 4), 12);
    expect_eq("closed form (12,5)", w2_height_closed_form(12, 5), 15);
    check("decompose 9", decompose_n(9) == NDecomposition{3, NDecomposition::Form::kPowerPlusOne, 0, 0});
    // 11 = 8 + 2 + 1 is the t = 0 form; t = 1 would be 12.
    check("decompose 11", decompose_n(11) == NDecomposition{3, NDecomposition::Form::kTwoPowersPlusOne, 1, 0});
    check("decompose 12", decompose_n(12) == NDecomposition{3, NDecomposition::Form::kTwoPowersPlusTail, 1, 1});
    check("decompose 7", decompose_n(7) == NDecomposition{2, NDecomposition::Form::kTwoPowersPlusOne, 1, 0});
    for (const Range& r : kHeightRanges) {
      Sweep s(*this, "closed form = direct, k=" + std::to_string(r.k) + " n=" + std::to_string(r.lo) + ".." +
                         std::to_string(cap(r.hi)));
      for (int n = r.lo; n <= cap(r.hi); ++n) {
        s.point();
        const int closed = w2_height_closed_form(n, r.k);
        const int direct = ws_.height(n, r.k, false);
        if (closed != direct) {
          s.fail(pair_str(n, r.k) + ": closed " + std::to_string(closed) + ", direct " + std::to_string(direct));
        }
      }
    }
  }

  void lower() {
    expect_eq("closed form (6,3)", closed_form_lower(6, 3).bound.value, 3);
    expect_eq("closed form (7,3)", closed_form_lower(7, 3).bound.value, 5);
    expect_eq("closed form (8,3)", closed_form_lower(8, 3).bound.value, 5);
    expect_eq("closed form (8,4)", closed_form_lower(8, 4).bound.value, 5);
    for (int n = 9; n <= 12; ++n) expect_eq("closed form " + pair_str(n, 3), closed_form_lower(n, 3).bound.value, 5);
    expect_eq("product (6,3) length 2 degree 5", product_lower({9, 2, 3, Field::kGf2}, 2, 5), 3);
    expect_eq("product (9,3) length 4 degree 8", product_lower({18, 2, 3, Field::kGf2}, 4, 8), 5);
    {
      const ProductCertificate lp = longest_monomial_product(ws_.oriented(6, 3));
      check("longest product (6,3) is w2*w3", lp == ProductCertificate{{1, 1}, 2, 5});
    }
    {
      const ProductCertificate lp = longest_monomial_product(ws_.oriented(9, 3));
      check("longest product (9,3) score >= 5", lp.length >= 4 && lp.score(18) >= 5,
            "length " + std::to_string(lp.length));
    }
    {
      const ProductCertificate lp = longest_monomial_product(ws_.oriented(7, 3));
      check("longest product (7,3) score >= 5", lp.score(12) >= 5, "score " + std::to_string(lp.score(12)));
    }
    for (const Range& r : kLowerRanges) {
      Sweep s(*this, "closed form = product bound on its certificate, k=" + std::to_string(r.k) + " n=" +
                         std::to_string(r.lo) + ".." + std::to_string(cap(r.hi)));
      for (int n = r.lo; n <= cap(r.hi); ++n) {
        s.point();
        const ClosedFormLower cf = closed_form_lower(n, r.k);
        std::vector<int> exps{0};
        exps.insert(exps.end(), cf.certificate.exps.begin(), cf.certificate.exps.end());
        const Monomial m(full_variables(r.k), exps);
        const PoincareProfile p{r.k * (n - r.k), 2, 3, Field::kGf2};
        const bool nz = oriented_nonzero(ws_.oriented(n, r.k), m);
        const int engine = product_lower(p, m.length(), m.degree());
        if (!nz || engine != cf.bound.value) {
          s.fail(pair_str(n, r.k) + ": " + to_string(m) + (nz ? " nonzero" : " zero") + ", engine " +
                 std::to_string(engine) + ", closed form " + std::to_string(cf.bound.value));
        }
      }
    }
  }

  void upper() {
    expect_eq("dim-ratio 9/2", dimension_ratio_upper({9, 2, 3, Field::kGf2}), 4);
    expect_eq("dim-ratio 16/4", dimension_ratio_upper({16, 4, 0, Field::kRational}), 4);
    expect_eq("nilpotency (9,3) k1=7", nilpotency_upper({18, 2, 3, Field::kGf2}, {{7}}), 8);
    expect_eq("nilpotency (6,3) k1=1", nilpotency_upper({9, 2, 3, Field::kGf2}, {{1}}), 3);
    {
      const int h = ws_.height(9, 3, true);
      expect_eq("nilpotency (9,3) computed k1", nilpotency_upper({18, 2, 3, Field::kGf2}, {{h}}), 7);
    }
    expect_eq("exact (10,4) rational h=6", exact_from_height({24, 4, 0, Field::kRational}, 6).value_or(-1), 6);
    check("no exact N=18 r=2 h=4", !exact_from_height({18, 2, 3, Field::kGf2}, 4));
    expect_eq("closed form (6,3)", closed_form_upper(6, 3).value, 3);
    expect_eq("closed form (9,3)", closed_form_upper(9, 3).value, 8);
    expect_eq("closed form (10,4)", closed_form_upper(10, 4).value, 12);
    expect_eq("closed form (12,5)", closed_form_upper(12, 5).value, 16);
    for (const Range& r : kHeightRanges) {
      Sweep s(*this, "table = min(dim-ratio, nilpotency), k=" + std::to_string(r.k) + " n=" +
                         std::to_string(std::max(r.lo, 7)) + ".." + std::to_string(cap(r.hi)));
      for (int n = std::max(r.lo, 7); n <= cap(r.hi); ++n) {
        s.point();
        const int dim = r.k * (n - r.k);
        const PoincareProfile p{dim, 2, 3, Field::kGf2};
        const int lf = w2_height_closed_form(n, r.k);
        int engine = dimension_ratio_upper(p);
        if (2 * lf < dim) engine = std::min(engine, nilpotency_upper(p, {{lf}}));
        const int table = closed_form_upper(n, r.k).value;
        if (engine != table) {
          s.fail(pair_str(n, r.k) + ": table " + std::to_string(table) + ", engine " + std::to_string(engine));
        }
      }
    }
  }

  void rational() {
    auto bounds_str = [](int n, int k) {
      const RationalBounds b = rational_bounds(n, k);
      return "(" + std::to_string(b.lower.value) + "," + std::to_string(b.upper.value) + (b.exact ? ",exact)" : ")");
    };
    expect_eq<std::string>("(8,4)", bounds_str(8, 4), "(4,4,exact)");
    expect_eq<std::string>("(13,4)", bounds_str(13, 4), "(9,9,exact)");
    expect_eq<std::string>("(10,4)", bounds_str(10, 4), "(6,6,exact)");
    expect_eq("ht(p1) (8,4)", rational_p1_height(8, 4), 4);
    expect_eq("ht(p1) (13,4)", rational_p1_height(13, 4), 8);
    expect_eq("ht(p1) (10,4)", rational_p1_height(10, 4), 6);
    {
      Sweep s(*this, "exact for n and k even");
      for (int k = 4; k <= 8; k += 2) {
        for (int n = 2 * k; n <= cap(32); n += 2) {
          s.point();
          if (!rational_bounds(n, k).exact) s.fail(pair_str(n, k));
        }
      }
    }
    {
      Sweep s(*this, "exact for n = 4t+9, k = 4");
      for (int n = 13; n <= cap(61); n += 4) {
        s.point();
        if (!rational_bounds(n, 4).exact) s.fail(pair_str(n, 4));
      }
    }
  }

  void category() {
    expect_eq("grossman (6,3)", grossman_upper(9, 2), 5);
    expect_eq("grossman (9,3)", grossman_upper(18, 2), 10);
    expect_eq("cat lower cup=3", cat_lower(3), 4);
    expect_eq("cat lower cup=5", cat_lower(5), 6);
    expect_eq("cat lower cup=0", cat_lower(0), 1);
    const std::vector<std::tuple<int, int, int>> intervals = {
        {6, 4, 5}, {9, 6, 10}, {10, 6, 11}, {11, 6, 13}, {12, 6, 14}};
    ReportOptions closed;
    closed.direct = false;
    for (const auto& [n, lo, hi] : intervals) {
      const BoundReport r = full_report(n, 3, closed);
      const std::string got = "[" + std::to_string(r.closed_form_cat_lower) + "," + std::to_string(r.cat_upper) + "]";
      expect_eq<std::string>("interval " + pair_str(n, 3), got,
                             "[" + std::to_string(lo) + "," + std::to_string(hi) + "]");
    }
    {
      Sweep s(*this, "k=3 intervals by parity");
      for (int n = 7; n <= cap(33); ++n) {
        if (n >= 9 && n <= 12) continue;
        s.point();
        const BoundReport r = full_report(n, 3, closed);
        const int lo = n % 2 == 1 ? (n + 5) / 2 : (n + 4) / 2;
        // (3n - 7) / 2, rounded down for even n.
        const int hi = (3 * n - 7) / 2;
        if (r.closed_form_cat_lower != lo || r.cat_upper != hi) s.fail(pair_str(n, 3));
      }
    }
    {
      Sweep s(*this, "k>=4 lower from both fields");
      for (int k = 4; k <= 6; ++k) {
        for (int n = 2 * k; n <= cap(24); ++n) {
          s.point();
          const BoundReport z2 = full_report(n, k, closed);
          ReportOptions q = closed;
          q.field = Field::kRational;
          const BoundReport rq = full_report(n, k, q);
          const int got = std::max(z2.closed_form_cat_lower, rq.closed_form_cat_lower);
          const int h = rational_p1_height(n, k);
          int want = 4 * h < k * (n - k) ? 2 + h : 1 + h;
          if (n == 8 && k == 4) want = 6;
          if (got != want) s.fail(pair_str(n, k) + ": " + std::to_string(got) + " vs " + std::to_string(want));
        }
      }
    }
  }

  void structure() {
    for (const Range& r : kHeightRanges) {
      Sweep s(*this, "betti duality and total, k=" + std::to_string(r.k) + " n=" + std::to_string(r.lo) + ".." +
                         std::to_string(cap(r.hi)));
      for (int n = r.lo; n <= cap(r.hi); ++n) {
        s.point();
        const auto b = betti(ws_.ring(n, r.k));
        std::uint64_t total = 0;
        for (auto x : b) total += x;
        std::uint64_t choose = 1;
        for (int i = 1; i <= r.k; ++i) choose = choose * static_cast<std::uint64_t>(n - r.k + i) / static_cast<std::uint64_t>(i);
        const bool palindrome = std::equal(b.begin(), b.end(), b.rbegin());
        if (!palindrome || total != choose || b.front() != 1) s.fail(pair_str(n, r.k));
      }
    }
    {
      Sweep s(*this, "odd n: 2 ht(oriented w2) < N");
      for (const Range& r : kHeightRanges) {
        for (int n = r.lo + (r.lo % 2 == 0 ? 1 : 0); n <= cap(r.hi); n += 2) {
          s.point();
          if (2 * ws_.height(n, r.k, true) >= r.k * (n - r.k)) s.fail(pair_str(n, r.k));
        }
      }
    }
    {
      Sweep s(*this, "degree 3 of the characteristic subalgebra is one-dimensional");
      for (const Range& r : kHeightRanges) {
        for (int n = r.lo; n <= cap(r.hi); ++n) {
          s.point();
          if (ws_.oriented(n, r.k).ideal().quotient_dim(3) != 1) s.fail(pair_str(n, r.k));
        }
      }
    }
    {
      Sweep s(*this, "inclusion monotonicity k=3");
      for (int n = 7; n <= cap(20); ++n) {
        s.point();
        if (ws_.height(n - 1, 3, true) > ws_.height(n, 3, true)) s.fail("n=" + std::to_string(n));
      }
    }
    {
      Sweep s(*this, "stability down to k=3");
      for (const Range& r : kHeightRanges) {
        if (r.k == 3) continue;
        for (int n = r.lo; n <= cap(r.hi); ++n) {
          s.point();
          if (ws_.height(n, r.k, true) < ws_.height(n - r.k + 3, 3, true)) s.fail(pair_str(n, r.k));
        }
      }
    }
  }

  // Plain byte-per-entry Gaussian elimination, kept apart from the packed code.
  static std::size_t naive_rank(std::vector<std::vector<char>> m, std::size_t width) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < width && rank < m.size(); ++c) {
      std::size_t p = rank;
      while (p < m.size() && !m[p][c]) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[rank]);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i != rank && m[i][c]) {
          for (std::size_t j = 0; j < width; ++j) m[i][j] ^= m[rank][j];
        }
      }
      ++rank;
    }
    return rank;
  }

  void linalg() {
    {
      BitMatrix m(3, {BitVector::from_string("110"), BitVector::from_string("011")});
      const EchelonBasis e = echelonize(m);
      check("hand reduction", e.rows() == std::vector<BitVector>{BitVector::from_string("101"),
                                                               BitVector::from_string("011")} &&
                                  e.pivots() == std::vector<std::size_t>{0, 1});
      check("empty matrix", echelonize(BitMatrix(5)).rank() == 0);
    }
    std::mt19937_64 rng(20240611);
    {
      Sweep s(*this, "membership vs span enumeration");
      for (int trial = 0; trial < 1000; ++trial) {
        s.point();
        const std::size_t width = 1 + rng() % 80;
        const std::size_t rows = rng() % 13;
        BitMatrix m(width);
        for (std::size_t i = 0; i < rows; ++i) {
          BitVector v(width);
          for (std::size_t j = 0; j < width; ++j) {
            if (rng() % 2) v.set(j);
          }
          m.add_row(v);
        }
        std::set<std::string> span;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rows); ++mask) {
          BitVector v(width);
          for (std::size_t i = 0; i < rows; ++i) {
            if (mask >> i & 1U) v ^= m.rows()[i];
          }
          span.insert(v.to_string());
        }
        const EchelonBasis e = echelonize(m);
        for (int q = 0; q < 4; ++q) {
          BitVector v(width);
          if (q % 2 == 0) {
            for (std::size_t j = 0; j < width; ++j) {
              if (rng() % 2) v.set(j);
            }
          } else {
            for (std::size_t i = 0; i < rows; ++i) {
              if (rng() % 2) v ^= m.rows()[i];
            }
          }
          if (in_span(v, e) != (span.count(v.to_string()) == 1)) s.fail("trial " + std::to_string(trial));
        }
      }
    }
    {
      Sweep s(*this, "rank vs naive elimination, 200x200");
      for (int trial = 0; trial < 100; ++trial) {
        s.point();
        const std::size_t n = 200;
        // Mix full-rank-ish and deliberately deficient matrices.
        const std::size_t seeds = trial % 2 == 0 ? n : 1 + rng() % n;
        std::vector<BitVector> base;
        for (std::size_t i = 0; i < seeds; ++i) {
          BitVector v(n);
          for (std::size_t j = 0; j < n; ++j) {
            if (rng() % 2) v.set(j);
          }
          base.push_back(v);
        }
        BitMatrix m(n);
        std::vector<std::vector<char>> plain;
        for (std::size_t i = 0; i < n; ++i) {
          BitVector v = i < seeds ? base[i] : BitVector(n);
          if (i >= seeds) {
            for (std::size_t b = 0; b < seeds; ++b) {
              if (rng() % 2) v ^= base[b];
            }
          }
          std::vector<char> row(n);
          for (std::size_t j = 0; j < n; ++j) row[j] = v.test(j) ? 1 : 0;
          plain.push_back(std::move(row));
          m.add_row(std::move(v));
        }
        const std::size_t packed = rank(m);
        const std::size_t naive = naive_rank(plain, n);
        const std::size_t nullity = kernel_basis(m).size();
        if (packed != naive || packed + nullity != n) {
          s.fail("trial " + std::to_string(trial) + ": packed " + std::to_string(packed) + ", naive " +
                 std::to_string(naive));
        }
        const EchelonBasis e = echelonize(m);
        if (!(echelonize(BitMatrix(n, e.rows())).rows() == e.rows())) s.fail("idempotence " + std::to_string(trial));
      }
    }
  }

  const VerifyOptions& options_;
  const std::function<void(const CheckResult&)>& sink_;
  Workspace ws_;
  std::string group_;
  std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& options,
                                    const std::function<void(const CheckResult&)>& sink) {
  const auto& all = verify_groups();
  for (const auto& g : options.only) {
    if (std::find(all.begin(), all.end(), g) == all.end()) throw InvalidArgument("unknown verify group '" + g + "'");
  }
  Runner runner(options, sink);
  for (const auto& g : all) {
    if (options.only.empty() || std::find(options.only.begin(), options.only.end(), g) != options.only.end()) {
      runner.run(g);
    }
  }
  return runner.take();
}

}  // namespace cuplen
