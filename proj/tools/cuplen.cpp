// cuplen: command-line front end for the Grassmannian cup-length engine.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cuplen/bounds.hpp"
#include "cuplen/error.hpp"
#include "cuplen/grassmann.hpp"
#include "cuplen/heights.hpp"
#include "cuplen/report_io.hpp"
#include "cuplen/series.hpp"
#include "cuplen/verify.hpp"

namespace {

using namespace cuplen;

enum Exit : int { kOk = 0, kUsage = 1, kCheckFailed = 2, kUndefined = 3, kPartialSweep = 4 };

struct RunConfig {
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
  int max_degree = GrassmannLimits{}.max_formal_dim;
  std::size_t max_basis = GrassmannLimits{}.max_basis;
  std::optional<int> q_override;
  std::string field = "gf2";

  GrassmannLimits limits() const { return {max_degree, max_basis}; }
  std::vector<Field> fields() const {
    if (field == "both") return {Field::kGf2, Field::kRational};
    return {parse_field(field)};
  }
};

struct IntRange {
  int lo = 0;
  int hi = -1;
};

// "a..b" or "a".
IntRange parse_range(const std::string& s) {
  auto parse_int = [&](std::string_view t) {
    int v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size()) throw InvalidArgument("bad range '" + s + "'");
    return v;
  };
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(s);
    return {v, v};
  }
  return {parse_int(std::string_view(s).substr(0, dots)), parse_int(std::string_view(s).substr(dots + 2))};
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

int cmd_ring(const RunConfig& cfg, int n, int k, bool oriented) {
  const GrassmannPresentation p(n, k, cfg.limits());
  const auto b = oriented ? char_subalgebra_dims(OrientedContext(p)) : betti(p);
  std::uint64_t total = 0;
  for (auto x : b) total += x;
  const std::uint64_t expected = binomial(n, k);
  const bool palindromic = std::equal(b.begin(), b.end(), b.rbegin());
  const bool ok = oriented || (palindromic && total == expected && b.front() == 1);

  if (cfg.format == "json") {
    Json j;
    j["n"] = n;
    j["k"] = k;
    j["mode"] = oriented ? "oriented" : "unoriented";
    j["formal_dim"] = p.formal_dim();
    j["dims"] = b;
    j["total"] = total;
    if (!oriented) {
      j["binomial"] = expected;
      j["palindromic"] = palindromic;
      j["ok"] = ok;
    }
    std::cout << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "degree,dim\n";
    for (std::size_t d = 0; d < b.size(); ++d) std::cout << d << ',' << b[d] << '\n';
  } else {
    std::cout << (oriented ? "characteristic subalgebra of oriented G(" : "H*(G(") << n << "," << k
              << (oriented ? ")" : "); Z2)") << ", N = " << p.formal_dim() << '\n';
    for (std::size_t d = 0; d < b.size(); ++d) std::cout << "  " << d << "  " << b[d] << '\n';
    std::cout << "total " << total;
    if (!oriented) {
      std::cout << ", C(" << n << "," << k << ") = " << expected << (total == expected ? " ok" : " MISMATCH") << '\n'
                << "duality " << (palindromic ? "ok" : "FAILED");
    }
    std::cout << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_ideal_gens(const RunConfig& cfg, int n, int k, bool reduced) {
  check_grassmann_hypothesis(n, k);
  if (reduced) {
    if (k != 3) throw InvalidArgument("--reduced is only defined for k = 3");
    const auto gens = ideal_gens_k3(n);
    const auto series = inverse_series_components(reduced_variables(3), n);
    bool agree = true;
    Json arr = Json::array();
    std::ostringstream text;
    for (int i = 0; i < 3; ++i) {
      const int deg = n - 2 + i;
      const bool same = gens[static_cast<std::size_t>(i)] == series[static_cast<std::size_t>(deg)];
      agree = agree && same;
      arr.push_back(Json{{"degree", deg}, {"generator", to_string(gens[static_cast<std::size_t>(i)])},
                         {"series_agrees", same}});
      text << "g" << deg << " = " << to_string(gens[static_cast<std::size_t>(i)])
           << (same ? "" : "   (series route DISAGREES)") << '\n';
    }
    if (cfg.format == "json") {
      std::cout << Json{{"n", n}, {"k", 3}, {"ring", "w2,w3"}, {"generators", arr}}.dump(2) << '\n';
    } else if (cfg.format == "csv") {
      std::cout << "degree,generator,series_agrees\n";
      for (const auto& g : arr) {
        std::cout << g["degree"].get<int>() << ',' << g["generator"].get<std::string>() << ','
                  << (g["series_agrees"].get<bool>() ? "true" : "false") << '\n';
      }
    } else {
      std::cout << text.str();
    }
    return agree ? kOk : kCheckFailed;
  }
  const auto comps = inverse_series_components(k, n);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (int d = n - k + 1; d <= n; ++d) {
      arr.push_back(Json{{"degree", d}, {"generator", to_string(comps[static_cast<std::size_t>(d)])}});
    }
    std::cout << Json{{"n", n}, {"k", k}, {"generators", arr}}.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "degree,generator\n";
    for (int d = n - k + 1; d <= n; ++d) std::cout << d << ',' << to_string(comps[static_cast<std::size_t>(d)]) << '\n';
  } else {
    for (int d = n - k + 1; d <= n; ++d) {
      std::cout << "degree " << d << ": " << to_string(comps[static_cast<std::size_t>(d)]) << '\n';
    }
  }
  return kOk;
}

int cmd_height(const RunConfig& cfg, int n, int k, const std::string& cls, bool oriented) {
  const GrassmannPresentation p(n, k, cfg.limits());
  const Gf2Polynomial x = parse_polynomial(cls, p.vars());
  const HeightRecord h = oriented ? height_direct(OrientedContext(p), x) : height_direct(p, x);
  std::optional<int> closed;
  if (!oriented && x == Gf2Polynomial::variable(p.vars(), 2)) closed = w2_height_closed_form(n, k);
  if (cfg.format == "json") {
    Json j = to_json(h);
    if (closed) {
      j["closed_form"] = *closed;
      j["agree"] = *closed == h.height;
    }
    std::cout << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "class,context,n,k,height,witness_nonzero_degree,witness_zero,closed_form\n"
              << h.class_label << ',' << to_string(h.context) << ',' << n << ',' << k << ',' << h.height << ','
              << h.witness_nonzero << ',' << h.witness_zero << ',' << (closed ? std::to_string(*closed) : "") << '\n';
  } else {
    std::cout << to_text(h);
    if (closed) {
      std::cout << "closed form " << *closed << ": " << (*closed == h.height ? "AGREE" : "DISAGREE") << '\n';
    }
  }
  return kOk;
}

// Ring summaries, read from and written to the cache when one is configured.
class Summaries {
 public:
  explicit Summaries(const RunConfig& cfg) : cfg_(cfg) {
    if (!cfg.cache_dir.empty()) cache_.emplace(cfg.cache_dir);
  }

  RingSummary get(int n, int k, bool oriented) const {
    if (cache_ && !cfg_.no_cache) {
      if (auto s = cache_->load(n, k, oriented)) return *s;
    }
    RingSummary s = summarize_ring(n, k, oriented, cfg_.limits());
    if (cache_) cache_->store(s);
    return s;
  }

 private:
  const RunConfig& cfg_;
  std::optional<RingCache> cache_;
};

std::vector<BoundReport> reports_for(const RunConfig& cfg, const Summaries& summaries, int n, int k,
                                     bool closed_form_only, bool skip_inapplicable) {
  check_grassmann_hypothesis(n, k);
  std::vector<BoundReport> out;
  std::optional<RingSummary> oriented;
  std::optional<RingSummary> unoriented;
  for (Field f : cfg.fields()) {
    if (f == Field::kRational && k < 4 && skip_inapplicable) continue;
    ReportOptions opt;
    opt.field = f;
    opt.direct = !closed_form_only;
    opt.q_override = cfg.q_override;
    opt.limits = cfg.limits();
    if (f == Field::kGf2 && opt.direct && !oriented) {
      oriented = summaries.get(n, k, true);
      unoriented = summaries.get(n, k, false);
    }
    out.push_back(assemble_report(n, k, opt, oriented ? &*oriented : nullptr, unoriented ? &*unoriented : nullptr));
  }
  return out;
}

int cmd_bounds(const RunConfig& cfg, int n, int k, bool closed_form_only) {
  const Summaries summaries(cfg);
  const auto reports = reports_for(cfg, summaries, n, k, closed_form_only, cfg.field == "both");
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    std::cout << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << csv_header() << '\n';
    for (const auto& r : reports) std::cout << to_csv_row(r) << '\n';
  } else {
    for (const auto& r : reports) std::cout << to_text(r);
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::vector<std::string>& only, std::optional<int> max_n) {
  VerifyOptions opt;
  opt.only = only;
  opt.max_n = max_n;
  opt.limits = cfg.limits();
  const bool text = cfg.format != "json";
  auto sink = [&](const CheckResult& r) {
    if (!text) return;
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.group << '/' << r.name;
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ')';
    std::cout << '\n' << std::flush;
  };
  const auto results = run_verify(opt, sink);
  const auto failed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.pass; });
  if (text) {
    std::cout << results.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
    for (const auto& r : results) {
      if (!r.pass) std::cout << "failing: " << r.group << '/' << r.name << '\n';
    }
  } else {
    Json arr = Json::array();
    for (const auto& r : results) {
      arr.push_back(Json{{"group", r.group}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    std::cout << Json{{"checks", arr}, {"failed", failed}}.dump(2) << '\n';
  }
  return failed == 0 ? kOk : kCheckFailed;
}

struct SweepRow {
  int n = 0;
  int k = 0;
  std::vector<BoundReport> reports;
  std::string error;
};

int cmd_sweep(const RunConfig& cfg, const std::string& k_text, const std::string& n_text, bool closed_form_only,
              unsigned jobs) {
  const IntRange kr = parse_range(k_text);
  const IntRange nr = parse_range(n_text);
  if (kr.lo <= kr.hi && kr.lo < 3) throw InvalidArgument("k ranges start at 3");
  std::vector<SweepRow> rows;
  for (int k = kr.lo; k <= kr.hi; ++k) {
    for (int n = std::max(nr.lo, 2 * k); n <= nr.hi; ++n) rows.push_back({n, k, {}, {}});
  }

  const Summaries summaries(cfg);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        rows[i].reports = reports_for(cfg, summaries, rows[i].n, rows[i].k, closed_form_only, true);
      } catch (const std::exception& e) {
        rows[i].error = e.what();
      }
    }
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(rows.size(), 1))));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }

  bool any_error = false;
  for (const auto& r : rows) {
    if (!r.error.empty()) {
      any_error = true;
      std::cerr << "error at (" << r.n << "," << r.k << "): " << r.error << '\n';
    }
  }
  const auto fields = cfg.fields();
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      if (r.error.empty()) {
        for (const auto& rep : r.reports) arr.push_back(to_json(rep));
      } else {
        arr.push_back(Json{{"n", r.n}, {"k", r.k}, {"error", r.error}});
      }
    }
    std::cout << arr.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << csv_header() << '\n';
    for (const auto& r : rows) {
      if (r.error.empty()) {
        for (const auto& rep : r.reports) std::cout << to_csv_row(rep) << '\n';
      } else {
        for (Field f : fields) {
          if (f == Field::kRational && r.k < 4) continue;
          std::cout << csv_error_row(r.n, r.k, f) << '\n';
        }
      }
    }
  } else {
    std::cout << "    n   k  field     lower  upper  gap  cat        exact  lower_method / upper_method\n";
    for (const auto& r : rows) {
      if (!r.error.empty()) {
        std::cout << "  " << r.n << "  " << r.k << "  ERROR: " << r.error << '\n';
        continue;
      }
      for (const auto& rep : r.reports) {
        char line[160];
        std::snprintf(line, sizeof line, "  %3d %3d  %-8s  %5d  %5d  %3d  [%3d,%3d]  %-5s  ", rep.n, rep.k,
                      to_string(rep.field).c_str(), rep.lower.value, rep.upper.value, rep.gap(), rep.cat_lower,
                      rep.cat_upper, rep.exact ? "yes" : "no");
        std::cout << line << to_string(rep.lower.method) << " / " << to_string(rep.upper.method) << '\n';
      }
    }
  }
  return any_error ? kPartialSweep : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cup-length and L-S category bounds for oriented Grassmann manifolds"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for cached ring summaries");
  app.add_flag("--no-cache", cfg.no_cache, "Recompute even when a cached summary exists");
  app.add_option("--max-degree", cfg.max_degree, "Largest formal dimension k(n-k) to build")->check(CLI::PositiveNumber);
  app.add_option("--max-basis", cfg.max_basis, "Largest per-degree monomial basis")->check(CLI::PositiveNumber);
  app.add_option("--q-override", cfg.q_override, "Second nonzero degree used by the nilpotency bound")
      ->check(CLI::PositiveNumber);
  app.add_option("--field", cfg.field, "Coefficients for bounds")->check(CLI::IsMember({"gf2", "rational", "both"}));

  int n = 0;
  int k = 0;
  bool oriented = false;

  auto* ring = app.add_subcommand("ring", "Betti numbers with duality and total-dimension checks");
  ring->add_option("n", n)->required();
  ring->add_option("k", k)->required();
  ring->add_flag("--oriented", oriented, "Characteristic subalgebra dimensions instead");

  bool reduced = false;
  auto* gens = app.add_subcommand("ideal-gens", "Generators of the ideal I_{n,k}");
  gens->add_option("n", n)->required();
  gens->add_option("k", k)->required();
  gens->add_flag("--reduced", reduced, "k = 3 only: closed-form generators in w2, w3, checked against the series");

  std::string cls;
  auto* height = app.add_subcommand("height", "Height of a class, e.g. w2 or w2^2*w3 + w3^2");
  height->add_option("n", n)->required();
  height->add_option("k", k)->required();
  height->add_option("class", cls)->required();
  height->add_flag("--oriented", oriented, "Work in the characteristic subalgebra");

  bool closed_form_only = false;
  auto* bounds = app.add_subcommand("bounds", "Cup-length and category bounds for one (n,k)");
  bounds->add_option("n", n)->required();
  bounds->add_option("k", k)->required();
  bounds->add_flag("--closed-form-only", closed_form_only, "Skip the ring computations");

  std::vector<std::string> only;
  std::optional<int> max_n;
  auto* verify = app.add_subcommand("verify", "Check the published values against the engine");
  verify->add_option("--only", only, "Restrict to these groups")->check(CLI::IsMember(verify_groups()));
  verify->add_option("--max-n", max_n, "Cap every swept n");

  std::string k_range = "3";
  std::string n_range;
  unsigned jobs = std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
  auto* sweep = app.add_subcommand("sweep", "One report row per (n,k) in the given ranges");
  sweep->add_option("--k", k_range, "k or lo..hi")->capture_default_str();
  sweep->add_option("--n", n_range, "n or lo..hi")->required();
  sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_flag("--closed-form-only", closed_form_only, "Skip the ring computations");

  for (auto* sub : {ring, gens, height, bounds, verify, sweep}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*ring) return cmd_ring(cfg, n, k, oriented);
    if (*gens) return cmd_ideal_gens(cfg, n, k, reduced);
    if (*height) return cmd_height(cfg, n, k, cls, oriented);
    if (*bounds) return cmd_bounds(cfg, n, k, closed_form_only);
    if (*verify) return cmd_verify(cfg, only, max_n);
    if (*sweep) return cmd_sweep(cfg, k_range, n_range, closed_form_only, jobs);
  } catch (const UndefinedQuery& e) {
    std::cerr << "undefined: " << e.what() << '\n';
    return kUndefined;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
