#include "cuplen/report_io.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>

#include "cuplen/error.hpp"

namespace cuplen {

namespace fs = std::filesystem;

std::string product_label(const ProductCertificate& c) {
  const int k = static_cast<int>(c.exps.size()) + 1;
  return to_string(Monomial(reduced_variables(k), c.exps));
}

Json to_json(const ProductCertificate& c) {
  return Json{{"monomial", product_label(c)}, {"exps", c.exps}, {"length", c.length}, {"degree", c.degree}};
}

Json to_json(const BoundEntry& e) { return Json{{"value", e.value}, {"method", to_string(e.method)}}; }

namespace {

Json entries(const std::vector<BoundEntry>& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back(to_json(e));
  return a;
}

template <class T>
void put_if(Json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

}  // namespace

Json to_json(const BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["field"] = to_string(r.field);
  j["formal_dim"] = r.profile.formal_dim;
  j["r"] = r.profile.r;
  j["q"] = r.profile.q == 0 ? Json(nullptr) : Json(r.profile.q);
  j["lower"] = to_json(r.lower);
  j["upper"] = to_json(r.upper);
  j["gap"] = r.gap();
  j["exact"] = r.exact;
  j["closed_form_lower"] = to_json(r.closed_form_lower);
  j["closed_form_upper"] = to_json(r.closed_form_upper);
  j["lower_candidates"] = entries(r.lower_candidates);
  j["upper_candidates"] = entries(r.upper_candidates);
  j["cat_lower"] = r.cat_lower;
  j["cat_upper"] = r.cat_upper;
  j["closed_form_cat_lower"] = r.closed_form_cat_lower;
  Json cert = Json::object();
  if (r.closed_form_certificate) cert["closed_form_product"] = to_json(*r.closed_form_certificate);
  put_if(cert, "closed_form_product_verified", r.closed_form_certificate_verified);
  put_if(cert, "w2_height_closed_form", r.w2_height_closed_form);
  put_if(cert, "w2_height_direct", r.w2_height_direct);
  put_if(cert, "oriented_w2_height", r.oriented_w2_height);
  if (r.longest_product) cert["longest_product"] = to_json(*r.longest_product);
  put_if(cert, "p1_height", r.p1_height);
  j["certificates"] = std::move(cert);
  return j;
}

Json to_json(const HeightRecord& h) {
  return Json{{"class", h.class_label},   {"context", to_string(h.context)},
              {"n", h.n},                 {"k", h.k},
              {"height", h.height},       {"witness_nonzero_degree", h.witness_nonzero},
              {"witness_zero", h.witness_zero}};
}

Json to_json(const RingSummary& s) {
  Json j;
  j["schema"] = kCacheSchema;
  j["n"] = s.n;
  j["k"] = s.k;
  j["mode"] = s.oriented ? "oriented" : "unoriented";
  j["betti"] = s.betti;
  j["ht_w2"] = s.ht_w2;
  j["longest_product"] = s.longest_product ? to_json(*s.longest_product) : Json(nullptr);
  return j;
}

namespace {

void expect_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& what) {
  if (!j.is_object()) throw InvalidArgument(what + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw InvalidArgument(what + ": unknown field '" + key + "'");
  }
  for (const char* k : keys) {
    if (!j.contains(k)) throw InvalidArgument(what + ": missing field '" + std::string(k) + "'");
  }
}

// Signed or unsigned storage, depending on whether the value was built in
// memory or parsed from text.
bool is_nonnegative_integer(const Json& x) {
  if (x.is_number_unsigned()) return x.get<std::uint64_t>() <= std::numeric_limits<int>::max();
  return x.is_number_integer() && x.get<std::int64_t>() >= 0 && x.get<std::int64_t>() <= std::numeric_limits<int>::max();
}

int get_int(const Json& j, const char* key, const std::string& what) {
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw InvalidArgument(what + ": '" + std::string(key) + "' must be an integer");
  return v.get<int>();
}

}  // namespace

RingSummary ring_summary_from_json(const Json& j) {
  const std::string what = "ring summary";
  expect_keys(j, {"schema", "n", "k", "mode", "betti", "ht_w2", "longest_product"}, what);
  if (get_int(j, "schema", what) != kCacheSchema) {
    throw InvalidArgument(what + ": unsupported schema " + j.at("schema").dump());
  }
  RingSummary s;
  s.n = get_int(j, "n", what);
  s.k = get_int(j, "k", what);
  try {
    check_grassmann_hypothesis(s.n, s.k);
  } catch (const HypothesisViolation& e) {
    throw InvalidArgument(what + ": " + e.what());
  }
  const Json& mode = j.at("mode");
  if (mode == "oriented") {
    s.oriented = true;
  } else if (mode == "unoriented") {
    s.oriented = false;
  } else {
    throw InvalidArgument(what + ": bad mode " + mode.dump());
  }
  const Json& b = j.at("betti");
  if (!b.is_array() || b.size() != static_cast<std::size_t>(s.k * (s.n - s.k)) + 1) {
    throw InvalidArgument(what + ": betti must list degrees 0..N");
  }
  for (const auto& x : b) {
    if (!is_nonnegative_integer(x)) throw InvalidArgument(what + ": betti entries must be nonnegative integers");
    s.betti.push_back(x.get<std::size_t>());
  }
  s.ht_w2 = get_int(j, "ht_w2", what);
  if (s.ht_w2 < 1) throw InvalidArgument(what + ": ht_w2 must be >= 1");

  const Json& lp = j.at("longest_product");
  if (lp.is_null()) {
    if (s.oriented) throw InvalidArgument(what + ": oriented summary needs a longest product");
  } else {
    if (!s.oriented) throw InvalidArgument(what + ": unoriented summary carries no longest product");
    const std::string lwhat = what + " longest_product";
    expect_keys(lp, {"monomial", "exps", "length", "degree"}, lwhat);
    ProductCertificate c;
    const Json& e = lp.at("exps");
    if (!e.is_array() || e.size() != static_cast<std::size_t>(s.k - 1)) {
      throw InvalidArgument(lwhat + ": exps must hold i_2..i_k");
    }
    int length = 0;
    int degree = 0;
    int weight = 2;
    for (const auto& x : e) {
      if (!is_nonnegative_integer(x)) throw InvalidArgument(lwhat + ": exponents must be nonnegative integers");
      c.exps.push_back(x.get<int>());
      length += c.exps.back();
      degree += weight++ * c.exps.back();
    }
    c.length = get_int(lp, "length", lwhat);
    c.degree = get_int(lp, "degree", lwhat);
    if (c.length != length || c.degree != degree || lp.at("monomial") != product_label(c)) {
      throw InvalidArgument(lwhat + ": fields disagree with the exponents");
    }
    s.longest_product = std::move(c);
  }
  return s;
}

std::string csv_header() { return "n,k,field,lower,lower_method,upper,upper_method,cat_lower,cat_upper,exact"; }

std::string to_csv_row(const BoundReport& r) {
  std::ostringstream os;
  os << r.n << ',' << r.k << ',' << to_string(r.field) << ',' << r.lower.value << ',' << to_string(r.lower.method)
     << ',' << r.upper.value << ',' << to_string(r.upper.method) << ',' << r.cat_lower << ',' << r.cat_upper << ','
     << (r.exact ? "true" : "false");
  return os.str();
}

std::string csv_error_row(int n, int k, Field field) {
  return std::to_string(n) + ',' + std::to_string(k) + ',' + to_string(field) + ",,error,,error,,,";
}

std::string to_text(const BoundReport& r) {
  std::ostringstream os;
  auto entry = [](const BoundEntry& e) { return std::to_string(e.value) + " [" + to_string(e.method) + "]"; };
  os << "oriented G(" << r.n << "," << r.k << ") over " << to_string(r.field) << ": N = " << r.profile.formal_dim
     << ", r = " << r.profile.r;
  if (r.profile.q != 0) os << ", q = " << r.profile.q;
  os << '\n';
  os << "  cup-length in [" << r.lower.value << ", " << r.upper.value << "]";
  if (r.exact) {
    os << ", exact";
  } else {
    os << ", gap " << r.gap();
  }
  os << '\n';
  os << "  lower " << entry(r.lower) << ", closed form " << entry(r.closed_form_lower) << '\n';
  os << "  upper " << entry(r.upper) << ", closed form " << entry(r.closed_form_upper) << '\n';
  os << "  lower candidates:";
  for (const auto& e : r.lower_candidates) os << ' ' << entry(e);
  os << "\n  upper candidates:";
  for (const auto& e : r.upper_candidates) os << ' ' << entry(e);
  os << '\n';
  os << "  cat in [" << r.cat_lower << ", " << r.cat_upper << "]";
  if (r.closed_form_cat_lower != r.cat_lower) os << ", closed-form cat lower " << r.closed_form_cat_lower;
  os << '\n';
  if (r.closed_form_certificate) {
    os << "  closed-form product " << product_label(*r.closed_form_certificate);
    if (r.closed_form_certificate_verified) os << (*r.closed_form_certificate_verified ? " (nonzero)" : " (ZERO)");
    os << '\n';
  }
  if (r.w2_height_closed_form) os << "  ht(w2) closed form " << *r.w2_height_closed_form;
  if (r.w2_height_direct) os << ", direct " << *r.w2_height_direct;
  if (r.w2_height_closed_form) os << '\n';
  if (r.oriented_w2_height) os << "  oriented ht(w2) " << *r.oriented_w2_height << '\n';
  if (r.longest_product) {
    os << "  longest product " << product_label(*r.longest_product) << " (length " << r.longest_product->length
       << ", degree " << r.longest_product->degree << ")\n";
  }
  if (r.p1_height) os << "  ht(p1) " << *r.p1_height << '\n';
  return os.str();
}

std::string to_text(const HeightRecord& h) {
  std::ostringstream os;
  os << "ht(" << h.class_label << ") = " << h.height << " in " << to_string(h.context) << " G(" << h.n << ","
     << h.k << "): power " << h.height << " nonzero in degree " << h.witness_nonzero << ", power "
     << h.witness_zero << " vanishes\n";
  return os.str();
}

RingCache::RingCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path RingCache::file_for(int n, int k, bool oriented) const {
  return dir_ / ("gr_" + std::to_string(n) + "_" + std::to_string(k) + "_" +
                 (oriented ? "oriented" : "unoriented") + ".json");
}

std::optional<RingSummary> RingCache::load(int n, int k, bool oriented) const {
  const fs::path path = file_for(n, k, oriented);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument("cache file " + path.string() + ": " + e.what());
  }
  RingSummary s;
  try {
    s = ring_summary_from_json(j);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument("cache file " + path.string() + ": " + e.what());
  }
  if (s.n != n || s.k != k || s.oriented != oriented) {
    throw InvalidArgument("cache file " + path.string() + " describes a different ring");
  }
  return s;
}

void RingCache::store(const RingSummary& s) const {
  static std::atomic<unsigned> counter{0};
  fs::create_directories(dir_);
  const fs::path target = file_for(s.n, s.k, s.oriented);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
    out << to_json(s).dump(2) << '\n';
    out.flush();
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::system_error(ec, "cannot rename into " + target.string());
  }
}

}  // namespace cuplen
