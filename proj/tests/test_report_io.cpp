#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "cuplen/error.hpp"
#include "cuplen/report_io.hpp"

using namespace cuplen;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("cuplen_test_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("product labels") {
  CHECK(product_label({{4, 0}, 4, 8}) == "w2^4");
  CHECK(product_label({{1, 1}, 2, 5}) == "w2*w3");
  CHECK(product_label({{0, 0}, 0, 0}) == "1");
}

TEST_CASE("ring summaries round-trip through JSON") {
  for (bool oriented : {false, true}) {
    const RingSummary s = summarize_ring(9, 3, oriented);
    const Json j = to_json(s);
    CHECK(j["schema"] == kCacheSchema);
    CHECK(j["mode"] == (oriented ? "oriented" : "unoriented"));
    CHECK(ring_summary_from_json(j) == s);
    CHECK(ring_summary_from_json(Json::parse(j.dump())) == s);
  }
}

TEST_CASE("strict summary parsing") {
  const Json good = to_json(summarize_ring(6, 3, true));
  Json j = good;
  j["extra"] = 1;
  CHECK_THROWS_AS(ring_summary_from_json(j), InvalidArgument);
  j = good;
  j.erase("ht_w2");
  CHECK_THROWS_AS(ring_summary_from_json(j), InvalidArgument);
  j = good;
  j["schema"] = kCacheSchema + 1;
  CHECK_THROWS_AS(ring_summary_from_json(j), InvalidArgument);
  j = good;
  j["betti"].push_back(1);
  CHECK_THROWS_AS(ring_summary_from_json(j), InvalidArgument);
  j = good;
  j["longest_product"]["length"] = 5;
  CHECK_THROWS_AS(ring_summary_from_json(j), InvalidArgument);
  j = good;
  j["longest_product"] = nullptr;
  CHECK_THROWS_AS(ring_summary_from_json(j), InvalidArgument);
  j = good;
  j["mode"] = "sideways";
  CHECK_THROWS_AS(ring_summary_from_json(j), InvalidArgument);
  CHECK_THROWS_AS(ring_summary_from_json(Json::array()), InvalidArgument);
}

TEST_CASE("report JSON") {
  const Json j = to_json(full_report(6, 3));
  CHECK(j["n"] == 6);
  CHECK(j["field"] == "gf2");
  CHECK(j["lower"]["value"] == 3);
  CHECK(j["upper"]["value"] == 3);
  CHECK(j["exact"] == true);
  CHECK(j["q"] == 3);
  CHECK(j["certificates"]["closed_form_product"]["monomial"] == "w2*w3");
  const Json h = to_json(rational_p1_record(8, 4));
  CHECK(h["height"] == 4);
  CHECK(h["context"] == "rational-closed-form");
}

TEST_CASE("CSV rows") {
  CHECK(csv_header() == "n,k,field,lower,lower_method,upper,upper_method,cat_lower,cat_upper,exact");
  const std::string row = to_csv_row(full_report(6, 3));
  CHECK(row.rfind("6,3,gf2,3,", 0) == 0);
  CHECK(row.ends_with(",4,5,true"));
  CHECK(std::count(row.begin(), row.end(), ',') == 9);
  CHECK(csv_error_row(7, 3, Field::kGf2) == "7,3,gf2,,error,,error,,,");
  CHECK(to_csv_row(full_report(8, 4, {.field = Field::kRational})).rfind("8,4,rational,4,", 0) == 0);
}

TEST_CASE("text rendering mentions the interval") {
  CHECK(to_text(full_report(9, 3)).find("cup-length in [5, 7]") != std::string::npos);
  CHECK_FALSE(to_text(rational_p1_record(8, 4)).empty());
}

TEST_CASE("ring cache") {
  TempDir tmp;
  const RingCache cache(tmp.path / "nested");
  CHECK(cache.file_for(9, 3, true).filename() == "gr_9_3_oriented.json");
  CHECK_FALSE(cache.load(9, 3, true).has_value());
  const RingSummary s = summarize_ring(9, 3, true);
  cache.store(s);
  CHECK(cache.load(9, 3, true) == s);
  CHECK_FALSE(cache.load(9, 3, false).has_value());
  cache.store(s);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(cache.dir())) {
    ++files;
    CHECK(e.path().extension() == ".json");
  }
  CHECK(files == 1);

  {
    std::ofstream out(cache.file_for(6, 3, true));
    out << "{not json";
  }
  CHECK_THROWS_AS(cache.load(6, 3, true), InvalidArgument);
  // a valid summary filed under the wrong name
  fs::copy_file(cache.file_for(9, 3, true), cache.file_for(10, 3, true));
  CHECK_THROWS_AS(cache.load(10, 3, true), InvalidArgument);
}
