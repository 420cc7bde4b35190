#ifndef CUPLEN_REPORT_IO_HPP
#define CUPLEN_REPORT_IO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "cuplen/bounds.hpp"
#include "cuplen/heights.hpp"

namespace cuplen {

using Json = nlohmann::ordered_json;

inline constexpr int kCacheSchema = 1;

/// "w2^4", "w2*w3", "1".
std::string product_label(const ProductCertificate& c);

Json to_json(const ProductCertificate& c);
Json to_json(const BoundEntry& e);
Json to_json(const BoundReport& r);
Json to_json(const HeightRecord& h);
Json to_json(const RingSummary& s);

/// Strict inverse of to_json(RingSummary): rejects unknown or missing
/// fields, a schema other than kCacheSchema, and inconsistent contents.
/// Throws InvalidArgument.
RingSummary ring_summary_from_json(const Json& j);

/// n,k,field,lower,lower_method,upper,upper_method,cat_lower,cat_upper,exact
std::string csv_header();
std::string to_csv_row(const BoundReport& r);
/// A row for an (n,k) whose report failed: both method columns read "error".
std::string csv_error_row(int n, int k, Field field);

std::string to_text(const BoundReport& r);
std::string to_text(const HeightRecord& h);

/// One JSON document per (n, k, mode) named gr_<n>_<k>_<mode>.json, where
/// mode is "oriented" or "unoriented". Writes go to a temporary file in the
/// same directory which is then renamed over the target.
class RingCache {
 public:
  explicit RingCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file_for(int n, int k, bool oriented) const;
  /// Empty on a miss; throws InvalidArgument when the file exists but is
  /// malformed or describes a different ring.
  std::optional<RingSummary> load(int n, int k, bool oriented) const;
  void store(const RingSummary& s) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace cuplen

#endif  // CUPLEN_REPORT_IO_HPP
