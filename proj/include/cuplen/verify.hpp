#ifndef CUPLEN_VERIFY_HPP
#define CUPLEN_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cuplen/grassmann.hpp"

namespace cuplen {

/// One anchored check: a published value or identity, evaluated by the engine.
struct CheckResult {
  std::string group;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  /// Groups to run; empty runs all of them.
  std::vector<std::string> only;
  /// Caps every n range swept by the checks.
  std::optional<int> max_n;
  GrassmannLimits limits;
};

/// generators, membership, heights, w2-height, lower, upper, rational,
/// category, structure, linalg.
const std::vector<std::string>& verify_groups();

/// Runs the selected groups in the order of verify_groups(), reporting each
/// check to `sink` as soon as it is decided. Throws InvalidArgument on an
/// unknown group name.
std::vector<CheckResult> run_verify(const VerifyOptions& options,
                                    const std::function<void(const CheckResult&)>& sink = {});

}  // namespace cuplen

#endif  // CUPLEN_VERIFY_HPP
