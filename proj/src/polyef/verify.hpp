#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace polyef {

struct CheckResult {
  std::string check_id;
  std::string claim;
  bool holds = false;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  double elapsed_seconds = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t n_max = 6;
  /// Empty means every check.
  std::vector<std::string> only;
};

struct VerifyReport {
  std::uint64_t seed = 42;
  std::size_t n_max = 6;
  std::vector<CheckResult> checks; // ordered by check_id
  bool all_hold() const;
};

/// Ids selected by `opts`, in report order. Throws ArgumentError for an
/// unknown id in `opts.only`.
std::vector<std::string> selected_checks(const VerifyOptions& opts);

VerifyReport run_verify_paper(const VerifyOptions& opts);

/// Byte-identical across runs with the same options unless `with_timings`.
std::string report_json(const VerifyReport& r, bool with_timings = false);
std::string report_text(const VerifyReport& r);

} // namespace polyef
