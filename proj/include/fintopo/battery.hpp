#pragma once

#include <json.hpp>

#include "fintopo/hyperspace.hpp"
#include "fintopo/measure.hpp"

namespace fintopo {

struct BatteryOptions {
  int lattice_bound = kDefaultLatticeBound;
  int oracle_bound = 12;
  /// Subcollection scans are exhaustive up to this kappa size, sampled above.
  int exhaustive_subcollections = 12;
  int sampled_subcollections = 512;
  std::uint64_t sample_seed = 20240;
  bool include_timings = false;
};

struct ClaimResult {
  std::string id;
  std::string description;
  bool pass = false;
  bool skipped = false;
  std::string skip_reason;
  nlohmann::ordered_json witness;  // null when nothing to report
  long long ms = 0;
};

struct ClaimReport {
  SpacePtr space;
  std::vector<ClaimResult> claims;
  bool all_pass() const;
};

/// Runs every registered claim against one space. Claims that exceed the
/// configured bounds are reported as skipped with a reason rather than
/// failing.
ClaimReport run_battery(SpacePtr space, const BatteryOptions& opts = {});

/// Instance-parallel batch: spaces are distributed over `jobs` workers and
/// results are merged by input index, so the report does not depend on the
/// worker count.
std::vector<ClaimReport> run_battery_batch(const std::vector<SpacePtr>& spaces,
                                           const BatteryOptions& opts = {}, int jobs = 1);

nlohmann::ordered_json battery_report_to_json(const ClaimReport& report,
                                              const BatteryOptions& opts = {});
nlohmann::ordered_json battery_batch_to_json(const std::vector<ClaimReport>& reports,
                                             const BatteryOptions& opts = {});

}  // namespace fintopo
