#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace frs {

/// One structured report record: ordered key=value fields rendered as a
/// single line, e.g. "thm=3.5 status=pass trials=1000". Field order is part
/// of the byte-level contract (identical configuration must reproduce
/// identical bytes).
struct ReportLine {
  std::vector<std::pair<std::string, std::string>> fields;

  ReportLine& kv(std::string key, std::string value);
  ReportLine& kv(std::string key, long value);
  std::string render() const;
};

struct BatteryResult {
  std::string tag;  // theorem or definition label, e.g. "thm=3.5"
  bool pass = false;
  long trials = 0;
  std::string detail;  // deterministic witness text on failure

  ReportLine line(std::uint64_t seed) const;
};

// Reusable theorem batteries. Each one drives the corresponding operation
// over seeded random instances and verifies every stated condition exactly.
BatteryResult battery_valid_fosets(long trials, std::uint64_t seed);
BatteryResult battery_lattice_identities(long trials, std::uint64_t seed);
BatteryResult battery_compatibility(long trials, std::uint64_t seed);
BatteryResult battery_hom_oracles(long trials, std::uint64_t seed);
BatteryResult battery_witnesses(long trials, std::uint64_t seed);
BatteryResult battery_image_theorems(long trials, std::uint64_t seed);
BatteryResult battery_cauchy(long trials, std::uint64_t seed);
BatteryResult battery_quotient(long trials, std::uint64_t seed);
BatteryResult battery_projection_hom(long trials, std::uint64_t seed);
BatteryResult battery_archimedean(long trials, std::uint64_t seed);
BatteryResult battery_stabilization(long trials, std::uint64_t seed);
BatteryResult battery_principal_projection(long trials, std::uint64_t seed);
BatteryResult battery_nonarch_demo(long k_max);
BatteryResult battery_order_continuity(long trials, std::uint64_t seed);
BatteryResult battery_theta(long trials, std::uint64_t seed);
BatteryResult battery_factorize(long trials, std::uint64_t seed);
BatteryResult battery_mutation(const std::string& target, long trials, std::uint64_t seed);

/// Runs every battery with scaled trial counts and renders the structured
/// report. Identical seed and trials give byte-identical output.
std::string run_structured_suite(std::uint64_t seed, long trials, bool* all_passed = nullptr);

}  // namespace frs
