#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "orbifoldry/lattice.hpp"
#include "orbifoldry/rational.hpp"

namespace orbifoldry {

enum class OutputFormat { Json, Markdown };

struct RunConfig {
  std::int64_t p = 3;
  Rational cutoff = Rational(6);
  std::uint64_t enumeration_budget = 1'000'000'000;
  std::string data_dir;
  std::uint64_t seed = 1;
  OutputFormat output = OutputFormat::Json;
  ThetaSource theta_source = ThetaSource::ModularIdentity;

  // p in {3, 5, 7, 13}, cutoff >= 2; InvalidArgument otherwise.
  void validate() const;
};

/// Data directory: $ORBIFOLDRY_DATA if set, else the directory configured at build time.
std::string default_data_dir();

/// Flat "key = value" text, '#' comments. Keys: p, cutoff, budget, data_dir,
/// seed, format, theta. Unknown keys and malformed values are a ParseError.
void apply_config_text(RunConfig& cfg, std::string_view text);
void apply_config_file(RunConfig& cfg, const std::string& path);

/// One compared quantity of a claim.
struct ReportRow {
  std::string quantity;
  std::string computed;
  std::string expected;
  bool ok = false;
};

struct ReportEntry {
  std::string id;
  std::string claim;
  std::vector<ReportRow> rows;
  std::string error;  // "Kind: message" when the check could not run

  bool passed() const;
};

struct Report {
  RunConfig config;
  std::vector<ReportEntry> entries;

  bool all_passed() const;
};

/// Registry of the claims the suite checks, in report order.
struct ClaimInfo {
  std::string_view id;
  std::string_view claim;
};
const std::vector<ClaimInfo>& claim_registry();

/// Runs every registered check for cfg.p. Module errors become failed
/// entries; only DataMissing for the lattice file escapes as an exception.
Report run_verification_suite(const RunConfig& cfg);

/// Deterministic rendering: JSON with fixed key order, or Markdown with one
/// table per claim.
std::string emit_report(const Report& report, OutputFormat format);
Report parse_report_json(std::string_view text);

std::string to_string(OutputFormat format);
OutputFormat parse_output_format(std::string_view text);

/// Path of the shipped order-2p witness for p.
std::string witness_path(const std::string& data_dir, std::int64_t p);

}  // namespace orbifoldry
