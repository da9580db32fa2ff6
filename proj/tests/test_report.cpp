#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include <unistd.h>

#include "orbifoldry/report.hpp"

using namespace orbifoldry;
namespace fs = std::filesystem;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

RunConfig base_config(std::int64_t p) {
  RunConfig cfg;
  cfg.p = p;
  cfg.cutoff = make_rational(4);
  cfg.data_dir = default_data_dir();
  return cfg;
}

const Report& report_for_p3() {
  static const Report report = run_verification_suite(base_config(3));
  return report;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

// Scratch copy of the data directory, removed on destruction.
struct DataCopy {
  fs::path dir;
  DataCopy() : dir(fs::temp_directory_path() / ("orbifoldry_data_" + std::to_string(::getpid()))) {
    fs::remove_all(dir);
    fs::copy(default_data_dir(), dir);
  }
  ~DataCopy() { fs::remove_all(dir); }
};

}  // namespace

TEST_CASE("claim registry is complete and ids are unique") {
  const auto& registry = claim_registry();
  CHECK(registry.size() == 13);
  std::set<std::string_view> ids;
  for (const auto& info : registry) {
    CHECK_FALSE(info.claim.empty());
    ids.insert(info.id);
  }
  CHECK(ids.size() == registry.size());
  const Report& report = report_for_p3();
  REQUIRE(report.entries.size() == registry.size());
  for (std::size_t k = 0; k < registry.size(); ++k) {
    CHECK(report.entries[k].id == registry[k].id);
    CHECK_FALSE(report.entries[k].rows.empty());
  }
}

TEST_CASE("configuration text and validation") {
  RunConfig cfg;
  apply_config_text(cfg, "# comment\np = 7\ncutoff = 5/2\nbudget = 1000\nseed = 9\nformat = markdown\ntheta = enumeration\n");
  CHECK(cfg.p == 7);
  CHECK(cfg.cutoff == make_rational(5, 2));
  CHECK(cfg.enumeration_budget == 1000);
  CHECK(cfg.seed == 9);
  CHECK(cfg.output == OutputFormat::Markdown);
  CHECK(cfg.theta_source == ThetaSource::Enumeration);
  CHECK_NOTHROW(cfg.validate());
  CHECK(kind_of([&] { apply_config_text(cfg, "colour = blue\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { apply_config_text(cfg, "p = three\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { apply_config_text(cfg, "p\n"); }) == ErrorKind::ParseError);
  cfg.p = 11;
  CHECK(kind_of([&] { cfg.validate(); }) == ErrorKind::InvalidArgument);
  cfg.p = 3;
  cfg.cutoff = make_rational(3, 2);
  CHECK(kind_of([&] { cfg.validate(); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("suite passes and shows the expected values") {
  const Report& report = report_for_p3();
  CHECK(report.all_passed());
  for (const auto& entry : report.entries) {
    if (entry.id != "orbifold-character") continue;
    REQUIRE(entry.rows.size() >= 3);
    CHECK(entry.rows[0].computed == "1/1");
    CHECK(entry.rows[1].computed == "0/1");
    CHECK(entry.rows[2].computed == "196884/1");
  }
}

TEST_CASE("eigenspace entry for p = 13 shows two dimensions per class") {
  const Report report = run_verification_suite(base_config(13));
  CHECK(report.all_passed());
  for (const auto& entry : report.entries) {
    if (entry.id != "eigenspace-dimensions") continue;
    CHECK(entry.rows.front().computed == "(0,2,0,2,0,2,0,2,0,2,0,2,0,0,0,2,0,2,0,2,0,2,0,2,0,2)");
  }
}

TEST_CASE("emission is deterministic and round-trips") {
  const Report& report = report_for_p3();
  const std::string json = emit_report(report, OutputFormat::Json);
  CHECK(json == emit_report(run_verification_suite(base_config(3)), OutputFormat::Json));
  const Report parsed = parse_report_json(json);
  CHECK(emit_report(parsed, OutputFormat::Json) == json);
  CHECK(parsed.entries.size() == report.entries.size());
  CHECK(kind_of([] { parse_report_json("{\"config\": 1}"); }) == ErrorKind::ParseError);

  const std::string markdown = emit_report(report, OutputFormat::Markdown);
  CHECK(count_of(markdown, "\n## ") == claim_registry().size());
  CHECK(count_of(markdown, "| quantity | computed | expected | ok |") == claim_registry().size());
}

TEST_CASE("corrupted witness is reported, not thrown") {
  DataCopy copy;
  const fs::path witness = witness_path(copy.dir.string(), 3);
  std::ifstream in(witness);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  // Flip the sign of the first matrix entry (the first line after the size).
  const std::size_t size_line = text.find("\n24\n");
  REQUIRE(size_line != std::string::npos);
  const std::size_t first = size_line + 4;
  if (text[first] == '-') {
    text.erase(first, 1);
  } else {
    text.insert(first, "-");
  }
  std::ofstream(witness) << text;

  RunConfig cfg = base_config(3);
  cfg.data_dir = copy.dir.string();
  const Report report = run_verification_suite(cfg);
  CHECK_FALSE(report.all_passed());
  for (const auto& entry : report.entries) {
    if (entry.id != "order-2p-witness") continue;
    CHECK_FALSE(entry.passed());
    INFO(entry.error);
    CHECK(entry.error.rfind("NotGramPreserving", 0) == 0);
  }
}

TEST_CASE("missing lattice data") {
  RunConfig cfg = base_config(3);
  cfg.data_dir = "/nonexistent/orbifoldry";
  CHECK(kind_of([&] { run_verification_suite(cfg); }) == ErrorKind::DataMissing);
}
