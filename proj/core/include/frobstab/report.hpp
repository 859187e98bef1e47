#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "frobstab/stability.hpp"

namespace frobstab {

using ojson = nlohmann::ordered_json;

/// {"char", "vars", "degrees", "relations", "sop", "minimal_primes"?}
struct RingFile {
  std::string name;
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  std::vector<std::uint32_t> degrees;
  std::vector<std::string> relations;
  std::vector<std::string> sop;
  std::optional<std::vector<std::vector<std::string>>> minimal_primes;
};

/// InputError on any schema or parse problem.
RingFile parse_ring_file(const nlohmann::json& j, std::string name);
RingFile load_ring_file(const std::filesystem::path& path);

/// Builds the graded ring (CM not yet checked). InputError on invalid data.
GradedRing build_ring(const RingFile& f);
std::vector<Ideal> build_minimal_primes(const RingFile& f, const RingPtr& ring);
/// "F_2[a,b]/(a*b)"
std::string describe(const RingFile& f);

struct RunConfig {
  unsigned e_max = 6;
  unsigned window = 2;
  std::uint64_t t_max = 8;
  std::uint64_t socle_t_max = 3;
  std::uint64_t combo_cap = 256;
  std::uint64_t deg_bound = 12;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> cache_dir;
  bool json = false;

  /// InputError unless every bound is positive.
  void validate() const;
  StabilityOptions options() const;
};

ojson gens_json(const Ideal& I);
ojson closure_json(const ClosureReport& r);

/// CM check plus F-injectivity.
ojson ring_check_report(const RingFile& f, const RunConfig& cfg);
/// Both stability routes, agreement, and the component count when d = 1
/// and minimal primes are supplied. Inconsistency on certified disagreement.
ojson stability_report(const RingFile& f, const RunConfig& cfg);

struct ZooRow {
  std::string name;
  ojson row;
  /// empty when the row matches its expectation
  std::vector<std::string> mismatches;
};

struct ZooResult {
  std::vector<ZooRow> rows;
  bool all_match() const;
};

/// Runs every *.json ring in dir (expectations.json excluded) in parallel,
/// rows ordered by file name. InputError if the directory holds no rings.
/// Rows are compared with dir/expectations.json when present; a ring
/// without an entry counts as a mismatch.
ZooResult run_zoo(const std::filesystem::path& dir, const RunConfig& cfg, unsigned jobs = 0);

std::string format_ring_check(const ojson& report);
std::string format_stability(const ojson& report);
std::string format_zoo(const ZooResult& r);

}  // namespace frobstab
