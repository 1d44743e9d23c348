#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lieinner/exact/json_io.hpp"

namespace lieinner {

struct SampleCounts {
  std::size_t inner_pairs = 100;     // per n
  std::size_t involution = 50;       // per algebra
  std::size_t roundtrip = 100;       // total
  std::size_t regular_pairs = 100;   // RL = R n L pairs
  std::size_t von_neumann = 100;
  std::size_t finitary_pairs = 500;  // per pairing
  std::size_t finitary_samples = 20;
  std::size_t sandwich = 100;
};

struct SizeCaps {
  std::size_t max_n = 7;
  std::size_t tower_depth = 4;
  std::size_t tower_inner_cap = 16;
  bool rank11 = true;

  static SizeCaps minimal() { return {2, 2, 2, false}; }
};

struct RunConfig {
  std::uint64_t seed = 20240611;
  SampleCounts samples;
  SizeCaps caps;
  bool large = false;          // adds the adjoint embedding of sl(12)
  std::vector<int> only;       // criterion ids; empty runs all
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::string statement;
  std::size_t instances = 0;
  bool passed = false;
  Json certificate;
};

inline constexpr int kCriterionCount = 10;
inline constexpr int kSchemaVersion = 1;

// Each criterion draws from its own stream seeded by (seed, id). Internal
// errors become failed results carrying the message.
CriterionResult run_criterion(int id, const RunConfig& config);
std::vector<CriterionResult> verify_suite(const RunConfig& config);

Json to_json(const CriterionResult& r);
Json to_json(const RunConfig& c);
// {schema_version, config, criteria, passed}
Json suite_report(const RunConfig& config, const std::vector<CriterionResult>& results);

}  // namespace lieinner
