#pragma once

#include <string>

#include "lieinner/suite/reports.hpp"
#include "lieinner/suite/suite.hpp"

namespace lieinner {

// Each command returns its JSON result and whether it counts as a pass.
// Bad input throws std::invalid_argument.
struct CommandResult {
  Json output;
  bool passed = true;
};

// "1,0,2" -> {1, 0, 2}
std::vector<std::int64_t> parse_weight(const std::string& text);

CommandResult delta_command(const std::string& type, std::size_t rank, const std::vector<std::int64_t>& weight = {});

// {"algebra": {kind, n}, "elements": [matrix, ...]} or {"algebra", "subspace"}
InnerIdealCandidate candidate_from_json(const Json& j);
CommandResult check_inner_command(const Json& input);
CommandResult classify_sl_command(const Json& input);
CommandResult embed_analyze_command(const Json& input);
CommandResult finitary_demo_command(std::uint64_t seed, std::size_t samples);
CommandResult limit_demo_command(const std::string& signature, std::size_t depth, const std::string& kind,
                                 std::size_t inner_cap);

RunConfig minimal_config(std::uint64_t seed);
CommandResult verify_suite_command(const RunConfig& config);

}  // namespace lieinner
