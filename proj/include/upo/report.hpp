#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "upo/grounding.hpp"
#include "upo/linter.hpp"
#include "upo/temporal.hpp"

namespace upo {

// Machine-readable result of one CLI invocation. exit_code mirrors the
// process exit status: 0 clean, 1 Error findings, 2 parse or usage failure.
struct Report {
  std::string tool_version;
  std::string input;
  std::vector<Finding> findings;
  std::vector<GroundingReport> grounding;
  std::optional<ResolvedInterval> resolved;
  int exit_code = 0;
};

// Key order is fixed and no other fields are emitted, so equal reports
// produce byte-identical documents.
nlohmann::ordered_json to_json(const Report& report);
nlohmann::ordered_json to_json(const Finding& finding);
nlohmann::ordered_json to_json(const GroundingReport& report);
nlohmann::ordered_json to_json(const GroundingNode& node);
nlohmann::ordered_json to_json(const ResolvedInterval& interval);

// One diagnostic line: "<input>:<line>:<col>: <severity> <rule>: <message>"
// (position omitted for synthetic spans). `color` wraps the severity word
// in ANSI colors.
std::string render_finding(const Finding& finding, const std::string& input, bool color);

// Indented tree, one node per line: "<subject>: <status> (<note>)".
std::string render_tree(const GroundingNode& node);

}  // namespace upo
