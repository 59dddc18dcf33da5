#include "upo/report.hpp"

#include "upo/temporal.hpp"

namespace upo {

nlohmann::ordered_json to_json(const Finding& finding) {
  nlohmann::ordered_json j;
  j["rule"] = finding.rule;
  j["severity"] = to_string(finding.severity);
  j["subject"] = finding.subject;
  j["message"] = finding.message;
  if (!finding.span.synthetic()) {
    j["span"] = {{"line", finding.span.line},
                 {"column", finding.span.column},
                 {"length", finding.span.length}};
  }
  if (finding.trace) j["trace"] = *finding.trace;
  return j;
}

nlohmann::ordered_json to_json(const GroundingNode& node) {
  nlohmann::ordered_json j;
  j["subject"] = node.subject;
  j["status"] = to_string(node.status);
  if (!node.note.empty()) j["note"] = node.note;
  j["children"] = nlohmann::ordered_json::array();
  for (const GroundingNode& child : node.children) j["children"].push_back(to_json(child));
  return j;
}

nlohmann::ordered_json to_json(const GroundingReport& report) {
  nlohmann::ordered_json j;
  j["ice"] = report.ice;
  j["overall"] = to_string(report.overall);
  j["necessarily_empty"] = report.necessarily_empty;
  j["max_depth"] = report.max_depth;
  j["root"] = to_json(report.root);
  return j;
}

nlohmann::ordered_json to_json(const ResolvedInterval& interval) {
  nlohmann::ordered_json j;
  j["designated_class"] = interval.designated_class;
  j["first_instant"] = format_instant(interval.first_instant);
  j["last_instant"] = format_instant(interval.last_instant);
  return j;
}

nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["tool_version"] = report.tool_version;
  j["input"] = report.input;
  j["findings"] = nlohmann::ordered_json::array();
  for (const Finding& finding : report.findings) j["findings"].push_back(to_json(finding));
  j["grounding"] = nlohmann::ordered_json::array();
  for (const GroundingReport& grounding : report.grounding) {
    j["grounding"].push_back(to_json(grounding));
  }
  if (report.resolved) j["resolved"] = to_json(*report.resolved);
  j["exit_code"] = report.exit_code;
  return j;
}

std::string render_finding(const Finding& finding, const std::string& input, bool color) {
  std::string severity = to_string(finding.severity);
  if (color) {
    const char* code = finding.severity == Severity::Error     ? "\033[31m"
                       : finding.severity == Severity::Warning ? "\033[33m"
                                                               : "\033[36m";
    severity = code + severity + "\033[0m";
  }
  std::string line = input;
  if (!finding.span.synthetic()) {
    line += ":" + std::to_string(finding.span.line) + ":" + std::to_string(finding.span.column);
  }
  line += ": " + severity + " " + finding.rule + ": " + finding.message;
  return line;
}

namespace {

void render_tree(const GroundingNode& node, int indent, std::string& out) {
  out.append(static_cast<size_t>(indent) * 2, ' ');
  out += node.subject + ": " + to_string(node.status);
  if (!node.note.empty()) out += " (" + node.note + ")";
  out += '\n';
  for (const GroundingNode& child : node.children) render_tree(child, indent + 1, out);
}

}  // namespace

std::string render_tree(const GroundingNode& node) {
  std::string out;
  render_tree(node, 0, out);
  return out;
}

}  // namespace upo
