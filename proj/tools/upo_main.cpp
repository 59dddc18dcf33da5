#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "upo/aboutness.hpp"
#include "upo/grounding.hpp"
#include "upo/linter.hpp"
#include "upo/parser.hpp"
#include "upo/prelude.hpp"
#include "upo/report.hpp"
#include "upo/temporal.hpp"
#include "upo/version.hpp"

namespace {

bool use_color() {
  if (std::getenv("UPO_NO_COLOR") != nullptr) return false;
  return isatty(fileno(stdout)) != 0;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

upo::ParseResult load(const std::string& text, bool no_prelude) {
  if (no_prelude) return upo::parse(text);
  return upo::parse(text, upo::prelude_ontology());
}

void print_parse_errors(const std::string& path, const std::vector<upo::ParseError>& errors) {
  for (const upo::ParseError& error : errors) {
    std::cerr << path << ":" << error.span.line << ":" << error.span.column << ": "
              << to_string(error.kind) << ": " << error.message << "\n";
  }
}

// Returns the parsed ontology or prints diagnostics and sets failure.
std::optional<upo::Ontology> load_or_report(const std::string& path, bool no_prelude) {
  std::optional<std::string> text = read_file(path);
  if (!text) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return std::nullopt;
  }
  upo::ParseResult result = load(*text, no_prelude);
  if (!result.ok()) {
    print_parse_errors(path, result.errors);
    return std::nullopt;
  }
  return std::move(result.ontology);
}

int run_check(const std::string& path, bool json, bool no_prelude) {
  std::optional<upo::Ontology> ontology = load_or_report(path, no_prelude);
  if (!ontology) return 2;

  std::vector<upo::Finding> findings = upo::lint(*ontology);
  std::vector<upo::GroundingReport> grounding;
  for (const auto& [name, decl] : ontology->ices()) {
    if (ontology->aboutness_of(name).size() == 1) {
      grounding.push_back(upo::ground(*ontology, name));
    }
  }

  int errors = 0, warnings = 0, infos = 0;
  for (const upo::Finding& finding : findings) {
    switch (finding.severity) {
      case upo::Severity::Error: ++errors; break;
      case upo::Severity::Warning: ++warnings; break;
      case upo::Severity::Info: ++infos; break;
    }
  }
  int exit_code = errors > 0 ? 1 : 0;

  if (json) {
    upo::Report report{upo::kToolVersion, path, std::move(findings), std::move(grounding),
                       std::nullopt, exit_code};
    std::cout << to_json(report).dump(2) << "\n";
    return exit_code;
  }

  bool color = use_color();
  for (const upo::Finding& finding : findings) {
    std::cout << render_finding(finding, path, color) << "\n";
  }
  std::cout << path << ": " << errors << " error(s), " << warnings << " warning(s), " << infos
            << " info(s)\n";
  return exit_code;
}

int run_trace(const std::string& path, const std::string& ice, bool no_prelude) {
  std::optional<upo::Ontology> ontology = load_or_report(path, no_prelude);
  if (!ontology) return 2;
  if (!ontology->is_ice(ice)) {
    std::cerr << "error: '" << ice << "' is not a declared ICE in " << path << "\n";
    return 2;
  }
  upo::GroundingReport report = upo::ground(*ontology, ice);
  std::cout << report.ice << ": " << to_string(report.overall) << "\n";
  std::cout << "necessarily empty: " << (report.necessarily_empty ? "yes" : "no") << "\n";
  std::cout << "max depth: " << report.max_depth << "\n";
  std::cout << render_tree(report.root);
  return 0;
}

int run_realize(const std::string& path, const std::string& blueprint,
                const std::string& individual, const std::string& out, bool no_prelude) {
  std::optional<upo::Ontology> ontology = load_or_report(path, no_prelude);
  if (!ontology) return 2;
  upo::Ontology realized = upo::realize(*ontology, blueprint, individual);
  std::string text = upo::serialize(realized);
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file || !(file << text)) {
    std::cerr << "error: cannot write '" << out << "'\n";
    return 2;
  }
  std::cout << "realized '" << individual << "' against '" << blueprint << "'; wrote " << out
            << "\n";
  return 0;
}

int run_resolve(const std::string& path, const std::string& ice, const std::string& at,
                bool no_prelude) {
  std::optional<upo::Ontology> ontology = load_or_report(path, no_prelude);
  if (!ontology) return 2;
  if (!ontology->is_ice(ice)) {
    std::cerr << "error: '" << ice << "' is not a declared ICE in " << path << "\n";
    return 2;
  }
  upo::IceKind kind = upo::classify_ice(*ontology, ice);
  if (kind.kind != upo::IceKindValue::Temporal) {
    std::cerr << "error: '" << ice << "' is not a temporal-expression ICE (kind: "
              << to_string(kind.kind) << ")\n";
    return 2;
  }
  const upo::IceDecl& decl = ontology->ices().at(ice);
  if (!decl.mode || !decl.cycle) {
    std::cerr << "error: '" << ice << "' needs both 'Mode:' and 'Cycle:' entries to resolve\n";
    return 2;
  }
  std::optional<upo::IndexicalMode> mode = upo::parse_mode(*decl.mode);
  if (!mode) {
    std::cerr << "error: '" << ice << "' has an invalid mode '" << *decl.mode << "'\n";
    return 2;
  }
  upo::TemporalContext context{upo::parse_instant(at), upo::CycleSpec{*decl.cycle}};
  upo::ResolvedInterval interval = upo::resolve_indexical(*mode, context);
  upo::ClassExpression expr = upo::emit_designation_expression(*mode, context, *ontology);
  std::cout << ice << " (" << to_string(*mode) << " " << decl.cycle.value() << ") at " << at
            << ":\n";
  std::cout << "  interval: [" << upo::format_instant(interval.first_instant) << ", "
            << upo::format_instant(interval.last_instant) << ")\n";
  std::cout << "  designates: " << upo::serialize_expression(expr) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"upo: author and validate ontologies of non-existent entities"};
  app.require_subcommand(1);

  std::string path, ice, blueprint, individual, out, at;
  bool json = false, no_prelude = false;

  CLI::App* check = app.add_subcommand("check", "parse, lint and ground a document");
  check->add_option("path", path, "document to check")->required();
  check->add_flag("--json", json, "emit a machine-readable report");
  check->add_flag("--no-prelude", no_prelude, "do not load the built-in vocabulary");

  CLI::App* trace = app.add_subcommand("trace", "print the grounding tree of one ICE");
  trace->add_option("path", path, "document to read")->required();
  trace->add_option("ice", ice, "ICE to ground")->required();
  trace->add_flag("--no-prelude", no_prelude, "do not load the built-in vocabulary");

  CLI::App* realize = app.add_subcommand("realize", "record that an individual realizes a blueprint");
  realize->add_option("path", path, "document to read")->required();
  realize->add_option("blueprint", blueprint, "blueprint ICE")->required();
  realize->add_option("individual", individual, "realizing individual")->required();
  realize->add_option("--out", out, "write the updated document here instead of stdout");
  realize->add_flag("--no-prelude", no_prelude, "do not load the built-in vocabulary");

  CLI::App* resolve = app.add_subcommand("resolve", "resolve a temporal indexical ICE");
  resolve->add_option("path", path, "document to read")->required();
  resolve->add_option("ice", ice, "temporal-expression ICE")->required();
  resolve->add_option("--at", at, "utterance instant, YYYY-MM-DDThh:mm:ss")->required();
  resolve->add_flag("--no-prelude", no_prelude, "do not load the built-in vocabulary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(path, json, no_prelude);
    if (trace->parsed()) return run_trace(path, ice, no_prelude);
    if (realize->parsed()) return run_realize(path, blueprint, individual, out, no_prelude);
    if (resolve->parsed()) return run_resolve(path, ice, at, no_prelude);
  } catch (const upo::NotConformantError& e) {
    std::cerr << "not conformant: " << e.failing_conjunct() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
