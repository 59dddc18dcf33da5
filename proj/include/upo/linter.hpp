#pragma once

#include <optional>
#include <string>
#include <vector>

#include "upo/model.hpp"

namespace upo {

enum class Severity { Error, Warning, Info };

std::string to_string(Severity severity);

struct Finding {
  std::string rule;  // "R1" .. "R5"
  Severity severity = Severity::Error;
  Name subject;
  std::string message;
  SourceSpan span{};
  // ICE whose grounding report backs this finding (R4/R5).
  std::optional<Name> trace;
};

// Runs all rules over the ontology and returns findings sorted by source
// position, then rule, then subject. Deterministic for a given ontology.
//
//   R1 no-dummy-instances    Error    aboutness asserted toward a concrete
//                                     individual instead of a combination
//   R2 universal-constraint  Error    existential aboutness form
//   R3 case-relation         Warning  relation does not match the ICE kind
//   R4 groundedness          Error    target fails to ground
//                            Warning  grounding is cyclic
//   R5 necessary-emptiness   Info     target is structurally empty
std::vector<Finding> lint(const Ontology& ontology);

}  // namespace upo
