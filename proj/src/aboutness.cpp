#include "upo/aboutness.hpp"

#include <array>

namespace upo {

std::string to_string(IceKindValue kind) {
  switch (kind) {
    case IceKindValue::Fictional: return "Fictional";
    case IceKindValue::Blueprint: return "Blueprint";
    case IceKindValue::Simulation: return "Simulation";
    case IceKindValue::Temporal: return "Temporal";
    case IceKindValue::Other: return "Other";
  }
  return "Other";
}

IceKind classify_ice(const Ontology& ontology, const Name& ice) {
  auto it = ontology.ices().find(ice);
  if (it == ontology.ices().end()) {
    throw UnknownNameError(ice, "'" + ice + "' is not a declared ICE");
  }
  IceKind result;
  std::set<Name> ancestors = ontology.subclass_ancestors(it->second.type_class);
  static const std::array<std::pair<const char*, IceKindValue>, 4> kinds = {
      {{names::kFictionalEntity, IceKindValue::Fictional},
       {names::kBlueprint, IceKindValue::Blueprint},
       {names::kSimulationRepresentation, IceKindValue::Simulation},
       {names::kTemporalExpression, IceKindValue::Temporal}}};
  for (const auto& [cls, kind] : kinds) {
    if (ancestors.count(cls)) {
      result.kind = kind;
      break;
    }
  }
  for (const AboutnessAssertion& assertion : ontology.aboutness_of(ice)) {
    std::set<Name> tags = ontology.property_ancestors(assertion.relation);
    if (tags.count(names::kPrescribes)) result.directive = true;
    if (tags.count(names::kRepresents)) result.representational = true;
  }
  if (!ontology.represented_by(ice).empty()) result.representational = true;
  return result;
}

std::optional<Name> expected_relation(IceKindValue kind) {
  switch (kind) {
    case IceKindValue::Fictional: return names::kDescribes;
    case IceKindValue::Blueprint: return names::kPrescribes;
    case IceKindValue::Simulation: return names::kRepresents;
    case IceKindValue::Temporal: return names::kDesignates;
    case IceKindValue::Other: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace upo
