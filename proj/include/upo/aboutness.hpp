#pragma once

#include <optional>

#include "upo/model.hpp"

namespace upo {

// The four modeled ICE kinds plus a fallback for ICEs whose declared type
// reaches none of them.
enum class IceKindValue { Fictional, Blueprint, Simulation, Temporal, Other };

std::string to_string(IceKindValue kind);

struct IceKind {
  IceKindValue kind = IceKindValue::Other;
  // True when some aboutness relation of the ICE is (a sub-property of)
  // prescribes.
  bool directive = false;
  // True when some aboutness relation is (a sub-property of) represents, or
  // the ICE carries a Represents-fact.
  bool representational = false;
};

// Kind is decided by which canonical kind classes appear among the
// reflexive-transitive ancestors of the ICE's declared type, checked in the
// order Fictional, Blueprint, Simulation, Temporal. Throws UnknownNameError
// if `ice` is not a declared ICE.
IceKind classify_ice(const Ontology& ontology, const Name& ice);

// The aboutness relation an ICE of the given kind conventionally uses.
// std::nullopt for Other.
std::optional<Name> expected_relation(IceKindValue kind);

// Canonical class and property names the analyses recognize.
namespace names {
inline constexpr const char* kFictionalEntity = "FictionalEntity";
inline constexpr const char* kBlueprint = "Blueprint";
inline constexpr const char* kSimulationRepresentation = "SimulationRepresentation";
inline constexpr const char* kTemporalExpression = "TemporalExpression";
inline constexpr const char* kIsAbout = "is_about";
inline constexpr const char* kDescribes = "describes";
inline constexpr const char* kPrescribes = "prescribes";
inline constexpr const char* kRepresents = "represents";
inline constexpr const char* kDesignates = "designates";
}  // namespace names

}  // namespace upo
