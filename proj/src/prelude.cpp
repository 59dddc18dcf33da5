#include "upo/prelude.hpp"

#include <stdexcept>

#include "upo/parser.hpp"

namespace upo {

namespace {

const char* kPreludeText = R"(# Built-in upper vocabulary. Loaded before every document unless --no-prelude
# is given. Documents may reference these names freely and may add their own
# axioms about them.

Class: Entity

Class: Continuant
  SubClassOf: Entity

Class: Occurrent
  SubClassOf: Entity

Class: MaterialEntity
  SubClassOf: Continuant
  DisjointWith: ImmaterialEntity

Class: ImmaterialEntity
  SubClassOf: Continuant

Class: InformationContentEntity
  SubClassOf: Continuant

Class: FictionalEntity
  SubClassOf: InformationContentEntity

Class: Blueprint
  SubClassOf: InformationContentEntity

Class: SimulationRepresentation
  SubClassOf: InformationContentEntity

Class: TemporalExpression
  SubClassOf: InformationContentEntity

Class: TimeInterval
  SubClassOf: Occurrent

Class: TemporalInstant
  SubClassOf: Occurrent

ObjectProperty: is_about

ObjectProperty: describes
  SubPropertyOf: is_about

ObjectProperty: prescribes
  SubPropertyOf: is_about

ObjectProperty: represents
  SubPropertyOf: is_about

ObjectProperty: designates
  SubPropertyOf: is_about

ObjectProperty: bearer_of

ObjectProperty: has_continuant_part

ObjectProperty: has_occurrent_part

ObjectProperty: has_participant

ObjectProperty: occupies_temporal_region

ObjectProperty: preceded_by

ObjectProperty: has_first_instant

ObjectProperty: expressed_on
)";

}  // namespace

const std::string& prelude_text() {
  static const std::string text = kPreludeText;
  return text;
}

const Ontology& prelude_ontology() {
  static const Ontology ontology = [] {
    ParseResult result = parse(prelude_text());
    if (!result.ok()) throw std::logic_error("the built-in prelude does not parse");
    return std::move(*result.ontology);
  }();
  return ontology;
}

}  // namespace upo
