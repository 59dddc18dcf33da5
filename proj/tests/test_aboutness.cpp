#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "testutil.hpp"
#include "upo/aboutness.hpp"
#include "upo/errors.hpp"
#include "upo/parser.hpp"
#include "upo/prelude.hpp"

using namespace upo;
namespace t = upo::testing;

namespace {

Ontology load_fixture(const std::string& name) {
  ParseResult r = parse(t::read_file(t::fixture_path(name)), prelude_ontology());
  REQUIRE(r.ok());
  return std::move(*r.ontology);
}

Ontology parse_over_prelude(const std::string& text) {
  ParseResult r = parse(text, prelude_ontology());
  REQUIRE_MESSAGE(r.ok(), (r.errors.empty() ? "" : r.errors[0].message));
  return std::move(*r.ontology);
}

}  // namespace

TEST_CASE("kind labels") {
  CHECK(to_string(IceKindValue::Fictional) == "Fictional");
  CHECK(to_string(IceKindValue::Blueprint) == "Blueprint");
  CHECK(to_string(IceKindValue::Simulation) == "Simulation");
  CHECK(to_string(IceKindValue::Temporal) == "Temporal");
  CHECK(to_string(IceKindValue::Other) == "Other");
}

TEST_CASE("expected relation per kind") {
  CHECK(expected_relation(IceKindValue::Fictional) == std::optional<Name>("describes"));
  CHECK(expected_relation(IceKindValue::Blueprint) == std::optional<Name>("prescribes"));
  CHECK(expected_relation(IceKindValue::Simulation) == std::optional<Name>("represents"));
  CHECK(expected_relation(IceKindValue::Temporal) == std::optional<Name>("designates"));
  CHECK_FALSE(expected_relation(IceKindValue::Other).has_value());
}

TEST_CASE("classification by declared type") {
  Ontology o = parse_over_prelude(
      "Class: Widget\n"
      "  SubClassOf: MaterialEntity\n"
      "\n"
      "ICE: F\n"
      "  Types: FictionalEntity\n"
      "  Describes-only: Widget\n"
      "\n"
      "ICE: B\n"
      "  Types: Blueprint\n"
      "  Prescribes-only: Widget\n"
      "\n"
      "ICE: S\n"
      "  Types: SimulationRepresentation\n"
      "  Represents-only: Widget\n"
      "\n"
      "ICE: T\n"
      "  Types: TemporalExpression\n"
      "  Designates-only: Widget\n"
      "\n"
      "ICE: O\n"
      "  Types: Widget\n"
      "  Describes-only: Widget\n");

  CHECK(classify_ice(o, "F").kind == IceKindValue::Fictional);
  CHECK(classify_ice(o, "B").kind == IceKindValue::Blueprint);
  CHECK(classify_ice(o, "S").kind == IceKindValue::Simulation);
  CHECK(classify_ice(o, "T").kind == IceKindValue::Temporal);
  CHECK(classify_ice(o, "O").kind == IceKindValue::Other);

  CHECK(classify_ice(o, "B").directive);
  CHECK_FALSE(classify_ice(o, "F").directive);
  CHECK(classify_ice(o, "S").representational);
  CHECK_FALSE(classify_ice(o, "B").representational);

  CHECK_THROWS_AS(classify_ice(o, "Widget"), UnknownNameError);
  CHECK_THROWS_AS(classify_ice(o, "nope"), UnknownNameError);
}

TEST_CASE("classification sees the type through subclass chains") {
  Ontology o = parse_over_prelude(
      "Class: WarGameRepresentation\n"
      "  SubClassOf: SimulationRepresentation\n"
      "\n"
      "Class: NavalWarGameRepresentation\n"
      "  SubClassOf: WarGameRepresentation\n"
      "\n"
      "Class: Ship\n"
      "  SubClassOf: MaterialEntity\n"
      "\n"
      "ICE: Convoy\n"
      "  Types: NavalWarGameRepresentation\n"
      "  Represents-only: Ship\n");
  CHECK(classify_ice(o, "Convoy").kind == IceKindValue::Simulation);
}

TEST_CASE("kind priority is fictional, blueprint, simulation, temporal") {
  // a type under two kind classes resolves to the earlier kind
  Ontology o = parse_over_prelude(
      "Class: OddKind\n"
      "  SubClassOf: Blueprint\n"
      "  SubClassOf: FictionalEntity\n"
      "\n"
      "Class: Widget\n"
      "  SubClassOf: MaterialEntity\n"
      "\n"
      "ICE: X\n"
      "  Types: OddKind\n"
      "  Describes-only: Widget\n");
  CHECK(classify_ice(o, "X").kind == IceKindValue::Fictional);
}

TEST_CASE("directive and representational track the relation's super-properties") {
  Ontology o = parse_over_prelude(
      "Class: Widget\n"
      "  SubClassOf: MaterialEntity\n"
      "\n"
      "Individual: w1\n"
      "  Types: Widget\n"
      "\n"
      "ICE: Spec1\n"
      "  Types: Blueprint\n"
      "  Prescribes-only: Widget\n"
      "  Represents-fact: w1\n");
  // a Represents-fact alone makes the ICE representational
  IceKind k = classify_ice(o, "Spec1");
  CHECK(k.directive);
  CHECK(k.representational);

  // sub-property of prescribes counts as directive; built directly since
  // custom aboutness relations have no surface spelling
  Ontology p = prelude_ontology();
  p.declare_class("Widget");
  p.declare_property("mandates");
  p.add(SubPropertyOfAxiom{"mandates", "prescribes"});
  p.declare_ice(IceDecl{"Spec2", "Blueprint", std::nullopt, std::nullopt});
  p.add(AboutnessAxiom{AboutnessAssertion{"Spec2", "mandates", ClassExpression::named("Widget"),
                                          ConstraintForm::Universal}});
  IceKind k2 = classify_ice(p, "Spec2");
  CHECK(k2.kind == IceKindValue::Blueprint);
  CHECK(k2.directive);
  CHECK_FALSE(k2.representational);
}

TEST_CASE("fixture kinds") {
  Ontology superman = load_fixture("superman.upo");
  CHECK(classify_ice(superman, "SupermanDescription").kind == IceKindValue::Fictional);
  CHECK(classify_ice(superman, "KryptonDescription").kind == IceKindValue::Fictional);
  CHECK_FALSE(classify_ice(superman, "SupermanDescription").directive);
  CHECK_FALSE(classify_ice(superman, "SupermanDescription").representational);

  Ontology honda = load_fixture("honda.upo");
  IceKind blueprint = classify_ice(honda, "HondaCivicSLS2025Blueprint");
  CHECK(blueprint.kind == IceKindValue::Blueprint);
  CHECK(blueprint.directive);
  CHECK_FALSE(blueprint.representational);

  Ontology redteam = load_fixture("redteam.upo");
  IceKind sim = classify_ice(redteam, "RedTeamAttackRepresentation");
  CHECK(sim.kind == IceKindValue::Simulation);
  CHECK(sim.representational);
  CHECK_FALSE(sim.directive);

  Ontology friday = load_fixture("friday.upo");
  CHECK(classify_ice(friday, "ThisFridayExpr").kind == IceKindValue::Temporal);
  CHECK(classify_ice(friday, "NextFridayExpr").kind == IceKindValue::Temporal);
}
