#include "upo/linter.hpp"

#include <algorithm>
#include <array>

#include "upo/aboutness.hpp"
#include "upo/grounding.hpp"

namespace upo {

std::string to_string(Severity severity) {
  switch (severity) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "?";
}

namespace {

const std::array<const char*, 4> kKindClasses = {
    names::kFictionalEntity, names::kBlueprint, names::kSimulationRepresentation,
    names::kTemporalExpression};

// The kind class an individual's asserted types reach, if any. Individuals
// typed this way are hand-rolled stand-ins for ICEs and fall under R1.
std::optional<Name> ice_kind_of_individual(const Ontology& ontology, const Name& individual) {
  for (const Name& type : ontology.asserted_types(individual)) {
    std::set<Name> ancestors = ontology.subclass_ancestors(type);
    for (const char* kind_class : kKindClasses) {
      if (ancestors.count(kind_class)) return Name(kind_class);
    }
  }
  return std::nullopt;
}

SourceSpan span_or_default(const Ontology& ontology, const Name& name) {
  if (auto span = ontology.declaration_span(name)) return *span;
  return {};
}

bool has_universal_prescription(const Ontology& ontology, const Name& ice) {
  for (const AboutnessAssertion& assertion : ontology.aboutness_of(ice)) {
    if (assertion.constraint_form == ConstraintForm::Universal &&
        ontology.property_ancestors(assertion.relation).count(names::kPrescribes)) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Finding> lint(const Ontology& ontology) {
  std::vector<Finding> findings;

  // R1: aboutness pointed at a concrete individual. Form (a): an individual
  // typed as an ICE kind holding an is_about-family fact. Form (b): a
  // Represents-fact on an ICE that is not a prescribing Blueprint.
  for (const Axiom& axiom : ontology.axioms()) {
    if (const auto* fact = std::get_if<FactAxiom>(&axiom.value)) {
      std::optional<Name> kind_class = ice_kind_of_individual(ontology, fact->subject);
      if (!kind_class) continue;
      if (!ontology.property_ancestors(fact->property).count(names::kIsAbout)) continue;
      findings.push_back(
          {"R1", Severity::Error, fact->subject,
           "'" + fact->subject + "' (" + *kind_class + ") asserts '" + fact->property +
               "' toward the individual '" + fact->object +
               "'; describe a combination of classes instead of pointing at an instance",
           axiom.span, std::nullopt});
    } else if (const auto* rf = std::get_if<RepresentsFactAxiom>(&axiom.value)) {
      IceKind kind = classify_ice(ontology, rf->ice);
      if (kind.kind == IceKindValue::Blueprint && has_universal_prescription(ontology, rf->ice)) {
        continue;  // realized blueprints legitimately point at instances
      }
      findings.push_back(
          {"R1", Severity::Error, rf->ice,
           "'" + rf->ice + "' records a represented instance but is not a prescribing Blueprint",
           axiom.span, std::nullopt});
    }
  }

  // Per-ICE rules. Aboutness axiom spans back R2/R3; the ICE declaration
  // span backs R4/R5.
  for (const auto& [ice_name, decl] : ontology.ices()) {
    std::vector<AboutnessAssertion> assertions = ontology.aboutness_of(ice_name);
    IceKind kind = classify_ice(ontology, ice_name);

    SourceSpan aboutness_span = span_or_default(ontology, ice_name);
    for (const Axiom& axiom : ontology.axioms()) {
      if (const auto* ab = std::get_if<AboutnessAxiom>(&axiom.value)) {
        if (ab->assertion.ice == ice_name) {
          aboutness_span = axiom.span;
          break;
        }
      }
    }

    for (const AboutnessAssertion& assertion : assertions) {
      if (assertion.constraint_form == ConstraintForm::Existential) {
        findings.push_back(
            {"R2", Severity::Error, ice_name,
             "'" + ice_name + "' constrains its aboutness existentially ('-some'); an ICE is "
                              "about exactly the satisfiers of its target, so use the universal "
                              "'-only' form",
             aboutness_span, std::nullopt});
      }
    }

    if (auto expected = expected_relation(kind.kind)) {
      for (const AboutnessAssertion& assertion : assertions) {
        if (!ontology.property_ancestors(assertion.relation).count(*expected)) {
          findings.push_back({"R3", Severity::Warning, ice_name,
                              "'" + ice_name + "' is a " + to_string(kind.kind) +
                                  " ICE and is expected to use '" + *expected + "', found '" +
                                  assertion.relation + "'",
                              aboutness_span, std::nullopt});
        }
      }
    }

    if (assertions.size() == 1) {
      GroundingReport report = ground(ontology, ice_name);
      SourceSpan decl_span = span_or_default(ontology, ice_name);
      if (report.overall == GroundingStatus::Ungrounded) {
        findings.push_back({"R4", Severity::Error, ice_name,
                            "the target of '" + ice_name +
                                "' does not bottom out in actual classes",
                            decl_span, ice_name});
      } else if (report.overall == GroundingStatus::Cyclic) {
        findings.push_back({"R4", Severity::Warning, ice_name,
                            "grounding '" + ice_name + "' revisits a definition (cycle)",
                            decl_span, ice_name});
      }
      if (report.necessarily_empty) {
        findings.push_back({"R5", Severity::Info, ice_name,
                            "the target of '" + ice_name +
                                "' is necessarily empty under the declared disjointness axioms "
                                "(allowed: unreal entities may be impossible)",
                            decl_span, ice_name});
      }
    }
  }

  std::sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
    return std::tuple(a.span.line, a.span.column, a.rule, a.subject, a.message) <
           std::tuple(b.span.line, b.span.column, b.rule, b.subject, b.message);
  });
  return findings;
}

}  // namespace upo
