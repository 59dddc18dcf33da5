#pragma once

#include <optional>
#include <string>
#include <vector>

#include "upo/model.hpp"

namespace upo {

// Status of one node in a grounding decomposition.
//
//   Actual      the subject bottoms out in instantiated classes (or is a
//               declared individual / primitive property)
//   Defined     the subject is not itself actual but expands further
//   Ungrounded  no instances and nothing left to expand
//   Cyclic      expansion re-entered a subject already being expanded
//   Empty       the subject's expression is structurally empty (children
//               still shown)
enum class NodeStatus { Actual, Defined, Ungrounded, Cyclic, Empty };

enum class GroundingStatus { Grounded, Ungrounded, Cyclic };

std::string to_string(NodeStatus status);
std::string to_string(GroundingStatus status);

struct GroundingNode {
  std::string subject;  // a name, or a rendered expression / operator label
  NodeStatus status = NodeStatus::Defined;
  std::string note;
  std::vector<GroundingNode> children;
};

struct GroundingReport {
  Name ice;
  GroundingNode root;
  GroundingStatus overall = GroundingStatus::Grounded;
  bool necessarily_empty = false;
  int max_depth = 0;  // expansion steps: definitions, property explications, via-links
};

// Recursively decomposes the ICE's aboutness target until every path ends
// in an actual class, a declared individual, a primitive property, a cycle
// or an ungrounded name. overall is Cyclic if any node is Cyclic, else
// Ungrounded if any node is Ungrounded, else Grounded. Throws
// UnknownNameError / NoAboutnessError / MultipleAboutnessError.
GroundingReport ground(const Ontology& ontology, const Name& ice);

// Sound, incomplete emptiness test: flattens top-level intersections and
// reports true iff two conjuncts' ancestor sets contain a declared disjoint
// pair, or a conjunct is the complement of (an ancestor of) another.
bool structurally_empty(const Ontology& ontology, const ClassExpression& expr);

// Closed-world satisfaction over asserted types and facts: Named checks the
// instantiation closure, Some/Only/Value read Facts of the exact property,
// Via defers to the referenced ICE's target as a universal constraint
// (cycles resolve to true).
bool satisfies(const Ontology& ontology, const Name& individual, const ClassExpression& expr);

// The first failing conjunct of a top-level intersection chain, descending
// into nested intersections; std::nullopt when satisfied.
std::optional<ClassExpression> failing_conjunct(const Ontology& ontology, const Name& individual,
                                                const ClassExpression& expr);

// Checks that `blueprint` is a Blueprint ICE with a universal prescribes
// axiom (WrongKindError otherwise) and that `individual` satisfies its
// target (NotConformantError naming the failing conjunct otherwise), then
// returns a copy of the ontology with a Represents-fact added. Idempotent.
Ontology realize(const Ontology& ontology, const Name& blueprint, const Name& individual);

}  // namespace upo
