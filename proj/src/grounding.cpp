#include "upo/grounding.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "upo/aboutness.hpp"
#include "upo/parser.hpp"

namespace upo {

std::string to_string(NodeStatus status) {
  switch (status) {
    case NodeStatus::Actual: return "Actual";
    case NodeStatus::Defined: return "Defined";
    case NodeStatus::Ungrounded: return "Ungrounded";
    case NodeStatus::Cyclic: return "Cyclic";
    case NodeStatus::Empty: return "Empty";
  }
  return "?";
}

std::string to_string(GroundingStatus status) {
  switch (status) {
    case GroundingStatus::Grounded: return "Grounded";
    case GroundingStatus::Ungrounded: return "Ungrounded";
    case GroundingStatus::Cyclic: return "Cyclic";
  }
  return "?";
}

namespace {

void flatten_conjuncts(const ClassExpression& e, std::vector<const ClassExpression*>& out) {
  if (e.kind() == ClassExpression::Kind::And) {
    for (const auto& child : e.children()) flatten_conjuncts(child, out);
  } else {
    out.push_back(&e);
  }
}

}  // namespace

bool structurally_empty(const Ontology& ontology, const ClassExpression& expr) {
  ontology.validate_expression(expr);
  std::vector<const ClassExpression*> conjuncts;
  flatten_conjuncts(expr, conjuncts);

  std::vector<std::set<Name>> ancestor_sets;
  for (const ClassExpression* c : conjuncts) {
    if (c->kind() == ClassExpression::Kind::Named) {
      ancestor_sets.push_back(ontology.subclass_ancestors(c->name()));
    }
  }

  // Two conjuncts subsumed under declared-disjoint classes (one conjunct
  // under both also counts).
  for (const Axiom& axiom : ontology.axioms()) {
    const auto* dw = std::get_if<DisjointWithAxiom>(&axiom.value);
    if (!dw) continue;
    bool first_hit = false, second_hit = false;
    for (const auto& ancestors : ancestor_sets) {
      if (ancestors.count(dw->first)) first_hit = true;
      if (ancestors.count(dw->second)) second_hit = true;
    }
    if (first_hit && second_hit) return true;
  }

  // A named conjunct alongside the complement of one of its ancestors.
  for (const ClassExpression* c : conjuncts) {
    if (c->kind() != ClassExpression::Kind::Not) continue;
    const ClassExpression& inner = c->children()[0];
    if (inner.kind() != ClassExpression::Kind::Named) continue;
    for (const ClassExpression* other : conjuncts) {
      if (other->kind() != ClassExpression::Kind::Named) continue;
      if (ontology.subclass_ancestors(other->name()).count(inner.name())) return true;
    }
  }
  return false;
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(const Ontology& ontology) : ont_(ontology) {}

  bool eval(const Name& individual, const ClassExpression& e) {
    switch (e.kind()) {
      case ClassExpression::Kind::Named:
        return closure(e.name()).count(individual) > 0;
      case ClassExpression::Kind::And:
        return std::all_of(e.children().begin(), e.children().end(),
                           [&](const ClassExpression& c) { return eval(individual, c); });
      case ClassExpression::Kind::Or:
        return std::any_of(e.children().begin(), e.children().end(),
                           [&](const ClassExpression& c) { return eval(individual, c); });
      case ClassExpression::Kind::Not:
        return !eval(individual, e.children()[0]);
      case ClassExpression::Kind::Some: {
        for (const Name& object : ont_.fact_objects(individual, e.name())) {
          if (eval(object, e.children()[0])) return true;
        }
        return false;
      }
      case ClassExpression::Kind::Only: {
        for (const Name& object : ont_.fact_objects(individual, e.name())) {
          if (!eval(object, e.children()[0])) return false;
        }
        return true;
      }
      case ClassExpression::Kind::Value:
        return ont_.has_fact(individual, e.name(), e.object());
      case ClassExpression::Kind::Via: {
        // The referenced ICE's target acts as a universal constraint over
        // the property's fillers. Cycles resolve coinductively to true.
        auto guard = std::pair(individual, e.object());
        if (!via_active_.insert(guard).second) return true;
        std::vector<AboutnessAssertion> assertions = ont_.aboutness_of(e.object());
        if (assertions.empty()) {
          via_active_.erase(guard);
          throw NoAboutnessError(e.object());
        }
        if (assertions.size() > 1) {
          via_active_.erase(guard);
          throw MultipleAboutnessError(e.object());
        }
        bool ok = true;
        for (const Name& object : ont_.fact_objects(individual, e.name())) {
          if (!eval(object, assertions[0].target)) {
            ok = false;
            break;
          }
        }
        via_active_.erase(guard);
        return ok;
      }
    }
    return false;
  }

 private:
  const std::set<Name>& closure(const Name& cls) {
    auto it = cache_.find(cls);
    if (it == cache_.end()) it = cache_.emplace(cls, ont_.instantiation_closure(cls)).first;
    return it->second;
  }

  const Ontology& ont_;
  std::map<Name, std::set<Name>> cache_;
  std::set<std::pair<Name, Name>> via_active_;
};

}  // namespace

bool satisfies(const Ontology& ontology, const Name& individual, const ClassExpression& expr) {
  if (!ontology.is_individual(individual)) {
    throw UnknownNameError(individual, "'" + individual + "' is not a declared individual");
  }
  ontology.validate_expression(expr);
  Evaluator evaluator(ontology);
  return evaluator.eval(individual, expr);
}

std::optional<ClassExpression> failing_conjunct(const Ontology& ontology, const Name& individual,
                                                const ClassExpression& expr) {
  if (satisfies(ontology, individual, expr)) return std::nullopt;
  if (expr.kind() == ClassExpression::Kind::And) {
    for (const ClassExpression& child : expr.children()) {
      if (!satisfies(ontology, individual, child)) {
        return failing_conjunct(ontology, individual, child);
      }
    }
  }
  return expr;
}

namespace {

class Grounder {
 public:
  Grounder(const Ontology& ontology, long budget) : ont_(ontology), budget_(budget) {}

  GroundingNode expression_node(const ClassExpression& e, int depth) {
    spend();
    switch (e.kind()) {
      case ClassExpression::Kind::Named:
        return class_node(e.name(), depth);
      case ClassExpression::Kind::And:
      case ClassExpression::Kind::Or: {
        GroundingNode node;
        node.subject = e.kind() == ClassExpression::Kind::And ? "and" : "or";
        node.status = structurally_empty(ont_, e) ? NodeStatus::Empty : NodeStatus::Defined;
        if (node.status == NodeStatus::Empty) {
          node.note = "no individual can satisfy these conjuncts together";
        }
        for (const auto& child : e.children()) node.children.push_back(expression_node(child, depth));
        touch(depth);
        return node;
      }
      case ClassExpression::Kind::Not: {
        GroundingNode node;
        node.subject = "not";
        node.status = NodeStatus::Defined;
        node.children.push_back(expression_node(e.children()[0], depth));
        touch(depth);
        return node;
      }
      case ClassExpression::Kind::Some:
      case ClassExpression::Kind::Only: {
        GroundingNode node;
        node.subject = serialize_expression(e);
        node.status = NodeStatus::Defined;
        node.children.push_back(property_node(e.name(), depth + 1));
        node.children.push_back(expression_node(e.children()[0], depth));
        touch(depth);
        return node;
      }
      case ClassExpression::Kind::Value: {
        GroundingNode node;
        node.subject = serialize_expression(e);
        node.status = NodeStatus::Defined;
        node.children.push_back(property_node(e.name(), depth + 1));
        spend();
        touch(depth);
        node.children.push_back(
            GroundingNode{e.object(), NodeStatus::Actual, "declared individual", {}});
        return node;
      }
      case ClassExpression::Kind::Via: {
        GroundingNode node;
        node.subject = serialize_expression(e);
        node.status = NodeStatus::Defined;
        node.children.push_back(property_node(e.name(), depth + 1));
        node.children.push_back(via_node(e.object(), depth + 1));
        touch(depth);
        return node;
      }
    }
    throw std::logic_error("unhandled expression kind");
  }

  GroundingNode class_node(const Name& cls, int depth) {
    spend();
    touch(depth);
    if (!ont_.instantiation_closure(cls).empty()) {
      return {cls, NodeStatus::Actual, "", {}};
    }
    if (active_classes_.count(cls)) {
      return {cls, NodeStatus::Cyclic, "definition cycle", {}};
    }
    std::vector<ClassExpression> definitions = ont_.equivalences(cls);
    if (definitions.empty()) {
      return {cls, NodeStatus::Ungrounded, "no instances and no definition", {}};
    }
    GroundingNode node;
    node.subject = cls;
    node.status = structurally_empty(ont_, ClassExpression::named(cls)) ? NodeStatus::Empty
                                                                        : NodeStatus::Defined;
    node.note = node.status == NodeStatus::Empty
                    ? "no instances; necessarily empty by declared disjointness"
                    : "no instances; expanded through its definition";
    active_classes_.insert(cls);
    for (const ClassExpression& def : definitions) {
      node.children.push_back(expression_node(def, depth + 1));
    }
    active_classes_.erase(cls);
    return node;
  }

  GroundingNode property_node(const Name& property, int depth) {
    spend();
    touch(depth);
    if (active_properties_.count(property)) {
      return {property, NodeStatus::Cyclic, "property explication cycle", {}};
    }
    if (auto definition = ont_.property_definition(property)) {
      GroundingNode node{property, NodeStatus::Defined, "expanded through its definition", {}};
      active_properties_.insert(property);
      node.children.push_back(expression_node(definition->domain_expr, depth));
      node.children.push_back(expression_node(definition->range_expr, depth));
      active_properties_.erase(property);
      return node;
    }
    std::vector<Name> domains = ont_.declared_domains(property);
    std::vector<Name> ranges = ont_.declared_ranges(property);
    if (!domains.empty() || !ranges.empty()) {
      GroundingNode node{
          property, NodeStatus::Defined, "expanded through its declared domain and range", {}};
      active_properties_.insert(property);
      for (const Name& cls : domains) node.children.push_back(class_node(cls, depth));
      for (const Name& cls : ranges) node.children.push_back(class_node(cls, depth));
      active_properties_.erase(property);
      return node;
    }
    return {property, NodeStatus::Actual, "primitive property", {}};
  }

  GroundingNode via_node(const Name& ice, int depth) {
    spend();
    touch(depth);
    if (active_ices_.count(ice)) {
      return {ice, NodeStatus::Cyclic, "aboutness cycle", {}};
    }
    std::vector<AboutnessAssertion> assertions = ont_.aboutness_of(ice);
    if (assertions.empty()) {
      return {ice, NodeStatus::Ungrounded, "referenced ICE has no aboutness axiom", {}};
    }
    GroundingNode node{ice, NodeStatus::Defined, "expanded through its aboutness target", {}};
    active_ices_.insert(ice);
    for (const AboutnessAssertion& assertion : assertions) {
      node.children.push_back(expression_node(assertion.target, depth));
    }
    active_ices_.erase(ice);
    return node;
  }

  void mark_ice_active(const Name& ice) { active_ices_.insert(ice); }
  int max_depth() const { return max_depth_; }

 private:
  void spend() {
    if (--budget_ < 0) {
      throw std::logic_error("grounding expansion exceeded its node budget");
    }
  }
  void touch(int depth) { max_depth_ = std::max(max_depth_, depth); }

  const Ontology& ont_;
  long budget_;
  int max_depth_ = 0;
  std::set<Name> active_classes_;
  std::set<Name> active_properties_;
  std::set<Name> active_ices_;
};

bool any_status(const GroundingNode& node, NodeStatus status) {
  if (node.status == status) return true;
  return std::any_of(node.children.begin(), node.children.end(),
                     [status](const GroundingNode& child) { return any_status(child, status); });
}

long grounding_budget(const Ontology& ontology) {
  long names = static_cast<long>(ontology.classes().size() + ontology.properties().size() +
                                 ontology.ices().size());
  long expr_nodes = 0;
  for (const Axiom& axiom : ontology.axioms()) {
    if (const auto* eq = std::get_if<EquivalentToAxiom>(&axiom.value)) {
      expr_nodes += eq->expr.size();
    } else if (const auto* pd = std::get_if<PropertyDefinitionAxiom>(&axiom.value)) {
      expr_nodes += pd->domain_expr.size() + pd->range_expr.size();
    } else if (const auto* ab = std::get_if<AboutnessAxiom>(&axiom.value)) {
      expr_nodes += ab->assertion.target.size();
    } else {
      expr_nodes += 1;
    }
  }
  return std::max(64L, (names + 2) * (expr_nodes + 8));
}

}  // namespace

GroundingReport ground(const Ontology& ontology, const Name& ice) {
  auto it = ontology.ices().find(ice);
  if (it == ontology.ices().end()) {
    throw UnknownNameError(ice, "'" + ice + "' is not a declared ICE");
  }
  std::vector<AboutnessAssertion> assertions = ontology.aboutness_of(ice);
  if (assertions.empty()) throw NoAboutnessError(ice);
  if (assertions.size() > 1) throw MultipleAboutnessError(ice);
  const ClassExpression& target = assertions[0].target;

  Grounder grounder(ontology, grounding_budget(ontology));
  grounder.mark_ice_active(ice);  // a via-link back to this ICE is a cycle
  GroundingReport report;
  report.ice = ice;
  report.root = grounder.expression_node(target, 1);
  report.max_depth = grounder.max_depth();
  if (any_status(report.root, NodeStatus::Cyclic)) {
    report.overall = GroundingStatus::Cyclic;
  } else if (any_status(report.root, NodeStatus::Ungrounded)) {
    report.overall = GroundingStatus::Ungrounded;
  } else {
    report.overall = GroundingStatus::Grounded;
  }
  report.necessarily_empty = structurally_empty(ontology, target);
  return report;
}

Ontology realize(const Ontology& ontology, const Name& blueprint, const Name& individual) {
  if (!ontology.is_ice(blueprint)) {
    throw UnknownNameError(blueprint, "'" + blueprint + "' is not a declared ICE");
  }
  if (!ontology.is_individual(individual)) {
    throw UnknownNameError(individual, "'" + individual + "' is not a declared individual");
  }
  IceKind kind = classify_ice(ontology, blueprint);
  if (kind.kind != IceKindValue::Blueprint) {
    throw WrongKindError("'" + blueprint + "' is not a Blueprint ICE (kind: " +
                         to_string(kind.kind) + ")");
  }
  std::vector<AboutnessAssertion> assertions = ontology.aboutness_of(blueprint);
  if (assertions.empty()) throw NoAboutnessError(blueprint);
  if (assertions.size() > 1) throw MultipleAboutnessError(blueprint);
  const AboutnessAssertion& assertion = assertions[0];
  if (!ontology.property_ancestors(assertion.relation).count(names::kPrescribes)) {
    throw WrongKindError("'" + blueprint + "' does not prescribe its target (relation '" +
                         assertion.relation + "')");
  }
  if (assertion.constraint_form != ConstraintForm::Universal) {
    throw WrongKindError("'" + blueprint +
                         "' prescribes existentially; realization needs a universal prescription");
  }
  if (!satisfies(ontology, individual, assertion.target)) {
    auto conjunct = failing_conjunct(ontology, individual, assertion.target);
    throw NotConformantError(individual, serialize_expression(*conjunct));
  }
  Ontology result = ontology;
  result.add(RepresentsFactAxiom{blueprint, individual});
  return result;
}

}  // namespace upo
