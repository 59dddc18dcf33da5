#include "upo/model.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace upo {

ClassExpression ClassExpression::named(Name cls) {
  ClassExpression e;
  e.kind_ = Kind::Named;
  e.name_ = std::move(cls);
  return e;
}

ClassExpression ClassExpression::intersection(std::vector<ClassExpression> members) {
  if (members.size() < 2) throw std::invalid_argument("intersection needs at least two members");
  ClassExpression e;
  e.kind_ = Kind::And;
  e.children_ = std::move(members);
  return e;
}

ClassExpression ClassExpression::union_of(std::vector<ClassExpression> members) {
  if (members.size() < 2) throw std::invalid_argument("union needs at least two members");
  ClassExpression e;
  e.kind_ = Kind::Or;
  e.children_ = std::move(members);
  return e;
}

ClassExpression ClassExpression::complement(ClassExpression inner) {
  ClassExpression e;
  e.kind_ = Kind::Not;
  e.children_.push_back(std::move(inner));
  return e;
}

ClassExpression ClassExpression::some(Name property, ClassExpression filler) {
  ClassExpression e;
  e.kind_ = Kind::Some;
  e.name_ = std::move(property);
  e.children_.push_back(std::move(filler));
  return e;
}

ClassExpression ClassExpression::only(Name property, ClassExpression filler) {
  ClassExpression e;
  e.kind_ = Kind::Only;
  e.name_ = std::move(property);
  e.children_.push_back(std::move(filler));
  return e;
}

ClassExpression ClassExpression::value(Name property, Name individual) {
  ClassExpression e;
  e.kind_ = Kind::Value;
  e.name_ = std::move(property);
  e.object_ = std::move(individual);
  return e;
}

ClassExpression ClassExpression::via(Name property, Name ice) {
  ClassExpression e;
  e.kind_ = Kind::Via;
  e.name_ = std::move(property);
  e.object_ = std::move(ice);
  return e;
}

int ClassExpression::size() const {
  int n = 1;
  for (const auto& child : children_) n += child.size();
  return n;
}

namespace {

void expression_key(const ClassExpression& e, std::string& out) {
  switch (e.kind()) {
    case ClassExpression::Kind::Named:
      out += "N(";
      out += e.name();
      out += ')';
      return;
    case ClassExpression::Kind::And:
    case ClassExpression::Kind::Or:
      out += e.kind() == ClassExpression::Kind::And ? "A(" : "O(";
      for (size_t i = 0; i < e.children().size(); ++i) {
        if (i) out += ',';
        expression_key(e.children()[i], out);
      }
      out += ')';
      return;
    case ClassExpression::Kind::Not:
      out += "!(";
      expression_key(e.children()[0], out);
      out += ')';
      return;
    case ClassExpression::Kind::Some:
    case ClassExpression::Kind::Only:
      out += e.kind() == ClassExpression::Kind::Some ? "S(" : "U(";
      out += e.name();
      out += ',';
      expression_key(e.children()[0], out);
      out += ')';
      return;
    case ClassExpression::Kind::Value:
    case ClassExpression::Kind::Via:
      out += e.kind() == ClassExpression::Kind::Value ? "V(" : "W(";
      out += e.name();
      out += ',';
      out += e.object();
      out += ')';
      return;
  }
}

std::string expression_key(const ClassExpression& e) {
  std::string out;
  expression_key(e, out);
  return out;
}

}  // namespace

std::string axiom_key(const AxiomValue& value) {
  return std::visit(
      [](const auto& a) -> std::string {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, SubClassOfAxiom>) {
          return "SubClassOf|" + a.sub + "|" + a.super;
        } else if constexpr (std::is_same_v<T, EquivalentToAxiom>) {
          return "EquivalentTo|" + a.cls + "|" + expression_key(a.expr);
        } else if constexpr (std::is_same_v<T, DisjointWithAxiom>) {
          return "DisjointWith|" + a.first + "|" + a.second;
        } else if constexpr (std::is_same_v<T, SubPropertyOfAxiom>) {
          return "SubPropertyOf|" + a.sub + "|" + a.super;
        } else if constexpr (std::is_same_v<T, DomainAxiom>) {
          return "Domain|" + a.property + "|" + a.cls;
        } else if constexpr (std::is_same_v<T, RangeAxiom>) {
          return "Range|" + a.property + "|" + a.cls;
        } else if constexpr (std::is_same_v<T, PropertyDefinitionAxiom>) {
          return "PropertyDefinition|" + a.property + "|" + expression_key(a.domain_expr) + "|" +
                 expression_key(a.range_expr);
        } else if constexpr (std::is_same_v<T, ClassAssertionAxiom>) {
          return "ClassAssertion|" + a.individual + "|" + a.cls;
        } else if constexpr (std::is_same_v<T, FactAxiom>) {
          return "Fact|" + a.subject + "|" + a.property + "|" + a.object;
        } else if constexpr (std::is_same_v<T, AboutnessAxiom>) {
          const AboutnessAssertion& s = a.assertion;
          return "Aboutness|" + s.ice + "|" + s.relation + "|" +
                 (s.constraint_form == ConstraintForm::Universal ? "only" : "some") + "|" +
                 expression_key(s.target);
        } else {
          static_assert(std::is_same_v<T, RepresentsFactAxiom>);
          return "RepresentsFact|" + a.ice + "|" + a.individual;
        }
      },
      value);
}

bool Ontology::is_declared(const Name& name) const {
  return is_class(name) || is_property(name) || is_individual(name) || is_ice(name);
}

void Ontology::record_span(const Name& name, SourceSpan span) {
  decl_spans_.emplace(name, span);  // first declaration wins
}

void Ontology::declare_class(const Name& name, SourceSpan span) {
  classes_.insert(name);
  record_span(name, span);
}

void Ontology::declare_property(const Name& name, SourceSpan span) {
  properties_.insert(name);
  record_span(name, span);
}

void Ontology::declare_individual(const Name& name, SourceSpan span) {
  individuals_.insert(name);
  record_span(name, span);
}

void Ontology::declare_ice(const IceDecl& decl, SourceSpan span) {
  ices_.insert_or_assign(decl.name, decl);
  record_span(decl.name, span);
}

std::optional<SourceSpan> Ontology::declaration_span(const Name& name) const {
  auto it = decl_spans_.find(name);
  if (it == decl_spans_.end()) return std::nullopt;
  return it->second;
}

void Ontology::require_class(const Name& name) const {
  if (!is_class(name)) throw UnknownNameError(name, "'" + name + "' is not a declared class");
}

void Ontology::require_property(const Name& name) const {
  if (!is_property(name)) throw UnknownNameError(name, "'" + name + "' is not a declared property");
}

void Ontology::require_individual(const Name& name) const {
  if (!is_individual(name))
    throw UnknownNameError(name, "'" + name + "' is not a declared individual");
}

void Ontology::require_ice(const Name& name) const {
  if (!is_ice(name)) throw UnknownNameError(name, "'" + name + "' is not a declared ICE");
}

void Ontology::validate_expression(const ClassExpression& expr) const {
  switch (expr.kind()) {
    case ClassExpression::Kind::Named:
      require_class(expr.name());
      return;
    case ClassExpression::Kind::And:
    case ClassExpression::Kind::Or:
    case ClassExpression::Kind::Not:
      for (const auto& child : expr.children()) validate_expression(child);
      return;
    case ClassExpression::Kind::Some:
    case ClassExpression::Kind::Only:
      require_property(expr.name());
      validate_expression(expr.children()[0]);
      return;
    case ClassExpression::Kind::Value:
      require_property(expr.name());
      require_individual(expr.object());
      return;
    case ClassExpression::Kind::Via:
      require_property(expr.name());
      require_ice(expr.object());
      return;
  }
}

void Ontology::add(AxiomValue value, SourceSpan span) {
  std::visit(
      [this](auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, SubClassOfAxiom>) {
          require_class(a.sub);
          require_class(a.super);
        } else if constexpr (std::is_same_v<T, EquivalentToAxiom>) {
          require_class(a.cls);
          validate_expression(a.expr);
        } else if constexpr (std::is_same_v<T, DisjointWithAxiom>) {
          require_class(a.first);
          require_class(a.second);
          if (a.second < a.first) std::swap(a.first, a.second);
        } else if constexpr (std::is_same_v<T, SubPropertyOfAxiom>) {
          require_property(a.sub);
          require_property(a.super);
        } else if constexpr (std::is_same_v<T, DomainAxiom> || std::is_same_v<T, RangeAxiom>) {
          require_property(a.property);
          require_class(a.cls);
        } else if constexpr (std::is_same_v<T, PropertyDefinitionAxiom>) {
          require_property(a.property);
          validate_expression(a.domain_expr);
          validate_expression(a.range_expr);
          if (auto existing = property_definition(a.property);
              existing.has_value() && !(*existing == a)) {
            throw std::invalid_argument("property '" + a.property +
                                        "' already has a definition");
          }
        } else if constexpr (std::is_same_v<T, ClassAssertionAxiom>) {
          require_individual(a.individual);
          require_class(a.cls);
        } else if constexpr (std::is_same_v<T, FactAxiom>) {
          require_individual(a.subject);
          require_property(a.property);
          require_individual(a.object);
        } else if constexpr (std::is_same_v<T, AboutnessAxiom>) {
          require_ice(a.assertion.ice);
          validate_expression(a.assertion.target);
        } else {
          static_assert(std::is_same_v<T, RepresentsFactAxiom>);
          require_ice(a.ice);
          require_individual(a.individual);
        }
      },
      value);
  std::string key = axiom_key(value);
  if (!axiom_keys_.insert(key).second) return;
  axioms_.push_back(Axiom{std::move(value), span});
}

namespace {

// Reflexive-transitive reachability over the given edge list.
std::set<Name> reachable(const Name& start, const std::vector<std::pair<Name, Name>>& edges) {
  std::set<Name> seen{start};
  std::deque<Name> queue{start};
  while (!queue.empty()) {
    Name current = queue.front();
    queue.pop_front();
    for (const auto& [from, to] : edges) {
      if (from == current && seen.insert(to).second) queue.push_back(to);
    }
  }
  return seen;
}

}  // namespace

std::set<Name> Ontology::subclass_ancestors(const Name& cls) const {
  std::vector<std::pair<Name, Name>> edges;
  for (const auto& axiom : axioms_) {
    if (const auto* sc = std::get_if<SubClassOfAxiom>(&axiom.value)) {
      edges.emplace_back(sc->sub, sc->super);
    }
  }
  return reachable(cls, edges);
}

std::set<Name> Ontology::subclass_descendants(const Name& cls) const {
  std::vector<std::pair<Name, Name>> edges;
  for (const auto& axiom : axioms_) {
    if (const auto* sc = std::get_if<SubClassOfAxiom>(&axiom.value)) {
      edges.emplace_back(sc->super, sc->sub);
    }
  }
  return reachable(cls, edges);
}

std::set<Name> Ontology::property_ancestors(const Name& property) const {
  std::vector<std::pair<Name, Name>> edges;
  for (const auto& axiom : axioms_) {
    if (const auto* sp = std::get_if<SubPropertyOfAxiom>(&axiom.value)) {
      edges.emplace_back(sp->sub, sp->super);
    }
  }
  return reachable(property, edges);
}

std::set<Name> Ontology::instantiation_closure(const Name& cls) const {
  require_class(cls);
  std::set<Name> descendants = subclass_descendants(cls);
  std::set<Name> result;
  for (const auto& axiom : axioms_) {
    if (const auto* ca = std::get_if<ClassAssertionAxiom>(&axiom.value)) {
      if (descendants.count(ca->cls)) result.insert(ca->individual);
    }
  }
  return result;
}

bool Ontology::are_disjoint(const Name& c1, const Name& c2) const {
  require_class(c1);
  require_class(c2);
  std::set<Name> anc1 = subclass_ancestors(c1);
  std::set<Name> anc2 = subclass_ancestors(c2);
  for (const auto& axiom : axioms_) {
    if (const auto* dw = std::get_if<DisjointWithAxiom>(&axiom.value)) {
      if ((anc1.count(dw->first) && anc2.count(dw->second)) ||
          (anc1.count(dw->second) && anc2.count(dw->first))) {
        return true;
      }
    }
  }
  return false;
}

std::vector<TaggedAboutness> Ontology::is_about_view() const {
  std::vector<TaggedAboutness> result;
  for (const auto& axiom : axioms_) {
    if (const auto* ab = std::get_if<AboutnessAxiom>(&axiom.value)) {
      result.push_back(TaggedAboutness{ab->assertion, property_ancestors(ab->assertion.relation)});
    }
  }
  return result;
}

std::vector<ClassExpression> Ontology::equivalences(const Name& cls) const {
  std::vector<ClassExpression> result;
  for (const auto& axiom : axioms_) {
    if (const auto* eq = std::get_if<EquivalentToAxiom>(&axiom.value)) {
      if (eq->cls == cls) result.push_back(eq->expr);
    }
  }
  return result;
}

std::vector<Name> Ontology::declared_domains(const Name& property) const {
  std::vector<Name> result;
  for (const auto& axiom : axioms_) {
    if (const auto* d = std::get_if<DomainAxiom>(&axiom.value)) {
      if (d->property == property) result.push_back(d->cls);
    }
  }
  return result;
}

std::vector<Name> Ontology::declared_ranges(const Name& property) const {
  std::vector<Name> result;
  for (const auto& axiom : axioms_) {
    if (const auto* r = std::get_if<RangeAxiom>(&axiom.value)) {
      if (r->property == property) result.push_back(r->cls);
    }
  }
  return result;
}

std::optional<PropertyDefinitionAxiom> Ontology::property_definition(const Name& property) const {
  for (const auto& axiom : axioms_) {
    if (const auto* pd = std::get_if<PropertyDefinitionAxiom>(&axiom.value)) {
      if (pd->property == property) return *pd;
    }
  }
  return std::nullopt;
}

std::set<Name> Ontology::asserted_types(const Name& individual) const {
  std::set<Name> result;
  for (const auto& axiom : axioms_) {
    if (const auto* ca = std::get_if<ClassAssertionAxiom>(&axiom.value)) {
      if (ca->individual == individual) result.insert(ca->cls);
    }
  }
  return result;
}

std::vector<Name> Ontology::fact_objects(const Name& subject, const Name& property) const {
  std::vector<Name> result;
  for (const auto& axiom : axioms_) {
    if (const auto* f = std::get_if<FactAxiom>(&axiom.value)) {
      if (f->subject == subject && f->property == property) result.push_back(f->object);
    }
  }
  return result;
}

bool Ontology::has_fact(const Name& subject, const Name& property, const Name& object) const {
  for (const auto& axiom : axioms_) {
    if (const auto* f = std::get_if<FactAxiom>(&axiom.value)) {
      if (f->subject == subject && f->property == property && f->object == object) return true;
    }
  }
  return false;
}

std::vector<AboutnessAssertion> Ontology::aboutness_of(const Name& ice) const {
  std::vector<AboutnessAssertion> result;
  for (const auto& axiom : axioms_) {
    if (const auto* ab = std::get_if<AboutnessAxiom>(&axiom.value)) {
      if (ab->assertion.ice == ice) result.push_back(ab->assertion);
    }
  }
  return result;
}

std::set<Name> Ontology::represented_by(const Name& ice) const {
  std::set<Name> result;
  for (const auto& axiom : axioms_) {
    if (const auto* rf = std::get_if<RepresentsFactAxiom>(&axiom.value)) {
      if (rf->ice == ice) result.insert(rf->individual);
    }
  }
  return result;
}

void Ontology::mark_all_builtin() {
  for (const auto& name : classes_) builtin_names_.insert(name);
  for (const auto& name : properties_) builtin_names_.insert(name);
  for (const auto& name : individuals_) builtin_names_.insert(name);
  for (const auto& [name, decl] : ices_) builtin_names_.insert(name);
  builtin_axiom_keys_ = axiom_keys_;
}

bool Ontology::is_builtin_axiom(const Axiom& axiom) const {
  return builtin_axiom_keys_.count(axiom_key(axiom.value)) > 0;
}

bool Ontology::operator==(const Ontology& other) const {
  return classes_ == other.classes_ && properties_ == other.properties_ &&
         individuals_ == other.individuals_ && ices_ == other.ices_ &&
         axiom_keys_ == other.axiom_keys_;
}

}  // namespace upo
