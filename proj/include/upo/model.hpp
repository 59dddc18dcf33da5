#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "upo/errors.hpp"

namespace upo {

using Name = std::string;

// Position of a construct in its source document. line is 1-based; a line of
// 0 marks a synthetic construct that has no source location.
struct SourceSpan {
  int line = 0;
  int column = 0;
  int length = 0;
  bool synthetic() const { return line == 0; }
  bool operator==(const SourceSpan&) const = default;
};

// A class expression over declared names. Value type with structural
// equality; children order is significant.
//
//   Named    name = class
//   And, Or  children (two or more)
//   Not      one child
//   Some     name = property, one child (filler)
//   Only     name = property, one child (filler)
//   Value    name = property, object = individual
//   Via      name = property, object = ICE
class ClassExpression {
 public:
  enum class Kind { Named, And, Or, Not, Some, Only, Value, Via };

  static ClassExpression named(Name cls);
  static ClassExpression intersection(std::vector<ClassExpression> members);
  static ClassExpression union_of(std::vector<ClassExpression> members);
  static ClassExpression complement(ClassExpression inner);
  static ClassExpression some(Name property, ClassExpression filler);
  static ClassExpression only(Name property, ClassExpression filler);
  static ClassExpression value(Name property, Name individual);
  static ClassExpression via(Name property, Name ice);

  Kind kind() const { return kind_; }
  const Name& name() const { return name_; }
  const Name& object() const { return object_; }
  const std::vector<ClassExpression>& children() const { return children_; }

  // Total node count, counting this node.
  int size() const;

  bool operator==(const ClassExpression&) const = default;

 private:
  ClassExpression() = default;

  Kind kind_ = Kind::Named;
  Name name_;
  Name object_;
  std::vector<ClassExpression> children_;
};

struct SubClassOfAxiom {
  Name sub, super;
  bool operator==(const SubClassOfAxiom&) const = default;
};

struct EquivalentToAxiom {
  Name cls;
  ClassExpression expr;
  bool operator==(const EquivalentToAxiom&) const = default;
};

// Stored with first <= second.
struct DisjointWithAxiom {
  Name first, second;
  bool operator==(const DisjointWithAxiom&) const = default;
};

struct SubPropertyOfAxiom {
  Name sub, super;
  bool operator==(const SubPropertyOfAxiom&) const = default;
};

struct DomainAxiom {
  Name property;
  Name cls;
  bool operator==(const DomainAxiom&) const = default;
};

struct RangeAxiom {
  Name property;
  Name cls;
  bool operator==(const RangeAxiom&) const = default;
};

// Full decomposition of a property into subject and object class
// expressions. At most one per property.
struct PropertyDefinitionAxiom {
  Name property;
  ClassExpression domain_expr;
  ClassExpression range_expr;
  bool operator==(const PropertyDefinitionAxiom&) const = default;
};

struct ClassAssertionAxiom {
  Name individual;
  Name cls;
  bool operator==(const ClassAssertionAxiom&) const = default;
};

struct FactAxiom {
  Name subject, property, object;
  bool operator==(const FactAxiom&) const = default;
};

enum class ConstraintForm { Universal, Existential };

// "ice stands in relation to exactly the things satisfying target"
// (Universal) or "... to at least one such thing" (Existential). The
// existential form is representable so the linter can flag it; the
// universal form is the only well-formed one.
struct AboutnessAssertion {
  Name ice;
  Name relation;
  ClassExpression target;
  ConstraintForm constraint_form = ConstraintForm::Universal;
  bool operator==(const AboutnessAssertion&) const = default;
};

struct AboutnessAxiom {
  AboutnessAssertion assertion;
  bool operator==(const AboutnessAxiom&) const = default;
};

// Records that a concrete individual realizes (is a faithful instance of)
// the combination a blueprint ICE prescribes.
struct RepresentsFactAxiom {
  Name ice;
  Name individual;
  bool operator==(const RepresentsFactAxiom&) const = default;
};

using AxiomValue =
    std::variant<SubClassOfAxiom, EquivalentToAxiom, DisjointWithAxiom, SubPropertyOfAxiom,
                 DomainAxiom, RangeAxiom, PropertyDefinitionAxiom, ClassAssertionAxiom, FactAxiom,
                 AboutnessAxiom, RepresentsFactAxiom>;

// Spans are carried for diagnostics and ignored by equality.
struct Axiom {
  AxiomValue value;
  SourceSpan span{};
};

// Declaration record for an information content entity.
struct IceDecl {
  Name name;
  Name type_class;
  std::optional<std::string> mode;   // "this" | "next"
  std::optional<std::string> cycle;  // weekday class name, e.g. "Friday"
  bool operator==(const IceDecl&) const = default;
};

struct TaggedAboutness {
  AboutnessAssertion assertion;
  std::set<Name> tags;  // relation plus all its declared super-properties
};

// An ontology document: four disjoint name categories plus a set of axioms.
// Mutate during construction, treat as immutable afterwards. Axioms are a
// set: adding a duplicate is a no-op. All referenced names must be declared
// before an axiom mentioning them is added.
class Ontology {
 public:
  void declare_class(const Name& name, SourceSpan span = {});
  void declare_property(const Name& name, SourceSpan span = {});
  void declare_individual(const Name& name, SourceSpan span = {});
  void declare_ice(const IceDecl& decl, SourceSpan span = {});

  // Validates referenced names (UnknownNameError) and uniqueness of
  // PropertyDefinition per property (std::invalid_argument). DisjointWith
  // is normalized so first <= second.
  void add(AxiomValue value, SourceSpan span = {});

  const std::set<Name>& classes() const { return classes_; }
  const std::set<Name>& properties() const { return properties_; }
  const std::set<Name>& individuals() const { return individuals_; }
  const std::map<Name, IceDecl>& ices() const { return ices_; }
  const std::vector<Axiom>& axioms() const { return axioms_; }

  bool is_class(const Name& name) const { return classes_.count(name) > 0; }
  bool is_property(const Name& name) const { return properties_.count(name) > 0; }
  bool is_individual(const Name& name) const { return individuals_.count(name) > 0; }
  bool is_ice(const Name& name) const { return ices_.count(name) > 0; }
  bool is_declared(const Name& name) const;

  std::optional<SourceSpan> declaration_span(const Name& name) const;

  // Throws UnknownNameError if any name in `expr` is undeclared or used in
  // the wrong category.
  void validate_expression(const ClassExpression& expr) const;

  // All declared individuals that are instances of cls, directly or through
  // any chain of SubClassOf axioms. Throws UnknownNameError.
  std::set<Name> instantiation_closure(const Name& cls) const;

  // True iff some declared DisjointWith axiom separates an ancestor of c1
  // from an ancestor of c2 (ancestors are reflexive-transitive). Throws
  // UnknownNameError.
  bool are_disjoint(const Name& c1, const Name& c2) const;

  // Every aboutness assertion paired with the reflexive-transitive
  // SubPropertyOf closure of its relation, in axiom order.
  std::vector<TaggedAboutness> is_about_view() const;

  // Reflexive-transitive closures over SubClassOf / SubPropertyOf edges.
  // Tolerant of undeclared names (the closure is then just {name}).
  std::set<Name> subclass_ancestors(const Name& cls) const;
  std::set<Name> subclass_descendants(const Name& cls) const;
  std::set<Name> property_ancestors(const Name& property) const;

  std::vector<ClassExpression> equivalences(const Name& cls) const;
  std::vector<Name> declared_domains(const Name& property) const;
  std::vector<Name> declared_ranges(const Name& property) const;
  std::optional<PropertyDefinitionAxiom> property_definition(const Name& property) const;
  std::set<Name> asserted_types(const Name& individual) const;
  std::vector<Name> fact_objects(const Name& subject, const Name& property) const;
  bool has_fact(const Name& subject, const Name& property, const Name& object) const;
  std::vector<AboutnessAssertion> aboutness_of(const Name& ice) const;
  std::set<Name> represented_by(const Name& ice) const;

  // Marks everything currently in the ontology as inherited base content.
  // Serialization omits base content; equality ignores the marks.
  void mark_all_builtin();
  bool is_builtin_name(const Name& name) const { return builtin_names_.count(name) > 0; }
  bool is_builtin_axiom(const Axiom& axiom) const;

  // Signature, ICE metadata and axiom sets; spans and builtin marks are
  // not part of the comparison.
  bool operator==(const Ontology& other) const;

 private:
  void require_class(const Name& name) const;
  void require_property(const Name& name) const;
  void require_individual(const Name& name) const;
  void require_ice(const Name& name) const;
  void record_span(const Name& name, SourceSpan span);

  std::set<Name> classes_;
  std::set<Name> properties_;
  std::set<Name> individuals_;
  std::map<Name, IceDecl> ices_;
  std::vector<Axiom> axioms_;
  std::set<std::string> axiom_keys_;
  std::map<Name, SourceSpan> decl_spans_;
  std::set<Name> builtin_names_;
  std::set<std::string> builtin_axiom_keys_;
};

// Stable one-line key identifying an axiom up to equality. Used for the
// axiom set semantics; also a convenient deterministic sort key.
std::string axiom_key(const AxiomValue& value);

}  // namespace upo
