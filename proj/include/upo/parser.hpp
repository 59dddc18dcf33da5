#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "upo/model.hpp"

namespace upo {

enum class ParseErrorKind { Lexical, Syntax, UnknownName, DuplicateDeclaration };

struct ParseError {
  ParseErrorKind kind = ParseErrorKind::Syntax;
  SourceSpan span{};
  std::string message;
};

std::string to_string(ParseErrorKind kind);

// Either a complete ontology or a non-empty error list, never both.
// Lexical and Syntax errors abort the surrounding frame and recovery resumes
// at the next frame header, so several independent errors can be reported
// from one document.
struct ParseResult {
  std::optional<Ontology> ontology;
  std::vector<ParseError> errors;
  bool ok() const { return ontology.has_value(); }
};

ParseResult parse(std::string_view text);

// Same, but names declared in `base` are in scope and the returned ontology
// contains base's declarations and axioms, marked builtin. Serialization of
// the result emits only the document's own content.
ParseResult parse(std::string_view text, const Ontology& base);

// Canonical serialization: frames sorted Class < ObjectProperty <
// Individual < ICE and by name within a kind, entries in a fixed key order,
// two-space indentation, minimal parentheses, LF line endings. Builtin
// (base) content is omitted. parse(serialize(o)) reproduces o's own
// content, and serialization of a parse result is a byte-level fixpoint.
// Requires every aboutness relation to be one of describes, prescribes,
// represents, designates (throws std::invalid_argument otherwise).
std::string serialize(const Ontology& ontology);

std::string serialize_expression(const ClassExpression& expr);

struct ExpressionParseResult {
  std::optional<ClassExpression> expression;
  std::vector<ParseError> errors;
  bool ok() const { return expression.has_value(); }
};

// Parses a bare class expression; names resolve against `scope`.
ExpressionParseResult parse_class_expression(std::string_view text, const Ontology& scope);

}  // namespace upo
