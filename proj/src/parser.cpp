#include "upo/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>

namespace upo {

std::string to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Lexical: return "lexical error";
    case ParseErrorKind::Syntax: return "syntax error";
    case ParseErrorKind::UnknownName: return "unknown name";
    case ParseErrorKind::DuplicateDeclaration: return "duplicate declaration";
  }
  return "error";
}

namespace {

enum class TokType { Key, Ident, LParen, RParen, Comma, End };

struct Token {
  TokType type = TokType::End;
  std::string text;
  SourceSpan span{};
};

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

const std::array<const char*, 7> kReserved = {"and", "or", "not", "some", "only", "value", "via"};

bool is_reserved(const std::string& word) {
  return std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end();
}

std::vector<Token> tokenize(std::string_view text, std::vector<ParseError>& errors) {
  std::vector<Token> tokens;
  size_t i = 0;
  int line = 1, col = 1;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") i = 3;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++i;
      ++line;
      col = 1;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') {
        ++i;
        ++col;
      }
    } else if (is_name_start(c)) {
      int start_col = col;
      size_t start = i;
      while (i < text.size() && is_name_char(text[i])) {
        ++i;
        ++col;
      }
      std::string word(text.substr(start, i - start));
      if (i < text.size() && text[i] == ':') {
        ++i;
        ++col;
        tokens.push_back(
            {TokType::Key, word, {line, start_col, static_cast<int>(word.size()) + 1}});
      } else {
        tokens.push_back({TokType::Ident, word, {line, start_col, static_cast<int>(word.size())}});
      }
    } else if (c == '(') {
      tokens.push_back({TokType::LParen, "(", {line, col, 1}});
      ++i;
      ++col;
    } else if (c == ')') {
      tokens.push_back({TokType::RParen, ")", {line, col, 1}});
      ++i;
      ++col;
    } else if (c == ',') {
      tokens.push_back({TokType::Comma, ",", {line, col, 1}});
      ++i;
      ++col;
    } else {
      errors.push_back({ParseErrorKind::Lexical,
                        {line, col, 1},
                        std::string("unexpected character '") + c + "'"});
      ++i;
      ++col;
    }
  }
  tokens.push_back({TokType::End, "", {line, col, 1}});
  return tokens;
}

enum class Category { Class, Property, Individual, Ice };

// Category name with its indefinite article, for diagnostics.
const char* category_str(Category c) {
  switch (c) {
    case Category::Class: return "a class";
    case Category::Property: return "a property";
    case Category::Individual: return "an individual";
    case Category::Ice: return "an ICE";
  }
  return "?";
}

struct NameRef {
  std::string text;
  Category need;
  SourceSpan span;
};

struct Decl {
  Category cat = Category::Class;
  std::string name;
  SourceSpan span;
};

struct IceFrameInfo {
  std::string name;
  SourceSpan span;
  std::optional<std::string> type_class;
  std::optional<std::string> mode;
  std::optional<std::string> cycle;
  int aboutness_count = 0;
  bool aborted = false;
};

struct PendingAxiom {
  AxiomValue value;
  SourceSpan span;
};

// Thrown after recording a Lexical/Syntax error; the frame is abandoned and
// parsing resumes at the next frame header.
struct FrameAbort {};

const std::array<const char*, 4> kFrameHeads = {"Class", "ObjectProperty", "Individual", "ICE"};

bool is_frame_head(const Token& tok) {
  return tok.type == TokType::Key &&
         std::find(kFrameHeads.begin(), kFrameHeads.end(), tok.text) != kFrameHeads.end();
}

struct AboutnessKey {
  Name relation;
  ConstraintForm form;
};

std::optional<AboutnessKey> aboutness_key(const std::string& key) {
  static const std::map<std::string, AboutnessKey> table = {
      {"Describes-only", {"describes", ConstraintForm::Universal}},
      {"Describes-some", {"describes", ConstraintForm::Existential}},
      {"Prescribes-only", {"prescribes", ConstraintForm::Universal}},
      {"Prescribes-some", {"prescribes", ConstraintForm::Existential}},
      {"Represents-only", {"represents", ConstraintForm::Universal}},
      {"Represents-some", {"represents", ConstraintForm::Existential}},
      {"Designates-only", {"designates", ConstraintForm::Universal}},
      {"Designates-some", {"designates", ConstraintForm::Existential}},
  };
  auto it = table.find(key);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

const std::array<const char*, 7> kWeekdays = {"Monday", "Tuesday",  "Wednesday", "Thursday",
                                              "Friday", "Saturday", "Sunday"};

struct Parser {
  Parser(const std::vector<Token>& tokens, std::vector<ParseError>& error_sink)
      : toks(tokens), errors(error_sink) {}

  const std::vector<Token>& toks;
  std::vector<ParseError>& errors;
  size_t pos = 0;

  std::vector<Decl> decls;
  std::vector<PendingAxiom> axioms;
  std::vector<NameRef> refs;
  std::vector<IceFrameInfo> ice_frames;
  std::vector<SourceSpan> open_parens;

  const Token& cur() const { return toks[pos]; }
  void advance() {
    if (cur().type != TokType::End) ++pos;
  }

  void fail(ParseErrorKind kind, SourceSpan span, std::string message) {
    errors.push_back({kind, span, std::move(message)});
    throw FrameAbort{};
  }

  Token expect_name(const std::string& what) {
    if (cur().type != TokType::Ident) {
      if (cur().type == TokType::End) {
        fail(ParseErrorKind::Syntax, cur().span, "unexpected end of input, expected " + what);
      }
      fail(ParseErrorKind::Syntax, cur().span,
           "expected " + what + ", found '" + cur().text + "'");
    }
    if (is_reserved(cur().text)) {
      fail(ParseErrorKind::Syntax, cur().span,
           "'" + cur().text + "' is a reserved word and cannot be used as a name");
    }
    Token t = cur();
    advance();
    return t;
  }

  void ref(const Token& tok, Category need) { refs.push_back({tok.text, need, tok.span}); }

  // --- expressions -------------------------------------------------------

  ClassExpression parse_expression() {
    open_parens.clear();
    return parse_binary(1);
  }

  // Precedence climbing over 'or' (1) and 'and' (2). Chains of one operator
  // flatten into a single n-ary node; parenthesized groups stay nested.
  ClassExpression parse_binary(int min_prec) {
    auto [lhs, chain] = parse_unary();
    while (cur().type == TokType::Ident) {
      int prec;
      ClassExpression::Kind op;
      if (cur().text == "or") {
        prec = 1;
        op = ClassExpression::Kind::Or;
      } else if (cur().text == "and") {
        prec = 2;
        op = ClassExpression::Kind::And;
      } else {
        break;
      }
      if (prec < min_prec) break;
      advance();
      ClassExpression rhs = parse_binary(prec + 1);
      if (chain == op) {
        auto members = lhs.children();
        members.push_back(std::move(rhs));
        lhs = op == ClassExpression::Kind::And
                  ? ClassExpression::intersection(std::move(members))
                  : ClassExpression::union_of(std::move(members));
      } else {
        std::vector<ClassExpression> members;
        members.push_back(std::move(lhs));
        members.push_back(std::move(rhs));
        lhs = op == ClassExpression::Kind::And
                  ? ClassExpression::intersection(std::move(members))
                  : ClassExpression::union_of(std::move(members));
        chain = op;
      }
    }
    return lhs;
  }

  std::pair<ClassExpression, std::optional<ClassExpression::Kind>> parse_unary() {
    if (cur().type == TokType::Ident && cur().text == "not") {
      advance();
      auto [inner, chain] = parse_unary();
      (void)chain;
      return {ClassExpression::complement(std::move(inner)), std::nullopt};
    }
    return {parse_primary(), std::nullopt};
  }

  ClassExpression parse_primary() {
    if (cur().type == TokType::LParen) return parse_group();
    if (cur().type == TokType::Ident) {
      if (is_reserved(cur().text)) {
        fail(ParseErrorKind::Syntax, cur().span,
             "expected a class expression, found keyword '" + cur().text + "'");
      }
      Token head = cur();
      advance();
      if (cur().type == TokType::Ident) {
        const std::string& op = cur().text;
        if (op == "some" || op == "only") {
          advance();
          ref(head, Category::Property);
          ClassExpression filler = parse_filler(op);
          return op == "some" ? ClassExpression::some(head.text, std::move(filler))
                              : ClassExpression::only(head.text, std::move(filler));
        }
        if (op == "value") {
          advance();
          ref(head, Category::Property);
          Token obj = expect_name("an individual name after 'value'");
          ref(obj, Category::Individual);
          return ClassExpression::value(head.text, obj.text);
        }
        if (op == "via") {
          advance();
          ref(head, Category::Property);
          Token obj = expect_name("an ICE name after 'via'");
          ref(obj, Category::Ice);
          return ClassExpression::via(head.text, obj.text);
        }
      }
      ref(head, Category::Class);
      return ClassExpression::named(head.text);
    }
    if (cur().type == TokType::End && !open_parens.empty()) {
      fail(ParseErrorKind::Syntax, open_parens.back(), "unclosed '('");
    }
    fail(ParseErrorKind::Syntax, cur().span,
         cur().type == TokType::End ? "unexpected end of input in class expression"
                                    : "expected a class expression, found '" + cur().text + "'");
    return ClassExpression::named("");  // unreachable
  }

  ClassExpression parse_group() {
    SourceSpan open = cur().span;
    open_parens.push_back(open);
    advance();
    ClassExpression inner = parse_binary(1);
    if (cur().type != TokType::RParen) {
      fail(ParseErrorKind::Syntax, open, "unclosed '('");
    }
    open_parens.pop_back();
    advance();
    return inner;
  }

  ClassExpression parse_filler(const std::string& op) {
    if (cur().type == TokType::LParen) return parse_group();
    if (cur().type == TokType::Ident && !is_reserved(cur().text)) {
      Token t = cur();
      advance();
      ref(t, Category::Class);
      return ClassExpression::named(t.text);
    }
    if (cur().type == TokType::End && !open_parens.empty()) {
      fail(ParseErrorKind::Syntax, open_parens.back(), "unclosed '('");
    }
    fail(ParseErrorKind::Syntax, cur().span, "expected a class name or '(' after '" + op + "'");
    return ClassExpression::named("");  // unreachable
  }

  // --- frames ------------------------------------------------------------

  void recover_to_frame_head() {
    while (cur().type != TokType::End && !is_frame_head(cur())) advance();
  }

  void parse_document() {
    while (cur().type != TokType::End) {
      if (!is_frame_head(cur())) {
        errors.push_back({ParseErrorKind::Syntax, cur().span,
                          "expected a frame header (Class:, ObjectProperty:, Individual:, ICE:)"});
        advance();
        recover_to_frame_head();
        continue;
      }
      Token head = cur();
      advance();
      try {
        Token name = expect_name("a name after '" + head.text + ":'");
        if (head.text == "Class") {
          parse_class_frame(name);
        } else if (head.text == "ObjectProperty") {
          parse_property_frame(name);
        } else if (head.text == "Individual") {
          parse_individual_frame(name);
        } else {
          parse_ice_frame(name);
        }
      } catch (const FrameAbort&) {
        if (!ice_frames.empty() && head.text == "ICE") ice_frames.back().aborted = true;
        recover_to_frame_head();
      }
    }
  }

  // True while the current token starts another entry of the open frame.
  bool at_entry() const { return cur().type == TokType::Key && !is_frame_head(cur()); }

  Token take_entry_key() {
    Token key = cur();
    advance();
    return key;
  }

  void end_of_entry() {
    if (cur().type == TokType::End || cur().type == TokType::Key) return;
    fail(ParseErrorKind::Syntax, cur().span,
         "expected an entry key or a new frame, found '" + cur().text + "'");
  }

  void parse_class_frame(const Token& name) {
    decls.push_back({Category::Class, name.text, name.span});
    while (at_entry()) {
      Token key = take_entry_key();
      if (key.text == "SubClassOf") {
        Token super = expect_name("a class name after 'SubClassOf:'");
        ref(super, Category::Class);
        axioms.push_back({SubClassOfAxiom{name.text, super.text}, key.span});
      } else if (key.text == "EquivalentTo") {
        ClassExpression expr = parse_expression();
        axioms.push_back({EquivalentToAxiom{name.text, std::move(expr)}, key.span});
      } else if (key.text == "DisjointWith") {
        Token other = expect_name("a class name after 'DisjointWith:'");
        ref(other, Category::Class);
        axioms.push_back({DisjointWithAxiom{name.text, other.text}, key.span});
      } else {
        fail(ParseErrorKind::Syntax, key.span, "unknown entry '" + key.text + ":' in a Class frame");
      }
      end_of_entry();
    }
  }

  void parse_property_frame(const Token& name) {
    decls.push_back({Category::Property, name.text, name.span});
    while (at_entry()) {
      Token key = take_entry_key();
      if (key.text == "SubPropertyOf") {
        Token super = expect_name("a property name after 'SubPropertyOf:'");
        ref(super, Category::Property);
        axioms.push_back({SubPropertyOfAxiom{name.text, super.text}, key.span});
      } else if (key.text == "Domain") {
        Token cls = expect_name("a class name after 'Domain:'");
        ref(cls, Category::Class);
        axioms.push_back({DomainAxiom{name.text, cls.text}, key.span});
      } else if (key.text == "Range") {
        Token cls = expect_name("a class name after 'Range:'");
        ref(cls, Category::Class);
        axioms.push_back({RangeAxiom{name.text, cls.text}, key.span});
      } else if (key.text == "DefinedBy") {
        ClassExpression domain_expr = parse_expression();
        if (cur().type != TokType::Comma) {
          fail(ParseErrorKind::Syntax, cur().span,
               "expected ',' between the domain and range expressions of 'DefinedBy:'");
        }
        advance();
        ClassExpression range_expr = parse_expression();
        axioms.push_back(
            {PropertyDefinitionAxiom{name.text, std::move(domain_expr), std::move(range_expr)},
             key.span});
      } else {
        fail(ParseErrorKind::Syntax, key.span,
             "unknown entry '" + key.text + ":' in an ObjectProperty frame");
      }
      end_of_entry();
    }
  }

  void parse_individual_frame(const Token& name) {
    decls.push_back({Category::Individual, name.text, name.span});
    while (at_entry()) {
      Token key = take_entry_key();
      if (key.text == "Types") {
        while (true) {
          Token cls = expect_name("a class name in 'Types:'");
          ref(cls, Category::Class);
          axioms.push_back({ClassAssertionAxiom{name.text, cls.text}, key.span});
          if (cur().type != TokType::Comma) break;
          advance();
        }
      } else if (key.text == "Facts") {
        Token prop = expect_name("a property name after 'Facts:'");
        ref(prop, Category::Property);
        while (true) {
          Token obj = expect_name("an individual name in 'Facts:'");
          ref(obj, Category::Individual);
          axioms.push_back({FactAxiom{name.text, prop.text, obj.text}, key.span});
          if (cur().type != TokType::Comma) break;
          advance();
        }
      } else {
        fail(ParseErrorKind::Syntax, key.span,
             "unknown entry '" + key.text + ":' in an Individual frame");
      }
      end_of_entry();
    }
  }

  void parse_ice_frame(const Token& name) {
    decls.push_back({Category::Ice, name.text, name.span});
    ice_frames.push_back({name.text, name.span, {}, {}, {}, 0, false});
    IceFrameInfo& info = ice_frames.back();
    while (at_entry()) {
      Token key = take_entry_key();
      if (key.text == "Types") {
        if (info.type_class.has_value()) {
          fail(ParseErrorKind::Syntax, key.span,
               "duplicate 'Types:' entry in ICE frame '" + name.text + "'");
        }
        Token cls = expect_name("a class name in 'Types:'");
        ref(cls, Category::Class);
        info.type_class = cls.text;
      } else if (key.text == "Mode") {
        Token mode = expect_name("'this' or 'next' after 'Mode:'");
        if (mode.text != "this" && mode.text != "next") {
          fail(ParseErrorKind::Syntax, mode.span,
               "'Mode:' must be 'this' or 'next', found '" + mode.text + "'");
        }
        info.mode = mode.text;
      } else if (key.text == "Cycle") {
        Token day = expect_name("a weekday name after 'Cycle:'");
        if (std::find(kWeekdays.begin(), kWeekdays.end(), day.text) == kWeekdays.end()) {
          fail(ParseErrorKind::Syntax, day.span,
               "'Cycle:' must be a weekday name (Monday..Sunday), found '" + day.text + "'");
        }
        info.cycle = day.text;
      } else if (key.text == "Represents-fact") {
        Token ind = expect_name("an individual name after 'Represents-fact:'");
        ref(ind, Category::Individual);
        axioms.push_back({RepresentsFactAxiom{name.text, ind.text}, key.span});
      } else if (auto ak = aboutness_key(key.text)) {
        ClassExpression target = parse_expression();
        axioms.push_back(
            {AboutnessAxiom{AboutnessAssertion{name.text, ak->relation, std::move(target),
                                               ak->form}},
             key.span});
        ++info.aboutness_count;
      } else {
        fail(ParseErrorKind::Syntax, key.span, "unknown entry '" + key.text + ":' in an ICE frame");
      }
      end_of_entry();
    }
  }
};

// Everything that can only be judged once the whole document has been read:
// declaration clashes, ICE frame completeness, name resolution.
void analyze(Parser& p, const Ontology& base, std::vector<ParseError>& errors) {
  auto base_category = [&base](const std::string& name) -> std::optional<Category> {
    if (base.is_class(name)) return Category::Class;
    if (base.is_property(name)) return Category::Property;
    if (base.is_individual(name)) return Category::Individual;
    if (base.is_ice(name)) return Category::Ice;
    return std::nullopt;
  };

  std::map<std::string, Category> declared;
  std::map<std::string, int> ice_decl_count;
  for (const auto& decl : p.decls) {
    std::optional<Category> existing;
    if (auto it = declared.find(decl.name); it != declared.end()) existing = it->second;
    if (!existing) existing = base_category(decl.name);
    if (existing && *existing != decl.cat) {
      errors.push_back({ParseErrorKind::DuplicateDeclaration, decl.span,
                        "'" + decl.name + "' is already declared as " +
                            category_str(*existing) + " and cannot be " +
                            category_str(decl.cat)});
      continue;
    }
    if (decl.cat == Category::Ice) {
      int count = ++ice_decl_count[decl.name];
      if (count > 1 || base.is_ice(decl.name)) {
        errors.push_back({ParseErrorKind::DuplicateDeclaration, decl.span,
                          "ICE '" + decl.name + "' is declared more than once"});
        continue;
      }
    }
    declared.emplace(decl.name, decl.cat);
  }

  for (const auto& info : p.ice_frames) {
    if (info.aborted) continue;
    if (!info.type_class.has_value()) {
      errors.push_back({ParseErrorKind::Syntax, info.span,
                        "ICE frame '" + info.name + "' needs a 'Types:' entry"});
    }
    if (info.aboutness_count == 0) {
      errors.push_back(
          {ParseErrorKind::Syntax, info.span,
           "ICE frame '" + info.name +
               "' needs exactly one aboutness entry (e.g. 'Describes-only:')"});
    } else if (info.aboutness_count > 1) {
      errors.push_back({ParseErrorKind::Syntax, info.span,
                        "ICE frame '" + info.name + "' has more than one aboutness entry"});
    }
  }

  // One DefinedBy per property across the whole document.
  std::map<std::string, std::string> seen_definitions;
  for (const auto& pending : p.axioms) {
    if (const auto* pd = std::get_if<PropertyDefinitionAxiom>(&pending.value)) {
      std::string key = axiom_key(pending.value);
      auto [it, inserted] = seen_definitions.emplace(pd->property, key);
      if (!inserted && it->second != key) {
        errors.push_back({ParseErrorKind::DuplicateDeclaration, pending.span,
                          "property '" + pd->property + "' has more than one 'DefinedBy:' entry"});
      }
    }
  }

  auto lookup = [&](const std::string& name) -> std::optional<Category> {
    if (auto it = declared.find(name); it != declared.end()) return it->second;
    return base_category(name);
  };
  for (const auto& ref : p.refs) {
    std::optional<Category> cat = lookup(ref.text);
    if (!cat) {
      errors.push_back({ParseErrorKind::UnknownName, ref.span,
                        "'" + ref.text + "' is not declared (expected " +
                            category_str(ref.need) + ")"});
    } else if (*cat != ref.need) {
      errors.push_back({ParseErrorKind::UnknownName, ref.span,
                        "'" + ref.text + "' is declared as " + category_str(*cat) +
                            " but used as " + category_str(ref.need)});
    }
  }
}

Ontology build_ontology(const Parser& p, const Ontology& base) {
  Ontology result = base;
  result.mark_all_builtin();
  std::map<std::string, const IceFrameInfo*> ice_info;
  for (const auto& info : p.ice_frames) ice_info.emplace(info.name, &info);
  for (const auto& decl : p.decls) {
    switch (decl.cat) {
      case Category::Class: result.declare_class(decl.name, decl.span); break;
      case Category::Property: result.declare_property(decl.name, decl.span); break;
      case Category::Individual: result.declare_individual(decl.name, decl.span); break;
      case Category::Ice: {
        const IceFrameInfo* info = ice_info.at(decl.name);
        result.declare_ice(IceDecl{decl.name, *info->type_class, info->mode, info->cycle},
                           decl.span);
        break;
      }
    }
  }
  for (const auto& pending : p.axioms) result.add(pending.value, pending.span);
  return result;
}

void sort_errors(std::vector<ParseError>& errors) {
  std::stable_sort(errors.begin(), errors.end(), [](const ParseError& a, const ParseError& b) {
    return std::pair(a.span.line, a.span.column) < std::pair(b.span.line, b.span.column);
  });
}

}  // namespace

ParseResult parse(std::string_view text, const Ontology& base) {
  ParseResult result;
  std::vector<Token> tokens = tokenize(text, result.errors);
  Parser parser{tokens, result.errors};
  parser.parse_document();
  analyze(parser, base, result.errors);
  if (!result.errors.empty()) {
    sort_errors(result.errors);
    return result;
  }
  result.ontology = build_ontology(parser, base);
  return result;
}

ParseResult parse(std::string_view text) {
  static const Ontology empty;
  return parse(text, empty);
}

ExpressionParseResult parse_class_expression(std::string_view text, const Ontology& scope) {
  ExpressionParseResult result;
  std::vector<Token> tokens = tokenize(text, result.errors);
  if (!result.errors.empty()) {
    sort_errors(result.errors);
    return result;
  }
  Parser parser{tokens, result.errors};
  std::optional<ClassExpression> expr;
  try {
    expr = parser.parse_expression();
    if (parser.cur().type != TokType::End) {
      parser.fail(ParseErrorKind::Syntax, parser.cur().span,
                  "unexpected trailing input after the class expression");
    }
  } catch (const FrameAbort&) {
    expr.reset();
  }
  auto scope_category = [&scope](const std::string& name) -> std::optional<Category> {
    if (scope.is_class(name)) return Category::Class;
    if (scope.is_property(name)) return Category::Property;
    if (scope.is_individual(name)) return Category::Individual;
    if (scope.is_ice(name)) return Category::Ice;
    return std::nullopt;
  };
  for (const auto& ref : parser.refs) {
    std::optional<Category> cat = scope_category(ref.text);
    if (!cat) {
      result.errors.push_back({ParseErrorKind::UnknownName, ref.span,
                               "'" + ref.text + "' is not declared (expected " +
                                   category_str(ref.need) + ")"});
    } else if (*cat != ref.need) {
      result.errors.push_back({ParseErrorKind::UnknownName, ref.span,
                               "'" + ref.text + "' is declared as " + category_str(*cat) +
                                   " but used as " + category_str(ref.need)});
    }
  }
  if (result.errors.empty()) result.expression = std::move(expr);
  sort_errors(result.errors);
  return result;
}

// --- canonical serialization ----------------------------------------------

namespace {

int precedence(const ClassExpression& e) {
  switch (e.kind()) {
    case ClassExpression::Kind::Or: return 1;
    case ClassExpression::Kind::And: return 2;
    case ClassExpression::Kind::Not: return 3;
    case ClassExpression::Kind::Some:
    case ClassExpression::Kind::Only:
    case ClassExpression::Kind::Value:
    case ClassExpression::Kind::Via: return 4;
    case ClassExpression::Kind::Named: return 5;
  }
  return 5;
}

void render(const ClassExpression& e, std::string& out) {
  auto child_with_parens = [&out](const ClassExpression& child, bool parens) {
    if (parens) out += '(';
    render(child, out);
    if (parens) out += ')';
  };
  switch (e.kind()) {
    case ClassExpression::Kind::Named:
      out += e.name();
      return;
    case ClassExpression::Kind::Or:
    case ClassExpression::Kind::And: {
      int prec = precedence(e);
      const char* joiner = e.kind() == ClassExpression::Kind::And ? " and " : " or ";
      for (size_t i = 0; i < e.children().size(); ++i) {
        if (i) out += joiner;
        const ClassExpression& child = e.children()[i];
        // Parenthesize looser children and same-operator children: nested
        // chains of one operator only exist when written with parentheses.
        child_with_parens(child, precedence(child) < prec || child.kind() == e.kind());
      }
      return;
    }
    case ClassExpression::Kind::Not: {
      const ClassExpression& child = e.children()[0];
      out += "not ";
      child_with_parens(child, precedence(child) < 3);
      return;
    }
    case ClassExpression::Kind::Some:
    case ClassExpression::Kind::Only: {
      const ClassExpression& filler = e.children()[0];
      out += e.name();
      out += e.kind() == ClassExpression::Kind::Some ? " some " : " only ";
      child_with_parens(filler, filler.kind() != ClassExpression::Kind::Named);
      return;
    }
    case ClassExpression::Kind::Value:
    case ClassExpression::Kind::Via:
      out += e.name();
      out += e.kind() == ClassExpression::Kind::Value ? " value " : " via ";
      out += e.object();
      return;
  }
}

std::string aboutness_entry(const AboutnessAssertion& assertion) {
  static const std::map<std::string, std::string> keys = {{"describes", "Describes"},
                                                          {"prescribes", "Prescribes"},
                                                          {"represents", "Represents"},
                                                          {"designates", "Designates"}};
  auto it = keys.find(assertion.relation);
  if (it == keys.end()) {
    throw std::invalid_argument("cannot serialize aboutness relation '" + assertion.relation +
                                "'");
  }
  std::string line = it->second;
  line += assertion.constraint_form == ConstraintForm::Universal ? "-only: " : "-some: ";
  line += serialize_expression(assertion.target);
  return line;
}

struct FrameBody {
  std::vector<std::string> subclass_of;
  std::vector<std::string> equivalent_to;
  std::vector<std::string> disjoint_with;
  std::vector<std::string> subproperty_of;
  std::vector<std::string> domains;
  std::vector<std::string> ranges;
  std::optional<std::string> defined_by;
  std::vector<std::string> types;
  std::map<Name, std::vector<Name>> facts;
  std::vector<std::string> aboutness;
  std::vector<std::string> represents_facts;
};

}  // namespace

std::string serialize_expression(const ClassExpression& expr) {
  std::string out;
  render(expr, out);
  return out;
}

std::string serialize(const Ontology& ontology) {
  std::array<std::map<Name, FrameBody>, 4> frames;  // Class, ObjectProperty, Individual, ICE
  auto body = [&frames](int rank, const Name& name) -> FrameBody& { return frames[rank][name]; };

  for (const Name& name : ontology.classes()) {
    if (!ontology.is_builtin_name(name)) body(0, name);
  }
  for (const Name& name : ontology.properties()) {
    if (!ontology.is_builtin_name(name)) body(1, name);
  }
  for (const Name& name : ontology.individuals()) {
    if (!ontology.is_builtin_name(name)) body(2, name);
  }
  for (const auto& [name, decl] : ontology.ices()) {
    if (!ontology.is_builtin_name(name)) body(3, name);
  }

  for (const Axiom& axiom : ontology.axioms()) {
    if (ontology.is_builtin_axiom(axiom)) continue;
    std::visit(
        [&](const auto& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, SubClassOfAxiom>) {
            body(0, a.sub).subclass_of.push_back(a.super);
          } else if constexpr (std::is_same_v<T, EquivalentToAxiom>) {
            body(0, a.cls).equivalent_to.push_back(serialize_expression(a.expr));
          } else if constexpr (std::is_same_v<T, DisjointWithAxiom>) {
            body(0, a.first).disjoint_with.push_back(a.second);
          } else if constexpr (std::is_same_v<T, SubPropertyOfAxiom>) {
            body(1, a.sub).subproperty_of.push_back(a.super);
          } else if constexpr (std::is_same_v<T, DomainAxiom>) {
            body(1, a.property).domains.push_back(a.cls);
          } else if constexpr (std::is_same_v<T, RangeAxiom>) {
            body(1, a.property).ranges.push_back(a.cls);
          } else if constexpr (std::is_same_v<T, PropertyDefinitionAxiom>) {
            body(1, a.property).defined_by = serialize_expression(a.domain_expr) + ", " +
                                             serialize_expression(a.range_expr);
          } else if constexpr (std::is_same_v<T, ClassAssertionAxiom>) {
            body(2, a.individual).types.push_back(a.cls);
          } else if constexpr (std::is_same_v<T, FactAxiom>) {
            body(2, a.subject).facts[a.property].push_back(a.object);
          } else if constexpr (std::is_same_v<T, AboutnessAxiom>) {
            body(3, a.assertion.ice).aboutness.push_back(aboutness_entry(a.assertion));
          } else {
            static_assert(std::is_same_v<T, RepresentsFactAxiom>);
            body(3, a.ice).represents_facts.push_back(a.individual);
          }
        },
        axiom.value);
  }

  static const std::array<const char*, 4> headers = {"Class", "ObjectProperty", "Individual",
                                                     "ICE"};
  std::string out;
  bool first_frame = true;
  auto emit = [&out, &first_frame](const std::string& header, const Name& name,
                                   const std::vector<std::string>& lines) {
    if (!first_frame) out += '\n';
    first_frame = false;
    out += header + ": " + name + "\n";
    for (const std::string& line : lines) out += "  " + line + "\n";
  };
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += v[i];
    }
    return s;
  };

  for (int rank = 0; rank < 4; ++rank) {
    for (const auto& [name, b] : frames[rank]) {
      std::vector<std::string> lines;
      if (rank == 0) {
        for (const auto& super : sorted(b.subclass_of)) lines.push_back("SubClassOf: " + super);
        for (const auto& expr : sorted(b.equivalent_to)) lines.push_back("EquivalentTo: " + expr);
        for (const auto& other : sorted(b.disjoint_with))
          lines.push_back("DisjointWith: " + other);
      } else if (rank == 1) {
        for (const auto& super : sorted(b.subproperty_of))
          lines.push_back("SubPropertyOf: " + super);
        for (const auto& cls : sorted(b.domains)) lines.push_back("Domain: " + cls);
        for (const auto& cls : sorted(b.ranges)) lines.push_back("Range: " + cls);
        if (b.defined_by) lines.push_back("DefinedBy: " + *b.defined_by);
      } else if (rank == 2) {
        if (!b.types.empty()) lines.push_back("Types: " + join(sorted(b.types)));
        for (const auto& [property, objects] : b.facts) {
          lines.push_back("Facts: " + property + " " + join(sorted(objects)));
        }
      } else {
        const IceDecl& decl = ontology.ices().at(name);
        lines.push_back("Types: " + decl.type_class);
        if (decl.mode) lines.push_back("Mode: " + *decl.mode);
        if (decl.cycle) lines.push_back("Cycle: " + *decl.cycle);
        for (const auto& entry : sorted(b.aboutness)) lines.push_back(entry);
        for (const auto& ind : sorted(b.represents_facts))
          lines.push_back("Represents-fact: " + ind);
      }
      emit(headers[rank], name, lines);
    }
  }
  return out;
}

}  // namespace upo
