#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aspic/theory.hpp"

namespace aspic::dsl {

struct SourceSpan {
  int line = 1;    // 1-based
  int column = 1;  // 1-based, in code points
  int length = 1;
};

struct ParseError {
  enum class Kind { lex, syntax, semantic };
  SourceSpan span;
  std::string message;
  Kind kind = Kind::syntax;
};

std::string_view to_string(ParseError::Kind kind);

// "3:7: syntax error: expected '.'"
std::string format(const ParseError& e);

using ParseResult = std::variant<ArgumentationTheory, std::vector<ParseError>>;

// Statements:
//   axiom L.          premise L.
//   strict [ID:] L, ..., L -> L.
//   defeasible [NAME]: L, ..., L => L.     (also "defeasible NAME: ...")
//   prefer NAME < NAME.                    (accepted, not interpreted)
// where L is [~]atom and '#' starts a line comment. All recoverable errors are
// reported in one pass; recovery skips to the next '.'.
ParseResult parse(std::string_view text);

// Convenience: throws TheoryError carrying every formatted error.
ArgumentationTheory parse_or_throw(std::string_view text);

// Canonical text: axioms, premises, strict rules, defeasible rules; each block
// sorted; bodies sorted. Equal theories serialize to identical bytes.
std::string serialize(const ArgumentationTheory& at);

}  // namespace aspic::dsl
