#include "aspic/dsl.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace aspic::dsl {

std::string_view to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::lex: return "lex";
    case ParseError::Kind::syntax: return "syntax";
    case ParseError::Kind::semantic: return "semantic";
  }
  return "?";
}

std::string format(const ParseError& e) {
  return std::to_string(e.span.line) + ":" + std::to_string(e.span.column) + ": " + std::string(to_string(e.kind)) +
         " error: " + e.message;
}

namespace {

enum class Tok { ident, tilde, comma, dot, colon, lbracket, rbracket, arrow, darrow, less, end };

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::tilde: return "'~'";
    case Tok::comma: return "','";
    case Tok::dot: return "'.'";
    case Tok::colon: return "':'";
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::arrow: return "'->'";
    case Tok::darrow: return "'=>'";
    case Tok::less: return "'<'";
    case Tok::end: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::vector<ParseError>& errors) : text_(text), errors_(errors) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n' || c == ' ' || c == '\t' || c == '\r') {
        advance();
        continue;
      }
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      const SourceSpan start{line_, column_, 1};
      if (is_ident_char(c)) {
        std::string word;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
          word += text_[pos_];
          advance();
        }
        out.push_back({Tok::ident, word, {start.line, start.column, static_cast<int>(word.size())}});
        continue;
      }
      auto single = [&](Tok kind) {
        out.push_back({kind, std::string(1, c), start});
        advance();
      };
      switch (c) {
        case '~': single(Tok::tilde); continue;
        case ',': single(Tok::comma); continue;
        case '.': single(Tok::dot); continue;
        case ':': single(Tok::colon); continue;
        case '[': single(Tok::lbracket); continue;
        case ']': single(Tok::rbracket); continue;
        case '<': single(Tok::less); continue;
        default: break;
      }
      if ((c == '-' || c == '=') && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        out.push_back({c == '-' ? Tok::arrow : Tok::darrow, std::string(text_.substr(pos_, 2)), {start.line, start.column, 2}});
        advance();
        advance();
        continue;
      }
      // One error per offending code point.
      const std::size_t begin = pos_;
      advance();
      while (pos_ < text_.size() && is_continuation(text_[pos_])) advance();
      errors_.push_back({start, "unexpected character '" + std::string(text_.substr(begin, pos_ - begin)) + "'",
                         ParseError::Kind::lex});
    }
    out.push_back({Tok::end, "", {line_, column_, 1}});
    return out;
  }

 private:
  static bool is_ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  }
  static bool is_continuation(char c) { return (static_cast<unsigned char>(c) & 0xC0) == 0x80; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else if (!is_continuation(text_[pos_])) {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::vector<ParseError>& errors_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

struct SyntaxError {
  ParseError error;
};

struct LocatedLiteral {
  Literal literal;
  SourceSpan span;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<ParseError>& errors) : tokens_(std::move(tokens)), errors_(errors) {}

  void run() {
    while (peek().kind != Tok::end) {
      try {
        statement();
      } catch (const SyntaxError& e) {
        errors_.push_back(e.error);
        recover();
      }
    }
  }

  std::map<Literal, SourceSpan> axioms;
  std::map<Literal, SourceSpan> premises;
  std::vector<std::pair<Rule, SourceSpan>> rules;  // span of the name (or keyword)

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& take() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& at, std::string message) const {
    throw SyntaxError{{at.span, std::move(message), ParseError::Kind::syntax}};
  }

  const Token& expect(Tok kind, std::string_view what) {
    if (peek().kind != kind) {
      fail(peek(), "expected " + std::string(what) + ", found " + found(peek()));
    }
    return take();
  }

  static std::string found(const Token& t) {
    if (t.kind == Tok::ident) return "'" + t.text + "'";
    return std::string(describe(t.kind));
  }

  void recover() {
    while (peek().kind != Tok::end && peek().kind != Tok::dot) take();
    if (peek().kind == Tok::dot) take();
  }

  LocatedLiteral literal() {
    const Token& first = peek();
    bool positive = true;
    if (first.kind == Tok::tilde) {
      take();
      positive = false;
    }
    const Token& atom = expect(Tok::ident, "an atom");
    SourceSpan span = first.span;
    span.length = positive ? atom.span.length : atom.span.length + (atom.span.column - first.span.column);
    return {Literal{Atom(atom.text), positive}, span};
  }

  void statement() {
    const Token& keyword = peek();
    if (keyword.kind != Tok::ident) fail(keyword, "expected a statement keyword, found " + found(keyword));
    if (keyword.text == "axiom" || keyword.text == "premise") {
      take();
      const auto lit = literal();
      expect(Tok::dot, "'.'");
      (keyword.text == "axiom" ? axioms : premises).emplace(lit.literal, lit.span);
    } else if (keyword.text == "strict" || keyword.text == "defeasible") {
      take();
      rule(keyword.text == "strict" ? RuleKind::strict : RuleKind::defeasible, keyword);
    } else if (keyword.text == "prefer") {
      take();
      expect(Tok::ident, "a rule name");
      expect(Tok::less, "'<'");
      expect(Tok::ident, "a rule name");
      expect(Tok::dot, "'.'");
    } else {
      fail(keyword, "unknown statement '" + keyword.text + "'");
    }
  }

  void rule(RuleKind kind, const Token& keyword) {
    Rule r;
    r.kind = kind;
    SourceSpan label_span = keyword.span;
    std::optional<std::string> label;
    if (peek().kind == Tok::lbracket) {
      take();
      const Token& id = expect(Tok::ident, "a rule label");
      label = id.text;
      label_span = id.span;
      expect(Tok::rbracket, "']'");
      expect(Tok::colon, "':'");
    } else if (peek().kind == Tok::ident && peek(1).kind == Tok::colon) {
      label = take().text;
      label_span = tokens_[pos_ - 1].span;
      take();
    }

    r.body.push_back(literal().literal);
    while (peek().kind == Tok::comma) {
      take();
      r.body.push_back(literal().literal);
    }
    const Tok wanted = kind == RuleKind::strict ? Tok::arrow : Tok::darrow;
    if (peek().kind != wanted) {
      if (peek().kind == Tok::arrow || peek().kind == Tok::darrow) {
        fail(peek(), std::string(kind == RuleKind::strict ? "strict" : "defeasible") + " rule must use " +
                         std::string(describe(wanted)) + ", found " + found(peek()));
      }
      fail(peek(), "expected " + std::string(describe(wanted)) + " or ',', found " + found(peek()));
    }
    take();
    r.head = literal().literal;
    expect(Tok::dot, "'.'");

    if (label) {
      if (kind == RuleKind::defeasible) {
        r.name = Literal{Atom(*label), true};
      } else {
        r.id = *label;
      }
    }
    rules.emplace_back(std::move(r), label_span);
  }

  std::vector<Token> tokens_;
  std::vector<ParseError>& errors_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseResult parse(std::string_view text) {
  std::vector<ParseError> errors;
  auto tokens = Lexer(text, errors).run();
  Parser parser(std::move(tokens), errors);
  parser.run();

  KnowledgeBase kb;
  for (const auto& [lit, span] : parser.axioms) kb.axioms.insert(lit);
  for (const auto& [lit, span] : parser.premises) {
    if (kb.axioms.contains(lit)) {
      errors.push_back({span, "literal " + to_string(lit) + " is declared both as axiom and as premise",
                        ParseError::Kind::semantic});
      continue;
    }
    kb.premises.insert(lit);
  }

  std::map<Atom, SourceSpan> names;
  std::vector<Rule> rules;
  for (auto& [r, span] : parser.rules) {
    if (r.name) {
      if (auto [it, fresh] = names.emplace(r.name->atom, span); !fresh) {
        errors.push_back({span,
                          "rule name " + to_string(*r.name) + " already used at line " + std::to_string(it->second.line),
                          ParseError::Kind::semantic});
        continue;
      }
    }
    rules.push_back(std::move(r));
  }

  if (!errors.empty()) {
    std::stable_sort(errors.begin(), errors.end(), [](const ParseError& a, const ParseError& b) {
      return std::pair(a.span.line, a.span.column) < std::pair(b.span.line, b.span.column);
    });
    return errors;
  }
  try {
    return ArgumentationTheory(std::move(kb), std::move(rules));
  } catch (const TheoryError& e) {
    return std::vector<ParseError>{{SourceSpan{}, e.what(), ParseError::Kind::semantic}};
  }
}

ArgumentationTheory parse_or_throw(std::string_view text) {
  auto result = parse(text);
  if (auto* at = std::get_if<ArgumentationTheory>(&result)) return std::move(*at);
  std::string message;
  for (const auto& e : std::get<std::vector<ParseError>>(result)) {
    if (!message.empty()) message += "\n";
    message += format(e);
  }
  throw TheoryError(message);
}

std::string serialize(const ArgumentationTheory& at) {
  std::vector<std::string> axioms, premises, strict, defeasible;
  for (const auto& x : at.kb().axioms) axioms.push_back("axiom " + to_string(x) + ".");
  for (const auto& x : at.kb().premises) premises.push_back("premise " + to_string(x) + ".");
  for (const auto& r : at.rules()) {
    Rule canonical = r;
    canonical.body = r.sorted_body();
    if (r.is_strict()) {
      strict.push_back("strict " + to_string(canonical) + ".");
    } else {
      defeasible.push_back("defeasible [" + std::string(r.name->atom.name()) + "]: " + to_string(canonical) + ".");
    }
  }
  std::string out;
  for (auto* block : {&axioms, &premises, &strict, &defeasible}) {
    std::sort(block->begin(), block->end());
    for (const auto& line : *block) {
      out += line;
      out += '\n';
    }
  }
  return out;
}

}  // namespace aspic::dsl
