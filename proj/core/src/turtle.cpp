#include "intentcheck/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_set>

#include "intentcheck/isomorphism.hpp"

namespace intentcheck::rdf {

namespace {

enum class Tok {
  IriRef,
  PName,      // text = "prefix:local" (possibly ":local" or "prefix:")
  BlankLabel, // text = label (without "_:")
  String,
  Integer,
  Decimal,
  Boolean,
  LangTag,    // text = tag (without "@")
  DoubleCaret,
  KeywordA,
  PrefixDecl,
  BaseDecl,
  Dot,
  Semicolon,
  Comma,
  LBracket,
  RBracket,
  LParen,
  RParen,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

bool isPnameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skipWhitespaceAndComments();
      if (pos_ >= text_.size()) {
        tokens.push_back({Tok::End, "", line_, col_});
        return tokens;
      }
      tokens.push_back(next());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw TurtleError(line_, col_, message);
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skipWhitespaceAndComments() {
    while (pos_ < text_.size()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token make(Tok kind, std::string text, int line, int col) {
    return {kind, std::move(text), line, col};
  }

  Token next() {
    int line = line_, col = col_;
    char c = peek();
    switch (c) {
      case '.': advance(); return make(Tok::Dot, ".", line, col);
      case ';': advance(); return make(Tok::Semicolon, ";", line, col);
      case ',': advance(); return make(Tok::Comma, ",", line, col);
      case '[': advance(); return make(Tok::LBracket, "[", line, col);
      case ']': advance(); return make(Tok::RBracket, "]", line, col);
      case '(': advance(); return make(Tok::LParen, "(", line, col);
      case ')': advance(); return make(Tok::RParen, ")", line, col);
      default: break;
    }
    if (c == '<') return lexIriRef(line, col);
    if (c == '"') return lexString(line, col);
    if (c == '_' && peek(1) == ':') return lexBlankLabel(line, col);
    if (c == '@') return lexAtWord(line, col);
    if (c == '^') {
      if (peek(1) != '^') fail("expected '^^'");
      advance();
      advance();
      return make(Tok::DoubleCaret, "^^", line, col);
    }
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c)))
      return lexNumber(line, col);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == ':' || c == '_')
      return lexWord(line, col);
    fail(std::string("unexpected character '") + c + "'");
  }

  Token lexIriRef(int line, int col) {
    advance();  // <
    std::string iri;
    while (pos_ < text_.size() && peek() != '>') {
      char c = advance();
      if (c == '\n') fail("unterminated IRI");
      iri += c;
    }
    if (pos_ >= text_.size()) fail("unterminated IRI");
    advance();  // >
    return make(Tok::IriRef, iri, line, col);
  }

  Token lexString(int line, int col) {
    advance();  // "
    // Long-form """...""" strings hold embedded queries; newlines allowed.
    if (peek() == '"' && peek(1) == '"') {
      advance();
      advance();
      return lexLongString(line, col);
    }
    std::string out;
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated string literal");
      char c = advance();
      if (c == '"') break;
      if (c == '\n') fail("newline in short string literal");
      if (c == '\\') {
        if (pos_ >= text_.size()) fail("unterminated escape");
        char e = advance();
        switch (e) {
          case 't': out += '\t'; break;
          case 'b': out += '\b'; break;
          case 'n': out += '\n'; break;
          case 'r': out += '\r'; break;
          case 'f': out += '\f'; break;
          case '"': out += '"'; break;
          case '\'': out += '\''; break;
          case '\\': out += '\\'; break;
          case 'u': out += lexUnicodeEscape(4); break;
          case 'U': out += lexUnicodeEscape(8); break;
          default: fail(std::string("unknown escape '\\") + e + "'");
        }
      } else {
        out += c;
      }
    }
    return make(Tok::String, out, line, col);
  }

  Token lexLongString(int line, int col) {
    std::string out;
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated long string literal");
      if (peek() == '"' && peek(1) == '"' && peek(2) == '"') {
        advance();
        advance();
        advance();
        return make(Tok::String, out, line, col);
      }
      char c = advance();
      if (c == '\\') {
        if (pos_ >= text_.size()) fail("unterminated escape");
        char e = advance();
        switch (e) {
          case 't': out += '\t'; break;
          case 'n': out += '\n'; break;
          case 'r': out += '\r'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case 'u': out += lexUnicodeEscape(4); break;
          case 'U': out += lexUnicodeEscape(8); break;
          default: fail(std::string("unknown escape '\\") + e + "'");
        }
      } else {
        out += c;
      }
    }
  }

  std::string lexUnicodeEscape(int digits) {
    unsigned long cp = 0;
    for (int i = 0; i < digits; ++i) {
      if (pos_ >= text_.size() || !std::isxdigit(static_cast<unsigned char>(peek())))
        fail("bad unicode escape");
      char c = advance();
      cp = cp * 16 + static_cast<unsigned long>(
                         std::isdigit(static_cast<unsigned char>(c))
                             ? c - '0'
                             : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
    }
    // Encode as UTF-8.
    std::string out;
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return out;
  }

  Token lexBlankLabel(int line, int col) {
    advance();  // _
    advance();  // :
    std::string label = lexPnamePart();
    if (label.empty()) fail("empty blank node label");
    return make(Tok::BlankLabel, label, line, col);
  }

  Token lexAtWord(int line, int col) {
    advance();  // @
    std::string word;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-'))
      word += advance();
    if (word == "prefix") return make(Tok::PrefixDecl, word, line, col);
    if (word == "base") return make(Tok::BaseDecl, word, line, col);
    if (word.empty()) fail("bare '@'");
    return make(Tok::LangTag, word, line, col);
  }

  Token lexNumber(int line, int col) {
    std::string num;
    if (peek() == '+' || peek() == '-') num += advance();
    bool sawDigit = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      num += advance();
      sawDigit = true;
    }
    if (!sawDigit) fail("digits expected after sign");
    // A '.' only continues the number when followed by a digit; otherwise
    // it terminates the statement.
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      num += advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) num += advance();
      return make(Tok::Decimal, num, line, col);
    }
    return make(Tok::Integer, num, line, col);
  }

  // Trailing dots belong to the statement terminator, not the name:
  // a '.' only continues the name when followed by a non-dot pname char.
  std::string lexPnamePart() {
    std::string out;
    while (pos_ < text_.size() && isPnameChar(peek())) {
      if (peek() == '.') {
        char following = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
        if (!(isPnameChar(following) && following != '.')) break;
      }
      out += advance();
    }
    return out;
  }

  Token lexWord(int line, int col) {
    std::string word = lexPnamePart();
    if (peek() == ':') {
      advance();
      std::string local = lexPnamePart();
      return make(Tok::PName, word + ":" + local, line, col);
    }
    if (word == "a") return make(Tok::KeywordA, word, line, col);
    if (word == "true" || word == "false") return make(Tok::Boolean, word, line, col);
    fail("unexpected token '" + word + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool iriHasScheme(const std::string& iri) {
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) return false;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    char c = iri[i];
    if (c == ':') return true;
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.'))
      return false;
  }
  return false;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::optional<std::string> base)
      : tokens_(std::move(tokens)), base_(std::move(base)) {
    // Explicit labels are reserved so generated ones never collide.
    for (const Token& t : tokens_) {
      if (t.kind == Tok::BlankLabel) usedLabels_.insert(t.text);
    }
  }

  ParsedTurtle run() {
    while (!at(Tok::End)) {
      if (at(Tok::PrefixDecl)) {
        parsePrefixDecl();
      } else if (at(Tok::BaseDecl)) {
        parseBaseDecl();
      } else {
        parseTriples();
      }
    }
    return {std::move(result_.graph), std::move(result_.prefixes)};
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }
  bool at(Tok kind) const { return cur().kind == kind; }

  Token expect(Tok kind, const std::string& what) {
    if (!at(kind))
      throw TurtleError(cur().line, cur().col,
                        "expected " + what + ", got '" + describe(cur()) + "'");
    return tokens_[pos_++];
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "<end of input>";
    if (t.kind == Tok::String) return "\"" + t.text + "\"";
    return t.text;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw TurtleError(cur().line, cur().col, message + " (at '" + describe(cur()) + "')");
  }

  void parsePrefixDecl() {
    ++pos_;  // @prefix
    Token name = expect(Tok::PName, "prefix name");
    auto colon = name.text.find(':');
    if (colon == std::string::npos || colon + 1 != name.text.size())
      throw TurtleError(name.line, name.col, "malformed prefix declaration");
    Token iri = expect(Tok::IriRef, "namespace IRI");
    expect(Tok::Dot, "'.'");
    result_.prefixes.bind(name.text.substr(0, colon), resolveIri(iri));
  }

  void parseBaseDecl() {
    ++pos_;  // @base
    Token iri = expect(Tok::IriRef, "base IRI");
    expect(Tok::Dot, "'.'");
    base_ = resolveIri(iri);
  }

  std::string resolveIri(const Token& token) const {
    if (iriHasScheme(token.text)) return token.text;
    if (!base_)
      throw TurtleError(token.line, token.col,
                        "relative IRI <" + token.text + "> without a base");
    return *base_ + token.text;
  }

  Term parseIriTerm() {
    if (at(Tok::IriRef)) {
      Token t = tokens_[pos_++];
      return Term::iri(resolveIri(t));
    }
    Token t = expect(Tok::PName, "IRI");
    auto colon = t.text.find(':');
    std::string prefix = t.text.substr(0, colon);
    std::string local = t.text.substr(colon + 1);
    auto expanded = result_.prefixes.expand(prefix, local);
    if (!expanded)
      throw TurtleError(t.line, t.col, "unbound prefix '" + prefix + ":'");
    return Term::iri(*expanded);
  }

  Term freshBlank() {
    while (true) {
      std::string label = "b" + std::to_string(blankCounter_++);
      if (usedLabels_.insert(label).second) return Term::blank(label);
    }
  }

  void emit(const Term& s, const Term& p, const Term& o) {
    result_.graph.insert({s, p, o});
  }

  void parseTriples() {
    Term subject = parseSubject();
    // A bare blank-node property list may stand alone as a statement.
    if (subjectWasBracketList_ && at(Tok::Dot)) {
      ++pos_;
      return;
    }
    parsePredicateObjectList(subject);
    expect(Tok::Dot, "'.'");
  }

  Term parseSubject() {
    subjectWasBracketList_ = false;
    if (at(Tok::IriRef) || at(Tok::PName)) return parseIriTerm();
    if (at(Tok::BlankLabel)) {
      Token t = tokens_[pos_++];
      return Term::blank(t.text);
    }
    if (at(Tok::LBracket)) {
      subjectWasBracketList_ = true;
      return parseBlankNodePropertyList();
    }
    if (at(Tok::LParen)) return parseCollection();
    fail("expected subject");
  }

  Term parseVerb() {
    if (at(Tok::KeywordA)) {
      ++pos_;
      return Term::iri(vocab::kRdfType);
    }
    return parseIriTerm();
  }

  void parsePredicateObjectList(const Term& subject) {
    while (true) {
      Term predicate = parseVerb();
      parseObjectList(subject, predicate);
      if (at(Tok::Semicolon)) {
        // Consume runs of semicolons; a trailing one before '.'/']' is legal.
        while (at(Tok::Semicolon)) ++pos_;
        if (at(Tok::Dot) || at(Tok::RBracket)) return;
        continue;
      }
      return;
    }
  }

  void parseObjectList(const Term& subject, const Term& predicate) {
    while (true) {
      Term object = parseObject();
      emit(subject, predicate, object);
      if (at(Tok::Comma)) {
        ++pos_;
        continue;
      }
      return;
    }
  }

  Term parseObject() {
    switch (cur().kind) {
      case Tok::IriRef:
      case Tok::PName:
        return parseIriTerm();
      case Tok::BlankLabel: {
        Token t = tokens_[pos_++];
        return Term::blank(t.text);
      }
      case Tok::LBracket:
        return parseBlankNodePropertyList();
      case Tok::LParen:
        return parseCollection();
      case Tok::String:
        return parseLiteral();
      case Tok::Integer: {
        Token t = tokens_[pos_++];
        return Term::literal(t.text, vocab::kXsdInteger);
      }
      case Tok::Decimal: {
        Token t = tokens_[pos_++];
        return Term::literal(t.text, vocab::kXsdDecimal);
      }
      case Tok::Boolean: {
        Token t = tokens_[pos_++];
        return Term::literal(t.text, vocab::kXsdBoolean);
      }
      default:
        fail("expected object term");
    }
  }

  Term parseLiteral() {
    Token str = expect(Tok::String, "string");
    if (at(Tok::DoubleCaret)) {
      ++pos_;
      Term datatype = parseIriTerm();
      return Term::literal(str.text, datatype.value());
    }
    if (at(Tok::LangTag)) {
      Token lang = tokens_[pos_++];
      return Term::langLiteral(str.text, lang.text);
    }
    return Term::stringLiteral(str.text);
  }

  Term parseBlankNodePropertyList() {
    expect(Tok::LBracket, "'['");
    Term node = freshBlank();
    if (!at(Tok::RBracket)) parsePredicateObjectList(node);
    expect(Tok::RBracket, "']'");
    return node;
  }

  Term parseCollection() {
    expect(Tok::LParen, "'('");
    const Term nil = Term::iri(vocab::kRdfNil);
    const Term first = Term::iri(vocab::kRdfFirst);
    const Term rest = Term::iri(vocab::kRdfRest);
    std::vector<Term> items;
    while (!at(Tok::RParen)) items.push_back(parseObject());
    ++pos_;  // )
    if (items.empty()) return nil;
    std::vector<Term> cells;
    cells.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) cells.push_back(freshBlank());
    for (std::size_t i = 0; i < items.size(); ++i) {
      emit(cells[i], first, items[i]);
      emit(cells[i], rest, i + 1 < items.size() ? cells[i + 1] : nil);
    }
    return cells[0];
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::optional<std::string> base_;
  ParsedTurtle result_;
  std::unordered_set<std::string> usedLabels_;
  int blankCounter_ = 0;
  bool subjectWasBracketList_ = false;
};

// --- Serialization -------------------------------------------------------

std::string quoteLiteral(const std::string& lexical) {
  std::string out = "\"";
  for (char c : lexical) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += "\"";
  return out;
}

bool isCanonicalInteger(const std::string& s) {
  std::size_t i = (s.size() > 1 && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool isCanonicalDecimal(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) return false;
  return isCanonicalInteger(s.substr(0, dot)) && !s.substr(dot + 1).empty() &&
         isCanonicalInteger(s.substr(dot + 1));
}

}  // namespace

std::string renderTerm(const Term& t, const PrefixMap& prefixes) {
  switch (t.kind()) {
    case TermKind::Iri: {
      if (auto curie = prefixes.compact(t.value())) return *curie;
      return "<" + t.value() + ">";
    }
    case TermKind::BlankNode:
      return "_:" + t.value();
    case TermKind::Literal:
      break;
  }
  if (!t.lang().empty()) return quoteLiteral(t.value()) + "@" + t.lang();
  if (t.datatype() == vocab::kXsdString) return quoteLiteral(t.value());
  if (t.datatype() == vocab::kXsdInteger && isCanonicalInteger(t.value())) return t.value();
  if (t.datatype() == vocab::kXsdDecimal && isCanonicalDecimal(t.value())) return t.value();
  if (t.datatype() == vocab::kXsdBoolean && (t.value() == "true" || t.value() == "false"))
    return t.value();
  std::string dt;
  if (auto curie = prefixes.compact(t.datatype()))
    dt = *curie;
  else
    dt = "<" + t.datatype() + ">";
  return quoteLiteral(t.value()) + "^^" + dt;
}

ParsedTurtle parseTurtle(const std::string& text, const std::optional<std::string>& base) {
  Lexer lexer(text);
  Parser parser(lexer.run(), base);
  return parser.run();
}

std::string serializeTurtle(const Graph& graph, const PrefixMap& prefixes) {
  std::ostringstream out;
  for (const auto& [label, ns] : prefixes.bindings())
    out << "@prefix " << label << ": <" << ns << "> .\n";
  if (graph.empty()) return out.str();
  if (!prefixes.empty()) out << "\n";

  // Subject order: IRIs lexicographically, then blank nodes by canonical
  // hash so isomorphic graphs serialize in the same shape.
  auto blankHashes = canonicalBlankNodeHashes(graph);
  auto subjectKey = [&](const Term& s) {
    if (s.isIri()) return std::pair<int, std::string>(0, s.value());
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(blankHashes.at(s.value())));
    return std::pair<int, std::string>(1, std::string(buf) + "|" + s.value());
  };

  std::map<std::pair<int, std::string>, Term> subjects;
  for (const Term& s : graph.subjectList()) subjects.emplace(subjectKey(s), s);

  const Term rdfType = Term::iri(vocab::kRdfType);
  for (const auto& [key, subject] : subjects) {
    // rdf:type first, then predicates in IRI order; objects in canonical order.
    std::map<std::pair<int, Term>, std::set<Term>> groups;
    for (const Triple& t : graph.match(subject, std::nullopt, std::nullopt))
      groups[{t.predicate == rdfType ? 0 : 1, t.predicate}].insert(t.object);

    std::string subjText = renderTerm(subject, prefixes);
    out << subjText;
    bool firstGroup = true;
    for (const auto& [predKey, objects] : groups) {
      if (!firstGroup) out << " ;\n   ";
      firstGroup = false;
      out << " "
          << (predKey.second == rdfType ? "a" : renderTerm(predKey.second, prefixes));
      bool firstObj = true;
      for (const Term& o : objects) {
        out << (firstObj ? " " : " , ") << renderTerm(o, prefixes);
        firstObj = false;
      }
    }
    out << " .\n";
  }
  return out.str();
}

}  // namespace intentcheck::rdf
