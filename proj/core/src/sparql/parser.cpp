#include "intentcheck/sparql/parser.hpp"

#include <algorithm>
#include <cctype>

namespace intentcheck::sparql {

namespace {

using rdf::Term;
using rdf::vocab::kRdfType;
using rdf::vocab::kXsdBoolean;
using rdf::vocab::kXsdDecimal;
using rdf::vocab::kXsdInteger;

enum class Tok {
  Keyword,     // upper-cased keyword text
  Var,         // text = bare name; sigil recorded separately
  IriRef,
  PName,
  KeywordA,
  String,
  Integer,
  Decimal,
  Boolean,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Dot,
  Semicolon,
  Comma,
  Slash,
  Star,
  Bang,
  AndAnd,
  OrOr,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  DoubleCaret,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  bool dollar = false;  // Var only
  int line = 1;
  int col = 1;
};

const char* kUnsupportedKeywords[] = {
    "SERVICE", "MINUS",  "ASK",    "CONSTRUCT", "DESCRIBE", "ORDER",  "LIMIT",
    "OFFSET",  "DISTINCT", "REDUCED", "GRAPH",   "VALUES",   "HAVING", "EXISTS",
};

bool isPnameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skipWs();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", false, line_, col_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& m) const { throw QueryError(line_, col_, m); }

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

  void skipWs() {
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
    Token t;
    t.kind = kind;
    t.text = std::move(text);
    t.line = line;
    t.col = col;
    return t;
  }

  // '<' starts an IRI only when a '>' appears before any whitespace.
  bool looksLikeIri() const {
    for (std::size_t i = pos_ + 1; i < text_.size(); ++i) {
      char c = text_[i];
      if (c == '>') return true;
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '<') return false;
    }
    return false;
  }

  Token next() {
    int line = line_, col = col_;
    char c = peek();
    switch (c) {
      case '{': advance(); return make(Tok::LBrace, "{", line, col);
      case '}': advance(); return make(Tok::RBrace, "}", line, col);
      case '(': advance(); return make(Tok::LParen, "(", line, col);
      case ')': advance(); return make(Tok::RParen, ")", line, col);
      case ';': advance(); return make(Tok::Semicolon, ";", line, col);
      case ',': advance(); return make(Tok::Comma, ",", line, col);
      case '/': advance(); return make(Tok::Slash, "/", line, col);
      case '*': advance(); return make(Tok::Star, "*", line, col);
      default: break;
    }
    if (c == '.') {
      if (std::isdigit(static_cast<unsigned char>(peek(1)))) fail("bare decimal fraction");
      advance();
      return make(Tok::Dot, ".", line, col);
    }
    if (c == '?' || c == '$') {
      advance();
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
        name += advance();
      if (name.empty()) fail("empty variable name");
      Token t = make(Tok::Var, name, line, col);
      t.dollar = (c == '$');
      return t;
    }
    if (c == '<') {
      if (looksLikeIri()) {
        advance();
        std::string iri;
        while (peek() != '>') iri += advance();
        advance();
        return make(Tok::IriRef, iri, line, col);
      }
      advance();
      if (peek() == '=') {
        advance();
        return make(Tok::Le, "<=", line, col);
      }
      return make(Tok::Lt, "<", line, col);
    }
    if (c == '>') {
      advance();
      if (peek() == '=') {
        advance();
        return make(Tok::Ge, ">=", line, col);
      }
      return make(Tok::Gt, ">", line, col);
    }
    if (c == '=') {
      advance();
      return make(Tok::Eq, "=", line, col);
    }
    if (c == '!') {
      advance();
      if (peek() == '=') {
        advance();
        return make(Tok::Ne, "!=", line, col);
      }
      return make(Tok::Bang, "!", line, col);
    }
    if (c == '&') {
      advance();
      if (peek() != '&') fail("expected '&&'");
      advance();
      return make(Tok::AndAnd, "&&", line, col);
    }
    if (c == '|') {
      advance();
      if (peek() != '|') fail("expected '||'");
      advance();
      return make(Tok::OrOr, "||", line, col);
    }
    if (c == '^') {
      advance();
      if (peek() != '^') fail("expected '^^'");
      advance();
      return make(Tok::DoubleCaret, "^^", line, col);
    }
    if (c == '"') {
      advance();
      std::string s;
      while (true) {
        if (pos_ >= text_.size()) fail("unterminated string");
        char d = advance();
        if (d == '"') break;
        if (d == '\\') {
          char e = advance();
          switch (e) {
            case 't': s += '\t'; break;
            case 'n': s += '\n'; break;
            case 'r': s += '\r'; break;
            case '"': s += '"'; break;
            case '\\': s += '\\'; break;
            default: fail("unknown escape in string");
          }
        } else {
          s += d;
        }
      }
      return make(Tok::String, s, line, col);
    }
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      if (c == '+' || c == '-') num += advance();
      bool digits = false;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        num += advance();
        digits = true;
      }
      if (!digits) fail("digits expected");
      if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        num += advance();
        while (std::isdigit(static_cast<unsigned char>(peek()))) num += advance();
        return make(Tok::Decimal, num, line, col);
      }
      return make(Tok::Integer, num, line, col);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':') {
      std::string word;
      while (pos_ < text_.size() && isPnameChar(peek())) {
        if (peek() == '.') {
          char following = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
          if (!(isPnameChar(following) && following != '.')) break;
        }
        word += advance();
      }
      if (peek() == ':') {
        advance();
        std::string local;
        while (pos_ < text_.size() && isPnameChar(peek())) {
          if (peek() == '.') {
            char following = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
            if (!(isPnameChar(following) && following != '.')) break;
          }
          local += advance();
        }
        return make(Tok::PName, word + ":" + local, line, col);
      }
      if (word == "a") return make(Tok::KeywordA, word, line, col);
      if (word == "true" || word == "false") return make(Tok::Boolean, word, line, col);
      std::string upper = word;
      std::transform(upper.begin(), upper.end(), upper.begin(),
                     [](unsigned char ch) { return std::toupper(ch); });
      return make(Tok::Keyword, upper, line, col);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const rdf::PrefixMap& prefixes)
      : tokens_(std::move(tokens)), prefixes_(prefixes) {}

  std::shared_ptr<const Query> run(const std::string& text) {
    auto query = parseSelect(/*isSubselect=*/false);
    expect(Tok::End, "end of query");
    query->text = text;
    for (const auto& name : dollarVars_) query->preBindable.insert(name);
    return query;
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }
  bool at(Tok kind) const { return cur().kind == kind; }
  bool atKeyword(const std::string& kw) const {
    return cur().kind == Tok::Keyword && cur().text == kw;
  }

  [[noreturn]] void fail(const std::string& m) const {
    throw QueryError(cur().line, cur().col, m);
  }

  Token expect(Tok kind, const std::string& what) {
    if (!at(kind)) fail("expected " + what + ", got '" + cur().text + "'");
    return tokens_[pos_++];
  }

  Token expectKeyword(const std::string& kw) {
    if (!atKeyword(kw)) fail("expected " + kw + ", got '" + cur().text + "'");
    return tokens_[pos_++];
  }

  void checkUnsupported() const {
    if (cur().kind != Tok::Keyword) return;
    for (const char* kw : kUnsupportedKeywords) {
      if (cur().text == kw) fail("unsupported construct: " + cur().text);
    }
  }

  std::string parseVarName() {
    Token v = expect(Tok::Var, "variable");
    if (v.dollar) dollarVars_.insert(v.text);
    return v.text;
  }

  Term parseIri() {
    if (at(Tok::IriRef)) return Term::iri(tokens_[pos_++].text);
    Token t = expect(Tok::PName, "IRI");
    auto colon = t.text.find(':');
    std::string prefix = t.text.substr(0, colon);
    std::string local = t.text.substr(colon + 1);
    auto expanded = prefixes_.expand(prefix, local);
    if (!expanded) throw QueryError(t.line, t.col, "unbound prefix '" + prefix + ":'");
    return Term::iri(*expanded);
  }

  std::shared_ptr<Query> parseSelect(bool isSubselect) {
    expectKeyword("SELECT");
    auto query = std::make_shared<Query>();
    if (at(Tok::Star)) fail("unsupported construct: SELECT *");

    bool sawProjection = false;
    while (true) {
      checkUnsupported();
      if (at(Tok::Var)) {
        query->projection.push_back(parseVarName());
        sawProjection = true;
        continue;
      }
      if (at(Tok::LParen)) {
        // (COUNT(?v) AS ?alias)
        ++pos_;
        expectKeyword("COUNT");
        expect(Tok::LParen, "'('");
        std::string counted = parseVarName();
        expect(Tok::RParen, "')'");
        expectKeyword("AS");
        std::string alias = parseVarName();
        expect(Tok::RParen, "')'");
        if (query->aggregate) fail("only a single COUNT aggregate is supported");
        query->aggregate = Aggregate{counted, alias, {}};
        query->projection.push_back(alias);
        sawProjection = true;
        continue;
      }
      break;
    }
    if (!sawProjection) fail("projection expected after SELECT");

    if (atKeyword("WHERE")) ++pos_;
    query->where = parseGroup();

    if (atKeyword("GROUP")) {
      ++pos_;
      expectKeyword("BY");
      if (!query->aggregate) fail("GROUP BY without COUNT aggregate");
      while (at(Tok::Var)) query->aggregate->groupBy.push_back(parseVarName());
      if (query->aggregate->groupBy.empty()) fail("GROUP BY requires variables");
    }
    if (query->aggregate && !isSubselect)
      fail("unsupported construct: aggregation outside a sub-select");
    if (query->aggregate && query->aggregate->groupBy.empty())
      fail("COUNT aggregate requires GROUP BY");
    return query;
  }

  GroupPattern parseGroup() {
    expect(Tok::LBrace, "'{'");
    GroupPattern group;
    while (!at(Tok::RBrace)) {
      checkUnsupported();
      if (at(Tok::End)) fail("unterminated group");
      if (at(Tok::LBrace)) {
        group.elements.push_back(parseGroupOrUnion());
        continue;
      }
      if (atKeyword("OPTIONAL")) {
        ++pos_;
        Element e;
        e.kind = Element::Kind::Optional;
        e.groupA = std::make_unique<GroupPattern>(parseGroup());
        group.elements.push_back(std::move(e));
        continue;
      }
      if (atKeyword("FILTER")) {
        ++pos_;
        if (atKeyword("NOT")) {
          ++pos_;
          if (!atKeyword("EXISTS")) fail("expected EXISTS after NOT");
          ++pos_;
          Element e;
          e.kind = Element::Kind::NotExists;
          e.groupA = std::make_unique<GroupPattern>(parseGroup());
          group.elements.push_back(std::move(e));
        } else {
          Element e;
          e.kind = Element::Kind::Filter;
          expect(Tok::LParen, "'('");
          e.expr = parseExpr();
          expect(Tok::RParen, "')'");
          group.elements.push_back(std::move(e));
        }
        continue;
      }
      if (atKeyword("BIND")) {
        ++pos_;
        expect(Tok::LParen, "'('");
        Element e;
        e.kind = Element::Kind::Bind;
        e.expr = parseExpr();
        expectKeyword("AS");
        e.bindVar = parseVarName();
        expect(Tok::RParen, "')'");
        group.elements.push_back(std::move(e));
        continue;
      }
      if (atKeyword("SELECT")) {
        Element e;
        e.kind = Element::Kind::SubSelect;
        e.subquery = parseSelect(/*isSubselect=*/true);
        group.elements.push_back(std::move(e));
        continue;
      }
      if (cur().kind == Tok::Keyword) fail("unsupported construct: " + cur().text);
      parseTriplesBlock(group);
    }
    ++pos_;  // }
    return group;
  }

  // { ... } possibly chained with UNION; a plain braced group joins inline.
  Element parseGroupOrUnion() {
    GroupPattern first = parseGroup();
    if (!atKeyword("UNION")) {
      Element e;
      e.kind = Element::Kind::Group;
      e.groupA = std::make_unique<GroupPattern>(std::move(first));
      return e;
    }
    Element unionElement;
    unionElement.kind = Element::Kind::Union;
    unionElement.groupA = std::make_unique<GroupPattern>(std::move(first));
    ++pos_;  // UNION
    unionElement.groupB = std::make_unique<GroupPattern>(parseGroup());
    while (atKeyword("UNION")) {
      ++pos_;
      Element outer;
      outer.kind = Element::Kind::Union;
      outer.groupA = std::make_unique<GroupPattern>();
      outer.groupA->elements.push_back(std::move(unionElement));
      outer.groupB = std::make_unique<GroupPattern>(parseGroup());
      unionElement = std::move(outer);
    }
    return unionElement;
  }

  PatTerm parseTermSlot() {
    if (at(Tok::Var)) return PatTerm::variable(parseVarName());
    if (at(Tok::IriRef) || at(Tok::PName)) return PatTerm::constant(parseIri());
    if (at(Tok::String)) {
      Token s = tokens_[pos_++];
      if (at(Tok::DoubleCaret)) {
        ++pos_;
        Term dt = parseIri();
        return PatTerm::constant(Term::literal(s.text, dt.value()));
      }
      return PatTerm::constant(Term::stringLiteral(s.text));
    }
    if (at(Tok::Integer)) {
      Token t = tokens_[pos_++];
      return PatTerm::constant(Term::literal(t.text, kXsdInteger));
    }
    if (at(Tok::Decimal)) {
      Token t = tokens_[pos_++];
      return PatTerm::constant(Term::literal(t.text, kXsdDecimal));
    }
    if (at(Tok::Boolean)) {
      Token t = tokens_[pos_++];
      return PatTerm::constant(Term::literal(t.text, kXsdBoolean));
    }
    fail("expected term");
  }

  std::unique_ptr<PathExpr> makePredicatePath(Term iri) {
    auto p = std::make_unique<PathExpr>();
    p->kind = PathExpr::Kind::Predicate;
    p->predicate = std::move(iri);
    return p;
  }

  // path := segment ('/' segment)* ; segment := (iri | 'a') '*'?
  std::variant<PatTerm, std::unique_ptr<PathExpr>> parseVerb() {
    if (at(Tok::Var)) return PatTerm::variable(parseVarName());
    Term first = at(Tok::KeywordA) ? (++pos_, Term::iri(kRdfType)) : parseIri();
    bool anyPathSyntax = false;
    auto path = makePredicatePath(first);
    if (at(Tok::Star)) {
      ++pos_;
      anyPathSyntax = true;
      auto closure = std::make_unique<PathExpr>();
      closure->kind = PathExpr::Kind::ZeroOrMore;
      closure->inner = std::move(path);
      path = std::move(closure);
    }
    while (at(Tok::Slash)) {
      ++pos_;
      anyPathSyntax = true;
      Term next = at(Tok::KeywordA) ? (++pos_, Term::iri(kRdfType)) : parseIri();
      auto segment = makePredicatePath(next);
      if (at(Tok::Star)) {
        ++pos_;
        auto closure = std::make_unique<PathExpr>();
        closure->kind = PathExpr::Kind::ZeroOrMore;
        closure->inner = std::move(segment);
        segment = std::move(closure);
      }
      auto seq = std::make_unique<PathExpr>();
      seq->kind = PathExpr::Kind::Sequence;
      seq->left = std::move(path);
      seq->right = std::move(segment);
      path = std::move(seq);
    }
    if (!anyPathSyntax) return PatTerm::constant(path->predicate);
    return path;
  }

  void parseTriplesBlock(GroupPattern& group) {
    PatTerm subject = parseTermSlot();
    if (subject.isVar == false && subject.term.isLiteral())
      fail("literal in subject position");
    while (true) {
      auto verb = parseVerb();
      // object list
      while (true) {
        Element e;
        e.kind = Element::Kind::Triple;
        e.triple.subject = subject;
        if (std::holds_alternative<PatTerm>(verb)) {
          e.triple.predicate = std::get<PatTerm>(verb);
        } else {
          e.triple.predicate = clonePath(*std::get<std::unique_ptr<PathExpr>>(verb));
        }
        e.triple.object = parseTermSlot();
        group.elements.push_back(std::move(e));
        if (at(Tok::Comma)) {
          ++pos_;
          continue;
        }
        break;
      }
      if (at(Tok::Semicolon)) {
        while (at(Tok::Semicolon)) ++pos_;
        if (at(Tok::Dot) || at(Tok::RBrace)) break;
        continue;
      }
      break;
    }
    if (at(Tok::Dot)) ++pos_;
  }

  static std::unique_ptr<PathExpr> clonePath(const PathExpr& p) {
    auto out = std::make_unique<PathExpr>();
    out->kind = p.kind;
    out->predicate = p.predicate;
    if (p.left) out->left = clonePath(*p.left);
    if (p.right) out->right = clonePath(*p.right);
    if (p.inner) out->inner = clonePath(*p.inner);
    return out;
  }

  // expr := or ; or := and ('||' and)* ; and := rel ('&&' rel)* ;
  // rel := unary (cmp unary)? ; unary := '!' unary | primary
  std::unique_ptr<Expr> parseExpr() { return parseOr(); }

  std::unique_ptr<Expr> parseOr() {
    auto left = parseAnd();
    while (at(Tok::OrOr)) {
      ++pos_;
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::Or;
      e->args.push_back(std::move(left));
      e->args.push_back(parseAnd());
      left = std::move(e);
    }
    return left;
  }

  std::unique_ptr<Expr> parseAnd() {
    auto left = parseRel();
    while (at(Tok::AndAnd)) {
      ++pos_;
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::And;
      e->args.push_back(std::move(left));
      e->args.push_back(parseRel());
      left = std::move(e);
    }
    return left;
  }

  std::unique_ptr<Expr> parseRel() {
    auto left = parseUnary();
    Expr::CmpOp op;
    switch (cur().kind) {
      case Tok::Lt: op = Expr::CmpOp::Lt; break;
      case Tok::Le: op = Expr::CmpOp::Le; break;
      case Tok::Gt: op = Expr::CmpOp::Gt; break;
      case Tok::Ge: op = Expr::CmpOp::Ge; break;
      case Tok::Eq: op = Expr::CmpOp::Eq; break;
      case Tok::Ne: op = Expr::CmpOp::Ne; break;
      default: return left;
    }
    ++pos_;
    auto e = std::make_unique<Expr>();
    e->kind = Expr::Kind::Compare;
    e->op = op;
    e->args.push_back(std::move(left));
    e->args.push_back(parseUnary());
    return e;
  }

  std::unique_ptr<Expr> parseUnary() {
    if (at(Tok::Bang)) {
      ++pos_;
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::Not;
      e->args.push_back(parseUnary());
      return e;
    }
    return parsePrimary();
  }

  std::unique_ptr<Expr> parseBuiltin(Expr::Kind kind, int arity) {
    ++pos_;
    expect(Tok::LParen, "'('");
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    for (int i = 0; i < arity; ++i) {
      if (i > 0) expect(Tok::Comma, "','");
      e->args.push_back(parseExpr());
    }
    expect(Tok::RParen, "')'");
    return e;
  }

  std::unique_ptr<Expr> parsePrimary() {
    if (at(Tok::LParen)) {
      ++pos_;
      auto e = parseExpr();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (at(Tok::Var)) {
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::Var;
      e->var = parseVarName();
      return e;
    }
    if (cur().kind == Tok::Keyword) {
      const std::string& kw = cur().text;
      if (kw == "BOUND") {
        ++pos_;
        expect(Tok::LParen, "'('");
        auto e = std::make_unique<Expr>();
        e->kind = Expr::Kind::Bound;
        e->var = parseVarName();
        expect(Tok::RParen, "')'");
        return e;
      }
      if (kw == "IF") return parseBuiltin(Expr::Kind::If, 3);
      if (kw == "STR") return parseBuiltin(Expr::Kind::Str, 1);
      if (kw == "STRSTARTS") return parseBuiltin(Expr::Kind::StrStarts, 2);
      if (kw == "ISLITERAL") return parseBuiltin(Expr::Kind::IsLiteral, 1);
      if (kw == "DATATYPE") return parseBuiltin(Expr::Kind::Datatype, 1);
      fail("unsupported builtin: " + kw);
    }
    // Constant term.
    auto e = std::make_unique<Expr>();
    e->kind = Expr::Kind::Const;
    PatTerm t = parseTermSlot();
    e->constant = t.term;
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const rdf::PrefixMap& prefixes_;
  std::set<std::string> dollarVars_;
};

void collectIrisFromExpr(const Expr& e, std::set<Term>& out) {
  if (e.kind == Expr::Kind::Const && e.constant.isIri()) out.insert(e.constant);
  for (const auto& a : e.args) collectIrisFromExpr(*a, out);
}

void collectIrisFromPath(const PathExpr& p, std::set<Term>& out) {
  if (p.kind == PathExpr::Kind::Predicate) out.insert(p.predicate);
  if (p.left) collectIrisFromPath(*p.left, out);
  if (p.right) collectIrisFromPath(*p.right, out);
  if (p.inner) collectIrisFromPath(*p.inner, out);
}

void collectIrisFromGroup(const GroupPattern& g, std::set<Term>& out);

void collectIrisFromElement(const Element& e, std::set<Term>& out) {
  switch (e.kind) {
    case Element::Kind::Triple: {
      if (!e.triple.subject.isVar && e.triple.subject.term.isIri())
        out.insert(e.triple.subject.term);
      if (std::holds_alternative<PatTerm>(e.triple.predicate)) {
        const PatTerm& p = std::get<PatTerm>(e.triple.predicate);
        if (!p.isVar && p.term.isIri()) out.insert(p.term);
      } else {
        collectIrisFromPath(*std::get<std::unique_ptr<PathExpr>>(e.triple.predicate), out);
      }
      if (!e.triple.object.isVar && e.triple.object.term.isIri())
        out.insert(e.triple.object.term);
      break;
    }
    case Element::Kind::Group:
    case Element::Kind::Optional:
    case Element::Kind::NotExists:
      collectIrisFromGroup(*e.groupA, out);
      break;
    case Element::Kind::Union:
      collectIrisFromGroup(*e.groupA, out);
      collectIrisFromGroup(*e.groupB, out);
      break;
    case Element::Kind::Filter:
    case Element::Kind::Bind:
      collectIrisFromExpr(*e.expr, out);
      break;
    case Element::Kind::SubSelect:
      collectIrisFromGroup(e.subquery->where, out);
      break;
  }
}

void collectIrisFromGroup(const GroupPattern& g, std::set<Term>& out) {
  for (const Element& e : g.elements) collectIrisFromElement(e, out);
}

}  // namespace

bool Solution::compatibleWith(const Solution& other) const {
  const Solution* small = this;
  const Solution* large = &other;
  if (small->bindings.size() > large->bindings.size()) std::swap(small, large);
  for (const auto& [name, term] : small->bindings) {
    auto it = large->bindings.find(name);
    if (it != large->bindings.end() && !(it->second == term)) return false;
  }
  return true;
}

Solution Solution::mergedWith(const Solution& other) const {
  Solution out = *this;
  for (const auto& [name, term] : other.bindings) out.bindings.emplace(name, term);
  return out;
}

std::string Solution::toString() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, term] : bindings) {
    if (!first) out += ", ";
    first = false;
    out += "?" + name + "=" + term.toString();
  }
  return out + "}";
}

std::set<Term> mentionedIris(const Query& query) {
  std::set<Term> out;
  collectIrisFromGroup(query.where, out);
  return out;
}

std::shared_ptr<const Query> parseQuery(const std::string& text,
                                        const rdf::PrefixMap& prefixes) {
  Lexer lexer(text);
  Parser parser(lexer.run(), prefixes);
  return parser.run(text);
}

}  // namespace intentcheck::sparql
