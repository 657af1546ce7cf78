#include "fitl/kb/parser.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace fitl::kb {

namespace {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string position_text(SourcePos pos) {
  std::ostringstream os;
  os << "line " << pos.line << ", column " << pos.column;
  return os.str();
}

// --- lexer ---

struct Token {
  enum class Type {
    kEnd,
    kNewline,
    kIdent,
    kNumber,
    kLParen,
    kRParen,
    kComma,
    kApproxEq,
  };

  Type type = Type::kEnd;
  std::string text;
  double number = 0.0;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> tokenize() {
    std::vector<Token> out;
    while (true) {
      skip_blanks();
      SourcePos pos{line_, column_};
      if (at_end()) {
        out.push_back({Token::Type::kEnd, "", 0.0, pos});
        return out;
      }
      const char ch = peek();
      if (ch == '\n') {
        advance();
        out.push_back({Token::Type::kNewline, "\n", 0.0, pos});
        continue;
      }
      if (ch == '#') {
        while (!at_end() && peek() != '\n') advance();
        continue;
      }
      if (ch == '(') {
        advance();
        out.push_back({Token::Type::kLParen, "(", 0.0, pos});
        continue;
      }
      if (ch == ')') {
        advance();
        out.push_back({Token::Type::kRParen, ")", 0.0, pos});
        continue;
      }
      if (ch == ',') {
        advance();
        out.push_back({Token::Type::kComma, ",", 0.0, pos});
        continue;
      }
      if (ch == '~') {
        advance();
        if (at_end() || peek() != '=')
          throw ParseError(ParseError::Kind::kLexical, pos,
                           "expected '=' after '~'");
        advance();
        out.push_back({Token::Type::kApproxEq, "~=", 0.0, pos});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::string ident;
        while (!at_end() &&
               (std::isalnum(static_cast<unsigned char>(peek())) ||
                peek() == '_'))
          ident.push_back(advance());
        out.push_back({Token::Type::kIdent, ident, 0.0, pos});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' ||
          ch == '+' || ch == '.') {
        out.push_back(lex_number(pos));
        continue;
      }
      throw ParseError(ParseError::Kind::kLexical, pos,
                       std::string("unexpected character '") + ch + "'");
    }
  }

 private:
  bool at_end() const { return index_ >= text_.size(); }
  char peek() const { return text_[index_]; }

  char advance() {
    const char ch = text_[index_++];
    if (ch == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return ch;
  }

  void skip_blanks() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r'))
      advance();
  }

  Token lex_number(SourcePos pos) {
    std::string digits;
    if (peek() == '-' || peek() == '+') digits.push_back(advance());
    bool any_digit = false;
    auto take_digits = [&] {
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        digits.push_back(advance());
        any_digit = true;
      }
    };
    take_digits();
    if (!at_end() && peek() == '.') {
      digits.push_back(advance());
      take_digits();
    }
    if (!any_digit)
      throw ParseError(ParseError::Kind::kLexical, pos, "malformed number");
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      digits.push_back(advance());
      if (!at_end() && (peek() == '-' || peek() == '+'))
        digits.push_back(advance());
      bool exp_digit = false;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        digits.push_back(advance());
        exp_digit = true;
      }
      if (!exp_digit)
        throw ParseError(ParseError::Kind::kLexical, pos,
                         "malformed exponent in number");
    }
    const double value = std::strtod(digits.c_str(), nullptr);
    return {Token::Type::kNumber, digits, value, pos};
  }

  std::string_view text_;
  std::size_t index_ = 0;
  int line_ = 1;
  int column_ = 1;
};

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {
      "event",    "fixed", "trainable", "init",   "logits", "trapezoid",
      "happ",     "scalar", "horizon",  "constraint", "duration", "at",
      "not",      "and",   "bf",        "af",     "mt",     "ol",
      "st",       "dr",    "fin",       "eq",     "in",     "Start",
      "End",      "Before", "After"};
  return words;
}

const std::map<std::string, RelationKind>& relation_words() {
  static const std::map<std::string, RelationKind> words = {
      {"bf", RelationKind::kBf}, {"af", RelationKind::kAf},
      {"mt", RelationKind::kMt}, {"ol", RelationKind::kOl},
      {"st", RelationKind::kSt}, {"dr", RelationKind::kDr},
      {"fin", RelationKind::kFin}, {"eq", RelationKind::kEq},
      {"in", RelationKind::kIn}};
  return words;
}

// --- parser ---

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Program parse() {
    Program program;
    while (true) {
      skip_newlines();
      if (peek().type == Token::Type::kEnd) break;
      const Token& head = expect_ident("expected a declaration or constraint");
      if (head.text == "event") {
        program.events.push_back(parse_event(head.pos));
      } else if (head.text == "scalar") {
        program.scalars.push_back(parse_scalar(head.pos));
      } else if (head.text == "horizon") {
        if (program.horizon)
          throw ParseError(ParseError::Kind::kSemantic, head.pos,
                           "duplicate horizon declaration");
        program.horizon = expect_number("expected the horizon length").number;
      } else if (head.text == "constraint") {
        program.constraints.push_back(parse_expr());
      } else {
        throw ParseError(ParseError::Kind::kSyntax, head.pos,
                         "expected 'event', 'scalar', 'horizon' or "
                         "'constraint', got '" +
                             head.text + "'");
      }
      end_of_line();
    }
    return program;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& advance() { return tokens_[index_++]; }

  bool peek_ident(const char* word) const {
    return peek().type == Token::Type::kIdent && peek().text == word;
  }

  const Token& expect(Token::Type type, const char* what) {
    if (peek().type != type)
      throw ParseError(ParseError::Kind::kSyntax, peek().pos,
                       std::string(what) + ", got '" + describe(peek()) + "'");
    return advance();
  }

  const Token& expect_ident(const char* what) {
    return expect(Token::Type::kIdent, what);
  }
  const Token& expect_number(const char* what) {
    return expect(Token::Type::kNumber, what);
  }

  void expect_word(const char* word) {
    if (!peek_ident(word))
      throw ParseError(ParseError::Kind::kSyntax, peek().pos,
                       std::string("expected '") + word + "', got '" +
                           describe(peek()) + "'");
    advance();
  }

  static std::string describe(const Token& token) {
    switch (token.type) {
      case Token::Type::kEnd:
        return "end of input";
      case Token::Type::kNewline:
        return "end of line";
      default:
        return token.text;
    }
  }

  void skip_newlines() {
    while (peek().type == Token::Type::kNewline) advance();
  }

  void end_of_line() {
    if (peek().type == Token::Type::kNewline) {
      advance();
      return;
    }
    if (peek().type == Token::Type::kEnd) return;
    throw ParseError(ParseError::Kind::kSyntax, peek().pos,
                     "unexpected trailing input '" + describe(peek()) + "'");
  }

  std::string parse_name() {
    const Token& tok = expect_ident("expected a name");
    if (reserved_words().count(tok.text))
      throw ParseError(ParseError::Kind::kSyntax, tok.pos,
                       "'" + tok.text + "' is a reserved word");
    return tok.text;
  }

  EventDecl parse_event(SourcePos pos) {
    EventDecl decl;
    decl.pos = pos;
    decl.name = parse_name();
    const Token& mode = expect_ident("expected 'fixed' or 'trainable'");
    if (mode.text == "fixed") {
      decl.trainable = false;
      expect_word("trapezoid");
      expect(Token::Type::kLParen, "expected '('");
      double* fields[4] = {&decl.a, &decl.b, &decl.c, &decl.d};
      for (int i = 0; i < 4; ++i) {
        if (i > 0) expect(Token::Type::kComma, "expected ','");
        *fields[i] = expect_number("expected a trapezoid parameter").number;
      }
      expect(Token::Type::kRParen, "expected ')'");
      if (!(decl.a <= decl.b && decl.b <= decl.c && decl.c <= decl.d))
        throw ParseError(ParseError::Kind::kSemantic, mode.pos,
                         "malformed trapezoid: parameters must satisfy "
                         "a <= b <= c <= d");
      if (peek_ident("happ")) {
        advance();
        decl.happ = expect_number("expected a happening degree").number;
        if (!(decl.happ >= 0.0 && decl.happ <= 1.0))
          throw ParseError(ParseError::Kind::kSemantic, mode.pos,
                           "happening degree must lie in [0,1]");
      }
    } else if (mode.text == "trainable") {
      decl.trainable = true;
      if (peek_ident("init")) {
        advance();
        expect_word("logits");
        expect(Token::Type::kLParen, "expected '('");
        for (int i = 0; i < 5; ++i) {
          if (i > 0) expect(Token::Type::kComma, "expected ','");
          decl.logits[static_cast<std::size_t>(i)] =
              expect_number("expected a logit value").number;
        }
        expect(Token::Type::kRParen, "expected ')'");
      }
    } else {
      throw ParseError(ParseError::Kind::kSyntax, mode.pos,
                       "expected 'fixed' or 'trainable', got '" + mode.text +
                           "'");
    }
    return decl;
  }

  ScalarDecl parse_scalar(SourcePos pos) {
    ScalarDecl decl;
    decl.pos = pos;
    decl.name = parse_name();
    expect_word("trainable");
    if (peek_ident("init")) {
      advance();
      decl.init = expect_number("expected an initial value").number;
    }
    return decl;
  }

  std::unique_ptr<Formula> parse_expr() {
    auto left = parse_unary();
    while (peek_ident("and")) {
      const SourcePos pos = advance().pos;
      auto right = parse_unary();
      auto conj = std::make_unique<Formula>();
      conj->kind = Formula::Kind::kAnd;
      conj->child1 = std::move(left);
      conj->child2 = std::move(right);
      conj->pos = pos;
      left = std::move(conj);
    }
    return left;
  }

  std::unique_ptr<Formula> parse_unary() {
    if (peek_ident("not")) {
      const SourcePos pos = advance().pos;
      auto neg = std::make_unique<Formula>();
      neg->kind = Formula::Kind::kNot;
      neg->child1 = parse_unary();
      neg->pos = pos;
      return neg;
    }
    return parse_primary();
  }

  std::unique_ptr<Formula> parse_primary() {
    if (peek().type == Token::Type::kLParen) {
      advance();
      auto inner = parse_expr();
      expect(Token::Type::kRParen, "expected ')'");
      return inner;
    }
    if (peek_ident("duration")) {
      const SourcePos pos = advance().pos;
      expect(Token::Type::kLParen, "expected '('");
      auto formula = std::make_unique<Formula>();
      formula->kind = Formula::Kind::kDurationApprox;
      formula->event_name = parse_name();
      formula->pos = pos;
      expect(Token::Type::kRParen, "expected ')'");
      expect(Token::Type::kApproxEq, "expected '~='");
      formula->target = expect_number("expected a duration target").number;
      return formula;
    }
    if (peek_ident("happ")) {
      const SourcePos pos = advance().pos;
      expect(Token::Type::kLParen, "expected '('");
      auto formula = std::make_unique<Formula>();
      formula->kind = Formula::Kind::kHapp;
      formula->event_name = parse_name();
      formula->pos = pos;
      expect(Token::Type::kRParen, "expected ')'");
      return formula;
    }

    auto lhs = parse_term();
    if (peek().type == Token::Type::kIdent) {
      auto rel = relation_words().find(peek().text);
      if (rel != relation_words().end()) {
        const SourcePos pos = advance().pos;
        auto formula = std::make_unique<Formula>();
        formula->kind = Formula::Kind::kRelation;
        formula->relation = rel->second;
        formula->lhs = std::move(lhs);
        formula->rhs = parse_term();
        formula->pos = pos;
        return formula;
      }
      if (peek().text == "at") {
        const SourcePos pos = advance().pos;
        auto formula = std::make_unique<Formula>();
        formula->kind = Formula::Kind::kMembershipAt;
        formula->lhs = std::move(lhs);
        formula->pos = pos;
        formula->time.pos = peek().pos;
        if (peek().type == Token::Type::kNumber) {
          formula->time.value = advance().number;
        } else {
          formula->time.is_ref = true;
          formula->time.name = parse_name();
        }
        return formula;
      }
    }
    throw ParseError(ParseError::Kind::kSyntax, peek().pos,
                     "expected a relation keyword or 'at' after the term, "
                     "got '" +
                         describe(peek()) + "'");
  }

  std::unique_ptr<Term> parse_term() {
    const Token& tok = expect_ident("expected a term");
    auto term = std::make_unique<Term>();
    term->pos = tok.pos;
    if (tok.text == "Start" || tok.text == "End" || tok.text == "Before" ||
        tok.text == "After") {
      term->op = tok.text == "Start"    ? Term::Op::kStart
                 : tok.text == "End"    ? Term::Op::kEnd
                 : tok.text == "Before" ? Term::Op::kBefore
                                        : Term::Op::kAfter;
      expect(Token::Type::kLParen, "expected '('");
      term->arg = parse_term();
      expect(Token::Type::kRParen, "expected ')'");
      return term;
    }
    if (reserved_words().count(tok.text))
      throw ParseError(ParseError::Kind::kSyntax, tok.pos,
                       "'" + tok.text + "' is a reserved word");
    term->op = Term::Op::kRef;
    term->name = tok.text;
    return term;
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

// --- semantic validation ---

struct Sides {
  bool left_infinite = false;
  bool right_infinite = false;
};

class Checker {
 public:
  explicit Checker(const Program& program) : program_(program) {}

  void run() {
    for (const auto& ev : program_.events) declare(ev.name, ev.pos, true);
    for (const auto& sc : program_.scalars) declare(sc.name, sc.pos, false);
    if (program_.horizon && !(*program_.horizon > 0.0))
      throw ParseError(ParseError::Kind::kSemantic, SourcePos{1, 1},
                       "horizon must be positive");
    for (const auto& f : program_.constraints) check_formula(*f);
  }

 private:
  void declare(const std::string& name, SourcePos pos, bool is_event) {
    if (events_.count(name) || scalars_.count(name))
      throw ParseError(ParseError::Kind::kSemantic, pos,
                       "duplicate declaration of '" + name + "'");
    (is_event ? events_ : scalars_).insert(name);
  }

  void require_event(const std::string& name, SourcePos pos) const {
    if (!events_.count(name))
      throw ParseError(ParseError::Kind::kSemantic, pos,
                       "undeclared event '" + name + "'");
  }

  Sides check_term(const Term& term) const {
    switch (term.op) {
      case Term::Op::kRef:
        require_event(term.name, term.pos);
        return {};
      case Term::Op::kBefore: {
        Sides s = check_term(*term.arg);
        if (s.left_infinite)
          throw ParseError(ParseError::Kind::kSemantic, term.pos,
                           "Before of a left-infinite term is undefined");
        return {true, false};
      }
      case Term::Op::kAfter: {
        Sides s = check_term(*term.arg);
        if (s.right_infinite)
          throw ParseError(ParseError::Kind::kSemantic, term.pos,
                           "After of a right-infinite term is undefined");
        return {false, true};
      }
      case Term::Op::kStart: {
        Sides s = check_term(*term.arg);
        if (s.left_infinite)
          throw ParseError(ParseError::Kind::kSemantic, term.pos,
                           "Start of a left-infinite term is undefined");
        return {};
      }
      case Term::Op::kEnd: {
        Sides s = check_term(*term.arg);
        if (s.right_infinite)
          throw ParseError(ParseError::Kind::kSemantic, term.pos,
                           "End of a right-infinite term is undefined");
        return {};
      }
    }
    throw std::logic_error("unknown term op");
  }

  void require_finite(const Sides& sides, SourcePos pos,
                      const char* role) const {
    if (sides.left_infinite || sides.right_infinite)
      throw ParseError(ParseError::Kind::kSemantic, pos,
                       std::string(role) +
                           " must have finite duration in this relation");
  }

  void check_formula(const Formula& f) const {
    switch (f.kind) {
      case Formula::Kind::kRelation: {
        Sides lhs = check_term(*f.lhs);
        Sides rhs = check_term(*f.rhs);
        switch (f.relation) {
          case RelationKind::kIn:
            require_finite(lhs, f.pos, "the contained operand");
            break;
          case RelationKind::kEq:
            require_finite(lhs, f.pos, "the left operand");
            require_finite(rhs, f.pos, "the right operand");
            break;
          case RelationKind::kBf:
            require_finite(lhs, f.pos, "the left operand");
            if (rhs.left_infinite)
              throw ParseError(ParseError::Kind::kSemantic, f.pos,
                               "bf needs a left-finite right operand");
            break;
          case RelationKind::kAf:
            require_finite(lhs, f.pos, "the left operand");
            if (rhs.right_infinite)
              throw ParseError(ParseError::Kind::kSemantic, f.pos,
                               "af needs a right-finite right operand");
            break;
          case RelationKind::kMt:
            if (lhs.right_infinite)
              throw ParseError(ParseError::Kind::kSemantic, f.pos,
                               "mt needs a right-finite left operand");
            if (rhs.left_infinite)
              throw ParseError(ParseError::Kind::kSemantic, f.pos,
                               "mt needs a left-finite right operand");
            break;
          case RelationKind::kSt:
          case RelationKind::kDr:
          case RelationKind::kFin:
          case RelationKind::kOl:
            require_finite(lhs, f.pos, "the left operand");
            require_finite(rhs, f.pos, "the right operand");
            break;
        }
        break;
      }
      case Formula::Kind::kDurationApprox:
        require_event(f.event_name, f.pos);
        break;
      case Formula::Kind::kMembershipAt:
        check_term(*f.lhs);
        if (f.time.is_ref && !scalars_.count(f.time.name))
          throw ParseError(ParseError::Kind::kSemantic, f.time.pos,
                           "undeclared scalar '" + f.time.name + "'");
        break;
      case Formula::Kind::kHapp:
        require_event(f.event_name, f.pos);
        break;
      case Formula::Kind::kNot:
        check_formula(*f.child1);
        break;
      case Formula::Kind::kAnd:
        check_formula(*f.child1);
        check_formula(*f.child2);
        break;
    }
  }

  const Program& program_;
  std::set<std::string> events_;
  std::set<std::string> scalars_;
};

}  // namespace

ParseError::ParseError(Kind kind, SourcePos pos, const std::string& message)
    : std::runtime_error(position_text(pos) + ": " + message),
      kind_(kind),
      pos_(pos) {}

const char* relation_name(RelationKind kind) {
  switch (kind) {
    case RelationKind::kBf: return "bf";
    case RelationKind::kAf: return "af";
    case RelationKind::kMt: return "mt";
    case RelationKind::kOl: return "ol";
    case RelationKind::kSt: return "st";
    case RelationKind::kDr: return "dr";
    case RelationKind::kFin: return "fin";
    case RelationKind::kEq: return "eq";
    case RelationKind::kIn: return "in";
  }
  return "?";
}

Program parse_kb(std::string_view text) {
  Lexer lexer(text);
  Parser parser(lexer.tokenize());
  Program program = parser.parse();
  Checker(program).run();
  return program;
}

// --- equality ---

bool equal(const Term& a, const Term& b) {
  if (a.op != b.op) return false;
  if (a.op == Term::Op::kRef) return a.name == b.name;
  return equal(*a.arg, *b.arg);
}

bool equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Formula::Kind::kRelation:
      return a.relation == b.relation && equal(*a.lhs, *b.lhs) &&
             equal(*a.rhs, *b.rhs);
    case Formula::Kind::kDurationApprox:
      return a.event_name == b.event_name && a.target == b.target;
    case Formula::Kind::kMembershipAt:
      return equal(*a.lhs, *b.lhs) && a.time.is_ref == b.time.is_ref &&
             (a.time.is_ref ? a.time.name == b.time.name
                            : a.time.value == b.time.value);
    case Formula::Kind::kHapp:
      return a.event_name == b.event_name;
    case Formula::Kind::kNot:
      return equal(*a.child1, *b.child1);
    case Formula::Kind::kAnd:
      return equal(*a.child1, *b.child1) && equal(*a.child2, *b.child2);
  }
  return false;
}

bool equal(const Program& a, const Program& b) {
  if (a.horizon != b.horizon) return false;
  if (a.events.size() != b.events.size() ||
      a.scalars.size() != b.scalars.size() ||
      a.constraints.size() != b.constraints.size())
    return false;
  for (std::size_t i = 0; i < a.events.size(); ++i) {
    const auto& x = a.events[i];
    const auto& y = b.events[i];
    if (x.name != y.name || x.trainable != y.trainable) return false;
    if (x.trainable) {
      if (x.logits != y.logits) return false;
    } else {
      if (x.a != y.a || x.b != y.b || x.c != y.c || x.d != y.d ||
          x.happ != y.happ)
        return false;
    }
  }
  for (std::size_t i = 0; i < a.scalars.size(); ++i) {
    if (a.scalars[i].name != b.scalars[i].name ||
        a.scalars[i].init != b.scalars[i].init)
      return false;
  }
  for (std::size_t i = 0; i < a.constraints.size(); ++i)
    if (!equal(*a.constraints[i], *b.constraints[i])) return false;
  return true;
}

// --- canonical printing ---

namespace {

bool is_atomic(const Formula& f) {
  return f.kind != Formula::Kind::kNot && f.kind != Formula::Kind::kAnd;
}

std::string child_text(const Formula& f) {
  if (is_atomic(f)) return to_text(f);
  return "(" + to_text(f) + ")";
}

}  // namespace

std::string to_text(const Term& term) {
  switch (term.op) {
    case Term::Op::kRef:
      return term.name;
    case Term::Op::kStart:
      return "Start(" + to_text(*term.arg) + ")";
    case Term::Op::kEnd:
      return "End(" + to_text(*term.arg) + ")";
    case Term::Op::kBefore:
      return "Before(" + to_text(*term.arg) + ")";
    case Term::Op::kAfter:
      return "After(" + to_text(*term.arg) + ")";
  }
  return "?";
}

std::string to_text(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::kRelation:
      return to_text(*f.lhs) + " " + relation_name(f.relation) + " " +
             to_text(*f.rhs);
    case Formula::Kind::kDurationApprox:
      return "duration(" + f.event_name + ") ~= " + format_double(f.target);
    case Formula::Kind::kMembershipAt:
      return to_text(*f.lhs) + " at " +
             (f.time.is_ref ? f.time.name : format_double(f.time.value));
    case Formula::Kind::kHapp:
      return "happ(" + f.event_name + ")";
    case Formula::Kind::kNot:
      return "not " + child_text(*f.child1);
    case Formula::Kind::kAnd:
      return child_text(*f.child1) + " and " + child_text(*f.child2);
  }
  return "?";
}

std::string to_text(const Program& program) {
  std::ostringstream os;
  if (program.horizon) os << "horizon " << format_double(*program.horizon) << "\n";
  for (const auto& ev : program.events) {
    if (ev.trainable) {
      os << "event " << ev.name << " trainable init logits(";
      for (std::size_t i = 0; i < ev.logits.size(); ++i)
        os << (i ? "," : "") << format_double(ev.logits[i]);
      os << ")\n";
    } else {
      os << "event " << ev.name << " fixed trapezoid("
         << format_double(ev.a) << "," << format_double(ev.b) << ","
         << format_double(ev.c) << "," << format_double(ev.d) << ") happ "
         << format_double(ev.happ) << "\n";
    }
  }
  for (const auto& sc : program.scalars)
    os << "scalar " << sc.name << " trainable init " << format_double(sc.init)
       << "\n";
  for (const auto& f : program.constraints)
    os << "constraint " << to_text(*f) << "\n";
  return os.str();
}

}  // namespace fitl::kb
