#include "extrukit/query.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <nlohmann/json.hpp>
#include <set>

#include "extrukit/datetime.hpp"

namespace extrukit {

namespace {

using Kind = ParseError::Kind;

bool is_pn_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '-' || u >= 0x80;
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

class QueryParser {
 public:
  explicit QueryParser(std::string_view text) : text_(text) {}

  Query run() {
    Query q;
    skip_trivia();
    while (word_ahead("PREFIX")) {
      take_word();
      skip_trivia();
      std::string label = take_prefix_label();
      expect_char(':');
      skip_trivia();
      prefixes_[label] = take_iri_ref();
      skip_trivia();
    }
    if (word_ahead("SELECT")) {
      take_word();
      q.form = Query::Form::Select;
      skip_trivia();
      if (word_ahead("DISTINCT")) {
        take_word();
        q.distinct = true;
        skip_trivia();
      }
      if (peek() == '*') {
        advance();
      } else {
        while (peek() == '?' || peek() == '$') q.projection.push_back(take_variable());
        if (q.projection.empty()) fail_here(Kind::Syntax, "SELECT needs variables or *");
      }
      skip_trivia();
    } else if (word_ahead("ASK")) {
      take_word();
      q.form = Query::Form::Ask;
      skip_trivia();
    } else {
      fail_here(Kind::Syntax, "expected SELECT or ASK");
    }
    if (word_ahead("WHERE")) {
      take_word();
      skip_trivia();
    }
    q.where = parse_group();
    skip_trivia();
    if (word_ahead("ORDER")) {
      take_word();
      skip_trivia();
      if (!word_ahead("BY")) fail_here(Kind::Syntax, "expected BY after ORDER");
      take_word();
      for (;;) {
        skip_trivia();
        if (peek() == '?' || peek() == '$') {
          auto e = std::make_shared<Expr>();
          e->op = Expr::Op::Var;
          e->var = take_variable();
          q.order_by.push_back({e, false});
        } else if (word_ahead("ASC") || word_ahead("DESC")) {
          bool desc = upper(peek_word()) == "DESC";
          take_word();
          skip_trivia();
          expect_char('(');
          OrderKey key{parse_expr(), desc};
          skip_trivia();
          expect_char(')');
          q.order_by.push_back(key);
        } else {
          break;
        }
        skip_trivia();
      }
      if (q.order_by.empty()) fail_here(Kind::Syntax, "ORDER BY needs at least one key");
    }
    skip_trivia();
    if (!at_end()) fail_here(Kind::Syntax, "unexpected trailing input");
    return q;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::map<std::string, std::string> prefixes_;

  [[noreturn]] void fail(Kind k, int line, int col, const std::string& msg) const {
    throw ParseError(k, line, col, msg);
  }
  [[noreturn]] void fail_here(Kind k, const std::string& msg) const {
    throw ParseError(k, line_, col_, msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
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
  void skip_trivia() {
    for (;;) {
      while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
      if (!at_end() && peek() == '#') {
        while (!at_end() && peek() != '\n') advance();
        continue;
      }
      return;
    }
  }
  void expect_char(char c) {
    if (at_end() || peek() != c) fail_here(Kind::Syntax, std::string("expected '") + c + "'");
    advance();
  }

  std::string peek_word() const {
    std::size_t i = pos_;
    std::string w;
    while (i < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[i])))) {
      w.push_back(text_[i++]);
    }
    return w;
  }
  bool word_ahead(const char* kw) const {
    std::string w = peek_word();
    if (w.empty()) return false;
    if (upper(w) != kw) return false;
    std::size_t after = pos_ + w.size();
    // A ':' right after means this is a prefixed name, not a keyword.
    return after >= text_.size() || text_[after] != ':';
  }
  void take_word() {
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) advance();
  }

  std::string take_prefix_label() {
    std::string label;
    while (!at_end() && peek() != ':' && (is_pn_char(peek()) || peek() == '.')) {
      label.push_back(advance());
    }
    return label;
  }

  std::string take_iri_ref() {
    int line = line_, col = col_;
    expect_char('<');
    std::string iri;
    for (;;) {
      if (at_end()) fail(Kind::Syntax, line, col, "unterminated IRI");
      char c = peek();
      if (c == '>') {
        advance();
        break;
      }
      if (std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '"') {
        fail_here(Kind::Syntax, "illegal character in IRI");
      }
      iri.push_back(advance());
    }
    if (iri.empty()) fail(Kind::Syntax, line, col, "empty IRI");
    return iri;
  }

  // '<' opens an IRI only when a '>' follows with no whitespace between.
  bool iri_ahead() const {
    if (peek() != '<') return false;
    for (std::size_t i = pos_ + 1; i < text_.size(); ++i) {
      char c = text_[i];
      if (c == '>') return true;
      if (std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '"') return false;
    }
    return false;
  }

  Variable take_variable() {
    advance();  // '?' or '$'
    std::string name;
    while (!at_end() && is_pn_char(peek())) name.push_back(advance());
    if (name.empty()) fail_here(Kind::Syntax, "empty variable name");
    skip_trivia();
    return Variable{name};
  }

  Term take_prefixed_name() {
    int line = line_, col = col_;
    std::string label;
    while (!at_end() && peek() != ':' &&
           (is_pn_char(peek()) || (peek() == '.' && is_pn_char(peek(1))))) {
      label.push_back(advance());
    }
    if (at_end() || peek() != ':') fail(Kind::Syntax, line, col, "expected prefixed name");
    advance();
    std::string local;
    while (!at_end() && (is_pn_char(peek()) || (peek() == '.' && is_pn_char(peek(1))))) {
      local.push_back(advance());
    }
    auto it = prefixes_.find(label);
    if (it == prefixes_.end()) {
      fail(Kind::UnknownPrefix, line, col, "unknown prefix '" + label + ":'");
    }
    return Term::iri(it->second + local);
  }

  Term take_string_literal() {
    int line = line_, col = col_;
    advance();  // '"'
    std::string lex;
    for (;;) {
      if (at_end() || peek() == '\n') {
        fail(Kind::UnterminatedString, line, col, "unterminated string literal");
      }
      char c = advance();
      if (c == '"') break;
      if (c != '\\') {
        lex.push_back(c);
        continue;
      }
      if (at_end()) fail(Kind::UnterminatedString, line, col, "unterminated string literal");
      char e = advance();
      switch (e) {
        case 't': lex.push_back('\t'); break;
        case 'n': lex.push_back('\n'); break;
        case 'r': lex.push_back('\r'); break;
        case '"': lex.push_back('"'); break;
        case '\'': lex.push_back('\''); break;
        case '\\': lex.push_back('\\'); break;
        default: fail_here(Kind::BadLiteral, std::string("unknown escape \\") + e);
      }
    }
    if (peek() == '^' && peek(1) == '^') {
      advance();
      advance();
      Term dt = iri_ahead() ? Term::iri(take_iri_ref()) : take_prefixed_name();
      return Term::literal(lex, dt.value);
    }
    if (peek() == '@') {
      advance();
      std::string tag;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) {
        tag.push_back(advance());
      }
      if (tag.empty()) fail_here(Kind::BadLiteral, "empty language tag");
      return Term::lang_literal(lex, tag);
    }
    return Term::literal(lex, xsd::string_);
  }

  Term take_numeric_literal() {
    int line = line_, col = col_;
    std::string lex;
    if (peek() == '+' || peek() == '-') lex.push_back(advance());
    bool saw_digit = false, saw_dot = false, saw_exp = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      lex.push_back(advance());
      saw_digit = true;
    }
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      lex.push_back(advance());
      saw_dot = true;
      while (std::isdigit(static_cast<unsigned char>(peek()))) lex.push_back(advance());
    }
    if ((peek() == 'e' || peek() == 'E') && saw_digit) {
      lex.push_back(advance());
      saw_exp = true;
      if (peek() == '+' || peek() == '-') lex.push_back(advance());
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        fail(Kind::BadLiteral, line, col, "malformed exponent");
      }
      while (std::isdigit(static_cast<unsigned char>(peek()))) lex.push_back(advance());
    }
    if (!saw_digit) fail(Kind::BadLiteral, line, col, "malformed number");
    const std::string& dt = saw_exp ? xsd::double_ : saw_dot ? xsd::decimal : xsd::integer;
    return Term::literal(lex, dt);
  }

  // A term in triple-pattern position.
  PatternTerm take_pattern_term(bool verb_position) {
    char c = peek();
    if (c == '?' || c == '$') return take_variable();
    if (verb_position && c == 'a' && !is_pn_char(peek(1)) && peek(1) != ':') {
      advance();
      skip_trivia();
      return Term::iri(rdf::type);
    }
    if (iri_ahead()) {
      Term t = Term::iri(take_iri_ref());
      skip_trivia();
      return t;
    }
    if (c == '"') {
      Term t = take_string_literal();
      skip_trivia();
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '+' || c == '-') &&
         (std::isdigit(static_cast<unsigned char>(peek(1))) || peek(1) == '.')) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      Term t = take_numeric_literal();
      skip_trivia();
      return t;
    }
    if (c == '_' && peek(1) == ':') fail_here(Kind::Syntax, "blank nodes are not supported here");
    if (c == '[') fail_here(Kind::Syntax, "blank nodes are not supported here");
    if (c == 't' && text_.compare(pos_, 4, "true") == 0 && !is_pn_char(peek(4)) &&
        peek(4) != ':') {
      for (int i = 0; i < 4; ++i) advance();
      skip_trivia();
      return Term::literal("true", xsd::boolean);
    }
    if (c == 'f' && text_.compare(pos_, 5, "false") == 0 && !is_pn_char(peek(5)) &&
        peek(5) != ':') {
      for (int i = 0; i < 5; ++i) advance();
      skip_trivia();
      return Term::literal("false", xsd::boolean);
    }
    Term t = take_prefixed_name();
    skip_trivia();
    return t;
  }

  static bool group_has_pattern(const GroupPattern& g) {
    for (const GroupElement& e : g.elements) {
      if (std::holds_alternative<TriplePattern>(e) || std::holds_alternative<UnionPattern>(e)) {
        return true;
      }
    }
    return false;
  }

  GroupPattern parse_group() {
    int line = line_, col = col_;
    expect_char('{');
    GroupPattern group;
    for (;;) {
      skip_trivia();
      if (at_end()) fail(Kind::Syntax, line, col, "unterminated group");
      if (peek() == '}') {
        advance();
        break;
      }
      if (peek() == '{') {
        UnionPattern u;
        u.branches.push_back(parse_group());
        skip_trivia();
        if (!word_ahead("UNION")) fail_here(Kind::Syntax, "expected UNION between groups");
        while (word_ahead("UNION")) {
          take_word();
          skip_trivia();
          u.branches.push_back(parse_group());
          skip_trivia();
        }
        group.elements.push_back(std::move(u));
        if (peek() == '.') advance();
        continue;
      }
      if (word_ahead("FILTER")) {
        take_word();
        skip_trivia();
        expect_char('(');
        FilterPattern f{parse_expr()};
        skip_trivia();
        expect_char(')');
        group.elements.push_back(std::move(f));
        skip_trivia();
        if (peek() == '.') advance();
        continue;
      }
      parse_triples_block(group);
    }
    if (!group_has_pattern(group)) {
      fail(Kind::Syntax, line, col, "group needs at least one triple pattern");
    }
    return group;
  }

  void parse_triples_block(GroupPattern& group) {
    PatternTerm subject = take_pattern_term(/*verb_position=*/false);
    if (std::holds_alternative<Term>(subject) && std::get<Term>(subject).is_literal()) {
      fail_here(Kind::Syntax, "literal cannot be a subject");
    }
    for (;;) {
      skip_trivia();
      PatternTerm verb = take_pattern_term(/*verb_position=*/true);
      if (std::holds_alternative<Term>(verb) && !std::get<Term>(verb).is_iri()) {
        fail_here(Kind::Syntax, "predicate must be an IRI or variable");
      }
      for (;;) {
        skip_trivia();
        PatternTerm object = take_pattern_term(/*verb_position=*/false);
        group.elements.push_back(TriplePattern{subject, verb, object});
        skip_trivia();
        if (peek() == ',') {
          advance();
          continue;
        }
        break;
      }
      if (peek() == ';') {
        advance();
        skip_trivia();
        if (peek() == '.' || peek() == '}') break;
        continue;
      }
      break;
    }
    skip_trivia();
    if (peek() == '.') advance();
  }

  ExprPtr parse_expr() { return parse_or(); }

  ExprPtr parse_or() {
    ExprPtr l = parse_and();
    for (;;) {
      skip_trivia();
      if (peek() == '|' && peek(1) == '|') {
        advance();
        advance();
        auto node = std::make_shared<Expr>();
        node->op = Expr::Op::Or;
        node->lhs = l;
        node->rhs = parse_and();
        l = node;
      } else {
        return l;
      }
    }
  }

  ExprPtr parse_and() {
    ExprPtr l = parse_cmp();
    for (;;) {
      skip_trivia();
      if (peek() == '&' && peek(1) == '&') {
        advance();
        advance();
        auto node = std::make_shared<Expr>();
        node->op = Expr::Op::And;
        node->lhs = l;
        node->rhs = parse_cmp();
        l = node;
      } else {
        return l;
      }
    }
  }

  ExprPtr parse_cmp() {
    ExprPtr l = parse_primary();
    skip_trivia();
    Expr::Op op;
    if (peek() == '=' && peek(1) != '=') {
      op = Expr::Op::Eq;
      advance();
    } else if (peek() == '!' && peek(1) == '=') {
      op = Expr::Op::Ne;
      advance();
      advance();
    } else if (peek() == '<' && !iri_ahead()) {
      advance();
      if (peek() == '=') {
        advance();
        op = Expr::Op::Le;
      } else {
        op = Expr::Op::Lt;
      }
    } else if (peek() == '>') {
      advance();
      if (peek() == '=') {
        advance();
        op = Expr::Op::Ge;
      } else {
        op = Expr::Op::Gt;
      }
    } else {
      return l;
    }
    auto node = std::make_shared<Expr>();
    node->op = op;
    node->lhs = l;
    node->rhs = parse_primary();
    return node;
  }

  ExprPtr parse_primary() {
    skip_trivia();
    char c = peek();
    if (c == '(') {
      advance();
      ExprPtr inner = parse_expr();
      skip_trivia();
      expect_char(')');
      return inner;
    }
    auto node = std::make_shared<Expr>();
    if (c == '?' || c == '$') {
      node->op = Expr::Op::Var;
      node->var = take_variable();
      return node;
    }
    if (c == '"') {
      node->op = Expr::Op::Const;
      node->constant = take_string_literal();
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '+' || c == '-') &&
         (std::isdigit(static_cast<unsigned char>(peek(1))) || peek(1) == '.')) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      node->op = Expr::Op::Const;
      node->constant = take_numeric_literal();
      return node;
    }
    if (c == 't' && text_.compare(pos_, 4, "true") == 0 && !is_pn_char(peek(4))) {
      for (int i = 0; i < 4; ++i) advance();
      node->op = Expr::Op::Const;
      node->constant = Term::literal("true", xsd::boolean);
      return node;
    }
    if (c == 'f' && text_.compare(pos_, 5, "false") == 0 && !is_pn_char(peek(5))) {
      for (int i = 0; i < 5; ++i) advance();
      node->op = Expr::Op::Const;
      node->constant = Term::literal("false", xsd::boolean);
      return node;
    }
    int line = line_, col = col_;
    Term t = iri_ahead() ? Term::iri(take_iri_ref()) : take_prefixed_name();
    skip_trivia();
    if (peek() == '(') {
      if (t.value != xsd::date_time) {
        fail(Kind::Syntax, line, col, "only the xsd:dateTime cast is supported");
      }
      advance();
      node->op = Expr::Op::DateTimeCast;
      node->lhs = parse_expr();
      skip_trivia();
      expect_char(')');
      return node;
    }
    node->op = Expr::Op::Const;
    node->constant = t;
    return node;
  }
};

// --- Evaluation -------------------------------------------------------------

using Binding = std::map<std::string, Term>;

struct Value {
  enum class Kind { Error, Bool, Number, DateTime, String, Node };
  Kind kind = Kind::Error;
  bool b = false;
  double num = 0;
  std::int64_t millis = 0;
  std::string str;
  Term node;

  static Value error() { return {}; }
  static Value boolean(bool v) {
    Value out;
    out.kind = Kind::Bool;
    out.b = v;
    return out;
  }
};

bool is_numeric_datatype(const std::string& dt) {
  return dt == xsd::integer || dt == xsd::decimal || dt == xsd::double_ || dt == xsd::float_;
}

Value to_value(const Term& t) {
  Value v;
  if (!t.is_literal()) {
    v.kind = Value::Kind::Node;
    v.node = t;
    return v;
  }
  if (t.datatype == xsd::boolean) {
    if (t.value == "true" || t.value == "1") return Value::boolean(true);
    if (t.value == "false" || t.value == "0") return Value::boolean(false);
    return Value::error();
  }
  if (is_numeric_datatype(t.datatype)) {
    const char* begin = t.value.c_str();
    char* end = nullptr;
    double d = std::strtod(begin, &end);
    if (end == begin || *end != '\0') return Value::error();
    v.kind = Value::Kind::Number;
    v.num = d;
    return v;
  }
  if (t.datatype == xsd::date_time) {
    auto millis = parse_date_time_millis(t.value);
    if (!millis) return Value::error();
    v.kind = Value::Kind::DateTime;
    v.millis = *millis;
    return v;
  }
  if (t.datatype == xsd::string_ || !t.lang.empty()) {
    v.kind = Value::Kind::String;
    v.str = t.value;
    return v;
  }
  v.kind = Value::Kind::Node;
  v.node = t;
  return v;
}

Value eval_expr(const Expr& e, const Binding& b) {
  switch (e.op) {
    case Expr::Op::Var: {
      auto it = b.find(e.var.name);
      if (it == b.end()) return Value::error();
      return to_value(it->second);
    }
    case Expr::Op::Const: return to_value(e.constant);
    case Expr::Op::DateTimeCast: {
      Value v = eval_expr(*e.lhs, b);
      if (v.kind == Value::Kind::DateTime) return v;
      std::optional<std::int64_t> millis;
      if (v.kind == Value::Kind::String) millis = parse_date_time_millis(v.str);
      else if (v.kind == Value::Kind::Node && v.node.is_literal())
        millis = parse_date_time_millis(v.node.value);
      if (!millis) return Value::error();
      Value out;
      out.kind = Value::Kind::DateTime;
      out.millis = *millis;
      return out;
    }
    case Expr::Op::And:
    case Expr::Op::Or: {
      Value l = eval_expr(*e.lhs, b);
      Value r = eval_expr(*e.rhs, b);
      if (l.kind != Value::Kind::Bool || r.kind != Value::Kind::Bool) return Value::error();
      return Value::boolean(e.op == Expr::Op::And ? (l.b && r.b) : (l.b || r.b));
    }
    default: break;
  }
  // Comparisons.
  Value l = eval_expr(*e.lhs, b);
  Value r = eval_expr(*e.rhs, b);
  if (l.kind == Value::Kind::Error || r.kind == Value::Kind::Error) return Value::error();
  if (l.kind != r.kind) return Value::error();
  int cmp = 0;
  bool orderable = true;
  switch (l.kind) {
    case Value::Kind::Bool:
      cmp = (l.b == r.b) ? 0 : (l.b < r.b ? -1 : 1);
      break;
    case Value::Kind::Number:
      cmp = (l.num == r.num) ? 0 : (l.num < r.num ? -1 : 1);
      break;
    case Value::Kind::DateTime:
      cmp = (l.millis == r.millis) ? 0 : (l.millis < r.millis ? -1 : 1);
      break;
    case Value::Kind::String:
      cmp = l.str.compare(r.str);
      cmp = cmp == 0 ? 0 : (cmp < 0 ? -1 : 1);
      break;
    case Value::Kind::Node:
      cmp = (l.node == r.node) ? 0 : 1;
      orderable = false;
      break;
    default: return Value::error();
  }
  switch (e.op) {
    case Expr::Op::Eq: return Value::boolean(cmp == 0);
    case Expr::Op::Ne: return Value::boolean(cmp != 0);
    case Expr::Op::Lt: return orderable ? Value::boolean(cmp < 0) : Value::error();
    case Expr::Op::Le: return orderable ? Value::boolean(cmp <= 0) : Value::error();
    case Expr::Op::Gt: return orderable ? Value::boolean(cmp > 0) : Value::error();
    case Expr::Op::Ge: return orderable ? Value::boolean(cmp >= 0) : Value::error();
    default: return Value::error();
  }
}

bool unify(Binding& b, const PatternTerm& pt, const Term& t) {
  if (std::holds_alternative<Term>(pt)) return std::get<Term>(pt) == t;
  const Variable& v = std::get<Variable>(pt);
  auto it = b.find(v.name);
  if (it != b.end()) return it->second == t;
  b.emplace(v.name, t);
  return true;
}

std::vector<Binding> eval_group(const GroupPattern& grp, const Graph& g,
                                std::vector<Binding> sols) {
  std::vector<const FilterPattern*> filters;
  for (const GroupElement& elem : grp.elements) {
    if (const auto* tp = std::get_if<TriplePattern>(&elem)) {
      std::vector<Binding> next;
      for (const Binding& b : sols) {
        auto resolve = [&](const PatternTerm& pt) -> std::optional<Term> {
          if (const Term* t = std::get_if<Term>(&pt)) return *t;
          auto it = b.find(std::get<Variable>(pt).name);
          if (it != b.end()) return it->second;
          return std::nullopt;
        };
        for (const Triple& t :
             g.match(resolve(tp->subject), resolve(tp->predicate), resolve(tp->object))) {
          Binding nb = b;
          if (!unify(nb, tp->subject, t.subject)) continue;
          if (!unify(nb, tp->predicate, t.predicate)) continue;
          if (!unify(nb, tp->object, t.object)) continue;
          next.push_back(std::move(nb));
        }
      }
      sols = std::move(next);
    } else if (const auto* u = std::get_if<UnionPattern>(&elem)) {
      std::vector<Binding> merged;
      for (const GroupPattern& branch : u->branches) {
        std::vector<Binding> branch_sols = eval_group(branch, g, sols);
        merged.insert(merged.end(), branch_sols.begin(), branch_sols.end());
      }
      sols = std::move(merged);
    } else {
      filters.push_back(std::get_if<FilterPattern>(&elem));
    }
  }
  if (!filters.empty()) {
    std::vector<Binding> kept;
    for (const Binding& b : sols) {
      bool pass = true;
      for (const FilterPattern* f : filters) {
        Value v = eval_expr(*f->expr, b);
        if (v.kind != Value::Kind::Bool || !v.b) {
          pass = false;
          break;
        }
      }
      if (pass) kept.push_back(b);
    }
    sols = std::move(kept);
  }
  return sols;
}

void collect_variables(const GroupPattern& grp, std::vector<std::string>& out,
                       std::set<std::string>& seen) {
  auto add = [&](const PatternTerm& pt) {
    if (const Variable* v = std::get_if<Variable>(&pt)) {
      if (seen.insert(v->name).second) out.push_back(v->name);
    }
  };
  for (const GroupElement& elem : grp.elements) {
    if (const auto* tp = std::get_if<TriplePattern>(&elem)) {
      add(tp->subject);
      add(tp->predicate);
      add(tp->object);
    } else if (const auto* u = std::get_if<UnionPattern>(&elem)) {
      for (const GroupPattern& branch : u->branches) collect_variables(branch, out, seen);
    }
  }
}

int value_rank(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Error: return 0;
    case Value::Kind::Bool: return 1;
    case Value::Kind::Number: return 2;
    case Value::Kind::DateTime: return 3;
    case Value::Kind::String: return 4;
    case Value::Kind::Node: return 5;
  }
  return 0;
}

int compare_values(const Value& l, const Value& r) {
  int lr = value_rank(l), rr = value_rank(r);
  if (lr != rr) return lr < rr ? -1 : 1;
  switch (l.kind) {
    case Value::Kind::Error: return 0;
    case Value::Kind::Bool: return l.b == r.b ? 0 : (l.b < r.b ? -1 : 1);
    case Value::Kind::Number: return l.num == r.num ? 0 : (l.num < r.num ? -1 : 1);
    case Value::Kind::DateTime: return l.millis == r.millis ? 0 : (l.millis < r.millis ? -1 : 1);
    case Value::Kind::String: {
      int c = l.str.compare(r.str);
      return c == 0 ? 0 : (c < 0 ? -1 : 1);
    }
    case Value::Kind::Node: {
      std::string ls = result_term_text(l.node), rs = result_term_text(r.node);
      int c = ls.compare(rs);
      return c == 0 ? 0 : (c < 0 ? -1 : 1);
    }
  }
  return 0;
}

std::string escaped_lexical(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

Query parse_query(std::string_view text) { return QueryParser(text).run(); }

QueryResult evaluate(const Query& q, const Graph& g) {
  std::vector<Binding> sols = eval_group(q.where, g, {Binding{}});

  QueryResult result;
  if (q.form == Query::Form::Ask) {
    result.is_ask = true;
    result.ask_value = !sols.empty();
    return result;
  }

  if (!q.order_by.empty()) {
    std::stable_sort(sols.begin(), sols.end(), [&](const Binding& a, const Binding& b) {
      for (const OrderKey& key : q.order_by) {
        Value va = eval_expr(*key.expr, a);
        Value vb = eval_expr(*key.expr, b);
        int c = compare_values(va, vb);
        if (key.descending) c = -c;
        if (c != 0) return c < 0;
      }
      return false;
    });
  }

  if (q.projection.empty()) {
    std::set<std::string> seen;
    collect_variables(q.where, result.variables, seen);
  } else {
    for (const Variable& v : q.projection) result.variables.push_back(v.name);
  }

  std::set<std::string> emitted;
  for (const Binding& b : sols) {
    std::vector<std::optional<Term>> row;
    std::string key;
    for (const std::string& var : result.variables) {
      auto it = b.find(var);
      if (it == b.end()) {
        row.emplace_back(std::nullopt);
        key += "\x01";
      } else {
        row.emplace_back(it->second);
        key += result_term_text(it->second);
        key += "\x01";
      }
    }
    if (q.distinct && !emitted.insert(key).second) continue;
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::string result_term_text(const Term& t) {
  switch (t.kind) {
    case TermKind::Iri: return "<" + t.value + ">";
    case TermKind::BlankNode: return "_:" + t.value;
    case TermKind::Literal: {
      std::string s = "\"" + escaped_lexical(t.value) + "\"";
      if (!t.lang.empty()) return s + "@" + t.lang;
      if (t.datatype != xsd::string_) return s + "^^<" + t.datatype + ">";
      return s;
    }
  }
  return "";
}

std::string format_tsv(const QueryResult& r) {
  std::string out;
  if (r.is_ask) {
    out = r.ask_value ? "true\n" : "false\n";
    return out;
  }
  for (std::size_t i = 0; i < r.variables.size(); ++i) {
    if (i) out += "\t";
    out += "?" + r.variables[i];
  }
  out += "\n";
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += "\t";
      if (row[i]) out += result_term_text(*row[i]);
    }
    out += "\n";
  }
  return out;
}

std::string format_json(const QueryResult& r) {
  nlohmann::json doc;
  if (r.is_ask) {
    doc["head"] = nlohmann::json::object();
    doc["boolean"] = r.ask_value;
    return doc.dump(2);
  }
  doc["head"]["vars"] = r.variables;
  nlohmann::json bindings = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json b = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!row[i]) continue;
      const Term& t = *row[i];
      nlohmann::json cell;
      switch (t.kind) {
        case TermKind::Iri:
          cell["type"] = "uri";
          cell["value"] = t.value;
          break;
        case TermKind::BlankNode:
          cell["type"] = "bnode";
          cell["value"] = t.value;
          break;
        case TermKind::Literal:
          cell["type"] = "literal";
          cell["value"] = t.value;
          if (!t.lang.empty()) cell["xml:lang"] = t.lang;
          else if (t.datatype != xsd::string_) cell["datatype"] = t.datatype;
          break;
      }
      b[r.variables[i]] = cell;
    }
    bindings.push_back(b);
  }
  doc["results"]["bindings"] = bindings;
  return doc.dump(2);
}

}  // namespace extrukit
