#include "extrukit/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace extrukit {

namespace {

bool is_pn_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '-' || u >= 0x80;
}

bool looks_absolute(const std::string& iri) {
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) return false;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    char c = iri[i];
    if (c == ':') return true;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') {
      return false;
    }
  }
  return false;
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp <= 0x7f) {
    out.push_back(static_cast<char>(cp));
  } else if (cp <= 0x7ff) {
    out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else if (cp <= 0xffff) {
    out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else {
    out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Graph run() {
    skip_trivia();
    while (!at_end()) {
      statement();
      skip_trivia();
    }
    return std::move(graph_);
  }

 private:
  using Kind = ParseError::Kind;

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Graph graph_;
  std::optional<std::string> base_;
  std::unordered_map<std::string, Term> doc_blanks_;

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

  void expect_char(char c, const std::string& what) {
    if (at_end() || peek() != c) fail_here(Kind::Syntax, "expected '" + std::string(1, c) + "' " + what);
    advance();
  }

  bool try_word(const char* w) {
    std::size_t n = std::strlen(w);
    if (text_.compare(pos_, n, w) != 0) return false;
    char after = peek(n);
    if (is_pn_char(after) || after == ':') return false;
    for (std::size_t i = 0; i < n; ++i) advance();
    return true;
  }

  void statement() {
    if (peek() == '@') {
      directive();
      return;
    }
    Term subj = parse_subject();
    skip_trivia();
    // A bare "[...]" statement would leave us at '.'; the subset requires
    // at least one predicate-object pair.
    predicate_object_list(subj);
    skip_trivia();
    expect_char('.', "after triples");
  }

  void directive() {
    int line = line_, col = col_;
    advance();  // '@'
    if (try_word("prefix")) {
      skip_trivia();
      std::string label = parse_prefix_label();
      expect_char(':', "after prefix label");
      skip_trivia();
      std::string iri = parse_iri_ref_raw();
      skip_trivia();
      expect_char('.', "after @prefix directive");
      graph_.add_prefix(label, iri);
    } else if (try_word("base")) {
      if (base_) fail(Kind::Syntax, line, col, "multiple @base directives");
      skip_trivia();
      std::string iri = parse_iri_ref_raw();
      if (!looks_absolute(iri)) fail(Kind::Syntax, line, col, "@base IRI must be absolute");
      skip_trivia();
      expect_char('.', "after @base directive");
      base_ = iri;
    } else {
      fail(Kind::Syntax, line, col, "unknown directive");
    }
  }

  std::string parse_prefix_label() {
    std::string label;
    while (!at_end() && peek() != ':' && (is_pn_char(peek()) || peek() == '.')) {
      label.push_back(advance());
    }
    return label;
  }

  // Raw <...> content, base-resolved.
  std::string parse_iri_ref_raw() {
    int line = line_, col = col_;
    expect_char('<', "to open IRI");
    std::string iri;
    for (;;) {
      if (at_end()) fail(Kind::Syntax, line, col, "unterminated IRI");
      char c = peek();
      if (c == '>') {
        advance();
        break;
      }
      if (c == '\n' || c == ' ' || c == '\t' || c == '"' || c == '<') {
        fail_here(Kind::Syntax, "illegal character in IRI");
      }
      iri.push_back(advance());
    }
    if (iri.empty()) fail(Kind::Syntax, line, col, "empty IRI");
    if (looks_absolute(iri)) return iri;
    if (!base_) fail(Kind::Syntax, line, col, "relative IRI without @base");
    return *base_ + iri;
  }

  Term parse_prefixed_name() {
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
    auto it = graph_.prefixes().find(label);
    if (it == graph_.prefixes().end()) {
      fail(Kind::UnknownPrefix, line, col, "unknown prefix '" + label + ":'");
    }
    return Term::iri(it->second + local);
  }

  Term doc_blank(const std::string& label) {
    auto it = doc_blanks_.find(label);
    if (it != doc_blanks_.end()) return it->second;
    Term fresh = graph_.fresh_blank();
    doc_blanks_.emplace(label, fresh);
    return fresh;
  }

  Term parse_blank_label() {
    int line = line_, col = col_;
    advance();  // '_'
    expect_char(':', "in blank node label");
    std::string label;
    while (!at_end() && (is_pn_char(peek()) || (peek() == '.' && is_pn_char(peek(1))))) {
      label.push_back(advance());
    }
    if (label.empty()) fail(Kind::Syntax, line, col, "empty blank node label");
    return doc_blank(label);
  }

  Term parse_subject() {
    char c = peek();
    if (c == '<') return Term::iri(parse_iri_ref_raw());
    if (c == '_') return parse_blank_label();
    if (c == '[') return parse_blank_property_list();
    if (c == '(') return parse_collection();
    return parse_prefixed_name();
  }

  Term parse_verb() {
    if (peek() == 'a' && try_word("a")) return Term::iri(rdf::type);
    if (peek() == '<') return Term::iri(parse_iri_ref_raw());
    return parse_prefixed_name();
  }

  void predicate_object_list(const Term& subj) {
    for (;;) {
      skip_trivia();
      Term pred = parse_verb();
      for (;;) {
        skip_trivia();
        Term obj = parse_object();
        graph_.insert(subj, pred, obj);
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
        // Trailing ';' before '.' or ']' is tolerated, as in Turtle.
        if (peek() == '.' || peek() == ']') return;
        continue;
      }
      return;
    }
  }

  Term parse_blank_property_list() {
    advance();  // '['
    Term node = graph_.fresh_blank();
    skip_trivia();
    if (peek() == ']') {
      advance();
      return node;
    }
    predicate_object_list(node);
    skip_trivia();
    expect_char(']', "to close blank node property list");
    return node;
  }

  Term parse_collection() {
    advance();  // '('
    std::vector<Term> items;
    for (;;) {
      skip_trivia();
      if (at_end()) fail_here(Kind::Syntax, "unterminated collection");
      if (peek() == ')') {
        advance();
        break;
      }
      items.push_back(parse_object());
    }
    Term head = Term::iri(rdf::nil);
    // Build the spine back to front so each node links to the next.
    for (auto it = items.rbegin(); it != items.rend(); ++it) {
      Term node = graph_.fresh_blank();
      graph_.insert(node, Term::iri(rdf::first), *it);
      graph_.insert(node, Term::iri(rdf::rest), head);
      head = node;
    }
    return head;
  }

  Term parse_object() {
    char c = peek();
    if (c == '<') return Term::iri(parse_iri_ref_raw());
    if (c == '_') return parse_blank_label();
    if (c == '[') return parse_blank_property_list();
    if (c == '(') return parse_collection();
    if (c == '"') return parse_string_literal();
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '+' || c == '-') &&
         (std::isdigit(static_cast<unsigned char>(peek(1))) || peek(1) == '.')) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      return parse_numeric_literal();
    }
    if (c == 't' && try_word("true")) return Term::literal("true", xsd::boolean);
    if (c == 'f' && try_word("false")) return Term::literal("false", xsd::boolean);
    return parse_prefixed_name();
  }

  Term parse_string_literal() {
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
        case 'b': lex.push_back('\b'); break;
        case 'n': lex.push_back('\n'); break;
        case 'r': lex.push_back('\r'); break;
        case 'f': lex.push_back('\f'); break;
        case '"': lex.push_back('"'); break;
        case '\'': lex.push_back('\''); break;
        case '\\': lex.push_back('\\'); break;
        case 'u': lex_unicode(lex, 4, line, col); break;
        case 'U': lex_unicode(lex, 8, line, col); break;
        default: fail_here(Kind::BadLiteral, std::string("unknown escape \\") + e);
      }
    }
    // Suffix: ^^datatype, @lang, or plain xsd:string.
    if (peek() == '^' && peek(1) == '^') {
      advance();
      advance();
      Term dt = (peek() == '<') ? Term::iri(parse_iri_ref_raw()) : parse_prefixed_name();
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

  void lex_unicode(std::string& lex, int digits, int line, int col) {
    unsigned long cp = 0;
    for (int i = 0; i < digits; ++i) {
      if (at_end() || !std::isxdigit(static_cast<unsigned char>(peek()))) {
        fail(Kind::BadLiteral, line, col, "bad unicode escape");
      }
      char c = advance();
      cp = cp * 16 + static_cast<unsigned long>(
                         std::isdigit(static_cast<unsigned char>(c)) ? c - '0'
                                                                     : std::tolower(c) - 'a' + 10);
    }
    append_utf8(lex, cp);
  }

  Term parse_numeric_literal() {
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
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        lex.push_back(advance());
        saw_digit = true;
      }
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
    if (is_pn_char(peek())) fail(Kind::BadLiteral, line, col, "malformed number");
    const std::string& dt = saw_exp ? xsd::double_ : saw_dot ? xsd::decimal : xsd::integer;
    return Term::literal(lex, dt);
  }
};

// --- Serializer -----------------------------------------------------------

bool safe_local_part(const std::string& s) {
  if (s.empty()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (is_pn_char(c)) continue;
    if (c == '.' && i > 0 && i + 1 < s.size() && is_pn_char(s[i + 1])) continue;
    return false;
  }
  return true;
}

bool matches_integer(const std::string& s) {
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

bool matches_decimal(const std::string& s) {
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  auto dot = s.find('.', i);
  if (dot == std::string::npos || dot + 1 >= s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (k == dot) continue;
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

bool matches_double(const std::string& s) {
  auto e = s.find_first_of("eE");
  if (e == std::string::npos || e == 0) return false;
  std::string mantissa = s.substr(0, e);
  std::string exp = s.substr(e + 1);
  if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) exp.erase(0, 1);
  if (exp.empty()) return false;
  for (char c : exp) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  // Mantissa: digits with optional interior dot; a trailing dot would not
  // re-parse under the reader's lookahead rule.
  if (mantissa.back() == '.') return false;
  return matches_integer(mantissa) || matches_decimal(mantissa);
}

class Writer {
 public:
  explicit Writer(const Graph& g) : g_(g) {}

  std::string run() {
    collect_lists();
    std::ostringstream out;
    for (const auto& [label, iri] : g_.prefixes()) {
      out << "@prefix " << label << ": <" << iri << "> .\n";
    }
    if (!g_.prefixes().empty()) out << "\n";

    // Group triples (minus consumed list spines) by rendered subject.
    std::map<std::string, std::map<std::pair<int, std::string>, std::set<std::string>>> blocks;
    for (std::size_t i = 0; i < g_.triples().size(); ++i) {
      if (spine_triples_.count(i)) continue;
      const Triple& t = g_.triples()[i];
      std::string subj = render(t.subject);
      bool is_type = t.predicate.value == rdf::type && t.predicate.is_iri();
      std::string pred = is_type ? "a" : render(t.predicate);
      blocks[subj][{is_type ? 0 : 1, pred}].insert(render(t.object));
    }

    bool first_block = true;
    for (const auto& [subj, preds] : blocks) {
      if (!first_block) out << "\n";
      first_block = false;
      bool first_pred = true;
      for (const auto& [pred_key, objects] : preds) {
        if (first_pred) {
          out << subj << " " << pred_key.second << " ";
          first_pred = false;
        } else {
          out << " ;\n    " << pred_key.second << " ";
        }
        bool first_obj = true;
        for (const std::string& obj : objects) {
          if (!first_obj) out << ", ";
          first_obj = false;
          out << obj;
        }
      }
      out << " .\n";
    }
    return out.str();
  }

 private:
  const Graph& g_;
  std::unordered_map<std::string, std::vector<Term>> lists_;  // head blank label -> items
  std::unordered_set<std::size_t> spine_triples_;

  struct NodeUse {
    std::vector<std::size_t> firsts, rests, other_subject;
    std::size_t rest_refs = 0, other_refs = 0;
  };

  void collect_lists() {
    std::unordered_map<std::string, NodeUse> uses;
    const Term first_p = Term::iri(rdf::first);
    const Term rest_p = Term::iri(rdf::rest);
    for (std::size_t i = 0; i < g_.triples().size(); ++i) {
      const Triple& t = g_.triples()[i];
      if (t.subject.is_blank()) {
        NodeUse& u = uses[t.subject.value];
        if (t.predicate == first_p) u.firsts.push_back(i);
        else if (t.predicate == rest_p) u.rests.push_back(i);
        else u.other_subject.push_back(i);
      }
      if (t.object.is_blank()) {
        NodeUse& u = uses[t.object.value];
        if (t.predicate == rest_p) ++u.rest_refs;
        else ++u.other_refs;
      }
    }
    auto well_formed_node = [&](const std::string& label, bool head) -> const NodeUse* {
      auto it = uses.find(label);
      if (it == uses.end()) return nullptr;
      const NodeUse& u = it->second;
      if (u.firsts.size() != 1 || u.rests.size() != 1 || !u.other_subject.empty()) return nullptr;
      if (head) {
        if (u.rest_refs != 0 || u.other_refs != 1) return nullptr;
      } else {
        if (u.rest_refs != 1 || u.other_refs != 0) return nullptr;
      }
      return &u;
    };
    for (const auto& [label, u] : uses) {
      const NodeUse* head = well_formed_node(label, /*head=*/true);
      if (!head) continue;
      std::vector<Term> items;
      std::vector<std::size_t> spine;
      const NodeUse* cur = head;
      std::unordered_set<std::string> seen{label};
      bool ok = true;
      for (;;) {
        spine.push_back(cur->firsts[0]);
        spine.push_back(cur->rests[0]);
        items.push_back(g_.triples()[cur->firsts[0]].object);
        const Term& next = g_.triples()[cur->rests[0]].object;
        if (next.is_iri() && next.value == rdf::nil) break;
        if (!next.is_blank() || seen.count(next.value)) {
          ok = false;
          break;
        }
        seen.insert(next.value);
        cur = well_formed_node(next.value, /*head=*/false);
        if (!cur) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      lists_.emplace(label, std::move(items));
      spine_triples_.insert(spine.begin(), spine.end());
    }
  }

  std::string render(const Term& t) {
    switch (t.kind) {
      case TermKind::Iri: return render_iri(t.value);
      case TermKind::BlankNode: {
        auto it = lists_.find(t.value);
        if (it != lists_.end()) {
          std::string s = "(";
          for (const Term& item : it->second) s += " " + render(item);
          s += " )";
          return s;
        }
        return "_:" + t.value;
      }
      case TermKind::Literal: return render_literal(t);
    }
    return "";
  }

  std::string render_iri(const std::string& iri) {
    const std::string* best_label = nullptr;
    const std::string* best_ns = nullptr;
    for (const auto& [label, ns] : g_.prefixes()) {
      if (iri.size() <= ns.size() || iri.compare(0, ns.size(), ns) != 0) continue;
      if (!safe_local_part(iri.substr(ns.size()))) continue;
      if (!best_ns || ns.size() > best_ns->size()) {
        best_label = &label;
        best_ns = &ns;
      }
    }
    if (best_ns) return *best_label + ":" + iri.substr(best_ns->size());
    return "<" + iri + ">";
  }

  std::string render_literal(const Term& t) {
    if (!t.value.empty()) {
      if (t.datatype == xsd::integer && matches_integer(t.value)) return t.value;
      if (t.datatype == xsd::decimal && matches_decimal(t.value)) return t.value;
      if (t.datatype == xsd::double_ && matches_double(t.value)) return t.value;
      if (t.datatype == xsd::boolean && (t.value == "true" || t.value == "false")) return t.value;
    }
    std::string s = "\"";
    for (char c : t.value) {
      switch (c) {
        case '"': s += "\\\""; break;
        case '\\': s += "\\\\"; break;
        case '\n': s += "\\n"; break;
        case '\r': s += "\\r"; break;
        case '\t': s += "\\t"; break;
        case '\b': s += "\\b"; break;
        case '\f': s += "\\f"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04X", c);
            s += buf;
          } else {
            s.push_back(c);
          }
      }
    }
    s += "\"";
    if (!t.lang.empty()) return s + "@" + t.lang;
    if (t.datatype != xsd::string_) return s + "^^" + render_iri(t.datatype);
    return s;
  }
};

}  // namespace

Graph parse_turtle(std::string_view text) { return Parser(text).run(); }

Graph parse_turtle_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_turtle(buf.str());
}

std::string serialize_turtle(const Graph& g) { return Writer(g).run(); }

}  // namespace extrukit
