#include "extrukit/term.hpp"

#include <cctype>
#include <stdexcept>
#include <tuple>

namespace extrukit {

namespace {

void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

bool has_whitespace(const std::string& s) {
  for (unsigned char c : s) {
    if (std::isspace(c)) return true;
  }
  return false;
}

}  // namespace

Term Term::iri(std::string v) {
  if (v.empty() || has_whitespace(v)) {
    throw std::invalid_argument("IRI must be non-empty and whitespace-free: '" + v + "'");
  }
  Term t;
  t.kind = TermKind::Iri;
  t.value = std::move(v);
  return t;
}

Term Term::blank(std::string label) {
  if (label.empty()) throw std::invalid_argument("blank node label must be non-empty");
  Term t;
  t.kind = TermKind::BlankNode;
  t.value = std::move(label);
  return t;
}

Term Term::literal(std::string lex, std::string datatype) {
  if (datatype.empty()) throw std::invalid_argument("literal datatype must be non-empty");
  Term t;
  t.kind = TermKind::Literal;
  t.value = std::move(lex);
  t.datatype = std::move(datatype);
  return t;
}

Term Term::lang_literal(std::string lex, std::string tag) {
  if (tag.empty()) throw std::invalid_argument("language tag must be non-empty");
  Term t;
  t.kind = TermKind::Literal;
  t.value = std::move(lex);
  t.datatype = rdf::lang_string;
  t.lang = std::move(tag);
  return t;
}

bool Term::operator<(const Term& other) const {
  return std::tie(kind, value, datatype, lang) <
         std::tie(other.kind, other.value, other.datatype, other.lang);
}

bool Triple::operator<(const Triple& other) const {
  return std::tie(subject, predicate, object) <
         std::tie(other.subject, other.predicate, other.object);
}

std::size_t TermHash::operator()(const Term& t) const {
  std::size_t seed = static_cast<std::size_t>(t.kind);
  std::hash<std::string> h;
  hash_combine(seed, h(t.value));
  hash_combine(seed, h(t.datatype));
  hash_combine(seed, h(t.lang));
  return seed;
}

std::size_t TripleHash::operator()(const Triple& t) const {
  TermHash h;
  std::size_t seed = h(t.subject);
  hash_combine(seed, h(t.predicate));
  hash_combine(seed, h(t.object));
  return seed;
}

}  // namespace extrukit
