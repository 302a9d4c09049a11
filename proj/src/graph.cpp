#include "extrukit/graph.hpp"

#include <stdexcept>
#include <unordered_set>

namespace extrukit {

bool Graph::insert(Triple t) {
  if (t.subject.is_literal()) throw std::invalid_argument("triple subject cannot be a literal");
  if (!t.predicate.is_iri()) throw std::invalid_argument("triple predicate must be an IRI");
  if (index_.count(t)) return false;
  std::size_t pos = triples_.size();
  by_subject_[t.subject].push_back(pos);
  by_predicate_[t.predicate].push_back(pos);
  by_object_[t.object].push_back(pos);
  index_.emplace(t, pos);
  triples_.push_back(std::move(t));
  return true;
}

bool Graph::insert(Term s, Term p, Term o) {
  return insert(Triple{std::move(s), std::move(p), std::move(o)});
}

bool Graph::contains(const Triple& t) const { return index_.count(t) != 0; }

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                 const std::optional<Term>& o) const {
  // Scan the smallest available index for the bound positions.
  const std::vector<std::size_t>* candidates = nullptr;
  auto consider = [&](const std::unordered_map<Term, std::vector<std::size_t>, TermHash>& ix,
                      const std::optional<Term>& key) {
    if (!key) return;
    auto it = ix.find(*key);
    static const std::vector<std::size_t> kEmpty;
    const std::vector<std::size_t>* found = (it == ix.end()) ? &kEmpty : &it->second;
    if (!candidates || found->size() < candidates->size()) candidates = found;
  };
  consider(by_subject_, s);
  consider(by_predicate_, p);
  consider(by_object_, o);

  std::vector<Triple> out;
  auto matches = [&](const Triple& t) {
    return (!s || t.subject == *s) && (!p || t.predicate == *p) && (!o || t.object == *o);
  };
  if (!candidates) {
    out = triples_;
    return out;
  }
  std::vector<std::size_t> hits(*candidates);
  // Candidate lists are built in insertion order already.
  for (std::size_t pos : hits) {
    if (matches(triples_[pos])) out.push_back(triples_[pos]);
  }
  return out;
}

std::vector<Term> Graph::objects_of(const Term& s, const Term& p) const {
  std::vector<Term> out;
  for (const Triple& t : match(s, p, std::nullopt)) out.push_back(t.object);
  return out;
}

std::vector<Term> Graph::subjects_of(const Term& p, const Term& o) const {
  std::vector<Term> out;
  for (const Triple& t : match(std::nullopt, p, o)) out.push_back(t.subject);
  return out;
}

void Graph::add_prefix(const std::string& label, const std::string& iri) {
  prefixes_[label] = iri;
}

Term Graph::expand(const std::string& curie) const {
  auto colon = curie.find(':');
  if (colon == std::string::npos) {
    throw std::out_of_range("not a prefixed name: '" + curie + "'");
  }
  std::string label = curie.substr(0, colon);
  auto it = prefixes_.find(label);
  if (it == prefixes_.end()) {
    throw std::out_of_range("unknown prefix: '" + label + ":'");
  }
  return Term::iri(it->second + curie.substr(colon + 1));
}

Term Graph::fresh_blank() {
  for (;;) {
    std::string label = "b" + std::to_string(blank_counter_++);
    Term candidate = Term::blank(label);
    if (!by_subject_.count(candidate) && !by_object_.count(candidate)) return candidate;
  }
}

void Graph::merge(const Graph& other) {
  for (const auto& [label, iri] : other.prefixes()) {
    if (!prefixes_.count(label)) prefixes_[label] = iri;
  }
  std::unordered_map<std::string, Term> renamed;
  auto import = [&](const Term& t) -> Term {
    if (!t.is_blank()) return t;
    auto it = renamed.find(t.value);
    if (it != renamed.end()) return it->second;
    Term fresh = fresh_blank();
    renamed.emplace(t.value, fresh);
    return fresh;
  };
  for (const Triple& t : other.triples()) {
    insert(import(t.subject), t.predicate, import(t.object));
  }
}

}  // namespace extrukit
