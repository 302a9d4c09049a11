#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "extrukit/term.hpp"

namespace extrukit {

// An in-memory triple store with set semantics. Triples keep their
// insertion order, which makes iteration (and everything downstream:
// inference, query evaluation, serialization inputs) deterministic.
class Graph {
 public:
  // Returns true when the triple was new. Throws std::invalid_argument
  // when the subject is a literal or the predicate is not an IRI.
  bool insert(Triple t);
  bool insert(Term s, Term p, Term o);

  bool contains(const Triple& t) const;
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  const std::vector<Triple>& triples() const { return triples_; }

  // Pattern match; std::nullopt is a wildcard. Results come back in
  // insertion order.
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const;

  // Objects o with (s, p, o) present, in insertion order.
  std::vector<Term> objects_of(const Term& s, const Term& p) const;
  // Subjects s with (s, p, o) present, in insertion order.
  std::vector<Term> subjects_of(const Term& p, const Term& o) const;

  // Prefix bookkeeping. Labels are stored without the trailing colon;
  // the empty label is the default prefix. Re-binding a label overwrites.
  void add_prefix(const std::string& label, const std::string& iri);
  const std::map<std::string, std::string>& prefixes() const { return prefixes_; }

  // Expands "label:local" using the bound prefixes. Throws
  // std::out_of_range when the label is unbound.
  Term expand(const std::string& curie) const;

  // A blank node whose label is unused anywhere in this graph.
  Term fresh_blank();

  // Adds every triple of other, renaming other's blank nodes so they can
  // never capture blanks already present here. Prefixes merge too; on a
  // label clash this graph's binding wins.
  void merge(const Graph& other);

 private:
  std::vector<Triple> triples_;
  std::unordered_map<Triple, std::size_t, TripleHash> index_;
  std::unordered_map<Term, std::vector<std::size_t>, TermHash> by_subject_;
  std::unordered_map<Term, std::vector<std::size_t>, TermHash> by_predicate_;
  std::unordered_map<Term, std::vector<std::size_t>, TermHash> by_object_;
  std::map<std::string, std::string> prefixes_;
  std::size_t blank_counter_ = 0;
};

}  // namespace extrukit
