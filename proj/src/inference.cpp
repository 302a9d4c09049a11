#include "extrukit/inference.hpp"

#include <algorithm>
#include <deque>
#include <tuple>
#include <unordered_set>

namespace extrukit {

namespace {

const std::set<std::string>& schema_predicates() {
  static const std::set<std::string> preds = {
      rdf::type,           rdfs::sub_class_of,  rdfs::sub_property_of,
      rdfs::domain,        rdfs::range,         owl::inverse_of,
      owl::equivalent_class, owl::disjoint_with, owl::property_chain_axiom,
      rdf::first,          rdf::rest};
  return preds;
}

const std::set<std::string>& annotation_predicates() {
  static const std::set<std::string> preds = {rdfs::label, rdfs::comment, rdfs::see_also,
                                              rdfs::is_defined_by, owl::version_info,
                                              owl::imports};
  return preds;
}

const std::set<std::string>& meta_classes() {
  static const std::set<std::string> classes = {
      owl::class_,           rdfs::class_,          rdf::property,
      owl::object_property,  owl::datatype_property, owl::annotation_property,
      owl::symmetric_property, owl::transitive_property, owl::reflexive_property,
      owl::functional_property, owl::inverse_functional_property,
      owl::ontology,         owl::restriction};
  return classes;
}

// Terms reachable from each node over one or more edges.
std::map<Term, std::set<Term>> reachability(const std::set<std::pair<Term, Term>>& edges) {
  std::map<Term, std::set<Term>> succ;
  for (const auto& [a, b] : edges) succ[a].insert(b);
  std::map<Term, std::set<Term>> closure;
  for (const auto& [start, direct] : succ) {
    std::set<Term>& reached = closure[start];
    std::deque<Term> queue(direct.begin(), direct.end());
    while (!queue.empty()) {
      Term next = queue.front();
      queue.pop_front();
      if (!reached.insert(next).second) continue;
      auto it = succ.find(next);
      if (it == succ.end()) continue;
      for (const Term& t : it->second) queue.push_back(t);
    }
  }
  return closure;
}

std::vector<Term> decode_chain_list(const Graph& g, const Term& head, const Term& owner) {
  std::vector<Term> items;
  Term node = head;
  std::set<Term> seen;
  const Term first_p = Term::iri(rdf::first);
  const Term rest_p = Term::iri(rdf::rest);
  for (;;) {
    if (node.is_iri() && node.value == rdf::nil) break;
    if (!node.is_blank() || !seen.insert(node).second) {
      throw MalformedChainError("propertyChainAxiom of " + owner.value +
                                " is not a well-formed list");
    }
    std::vector<Term> firsts = g.objects_of(node, first_p);
    std::vector<Term> rests = g.objects_of(node, rest_p);
    if (firsts.size() != 1 || rests.size() != 1) {
      throw MalformedChainError("propertyChainAxiom of " + owner.value +
                                " is not a well-formed list");
    }
    items.push_back(firsts[0]);
    node = rests[0];
  }
  return items;
}

// Individuals are the terms instance triples talk about: subjects of
// rdf:type whose object is not a built-in meta class, and both ends of
// triples whose predicate is neither schema vocabulary nor a well-known
// annotation property. Literals never qualify.
std::set<Term> individuals(const Graph& g) {
  std::set<Term> out;
  for (const Triple& t : g.triples()) {
    const std::string& p = t.predicate.value;
    if (p == rdf::type) {
      if (!(t.object.is_iri() && meta_classes().count(t.object.value))) out.insert(t.subject);
      continue;
    }
    if (schema_predicates().count(p) || annotation_predicates().count(p)) continue;
    out.insert(t.subject);
    if (!t.object.is_literal()) out.insert(t.object);
  }
  return out;
}

}  // namespace

bool PropertyChain::operator<(const PropertyChain& o) const {
  return std::tie(first, second, super) < std::tie(o.first, o.second, o.super);
}

RuleSet extract_schema(const Graph& g) {
  RuleSet rs;
  std::set<PropertyChain> chain_set;
  for (const Triple& t : g.triples()) {
    const std::string& p = t.predicate.value;
    if (p == rdfs::sub_class_of) {
      rs.sub_class_of.emplace(t.subject, t.object);
    } else if (p == owl::equivalent_class) {
      rs.equivalent_classes.emplace(t.subject, t.object);
    } else if (p == owl::disjoint_with) {
      rs.disjoint_classes.emplace(t.subject, t.object);
    } else if (p == rdfs::sub_property_of) {
      rs.sub_property_of.emplace(t.subject, t.object);
    } else if (p == rdfs::domain) {
      rs.domains[t.subject].insert(t.object);
    } else if (p == rdfs::range) {
      rs.ranges[t.subject].insert(t.object);
    } else if (p == owl::inverse_of) {
      rs.inverses.emplace(t.subject, t.object);
      rs.inverses.emplace(t.object, t.subject);
    } else if (p == rdf::type && t.object.is_iri()) {
      if (t.object.value == owl::symmetric_property) rs.symmetric.insert(t.subject);
      else if (t.object.value == owl::transitive_property) rs.transitive.insert(t.subject);
      else if (t.object.value == owl::reflexive_property) rs.reflexive.insert(t.subject);
      else if (t.object.value == owl::functional_property) rs.functional.insert(t.subject);
    } else if (p == owl::property_chain_axiom) {
      std::vector<Term> items = decode_chain_list(g, t.object, t.subject);
      if (items.size() != 2 || !items[0].is_iri() || !items[1].is_iri() || !t.subject.is_iri()) {
        throw MalformedChainError("propertyChainAxiom of " + t.subject.value +
                                  " must list exactly two property IRIs");
      }
      PropertyChain chain{items[0], items[1], t.subject};
      if (chain_set.insert(chain).second) rs.chains.push_back(chain);
    }
  }
  return rs;
}

Graph materialize(const Graph& input, const InferenceOptions& options) {
  Graph out = input;
  const Term type_p = Term::iri(rdf::type);
  const Term sub_class_p = Term::iri(rdfs::sub_class_of);
  const Term sub_prop_p = Term::iri(rdfs::sub_property_of);

  bool outer_changed = true;
  while (outer_changed) {
    outer_changed = false;
    RuleSet rs = extract_schema(out);

    // Subsumption closures. Equivalence contributes edges both ways, so
    // equivalent classes end up with mutual (and, on cycles, reflexive)
    // subClassOf triples.
    std::set<std::pair<Term, Term>> class_edges = rs.sub_class_of;
    for (const auto& [a, b] : rs.equivalent_classes) {
      class_edges.emplace(a, b);
      class_edges.emplace(b, a);
    }
    std::map<Term, std::set<Term>> class_closure = reachability(class_edges);
    for (const auto& [a, supers] : class_closure) {
      if (a.is_literal()) continue;
      for (const Term& b : supers) {
        if (out.insert(a, sub_class_p, b)) outer_changed = true;
      }
    }
    std::map<Term, std::set<Term>> prop_closure = reachability(rs.sub_property_of);
    for (const auto& [p, supers] : prop_closure) {
      if (p.is_literal()) continue;
      for (const Term& q : supers) {
        if (out.insert(p, sub_prop_p, q)) outer_changed = true;
      }
    }

    if (options.reflexive_rule && !rs.reflexive.empty()) {
      for (const Term& x : individuals(out)) {
        for (const Term& p : rs.reflexive) {
          if (p.is_iri() && out.insert(x, p, x)) outer_changed = true;
        }
      }
    }

    // Chain and inverse lookups keyed by the predicate that triggers them.
    std::map<Term, std::vector<const PropertyChain*>> by_first, by_second;
    for (const PropertyChain& c : rs.chains) {
      by_first[c.first].push_back(&c);
      by_second[c.second].push_back(&c);
    }
    std::map<Term, std::vector<Term>> inverse_of;
    for (const auto& [from, to] : rs.inverses) {
      if (to.is_iri()) inverse_of[from].push_back(to);
    }

    // Instance saturation against the frozen schema. The worklist holds
    // triple positions; insert() only ever appends.
    std::size_t cursor = 0;
    auto add = [&](Term s, Term p, Term o) {
      if (out.insert(std::move(s), std::move(p), std::move(o))) outer_changed = true;
    };
    while (cursor < out.size()) {
      const Triple t = out.triples()[cursor++];
      const Term& p = t.predicate;

      if (p == type_p) {
        auto it = class_closure.find(t.object);
        if (it != class_closure.end()) {
          for (const Term& super : it->second) add(t.subject, type_p, super);
        }
      }

      if (auto it = prop_closure.find(p); it != prop_closure.end()) {
        for (const Term& q : it->second) {
          if (q.is_iri()) add(t.subject, q, t.object);
        }
      }
      if (auto it = rs.domains.find(p); it != rs.domains.end()) {
        for (const Term& c : it->second) add(t.subject, type_p, c);
      }
      if (auto it = rs.ranges.find(p); it != rs.ranges.end()) {
        if (!t.object.is_literal()) {
          for (const Term& c : it->second) add(t.object, type_p, c);
        }
      }
      if (auto it = inverse_of.find(p); it != inverse_of.end() && !t.object.is_literal()) {
        for (const Term& q : it->second) add(t.object, q, t.subject);
      }
      if (rs.symmetric.count(p) && !t.object.is_literal()) add(t.object, p, t.subject);
      if (rs.transitive.count(p)) {
        for (const Term& z : out.objects_of(t.object, p)) add(t.subject, p, z);
        for (const Term& w : out.subjects_of(p, t.subject)) add(w, p, t.object);
      }
      if (auto it = by_first.find(p); it != by_first.end()) {
        for (const PropertyChain* c : it->second) {
          for (const Term& z : out.objects_of(t.object, c->second)) add(t.subject, c->super, z);
        }
      }
      if (auto it = by_second.find(p); it != by_second.end()) {
        for (const PropertyChain* c : it->second) {
          for (const Term& w : out.subjects_of(c->first, t.subject)) add(w, c->super, t.object);
        }
      }
    }
  }
  return out;
}

std::vector<Clash> check_consistency(const Graph& g) {
  RuleSet rs = extract_schema(g);
  const Term type_p = Term::iri(rdf::type);
  std::vector<Clash> out;

  std::set<std::pair<Term, Term>> disjoint_pairs;
  for (const auto& [a, b] : rs.disjoint_classes) {
    disjoint_pairs.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  }
  for (const auto& [a, b] : disjoint_pairs) {
    std::set<Term> in_a, reported;
    for (const Term& x : g.subjects_of(type_p, a)) in_a.insert(x);
    for (const Term& x : g.subjects_of(type_p, b)) {
      if (in_a.count(x) && reported.insert(x).second) {
        out.push_back({Clash::Kind::DisjointClash, x, a, b, {}});
      }
    }
  }

  for (const Term& p : rs.functional) {
    std::map<Term, std::set<Term>> values;
    if (!p.is_iri()) continue;
    for (const Triple& t : g.match(std::nullopt, p, std::nullopt)) {
      values[t.subject].insert(t.object);
    }
    for (const auto& [x, objs] : values) {
      if (objs.size() < 2) continue;
      Clash c{Clash::Kind::FunctionalViolation, x, p, Term{}, {}};
      c.values.assign(objs.begin(), objs.end());
      out.push_back(c);
    }
  }

  std::sort(out.begin(), out.end(), [](const Clash& a, const Clash& b) {
    return std::tie(a.kind, a.individual, a.first, a.second, a.values) <
           std::tie(b.kind, b.individual, b.first, b.second, b.values);
  });
  return out;
}

}  // namespace extrukit
