#include "extrukit/pitfalls.hpp"

#include <algorithm>
#include <map>

namespace extrukit {

namespace {

std::string namespace_of(const std::string& iri) {
  auto cut = iri.find_last_of("#/");
  if (cut == std::string::npos) return iri;
  return iri.substr(0, cut + 1);
}

// Union-find over equivalence-linked class IRIs.
struct Components {
  std::map<std::string, std::string> parent;
  const std::string& find(const std::string& x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return parent[x];
    }
    if (it->second == x) return it->second;
    std::string root = find(it->second);
    parent[x] = root;
    return parent[x];
  }
  void unite(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra != rb) parent[ra] = rb;
  }
};

}  // namespace

const std::string& to_string(Finding::Code code) {
  static const std::string p02 = "P02", p04 = "P04";
  return code == Finding::Code::P02 ? p02 : p04;
}

std::vector<Finding> scan_pitfalls(const Graph& g, const std::set<Finding::Code>& codes,
                                   const std::vector<std::string>& allow_external) {
  std::vector<Finding> findings;

  if (codes.count(Finding::Code::P02)) {
    Components comp;
    std::set<std::string> mentioned;
    for (const Triple& t : g.match(std::nullopt, Term::iri(owl::equivalent_class),
                                   std::nullopt)) {
      if (!t.subject.is_iri() || !t.object.is_iri()) continue;
      comp.unite(t.subject.value, t.object.value);
      mentioned.insert(t.subject.value);
      mentioned.insert(t.object.value);
    }
    std::map<std::string, std::vector<std::string>> groups;
    for (const std::string& iri : mentioned) groups[comp.find(iri)].push_back(iri);
    for (auto& [root, members] : groups) {
      std::sort(members.begin(), members.end());
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          if (namespace_of(members[i]) != namespace_of(members[j])) continue;
          findings.push_back({Finding::Code::P02,
                              {members[i], members[j]},
                              "classes declared equivalent within namespace " +
                                  namespace_of(members[i]) +
                                  "; likely synonyms modeled as distinct classes"});
        }
      }
    }
  }

  if (codes.count(Finding::Code::P04)) {
    // Declared classes and properties.
    std::set<std::string> declared;
    for (const Triple& t : g.match(std::nullopt, Term::iri(rdf::type), std::nullopt)) {
      if (!t.subject.is_iri() || !t.object.is_iri()) continue;
      const std::string& o = t.object.value;
      if (o == owl::class_ || o == rdfs::class_ || o == owl::object_property ||
          o == owl::datatype_property || o == owl::annotation_property) {
        declared.insert(t.subject.value);
      }
    }
    // Everything a logical axiom touches. Declarations, annotations and
    // list plumbing do not connect an element; chain-axiom list members do.
    const std::set<std::string> declaration_types = {
        owl::class_,           rdfs::class_,           owl::object_property,
        owl::datatype_property, owl::annotation_property, owl::named_individual,
        owl::ontology};
    const std::set<std::string> annotations = {rdfs::label, rdfs::comment, rdfs::see_also,
                                               rdfs::is_defined_by, owl::version_info,
                                               owl::imports};
    std::set<std::string> connected;
    auto touch = [&](const Term& t) {
      if (t.is_iri()) connected.insert(t.value);
    };
    const Term first_p = Term::iri(rdf::first);
    const Term rest_p = Term::iri(rdf::rest);
    for (const Triple& t : g.triples()) {
      const std::string& p = t.predicate.value;
      if (p == rdf::first || p == rdf::rest) continue;
      if (annotations.count(p)) continue;
      if (p == rdf::type) {
        if (t.object.is_iri() && declaration_types.count(t.object.value)) continue;
        // Characteristic typings and class assertions are logical axioms.
        touch(t.subject);
        touch(t.object);
        continue;
      }
      touch(t.subject);
      touch(t.object);
      if (p != owl::property_chain_axiom) touch(t.predicate);
      if (p == owl::property_chain_axiom) {
        touch(t.subject);
        // Walk the list; ill-formed spines are the reasoner's problem,
        // here any reachable member counts as connected.
        Term node = t.object;
        std::set<Term> seen;
        while (node.is_blank() && seen.insert(node).second) {
          for (const Term& item : g.objects_of(node, first_p)) touch(item);
          std::vector<Term> rest = g.objects_of(node, rest_p);
          if (rest.size() != 1) break;
          node = rest[0];
        }
      }
    }
    auto allowlisted = [&](const std::string& iri) {
      for (const std::string& prefix : allow_external) {
        if (iri.rfind(prefix, 0) == 0) return true;
      }
      return false;
    };
    for (const std::string& iri : declared) {
      if (connected.count(iri) || allowlisted(iri)) continue;
      findings.push_back({Finding::Code::P04,
                          {iri},
                          "declared but participates in no logical axiom"});
    }
  }

  std::sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
    if (a.code != b.code) return a.code < b.code;
    return a.elements < b.elements;
  });
  return findings;
}

}  // namespace extrukit
