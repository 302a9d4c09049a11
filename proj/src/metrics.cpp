#include "extrukit/metrics.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace extrukit {

namespace {

bool builtin_namespace(const std::string& iri) {
  return iri.rfind(rdf::ns, 0) == 0 || iri.rfind(rdfs::ns, 0) == 0 ||
         iri.rfind(owl::ns, 0) == 0 || iri.rfind(xsd::ns, 0) == 0;
}

std::pair<Term, Term> unordered(const Term& a, const Term& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// The named classes of the hierarchy plus its subclass edges, shared by
// census() and graph_metrics().
struct Hierarchy {
  std::set<Term> classes;
  std::set<std::pair<Term, Term>> edges;  // (sub, super), self-loops dropped
};

Hierarchy hierarchy_of(const Graph& g) {
  Hierarchy h;
  auto eligible = [](const Term& t) { return t.is_iri() && !builtin_namespace(t.value); };
  for (const Triple& t : g.triples()) {
    if (t.predicate.value == rdf::type) {
      if (t.object.is_iri() &&
          (t.object.value == owl::class_ || t.object.value == rdfs::class_)) {
        if (eligible(t.subject)) h.classes.insert(t.subject);
      } else if (eligible(t.object)) {
        h.classes.insert(t.object);
      }
    } else if (t.predicate.value == rdfs::sub_class_of) {
      if (eligible(t.subject)) h.classes.insert(t.subject);
      if (eligible(t.object)) h.classes.insert(t.object);
      if (eligible(t.subject) && eligible(t.object) && !(t.subject == t.object)) {
        h.edges.emplace(t.subject, t.object);
      }
    }
  }
  return h;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

std::string Rational::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

std::size_t AxiomCensus::logical_axiom_total() const {
  return sub_class_of + equivalent_classes + disjoint_classes + sub_object_property_of +
         inverse_object_properties + functional_object_property + transitive_object_property +
         symmetric_object_property + reflexive_object_property + object_property_domain +
         object_property_range + sub_property_chain_of + data_property_domain +
         data_property_range + class_assertion + object_property_assertion +
         data_property_assertion;
}

AxiomCensus census(const Graph& g) {
  AxiomCensus c;
  const std::set<std::string> reserved = {
      rdf::type,   rdfs::sub_class_of, rdfs::sub_property_of, rdfs::domain,
      rdfs::range, owl::inverse_of,    owl::equivalent_class, owl::disjoint_with,
      owl::property_chain_axiom, rdf::first, rdf::rest,
      rdfs::label, rdfs::comment,      rdfs::see_also,        rdfs::is_defined_by,
      owl::version_info, owl::imports};

  std::set<Term> object_props, data_props, annotation_props;
  for (const Triple& t : g.triples()) {
    if (t.predicate.value != rdf::type || !t.object.is_iri()) continue;
    if (t.object.value == owl::object_property) object_props.insert(t.subject);
    else if (t.object.value == owl::datatype_property) data_props.insert(t.subject);
    else if (t.object.value == owl::annotation_property) annotation_props.insert(t.subject);
  }
  c.object_property_count = object_props.size();
  c.data_property_count = data_props.size();
  auto is_data_prop = [&](const Term& t) { return data_props.count(t) != 0; };
  auto is_annotation_prop = [&](const Term& t) { return annotation_props.count(t) != 0; };

  c.class_count = hierarchy_of(g).classes.size();

  std::set<std::pair<Term, Term>> equivalent_pairs, disjoint_pairs, inverse_pairs;
  std::set<Term> individuals;
  for (const Triple& t : g.triples()) {
    const std::string& p = t.predicate.value;
    if (p == rdfs::sub_class_of) {
      ++c.sub_class_of;
    } else if (p == owl::equivalent_class) {
      equivalent_pairs.insert(unordered(t.subject, t.object));
    } else if (p == owl::disjoint_with) {
      disjoint_pairs.insert(unordered(t.subject, t.object));
    } else if (p == rdfs::sub_property_of) {
      if (!is_data_prop(t.subject)) ++c.sub_object_property_of;
    } else if (p == owl::inverse_of) {
      inverse_pairs.insert(unordered(t.subject, t.object));
    } else if (p == rdfs::domain) {
      is_data_prop(t.subject) ? ++c.data_property_domain : ++c.object_property_domain;
    } else if (p == rdfs::range) {
      is_data_prop(t.subject) ? ++c.data_property_range : ++c.object_property_range;
    } else if (p == owl::property_chain_axiom) {
      ++c.sub_property_chain_of;
    } else if (p == rdf::type) {
      if (!t.object.is_iri()) continue;
      const std::string& o = t.object.value;
      if (o == owl::functional_property) {
        if (!is_data_prop(t.subject)) ++c.functional_object_property;
      } else if (o == owl::transitive_property) {
        ++c.transitive_object_property;
      } else if (o == owl::symmetric_property) {
        ++c.symmetric_object_property;
      } else if (o == owl::reflexive_property) {
        ++c.reflexive_object_property;
      } else if (!builtin_namespace(o)) {
        ++c.class_assertion;
        individuals.insert(t.subject);
      }
    } else if (!reserved.count(p) && !is_annotation_prop(t.predicate)) {
      t.object.is_literal() ? ++c.data_property_assertion : ++c.object_property_assertion;
    }
  }
  c.equivalent_classes = equivalent_pairs.size();
  c.disjoint_classes = disjoint_pairs.size();
  c.inverse_object_properties = inverse_pairs.size();
  c.individual_count = individuals.size();
  return c;
}

SchemaMetrics schema_metrics(const AxiomCensus& c) {
  SchemaMetrics m;
  auto ratio = [](std::size_t num, std::size_t den) -> std::optional<Rational> {
    if (den == 0) return std::nullopt;
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
  };
  const std::size_t relations = c.sub_class_of + c.object_property_count;
  m.attribute_richness = ratio(c.data_property_count, c.class_count);
  m.inheritance_richness = ratio(c.sub_class_of, c.class_count);
  m.relationship_richness = ratio(c.object_property_count, relations);
  m.equivalence_ratio = ratio(c.equivalent_classes, c.class_count);
  m.axiom_class_ratio = ratio(c.logical_axiom_total(), c.class_count);
  m.inverse_relations_ratio = ratio(2 * c.inverse_object_properties, c.object_property_count);
  m.class_relation_ratio = ratio(c.class_count, relations);
  return m;
}

GraphMetrics graph_metrics(const Graph& g) {
  Hierarchy h = hierarchy_of(g);
  GraphMetrics m;
  if (h.classes.empty()) return m;

  std::map<Term, std::set<Term>> parents, children;
  for (const auto& [sub, super] : h.edges) {
    parents[sub].insert(super);
    children[super].insert(sub);
  }
  static const std::set<Term> kNoKids;
  auto kids = [&](const Term& t) -> const std::set<Term>& {
    auto it = children.find(t);
    return it == children.end() ? kNoKids : it->second;
  };

  // Cycle check via DFS over the (self-loop-free) child edges.
  {
    std::map<Term, int> state;  // 0 new, 1 active, 2 done
    std::vector<std::pair<Term, bool>> stack;
    for (const Term& start : h.classes) {
      if (state[start]) continue;
      stack.push_back({start, false});
      while (!stack.empty()) {
        auto [node, leaving] = stack.back();
        stack.pop_back();
        if (leaving) {
          state[node] = 2;
          continue;
        }
        if (state[node] != 0) continue;
        state[node] = 1;
        stack.push_back({node, true});
        for (const Term& ch : kids(node)) {
          if (state[ch] == 1) {
            throw CycleDetectedError("subClassOf cycle through " + ch.value);
          }
          if (state[ch] == 0) stack.push_back({ch, false});
        }
      }
    }
  }

  std::vector<Term> roots, leaves;
  for (const Term& cls : h.classes) {
    if (!parents.count(cls)) roots.push_back(cls);
    if (!children.count(cls)) leaves.push_back(cls);
  }
  m.root_cardinality = roots.size();
  m.leaf_cardinality = leaves.size();

  // Paths from each node down to leaves: count and summed node totals.
  std::map<Term, std::pair<std::size_t, std::size_t>> down;  // (paths, nodes over all paths)
  std::map<Term, std::size_t> deepest;
  auto walk = [&](auto&& self, const Term& node) -> void {
    if (down.count(node)) return;
    auto it = children.find(node);
    if (it == children.end()) {
      down[node] = {1, 1};
      deepest[node] = 1;
      return;
    }
    std::size_t paths = 0, nodes = 0, longest = 0;
    for (const Term& ch : it->second) {
      self(self, ch);
      paths += down[ch].first;
      nodes += down[ch].second + down[ch].first;  // each path gains this node
      longest = std::max(longest, deepest[ch]);
    }
    down[node] = {paths, nodes};
    deepest[node] = longest + 1;
  };
  for (const Term& r : roots) {
    walk(walk, r);
    m.total_paths += down[r].first;
    m.absolute_depth += down[r].second;
    m.maximal_depth = std::max(m.maximal_depth, deepest[r]);
  }
  if (m.total_paths > 0) {
    m.average_depth = Rational(static_cast<std::int64_t>(m.absolute_depth),
                               static_cast<std::int64_t>(m.total_paths));
  }

  // Levels: shortest distance from any root, breadth-first.
  std::map<Term, std::size_t> level;
  std::deque<Term> queue;
  for (const Term& r : roots) {
    level[r] = 0;
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Term node = queue.front();
    queue.pop_front();
    for (const Term& ch : kids(node)) {
      if (level.count(ch)) continue;
      level[ch] = level[node] + 1;
      queue.push_back(ch);
    }
  }
  std::map<std::size_t, std::size_t> per_level;
  for (const auto& [cls, lv] : level) ++per_level[lv];
  m.absolute_breadth = level.size();
  for (const auto& [lv, count] : per_level) m.maximal_breadth = std::max(m.maximal_breadth, count);
  if (!per_level.empty()) {
    m.average_breadth = Rational(static_cast<std::int64_t>(m.absolute_breadth),
                                 static_cast<std::int64_t>(per_level.size()));
  }

  std::size_t tangled = 0;
  for (const auto& [cls, ps] : parents) {
    if (ps.size() > 1) ++tangled;
  }
  std::set<Term> with_sibling;
  for (const auto& [parent, chs] : children) {
    if (chs.size() > 1) with_sibling.insert(chs.begin(), chs.end());
  }
  m.sibling_cardinality = with_sibling.size();

  const auto total = static_cast<std::int64_t>(h.classes.size());
  m.leaf_fan_out_ratio = Rational(static_cast<std::int64_t>(m.leaf_cardinality), total);
  m.sibling_fan_out_ratio = Rational(static_cast<std::int64_t>(m.sibling_cardinality), total);
  m.tangledness = Rational(static_cast<std::int64_t>(tangled), total);
  return m;
}

}  // namespace extrukit
