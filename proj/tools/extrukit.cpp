// extrukit — command-line front end for the extrusion knowledge-graph toolkit.
//
// Exit codes: 0 success, 1 usage error, 2 parse error,
// 3 findings (pitfalls reported, inconsistency detected, or CQ failures).

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "extrukit/errors.hpp"
#include "extrukit/graph.hpp"
#include "extrukit/inference.hpp"
#include "extrukit/kb.hpp"
#include "extrukit/metrics.hpp"
#include "extrukit/pitfalls.hpp"
#include "extrukit/query.hpp"
#include "extrukit/rcc8.hpp"
#include "extrukit/spatial.hpp"
#include "extrukit/turtle.hpp"

namespace {

using namespace extrukit;

constexpr int kOk = 0;
constexpr int kUsageError = 1;
constexpr int kParseError = 2;
constexpr int kFindings = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graphs(const std::vector<std::string>& files) {
  Graph all;
  for (const auto& file : files) {
    Graph g;
    try {
      g = parse_turtle_file(file);
    } catch (const ParseError& e) {
      throw ParseError(e.kind, e.line, e.column, file + ": " + std::string(e.what()));
    }
    all.merge(g);
  }
  return all;
}

std::string fmt_double(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << v;
  return out.str();
}

std::string fmt_optional_rational(const std::optional<Rational>& r) {
  return r ? fmt_double(r->to_double()) : std::string("undefined");
}

void print_aligned(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  size_t width = 0;
  for (const auto& [k, v] : rows) {
    width = std::max(width, k.size());
  }
  for (const auto& [k, v] : rows) {
    out << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << "\n";
  }
}

std::vector<std::pair<std::string, std::string>> counts_rows(const AxiomCensus& c) {
  return {
      {"classCount", std::to_string(c.class_count)},
      {"objectPropertyCount", std::to_string(c.object_property_count)},
      {"dataPropertyCount", std::to_string(c.data_property_count)},
      {"individualCount", std::to_string(c.individual_count)},
      {"subClassOf", std::to_string(c.sub_class_of)},
      {"equivalentClasses", std::to_string(c.equivalent_classes)},
      {"disjointClasses", std::to_string(c.disjoint_classes)},
      {"subObjectPropertyOf", std::to_string(c.sub_object_property_of)},
      {"inverseObjectProperties", std::to_string(c.inverse_object_properties)},
      {"functionalObjectProperty", std::to_string(c.functional_object_property)},
      {"transitiveObjectProperty", std::to_string(c.transitive_object_property)},
      {"symmetricObjectProperty", std::to_string(c.symmetric_object_property)},
      {"reflexiveObjectProperty", std::to_string(c.reflexive_object_property)},
      {"objectPropertyDomain", std::to_string(c.object_property_domain)},
      {"objectPropertyRange", std::to_string(c.object_property_range)},
      {"subPropertyChainOf", std::to_string(c.sub_property_chain_of)},
      {"dataPropertyDomain", std::to_string(c.data_property_domain)},
      {"dataPropertyRange", std::to_string(c.data_property_range)},
      {"classAssertion", std::to_string(c.class_assertion)},
      {"objectPropertyAssertion", std::to_string(c.object_property_assertion)},
      {"dataPropertyAssertion", std::to_string(c.data_property_assertion)},
      {"logicalAxiomTotal", std::to_string(c.logical_axiom_total())},
  };
}

std::vector<std::pair<std::string, std::string>> schema_rows(const SchemaMetrics& m) {
  return {
      {"attributeRichness", fmt_optional_rational(m.attribute_richness)},
      {"inheritanceRichness", fmt_optional_rational(m.inheritance_richness)},
      {"relationshipRichness", fmt_optional_rational(m.relationship_richness)},
      {"equivalenceRatio", fmt_optional_rational(m.equivalence_ratio)},
      {"axiomClassRatio", fmt_optional_rational(m.axiom_class_ratio)},
      {"inverseRelationsRatio", fmt_optional_rational(m.inverse_relations_ratio)},
      {"classRelationRatio", fmt_optional_rational(m.class_relation_ratio)},
  };
}

std::vector<std::pair<std::string, std::string>> graph_rows(const GraphMetrics& m) {
  return {
      {"rootCardinality", std::to_string(m.root_cardinality)},
      {"leafCardinality", std::to_string(m.leaf_cardinality)},
      {"siblingCardinality", std::to_string(m.sibling_cardinality)},
      {"absoluteDepth", std::to_string(m.absolute_depth)},
      {"averageDepth", fmt_optional_rational(m.average_depth)},
      {"maximalDepth", std::to_string(m.maximal_depth)},
      {"absoluteBreadth", std::to_string(m.absolute_breadth)},
      {"averageBreadth", fmt_optional_rational(m.average_breadth)},
      {"maximalBreadth", std::to_string(m.maximal_breadth)},
      {"leafFanOutRatio", fmt_optional_rational(m.leaf_fan_out_ratio)},
      {"siblingFanOutRatio", fmt_optional_rational(m.sibling_fan_out_ratio)},
      {"tangledness", fmt_optional_rational(m.tangledness)},
      {"totalPaths", std::to_string(m.total_paths)},
  };
}

nlohmann::json rational_json(const std::optional<Rational>& r) {
  if (!r) {
    return nullptr;
  }
  return r->to_double();
}

nlohmann::json counts_json(const AxiomCensus& c) {
  nlohmann::json j;
  for (const auto& [k, v] : counts_rows(c)) {
    j[k] = std::stoll(v);
  }
  return j;
}

nlohmann::json schema_json(const SchemaMetrics& m) {
  return {
      {"attributeRichness", rational_json(m.attribute_richness)},
      {"inheritanceRichness", rational_json(m.inheritance_richness)},
      {"relationshipRichness", rational_json(m.relationship_richness)},
      {"equivalenceRatio", rational_json(m.equivalence_ratio)},
      {"axiomClassRatio", rational_json(m.axiom_class_ratio)},
      {"inverseRelationsRatio", rational_json(m.inverse_relations_ratio)},
      {"classRelationRatio", rational_json(m.class_relation_ratio)},
  };
}

nlohmann::json graph_json(const GraphMetrics& m) {
  return {
      {"rootCardinality", m.root_cardinality},
      {"leafCardinality", m.leaf_cardinality},
      {"siblingCardinality", m.sibling_cardinality},
      {"absoluteDepth", m.absolute_depth},
      {"averageDepth", rational_json(m.average_depth)},
      {"maximalDepth", m.maximal_depth},
      {"absoluteBreadth", m.absolute_breadth},
      {"averageBreadth", rational_json(m.average_breadth)},
      {"maximalBreadth", m.maximal_breadth},
      {"leafFanOutRatio", rational_json(m.leaf_fan_out_ratio)},
      {"siblingFanOutRatio", rational_json(m.sibling_fan_out_ratio)},
      {"tangledness", rational_json(m.tangledness)},
      {"totalPaths", m.total_paths},
  };
}

int run_infer(const std::vector<std::string>& files, const std::string& out_path, bool reflexive) {
  InferenceOptions opts;
  opts.reflexive_rule = reflexive;
  const Graph g = materialize(load_graphs(files), opts);
  const std::string text = serialize_turtle(g);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot open output file: " + out_path);
    }
    out << text;
  }
  return kOk;
}

int run_query(const std::string& query_path, const std::vector<std::string>& files, bool no_infer,
              const std::string& format) {
  const Query q = parse_query(read_file(query_path));
  Graph g = load_graphs(files);
  if (!no_infer) {
    g = materialize(g);
  }
  const QueryResult result = evaluate(q, g);
  if (format == "json") {
    std::cout << format_json(result);
  } else {
    std::cout << format_tsv(result);
  }
  return kOk;
}

int run_metrics(const std::vector<std::string>& files, bool counts_only, bool schema_only,
                bool graph_only, const std::string& format) {
  const Graph g = load_graphs(files);
  const bool all = !counts_only && !schema_only && !graph_only;

  std::optional<AxiomCensus> counts;
  std::optional<SchemaMetrics> schema;
  std::optional<GraphMetrics> graph;
  if (all || counts_only) {
    counts = census(g);
  }
  if (all || schema_only) {
    schema = schema_metrics(census(g));
  }
  if (all || graph_only) {
    graph = graph_metrics(g);
  }

  if (format == "json") {
    nlohmann::json j;
    if (counts) {
      j["counts"] = counts_json(*counts);
    }
    if (schema) {
      j["schema"] = schema_json(*schema);
    }
    if (graph) {
      j["graph"] = graph_json(*graph);
    }
    std::cout << j.dump(2) << "\n";
    return kOk;
  }

  bool first = true;
  auto section = [&](const std::string& title, const std::vector<std::pair<std::string, std::string>>& rows) {
    if (!first) {
      std::cout << "\n";
    }
    first = false;
    if (all) {
      std::cout << title << "\n";
    }
    print_aligned(std::cout, rows);
  };
  if (counts) {
    section("# counts", counts_rows(*counts));
  }
  if (schema) {
    section("# schema", schema_rows(*schema));
  }
  if (graph) {
    section("# graph", graph_rows(*graph));
  }
  return kOk;
}

int run_pitfalls(const std::vector<std::string>& files, const std::vector<std::string>& allow_external) {
  const Graph g = load_graphs(files);
  const auto findings =
      scan_pitfalls(g, {Finding::Code::P02, Finding::Code::P04}, allow_external);
  for (const auto& f : findings) {
    std::cout << to_string(f.code) << " " << Finding::severity;
    for (const auto& iri : f.elements) {
      std::cout << " " << iri;
    }
    std::cout << " -- " << f.message << "\n";
  }
  if (findings.empty()) {
    std::cout << "no pitfalls detected\n";
    return kOk;
  }
  return kFindings;
}

int run_validate(const std::vector<std::string>& files, bool reflexive) {
  InferenceOptions opts;
  opts.reflexive_rule = reflexive;
  const Graph g = materialize(load_graphs(files), opts);
  const auto clashes = check_consistency(g);
  for (const auto& clash : clashes) {
    if (clash.kind == Clash::Kind::DisjointClash) {
      std::cout << "DisjointClash " << clash.individual.value << " : " << clash.first.value
                << " vs " << clash.second.value << "\n";
    } else {
      std::cout << "FunctionalViolation " << clash.individual.value << " " << clash.first.value
                << " :";
      for (const auto& v : clash.values) {
        std::cout << " " << result_term_text(v);
      }
      std::cout << "\n";
    }
  }
  if (clashes.empty()) {
    std::cout << "consistent\n";
    return kOk;
  }
  return kFindings;
}

int run_rcc_compose(const std::string& lhs, const std::string& rhs) {
  const auto r = rcc8_from_string(lhs);
  const auto s = rcc8_from_string(rhs);
  if (!r || !s) {
    std::cerr << "unknown RCC8 relation: " << (!r ? lhs : rhs) << "\n";
    return kUsageError;
  }
  const Rcc8Set cell = compose(*r, *s);
  bool first = true;
  for (Rcc8 rel : cell.to_vector()) {
    std::cout << (first ? "" : " ") << to_string(rel);
    first = false;
  }
  std::cout << "\n";
  return kOk;
}

int run_rcc_chains() {
  for (const auto& chain : deterministic_chains()) {
    std::cout << to_string(chain.first) << " " << to_string(chain.second) << " -> "
              << to_string(chain.result) << "\n";
  }
  return kOk;
}

int run_rcc_check(const std::string& path) {
  Qcn net = Qcn::from_json(read_file(path));
  const PathConsistencyResult result = path_consistency(net);
  if (!result.consistent) {
    std::cout << "inconsistent\n";
    return kFindings;
  }
  std::cout << "consistent\n";
  std::cout << result.refined.to_json() << "\n";
  return kOk;
}

int run_rcc_vocab() {
  std::cout << serialize_turtle(spatial_vocabulary());
  return kOk;
}

int run_cq(const std::string& fixtures, const std::string& only_id, bool no_infer) {
  const std::filesystem::path dir =
      fixtures.empty() ? kb::default_fixtures_dir() : std::filesystem::path(fixtures);
  const auto cases = kb::cq_suite(dir);
  int passed = 0;
  int total = 0;
  bool matched_any = false;
  for (const auto& c : cases) {
    if (!only_id.empty() && c.id != only_id) {
      continue;
    }
    matched_any = true;
    ++total;
    const auto outcome = kb::run_cq_case(c, dir, /*infer=*/!no_infer);
    if (outcome.passed) {
      ++passed;
      std::cout << c.id << " PASS\n";
    } else {
      std::cout << c.id << " FAIL -- " << outcome.detail << "\n";
    }
  }
  if (!only_id.empty() && !matched_any) {
    std::cerr << "no such competency question: " << only_id << "\n";
    return kUsageError;
  }
  std::cout << passed << "/" << total << " passed\n";
  return passed == total ? kOk : kFindings;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extrukit: RDF toolkit for the extrusion-machine knowledge graph"};
  app.require_subcommand(1);

  // infer
  auto* infer_cmd = app.add_subcommand("infer", "Materialize RDFS/OWL entailments");
  std::vector<std::string> infer_files;
  std::string infer_out;
  bool infer_reflexive = false;
  infer_cmd->add_option("files", infer_files, "Turtle input files")->required()->expected(-1);
  infer_cmd->add_option("-o,--output", infer_out, "Output file (default: stdout)");
  infer_cmd->add_flag("--reflexive", infer_reflexive, "Apply reflexive-property rule");

  // query
  auto* query_cmd = app.add_subcommand("query", "Run a SPARQL-subset query");
  std::string query_path;
  std::vector<std::string> query_files;
  bool query_no_infer = false;
  std::string query_format = "tsv";
  query_cmd->add_option("-q,--query", query_path, "Query file")->required();
  query_cmd->add_option("files", query_files, "Turtle input files")->required()->expected(-1);
  query_cmd->add_flag("--no-infer", query_no_infer, "Query the asserted graph only");
  query_cmd->add_option("--format", query_format, "Output format: tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));

  // metrics
  auto* metrics_cmd = app.add_subcommand("metrics", "Ontology metrics");
  std::vector<std::string> metrics_files;
  bool metrics_counts = false;
  bool metrics_schema = false;
  bool metrics_graph = false;
  std::string metrics_format = "text";
  metrics_cmd->add_option("files", metrics_files, "Turtle input files")->required()->expected(-1);
  auto* counts_flag = metrics_cmd->add_flag("--counts", metrics_counts, "Axiom census only");
  auto* schema_flag = metrics_cmd->add_flag("--schema", metrics_schema, "Schema metrics only");
  auto* graph_flag = metrics_cmd->add_flag("--graph", metrics_graph, "Graph metrics only");
  counts_flag->excludes(schema_flag)->excludes(graph_flag);
  schema_flag->excludes(graph_flag);
  metrics_cmd->add_option("--format", metrics_format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // pitfalls
  auto* pitfalls_cmd = app.add_subcommand("pitfalls", "Scan for ontology pitfalls (P02, P04)");
  std::vector<std::string> pitfall_files;
  std::vector<std::string> pitfall_allow;
  pitfalls_cmd->add_option("files", pitfall_files, "Turtle input files")->required()->expected(-1);
  pitfalls_cmd->add_option("--allow-external", pitfall_allow,
                           "Namespace prefix whose orphan terms are expected");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Materialize and report inconsistencies");
  std::vector<std::string> validate_files;
  bool validate_reflexive = false;
  validate_cmd->add_option("files", validate_files, "Turtle input files")->required()->expected(-1);
  validate_cmd->add_flag("--reflexive", validate_reflexive, "Apply reflexive-property rule");

  // rcc
  auto* rcc_cmd = app.add_subcommand("rcc", "RCC8 spatial calculus");
  rcc_cmd->require_subcommand(1);
  auto* compose_cmd = rcc_cmd->add_subcommand("compose", "Compose two base relations");
  std::string compose_lhs;
  std::string compose_rhs;
  compose_cmd->add_option("r", compose_lhs, "First relation")->required();
  compose_cmd->add_option("s", compose_rhs, "Second relation")->required();
  auto* chains_cmd = rcc_cmd->add_subcommand("chains", "List deterministic composition chains");
  auto* check_cmd = rcc_cmd->add_subcommand("check", "Path-consistency check of a JSON network");
  std::string check_path;
  check_cmd->add_option("network", check_path, "Network JSON file")->required();
  auto* vocab_cmd = rcc_cmd->add_subcommand("vocab", "Print the spatial vocabulary as Turtle");

  // cq
  auto* cq_cmd = app.add_subcommand("cq", "Competency-question suite");
  cq_cmd->require_subcommand(1);
  auto* cq_run_cmd = cq_cmd->add_subcommand("run", "Run the competency questions");
  std::string cq_fixtures;
  std::string cq_id;
  bool cq_no_infer = false;
  cq_run_cmd->add_option("--fixtures", cq_fixtures, "Fixtures directory");
  cq_run_cmd->add_option("--id", cq_id, "Run a single question");
  cq_run_cmd->add_flag("--no-infer", cq_no_infer, "Skip materialization even when required");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*infer_cmd) {
      return run_infer(infer_files, infer_out, infer_reflexive);
    }
    if (*query_cmd) {
      return run_query(query_path, query_files, query_no_infer, query_format);
    }
    if (*metrics_cmd) {
      return run_metrics(metrics_files, metrics_counts, metrics_schema, metrics_graph,
                         metrics_format);
    }
    if (*pitfalls_cmd) {
      return run_pitfalls(pitfall_files, pitfall_allow);
    }
    if (*validate_cmd) {
      return run_validate(validate_files, validate_reflexive);
    }
    if (*rcc_cmd) {
      if (*compose_cmd) {
        return run_rcc_compose(compose_lhs, compose_rhs);
      }
      if (*chains_cmd) {
        return run_rcc_chains();
      }
      if (*check_cmd) {
        return run_rcc_check(check_path);
      }
      if (*vocab_cmd) {
        return run_rcc_vocab();
      }
    }
    if (*cq_cmd && *cq_run_cmd) {
      return run_cq(cq_fixtures, cq_id, cq_no_infer);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const MalformedChainError& e) {
    std::cerr << "malformed chain: " << e.what() << "\n";
    return kParseError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "JSON error: " << e.what() << "\n";
    return kParseError;
  } catch (const CycleDetectedError& e) {
    std::cerr << "cycle detected: " << e.what() << "\n";
    return kFindings;
  } catch (const ContradictoryAssertionError& e) {
    std::cerr << "contradictory assertions: " << e.what() << "\n";
    return kFindings;
  } catch (const UnknownModuleError& e) {
    std::cerr << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
