#include "extrukit/kb.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "extrukit/inference.hpp"
#include "extrukit/query.hpp"
#include "extrukit/spatial.hpp"
#include "extrukit/turtle.hpp"

namespace extrukit::kb {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

const std::vector<ModuleInfo>& modules() {
  static const std::vector<ModuleInfo> kModules = {
      {Module::Components, "components", "components4ExtruOnt.ttl"},
      {Module::Spatial, "spatial", "spatial4ExtruOnt.ttl"},
      {Module::OmSubset, "om-subset", "OM4ExtruOnt.ttl"},
      {Module::Sensors, "sensors", "sensors4ExtruOnt.ttl"},
      {Module::X3dSubset, "x3d-subset", "3D4ExtruOnt.ttl"},
  };
  return kModules;
}

Module module_from_name(const std::string& name) {
  for (const auto& info : modules()) {
    if (info.name == name) {
      return info.module;
    }
  }
  throw UnknownModuleError("unknown module: " + name);
}

std::filesystem::path default_fixtures_dir() {
  if (const char* env = std::getenv("EXTRUKIT_FIXTURES")) {
    return env;
  }
#ifdef EXTRUKIT_FIXTURES_DIR
  return EXTRUKIT_FIXTURES_DIR;
#else
  return "fixtures";
#endif
}

Graph load_module(Module m, const std::filesystem::path& fixtures_dir) {
  if (m == Module::Spatial) {
    return spatial_vocabulary();
  }
  for (const auto& info : modules()) {
    if (info.module == m) {
      return parse_turtle_file((fixtures_dir / info.file).string());
    }
  }
  throw UnknownModuleError("unknown module");
}

Graph sample_instances(const std::filesystem::path& fixtures_dir) {
  return parse_turtle_file((fixtures_dir / "sample-instances.ttl").string());
}

Graph load_all(const std::filesystem::path& fixtures_dir) {
  Graph all;
  for (const auto& info : modules()) {
    Graph g = load_module(info.module, fixtures_dir);
    all.merge(g);
  }
  Graph inst = sample_instances(fixtures_dir);
  all.merge(inst);
  return all;
}

std::vector<CqCase> cq_suite(const std::filesystem::path& fixtures_dir) {
  const auto manifest_path = fixtures_dir / "cq" / "manifest.json";
  json doc = json::parse(read_file(manifest_path));
  if (!doc.is_array()) {
    throw std::runtime_error(manifest_path.string() + ": manifest must be a JSON array");
  }
  std::vector<CqCase> cases;
  for (const auto& entry : doc) {
    CqCase c;
    c.id = entry.at("id").get<std::string>();
    c.query_file = entry.at("query").get<std::string>();
    for (const auto& d : entry.at("data")) {
      c.data.push_back(d.get<std::string>());
    }
    c.requires_inference = entry.value("requiresInference", false);
    c.status = entry.value("status", "reconstructed");
    c.note = entry.value("note", "");
    const json& exp = entry.at("expect");
    if (exp.contains("ask")) {
      c.expect.is_ask = true;
      c.expect.ask_value = exp.at("ask").get<bool>();
    } else {
      for (const auto& v : exp.at("vars")) {
        c.expect.vars.push_back(v.get<std::string>());
      }
      for (const auto& row : exp.at("rows")) {
        std::vector<std::string> cells;
        for (const auto& cell : row) {
          cells.push_back(cell.get<std::string>());
        }
        c.expect.rows.push_back(std::move(cells));
      }
      c.expect.ordered = exp.value("ordered", false);
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

namespace {

std::string describe_rows(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  if (rows.empty()) {
    return "(no rows)";
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) {
      out << " | ";
    }
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (j > 0) {
        out << ", ";
      }
      out << rows[i][j];
    }
  }
  return out.str();
}

}  // namespace

CqOutcome run_cq_case(const CqCase& c, const std::filesystem::path& fixtures_dir, bool infer) {
  CqOutcome outcome;
  outcome.id = c.id;

  Graph data;
  for (const auto& file : c.data) {
    if (file == "spatial4ExtruOnt.ttl") {
      Graph g = spatial_vocabulary();
      data.merge(g);
    } else {
      Graph g = parse_turtle_file((fixtures_dir / file).string());
      data.merge(g);
    }
  }
  if (infer) {
    data = materialize(data);
  }

  const Query q = parse_query(read_file(fixtures_dir / c.query_file));
  const QueryResult results = evaluate(q, data);

  if (c.expect.is_ask) {
    if (!results.is_ask) {
      outcome.detail = "expected an ASK result but got a SELECT result";
      return outcome;
    }
    if (results.ask_value != c.expect.ask_value) {
      outcome.detail = std::string("expected ") + (c.expect.ask_value ? "true" : "false") +
                       " but got " + (results.ask_value ? "true" : "false");
      return outcome;
    }
    outcome.passed = true;
    return outcome;
  }

  if (results.is_ask) {
    outcome.detail = "expected a SELECT result but got an ASK result";
    return outcome;
  }
  if (results.variables != c.expect.vars) {
    std::ostringstream msg;
    msg << "variable list mismatch: expected [";
    for (size_t i = 0; i < c.expect.vars.size(); ++i) {
      msg << (i ? " " : "") << "?" << c.expect.vars[i];
    }
    msg << "] got [";
    for (size_t i = 0; i < results.variables.size(); ++i) {
      msg << (i ? " " : "") << "?" << results.variables[i];
    }
    msg << "]";
    outcome.detail = msg.str();
    return outcome;
  }

  std::vector<std::vector<std::string>> got;
  for (const auto& row : results.rows) {
    std::vector<std::string> cells;
    for (const auto& term : row) {
      cells.push_back(term ? result_term_text(*term) : std::string());
    }
    got.push_back(std::move(cells));
  }

  bool match;
  if (c.expect.ordered) {
    match = got == c.expect.rows;
  } else {
    auto lhs = got;
    auto rhs = c.expect.rows;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    match = lhs == rhs;
  }
  if (!match) {
    outcome.detail = "expected rows " + describe_rows(c.expect.rows) + " but got " + describe_rows(got);
    return outcome;
  }
  outcome.passed = true;
  return outcome;
}

}  // namespace extrukit::kb
