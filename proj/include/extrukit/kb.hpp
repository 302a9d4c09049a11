#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "extrukit/errors.hpp"
#include "extrukit/graph.hpp"

namespace extrukit::kb {

// The five vocabulary modules of the knowledge base.
enum class Module { Components, Spatial, OmSubset, Sensors, X3dSubset };

struct ModuleInfo {
  Module module;
  std::string name;  // CLI-facing name
  std::string file;  // fixture file name
};

const std::vector<ModuleInfo>& modules();
Module module_from_name(const std::string& name);  // throws UnknownModuleError

// Compiled-in fixtures directory; the EXTRUKIT_FIXTURES environment
// variable overrides it.
std::filesystem::path default_fixtures_dir();

// Loads one module. The spatial module is built directly from the RCC8
// machinery (the checked-in .ttl mirrors it and is covered by an
// equality test), everything else parses its fixture file.
Graph load_module(Module m, const std::filesystem::path& fixtures_dir = default_fixtures_dir());

Graph sample_instances(const std::filesystem::path& fixtures_dir = default_fixtures_dir());

// All five modules plus the instance data merged into one graph.
Graph load_all(const std::filesystem::path& fixtures_dir = default_fixtures_dir());

struct CqExpectation {
  bool is_ask = false;
  bool ask_value = false;
  std::vector<std::string> vars;
  std::vector<std::vector<std::string>> rows;  // result_term_text spellings
  bool ordered = false;
};

struct CqCase {
  std::string id;
  std::string query_file;             // relative to the fixtures directory
  std::vector<std::string> data;      // fixture files, relative
  CqExpectation expect;
  bool requires_inference = false;
  std::string status;                 // "printed-in-paper" or "reconstructed"
  std::string note;
};

// Reads cq/manifest.json from the fixtures directory.
std::vector<CqCase> cq_suite(const std::filesystem::path& fixtures_dir = default_fixtures_dir());

struct CqOutcome {
  std::string id;
  bool passed = false;
  std::string detail;  // empty on pass
};

// Loads the case's data, optionally materializes, runs the query and
// compares against the expectation (set comparison unless the case is
// marked ordered).
CqOutcome run_cq_case(const CqCase& c,
                      const std::filesystem::path& fixtures_dir = default_fixtures_dir(),
                      bool infer = true);

}  // namespace extrukit::kb
