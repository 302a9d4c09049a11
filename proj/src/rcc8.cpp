#include "extrukit/rcc8.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace extrukit {

namespace {

using R = Rcc8;

constexpr Rcc8Set U = Rcc8Set::full();
// "x is discrete from or part of y": everything except the containment
// converses and EQ. Shows up whenever composition loses containment.
constexpr Rcc8Set DEPTN = {R::DC, R::EC, R::PO, R::TPP, R::NTPP};
constexpr Rcc8Set DEPTNI = {R::DC, R::EC, R::PO, R::TPPI, R::NTPPI};

// Row-major weak composition table; row is the first relation.
constexpr Rcc8Set kCompose[8][8] = {
    // DC
    {U, DEPTN, DEPTN, DEPTN, DEPTN, {R::DC}, {R::DC}, {R::DC}},
    // EC
    {DEPTNI,
     {R::DC, R::EC, R::PO, R::TPP, R::TPPI, R::EQ},
     DEPTN,
     {R::EC, R::PO, R::TPP, R::NTPP},
     {R::PO, R::TPP, R::NTPP},
     {R::DC, R::EC},
     {R::DC},
     {R::EC}},
    // PO
    {DEPTNI, DEPTNI, U, {R::PO, R::TPP, R::NTPP}, {R::PO, R::TPP, R::NTPP}, DEPTNI, DEPTNI,
     {R::PO}},
    // TPP
    {{R::DC},
     {R::DC, R::EC},
     DEPTN,
     {R::TPP, R::NTPP},
     {R::NTPP},
     {R::DC, R::EC, R::PO, R::TPP, R::TPPI, R::EQ},
     DEPTNI,
     {R::TPP}},
    // NTPP
    {{R::DC}, {R::DC}, DEPTN, {R::NTPP}, {R::NTPP}, DEPTN, U, {R::NTPP}},
    // TPPI
    {DEPTNI,
     {R::EC, R::PO, R::TPPI, R::NTPPI},
     {R::PO, R::TPPI, R::NTPPI},
     {R::PO, R::TPP, R::TPPI, R::EQ},
     {R::PO, R::TPP, R::NTPP},
     {R::TPPI, R::NTPPI},
     {R::NTPPI},
     {R::TPPI}},
    // NTPPI
    {DEPTNI,
     {R::PO, R::TPPI, R::NTPPI},
     {R::PO, R::TPPI, R::NTPPI},
     {R::PO, R::TPPI, R::NTPPI},
     {R::PO, R::TPP, R::NTPP, R::TPPI, R::NTPPI, R::EQ},
     {R::NTPPI},
     {R::NTPPI},
     {R::NTPPI}},
    // EQ
    {{R::DC}, {R::EC}, {R::PO}, {R::TPP}, {R::NTPP}, {R::TPPI}, {R::NTPPI}, {R::EQ}},
};

const std::array<std::string, 8> kRcc8Names = {"DC",  "EC",    "PO",    "TPP",
                                               "NTPP", "TPPI", "NTPPI", "EQ"};
const std::array<std::string, 5> kRcc5Names = {"DR", "PO", "PP", "PPI", "EQ"};

}  // namespace

Rcc8 converse(Rcc8 r) {
  switch (r) {
    case R::TPP: return R::TPPI;
    case R::NTPP: return R::NTPPI;
    case R::TPPI: return R::TPP;
    case R::NTPPI: return R::NTPP;
    default: return r;  // DC, EC, PO, EQ are symmetric
  }
}

Rcc8Set converse(Rcc8Set s) {
  Rcc8Set out;
  for (Rcc8 r : kRcc8All) {
    if (s.contains(r)) out |= Rcc8Set{converse(r)};
  }
  return out;
}

Rcc8Set compose(Rcc8 r, Rcc8 s) {
  return kCompose[static_cast<unsigned>(r)][static_cast<unsigned>(s)];
}

Rcc8Set compose(Rcc8Set r, Rcc8Set s) {
  Rcc8Set out;
  for (Rcc8 a : kRcc8All) {
    if (!r.contains(a)) continue;
    for (Rcc8 b : kRcc8All) {
      if (s.contains(b)) out |= compose(a, b);
    }
  }
  return out;
}

Rcc5 to_rcc5(Rcc8 r) {
  switch (r) {
    case R::DC:
    case R::EC: return Rcc5::DR;
    case R::PO: return Rcc5::PO;
    case R::TPP:
    case R::NTPP: return Rcc5::PP;
    case R::TPPI:
    case R::NTPPI: return Rcc5::PPI;
    case R::EQ: return Rcc5::EQ;
  }
  return Rcc5::DR;
}

Rcc5 rcc5_converse(Rcc5 r) {
  switch (r) {
    case Rcc5::PP: return Rcc5::PPI;
    case Rcc5::PPI: return Rcc5::PP;
    default: return r;
  }
}

const std::string& to_string(Rcc8 r) { return kRcc8Names[static_cast<unsigned>(r)]; }
const std::string& to_string(Rcc5 r) { return kRcc5Names[static_cast<unsigned>(r)]; }

std::optional<Rcc8> rcc8_from_string(const std::string& name) {
  for (std::size_t i = 0; i < kRcc8Names.size(); ++i) {
    if (kRcc8Names[i] == name) return static_cast<Rcc8>(i);
  }
  return std::nullopt;
}

std::vector<DeterministicChain> deterministic_chains() {
  std::vector<DeterministicChain> out;
  for (Rcc8 r : kRcc8All) {
    for (Rcc8 s : kRcc8All) {
      Rcc8Set cell = compose(r, s);
      if (cell.is_singleton()) out.push_back({r, s, cell.single()});
    }
  }
  return out;
}

// --- Qcn --------------------------------------------------------------------

Qcn::Qcn(const std::vector<std::string>& node_names) {
  for (const std::string& n : node_names) add_node(n);
}

int Qcn::add_node(const std::string& name) {
  if (auto existing = index_of(name)) return *existing;
  int n = size();
  std::vector<Rcc8Set> grown(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      grown[static_cast<std::size_t>(i) * (n + 1) + j] = cells_[idx(i, j)];
    }
  }
  cells_ = std::move(grown);
  names_.push_back(name);
  for (int i = 0; i <= n; ++i) {
    cells_[static_cast<std::size_t>(i) * (n + 1) + n] = Rcc8Set::full();
    cells_[static_cast<std::size_t>(n) * (n + 1) + i] = Rcc8Set::full();
  }
  cells_[static_cast<std::size_t>(n) * (n + 1) + n] = Rcc8Set{Rcc8::EQ};
  return n;
}

std::optional<int> Qcn::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Rcc8Set Qcn::restrict(int i, int j, Rcc8Set rel) {
  Rcc8Set refined = cells_[idx(i, j)] & rel;
  cells_[idx(i, j)] = refined;
  cells_[idx(j, i)] = cells_[idx(j, i)] & converse(rel);
  return refined;
}

bool Qcn::has_empty_cell() const {
  for (const Rcc8Set& c : cells_) {
    if (c.empty()) return true;
  }
  return false;
}

Qcn Qcn::from_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array()) {
    throw std::runtime_error("QCN document needs a \"nodes\" array");
  }
  Qcn net;
  for (const auto& n : doc["nodes"]) {
    if (!n.is_string()) throw std::runtime_error("QCN node names must be strings");
    net.add_node(n.get<std::string>());
  }
  if (!doc.contains("constraints")) return net;
  auto resolve = [&](const nlohmann::json& v) -> int {
    if (v.is_number_integer()) {
      int i = v.get<int>();
      if (i < 0 || i >= net.size()) throw std::runtime_error("QCN node index out of range");
      return i;
    }
    if (v.is_string()) {
      if (auto i = net.index_of(v.get<std::string>())) return *i;
      throw std::runtime_error("unknown QCN node: " + v.get<std::string>());
    }
    throw std::runtime_error("QCN constraint endpoints must be names or indexes");
  };
  for (const auto& c : doc["constraints"]) {
    int i = resolve(c.at("i"));
    int j = resolve(c.at("j"));
    Rcc8Set rel;
    for (const auto& name : c.at("relations")) {
      auto r = rcc8_from_string(name.get<std::string>());
      if (!r) throw std::runtime_error("unknown RCC8 relation: " + name.get<std::string>());
      rel |= Rcc8Set{*r};
    }
    net.restrict(i, j, rel);
  }
  return net;
}

std::string Qcn::to_json() const {
  nlohmann::json doc;
  doc["nodes"] = names_;
  nlohmann::json constraints = nlohmann::json::array();
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      Rcc8Set cell = at(i, j);
      if (cell == Rcc8Set::full()) continue;
      nlohmann::json entry;
      entry["i"] = names_[i];
      entry["j"] = names_[j];
      nlohmann::json rels = nlohmann::json::array();
      for (Rcc8 r : cell.to_vector()) rels.push_back(to_string(r));
      entry["relations"] = rels;
      constraints.push_back(entry);
    }
  }
  doc["constraints"] = constraints;
  return doc.dump(2);
}

PathConsistencyResult path_consistency(Qcn network) {
  const int n = network.size();
  bool changed = true;
  bool consistent = true;
  while (changed && consistent) {
    changed = false;
    for (int k = 0; k < n && consistent; ++k) {
      for (int i = 0; i < n && consistent; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j || i == k || j == k) continue;
          Rcc8Set bound = compose(network.at(i, k), network.at(k, j));
          Rcc8Set before = network.at(i, j);
          if ((before & bound) == before) continue;
          Rcc8Set refined = network.restrict(i, j, bound);
          changed = true;
          if (refined.empty()) {
            consistent = false;
            break;
          }
        }
      }
    }
  }
  return {consistent, std::move(network)};
}

}  // namespace extrukit
