#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace extrukit {

// The eight jointly exhaustive, pairwise disjoint base relations of the
// region connection calculus. Enumerator order fixes the bit layout.
enum class Rcc8 : std::uint8_t { DC, EC, PO, TPP, NTPP, TPPI, NTPPI, EQ };

// The coarser five-relation calculus the toolkit projects onto.
enum class Rcc5 : std::uint8_t { DR, PO, PP, PPI, EQ };

inline constexpr std::array<Rcc8, 8> kRcc8All = {Rcc8::DC,  Rcc8::EC,    Rcc8::PO,
                                                 Rcc8::TPP, Rcc8::NTPP,  Rcc8::TPPI,
                                                 Rcc8::NTPPI, Rcc8::EQ};

// A set of base relations, i.e. a disjunctive constraint.
class Rcc8Set {
 public:
  constexpr Rcc8Set() = default;
  constexpr Rcc8Set(std::initializer_list<Rcc8> rels) {
    for (Rcc8 r : rels) bits_ |= bit(r);
  }
  static constexpr Rcc8Set from_bits(std::uint8_t bits) {
    Rcc8Set s;
    s.bits_ = bits;
    return s;
  }
  static constexpr Rcc8Set full() { return from_bits(0xff); }
  static constexpr Rcc8Set none() { return from_bits(0); }

  constexpr bool contains(Rcc8 r) const { return bits_ & bit(r); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const {
    int n = 0;
    for (std::uint8_t b = bits_; b; b &= static_cast<std::uint8_t>(b - 1)) ++n;
    return n;
  }
  constexpr bool is_singleton() const { return bits_ != 0 && (bits_ & (bits_ - 1)) == 0; }
  // Only meaningful for singletons.
  constexpr Rcc8 single() const {
    for (Rcc8 r : kRcc8All) {
      if (contains(r)) return r;
    }
    return Rcc8::DC;
  }
  constexpr std::uint8_t bits() const { return bits_; }

  constexpr Rcc8Set operator|(Rcc8Set o) const { return from_bits(bits_ | o.bits_); }
  constexpr Rcc8Set operator&(Rcc8Set o) const { return from_bits(bits_ & o.bits_); }
  constexpr Rcc8Set& operator|=(Rcc8Set o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr Rcc8Set& operator&=(Rcc8Set o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr bool operator==(const Rcc8Set&) const = default;

  std::vector<Rcc8> to_vector() const {
    std::vector<Rcc8> out;
    for (Rcc8 r : kRcc8All) {
      if (contains(r)) out.push_back(r);
    }
    return out;
  }

 private:
  static constexpr std::uint8_t bit(Rcc8 r) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(r));
  }
  std::uint8_t bits_ = 0;
};

Rcc8 converse(Rcc8 r);
Rcc8Set converse(Rcc8Set s);

// Weak composition: every relation that can hold between a and c given
// r(a, b) and s(b, c).
Rcc8Set compose(Rcc8 r, Rcc8 s);
Rcc8Set compose(Rcc8Set r, Rcc8Set s);

Rcc5 to_rcc5(Rcc8 r);
Rcc5 rcc5_converse(Rcc5 r);

const std::string& to_string(Rcc8 r);
const std::string& to_string(Rcc5 r);
std::optional<Rcc8> rcc8_from_string(const std::string& name);

// The composition-table cells holding exactly one base relation, in
// row-major table order. These are the entailments worth materializing
// as property chains.
struct DeterministicChain {
  Rcc8 first;
  Rcc8 second;
  Rcc8 result;
};
std::vector<DeterministicChain> deterministic_chains();

// A complete qualitative constraint network: one Rcc8Set per ordered node
// pair, kept converse-consistent, with {EQ} on the diagonal.
class Qcn {
 public:
  Qcn() = default;
  explicit Qcn(const std::vector<std::string>& node_names);

  int add_node(const std::string& name);
  std::optional<int> index_of(const std::string& name) const;
  const std::vector<std::string>& nodes() const { return names_; }
  int size() const { return static_cast<int>(names_.size()); }

  Rcc8Set at(int i, int j) const { return cells_[idx(i, j)]; }
  // Intersects cell (i, j) with rel and cell (j, i) with its converse.
  // Returns the refined cell, which may be empty.
  Rcc8Set restrict(int i, int j, Rcc8Set rel);

  bool has_empty_cell() const;

  // {"nodes": [...], "constraints": [{"i":.., "j":.., "relations":[..]}]}.
  // i and j may be node names or indexes; omitted pairs stay unconstrained.
  static Qcn from_json(const std::string& text);
  std::string to_json() const;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * names_.size() + j; }
  std::vector<std::string> names_;
  std::vector<Rcc8Set> cells_;
};

struct PathConsistencyResult {
  bool consistent;
  Qcn refined;
};

// Runs the algebraic closure loop until fixpoint. An empty cell means the
// network cannot be satisfied.
PathConsistencyResult path_consistency(Qcn network);

}  // namespace extrukit
