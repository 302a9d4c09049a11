#pragma once

#include <bitset>
#include <random>

#include "extrukit/rcc8.hpp"

namespace extrukit::testsupport {

// A region for the model-based RCC8 oracle: a non-empty, 4-connected set
// of cells on a 12x12 grid. Two regions are connected when they share a
// cell or contain edge-adjacent cells; classification into the eight base
// relations falls out of plain subset tests, entirely independent of the
// composition table under test.
struct GridRegion {
  static constexpr int kSide = 12;
  static constexpr int kCells = kSide * kSide;

  std::bitset<kCells> cells;

  bool contains(int x, int y) const { return cells.test(y * kSide + x); }
  void add(int x, int y) { cells.set(y * kSide + x); }
  bool empty() const { return cells.none(); }
};

// True when some cell of a shares an edge with some cell of b (sharing a
// cell does not count; use overlap for that).
bool edge_adjacent(const GridRegion& a, const GridRegion& b);

// Cells of r whose four edge neighbours all lie inside r. Cells on the
// grid border never qualify: the world continues past the border, so a
// border cell always touches outside territory.
GridRegion interior(const GridRegion& r);

// The one base relation that holds between a and b.
Rcc8 classify(const GridRegion& a, const GridRegion& b);

// A random 4-connected blob of roughly target_size cells, grown from a
// random seed cell.
GridRegion random_region(std::mt19937& rng, int target_size);

// A random region correlated with base: a connected subset, a grown
// superset, a translated copy, an exact copy, or an independent blob.
// Correlation keeps the rarer relations (TPP, NTPP, EQ and inverses)
// well represented in sampled pairs.
GridRegion related_region(std::mt19937& rng, const GridRegion& base);

}  // namespace extrukit::testsupport
