#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "extrukit/rcc8.hpp"
#include "support/grid_regions.hpp"

using namespace extrukit;
using testsupport::GridRegion;

TEST_CASE("converse is the expected involution") {
  CHECK(converse(Rcc8::TPP) == Rcc8::TPPI);
  CHECK(converse(Rcc8::TPPI) == Rcc8::TPP);
  CHECK(converse(Rcc8::NTPP) == Rcc8::NTPPI);
  CHECK(converse(Rcc8::EQ) == Rcc8::EQ);
  CHECK(converse(Rcc8::DC) == Rcc8::DC);
  CHECK(converse(Rcc8::EC) == Rcc8::EC);
  CHECK(converse(Rcc8::PO) == Rcc8::PO);
  for (Rcc8 r : kRcc8All) CHECK(converse(converse(r)) == r);
  CHECK(converse(Rcc8Set{Rcc8::TPP, Rcc8::DC}) == Rcc8Set{Rcc8::TPPI, Rcc8::DC});
}

TEST_CASE("rcc5 projection is total, surjective and converse-respecting") {
  CHECK(to_rcc5(Rcc8::TPP) == Rcc5::PP);
  CHECK(to_rcc5(Rcc8::NTPP) == Rcc5::PP);
  CHECK(to_rcc5(Rcc8::DC) == Rcc5::DR);
  CHECK(to_rcc5(Rcc8::EC) == Rcc5::DR);
  CHECK(to_rcc5(Rcc8::PO) == Rcc5::PO);
  CHECK(to_rcc5(Rcc8::TPPI) == Rcc5::PPI);
  CHECK(to_rcc5(Rcc8::NTPPI) == Rcc5::PPI);
  CHECK(to_rcc5(Rcc8::EQ) == Rcc5::EQ);
  std::set<Rcc5> image;
  for (Rcc8 r : kRcc8All) {
    image.insert(to_rcc5(r));
    CHECK(rcc5_converse(to_rcc5(r)) == to_rcc5(converse(r)));
  }
  CHECK(image.size() == 5);
}

TEST_CASE("relation names round-trip") {
  for (Rcc8 r : kRcc8All) {
    auto back = rcc8_from_string(to_string(r));
    REQUIRE(back.has_value());
    CHECK(*back == r);
  }
  CHECK(to_string(Rcc8::NTPPI) == "NTPPI");
  CHECK(to_string(Rcc5::PPI) == "PPI");
  CHECK_FALSE(rcc8_from_string("XX").has_value());
}

TEST_CASE("composition identities") {
  for (Rcc8 r : kRcc8All) {
    CHECK(compose(Rcc8::EQ, r) == Rcc8Set{r});
    CHECK(compose(r, Rcc8::EQ) == Rcc8Set{r});
  }
  CHECK(compose(Rcc8::NTPP, Rcc8::NTPP) == Rcc8Set{Rcc8::NTPP});
  CHECK(compose(Rcc8::TPP, Rcc8::TPPI) ==
        Rcc8Set{Rcc8::DC, Rcc8::EC, Rcc8::PO, Rcc8::TPP, Rcc8::TPPI, Rcc8::EQ});
  for (Rcc8 r : kRcc8All) {
    for (Rcc8 s : kRcc8All) {
      CHECK_FALSE(compose(r, s).empty());
      CHECK(compose(r, s) == converse(compose(converse(s), converse(r))));
    }
  }
}

TEST_CASE("set composition distributes over members") {
  const Rcc8Set some{Rcc8::DC, Rcc8::TPP, Rcc8::EQ};
  CHECK(compose(Rcc8Set{Rcc8::EQ}, some) == some);
  CHECK(compose(Rcc8Set::none(), some) == Rcc8Set::none());
  CHECK(compose(some, Rcc8Set::none()) == Rcc8Set::none());
  CHECK(compose(Rcc8Set{Rcc8::TPP, Rcc8::NTPP}, Rcc8Set{Rcc8::NTPP}) == Rcc8Set{Rcc8::NTPP});
  CHECK(compose(Rcc8Set{Rcc8::DC, Rcc8::EQ}, Rcc8Set{Rcc8::NTPP}) ==
        (compose(Rcc8::DC, Rcc8::NTPP) | compose(Rcc8::EQ, Rcc8::NTPP)));
}

TEST_CASE("deterministic chains enumerate the singleton cells") {
  auto chains = deterministic_chains();
  CHECK(chains.size() == 27);
  auto has = [&](Rcc8 a, Rcc8 b, Rcc8 c) {
    for (const auto& ch : chains) {
      if (ch.first == a && ch.second == b && ch.result == c) return true;
    }
    return false;
  };
  CHECK(has(Rcc8::TPP, Rcc8::NTPP, Rcc8::NTPP));
  CHECK(has(Rcc8::NTPPI, Rcc8::TPPI, Rcc8::NTPPI));
  CHECK(has(Rcc8::EQ, Rcc8::DC, Rcc8::DC));
  // Every entry really is a singleton cell, and no singleton is missed.
  std::set<std::pair<Rcc8, Rcc8>> listed;
  for (const auto& ch : chains) {
    CHECK(compose(ch.first, ch.second) == Rcc8Set{ch.result});
    CHECK(listed.insert({ch.first, ch.second}).second);
  }
  int singles = 0;
  for (Rcc8 r : kRcc8All) {
    for (Rcc8 s : kRcc8All) {
      if (compose(r, s).is_singleton()) ++singles;
    }
  }
  CHECK(singles == 27);
}

TEST_CASE("rcc8 set helpers") {
  Rcc8Set s{Rcc8::DC, Rcc8::EQ};
  CHECK(s.count() == 2);
  CHECK_FALSE(s.is_singleton());
  CHECK(Rcc8Set{Rcc8::PO}.is_singleton());
  CHECK(Rcc8Set{Rcc8::PO}.single() == Rcc8::PO);
  CHECK(Rcc8Set::full().count() == 8);
  CHECK((s & Rcc8Set{Rcc8::EQ}) == Rcc8Set{Rcc8::EQ});
  CHECK((s | Rcc8Set{Rcc8::PO}).count() == 3);
  CHECK(s.to_vector() == std::vector<Rcc8>{Rcc8::DC, Rcc8::EQ});
}

TEST_CASE("constraint networks stay converse-consistent") {
  Qcn net(std::vector<std::string>{"x", "y", "z"});
  CHECK(net.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(net.at(i, i) == Rcc8Set{Rcc8::EQ});
  CHECK(net.at(0, 1) == Rcc8Set::full());

  net.restrict(0, 1, Rcc8Set{Rcc8::TPP, Rcc8::NTPP});
  CHECK(net.at(0, 1) == Rcc8Set{Rcc8::TPP, Rcc8::NTPP});
  CHECK(net.at(1, 0) == Rcc8Set{Rcc8::TPPI, Rcc8::NTPPI});

  Rcc8Set cell = net.restrict(0, 1, Rcc8Set{Rcc8::NTPP, Rcc8::DC});
  CHECK(cell == Rcc8Set{Rcc8::NTPP});
  CHECK_FALSE(net.has_empty_cell());
  net.restrict(0, 1, Rcc8Set{Rcc8::EC});
  CHECK(net.has_empty_cell());

  CHECK(net.index_of("y") == 1);
  CHECK_FALSE(net.index_of("nope").has_value());
}

TEST_CASE("path consistency refines and detects contradictions") {
  SUBCASE("ntpp twice with dc closure gap is unsatisfiable") {
    Qcn net(std::vector<std::string>{"x", "y", "z"});
    net.restrict(0, 1, Rcc8Set{Rcc8::NTPP});
    net.restrict(1, 2, Rcc8Set{Rcc8::NTPP});
    net.restrict(0, 2, Rcc8Set{Rcc8::DC});
    auto result = path_consistency(net);
    CHECK_FALSE(result.consistent);
    CHECK(result.refined.has_empty_cell());
  }
  SUBCASE("unconstrained network is a fixpoint") {
    Qcn net(std::vector<std::string>{"x", "y", "z"});
    auto result = path_consistency(net);
    CHECK(result.consistent);
    CHECK(result.refined.at(0, 1) == Rcc8Set::full());
    CHECK(result.refined.at(0, 2) == Rcc8Set::full());
  }
  SUBCASE("tpp then ec narrows the far pair") {
    Qcn net(std::vector<std::string>{"x", "y", "z"});
    net.restrict(0, 1, Rcc8Set{Rcc8::TPP});
    net.restrict(1, 2, Rcc8Set{Rcc8::EC});
    auto result = path_consistency(net);
    CHECK(result.consistent);
    CHECK(result.refined.at(0, 2) == Rcc8Set{Rcc8::DC, Rcc8::EC});
  }
  SUBCASE("refinement never grows a cell and is idempotent") {
    Qcn net(std::vector<std::string>{"a", "b", "c", "d"});
    net.restrict(0, 1, Rcc8Set{Rcc8::TPP, Rcc8::PO});
    net.restrict(1, 2, Rcc8Set{Rcc8::NTPP});
    net.restrict(2, 3, Rcc8Set{Rcc8::EC, Rcc8::DC});
    auto first = path_consistency(net);
    REQUIRE(first.consistent);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        CHECK((first.refined.at(i, j) & net.at(i, j)) == first.refined.at(i, j));
      }
    }
    auto second = path_consistency(first.refined);
    REQUIRE(second.consistent);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) CHECK(second.refined.at(i, j) == first.refined.at(i, j));
    }
  }
}

TEST_CASE("network json round-trips") {
  Qcn net(std::vector<std::string>{"x", "y"});
  net.restrict(0, 1, Rcc8Set{Rcc8::NTPP, Rcc8::TPP});
  Qcn back = Qcn::from_json(net.to_json());
  REQUIRE(back.size() == 2);
  CHECK(back.nodes() == net.nodes());
  CHECK(back.at(0, 1) == net.at(0, 1));
  CHECK(back.at(1, 0) == net.at(1, 0));

  Qcn named = Qcn::from_json(
      R"({"nodes":["a","b"],"constraints":[{"i":"a","j":"b","relations":["DC"]}]})");
  CHECK(named.at(0, 1) == Rcc8Set{Rcc8::DC});
  Qcn indexed = Qcn::from_json(
      R"({"nodes":["a","b"],"constraints":[{"i":0,"j":1,"relations":["EC","PO"]}]})");
  CHECK(indexed.at(0, 1) == Rcc8Set{Rcc8::EC, Rcc8::PO});
}

TEST_CASE("grid oracle classifies hand-built configurations") {
  auto square = [](int x0, int y0, int w, int h) {
    GridRegion r;
    for (int y = y0; y < y0 + h; ++y) {
      for (int x = x0; x < x0 + w; ++x) r.add(x, y);
    }
    return r;
  };
  using testsupport::classify;
  CHECK(classify(square(0, 0, 1, 1), square(0, 1, 1, 1)) == Rcc8::EC);
  CHECK(classify(square(0, 0, 1, 1), square(1, 1, 1, 1)) == Rcc8::DC);  // diagonal contact
  CHECK(classify(square(0, 0, 2, 2), square(5, 5, 2, 2)) == Rcc8::DC);
  CHECK(classify(square(0, 0, 3, 3), square(2, 2, 3, 3)) == Rcc8::PO);
  CHECK(classify(square(1, 1, 1, 1), square(0, 0, 3, 3)) == Rcc8::NTPP);
  CHECK(classify(square(0, 0, 1, 1), square(0, 0, 3, 3)) == Rcc8::TPP);
  CHECK(classify(square(0, 0, 3, 3), square(1, 1, 1, 1)) == Rcc8::NTPPI);
  CHECK(classify(square(0, 0, 3, 3), square(0, 1, 1, 1)) == Rcc8::TPPI);
  CHECK(classify(square(0, 0, 5, 5), square(2, 2, 1, 1)) == Rcc8::NTPPI);
  CHECK(classify(square(2, 3, 2, 2), square(2, 3, 2, 2)) == Rcc8::EQ);
  // A region that fills rows up to the border is tangential even if the
  // smaller region avoids the border of the larger one inside the grid:
  // the world does not end at the grid edge.
  CHECK(classify(square(0, 0, 12, 1), square(0, 0, 12, 2)) == Rcc8::TPP);
}

TEST_CASE("grid oracle agrees with converse and composition on samples") {
  std::mt19937 rng(99);
  std::map<std::pair<Rcc8, Rcc8>, int> seen;
  int violations = 0;
  for (int i = 0; i < 2000; ++i) {
    GridRegion a = testsupport::random_region(rng, 1 + i % 28);
    GridRegion b = testsupport::related_region(rng, a);
    GridRegion c = testsupport::related_region(rng, b);
    Rcc8 ab = testsupport::classify(a, b);
    Rcc8 bc = testsupport::classify(b, c);
    Rcc8 ac = testsupport::classify(a, c);
    CHECK(testsupport::classify(b, a) == converse(ab));
    if (!compose(ab, bc).contains(ac)) ++violations;
    ++seen[{ab, bc}];
  }
  CHECK(violations == 0);
  CHECK(seen.size() >= 30);  // the sampler is not stuck in a corner of the table
}
