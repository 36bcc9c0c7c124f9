#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ordtop/boolterm.hpp"
#include "ordtop/errors.hpp"
#include "ordtop/interval.hpp"
#include "test_util.hpp"

using namespace ordtop;

TEST_CASE("interval topology of small posets is discrete") {
  Topology chain2 = interval_topology(make_chain(2));
  CHECK(chain2.opens == std::vector<ElemMask>{0, 1, 2, 3});
  CHECK(separation_report(interval_topology(make_antichain(3))).discrete);
  CHECK(separation_report(interval_topology(make_powerset(3))).discrete);
  CHECK_THROWS_AS(interval_topology(make_antichain(17)), GroundTooLarge);
}

TEST_CASE("interval topology is T1 on random posets") {
  std::mt19937_64 eng(43);
  for (int iter = 0; iter < 60; ++iter) {
    FinitePoset p = testutil::random_poset(eng, 1, 8);
    SeparationReport sep = separation_report(interval_topology(p));
    CHECK(sep.t1);
    CHECK(sep.discrete);
  }
}

TEST_CASE("basic closed membership over a finite poset") {
  FinitePoset n5 = make_n5();
  GeneratorSets<int> gens{{1}, {3}};  // ideal below 1, filter above 3
  CHECK(basic_closed_contains(n5, gens, 0).in_ideal);
  CHECK(basic_closed_contains(n5, gens, 0).in_filter == false);
  CHECK(basic_closed_contains(n5, gens, 4).in_filter);
  BasicClosedMembership two = basic_closed_contains(n5, gens, 2);
  CHECK_FALSE(two.in_ideal);
  CHECK_FALSE(two.in_filter);
  CHECK_THROWS_AS(basic_closed_contains(n5, gens, 9), CarrierMismatch);
  GeneratorSets<int> bad{{7}, {3}};
  CHECK_THROWS_AS(basic_closed_contains(n5, bad, 0), CarrierMismatch);
}

TEST_CASE("basic closed membership over the term algebra") {
  GeneratorSets<BoolTerm> gens{{parse_term("~v0")}, {parse_term("v0")}};
  auto order = [](BoolTerm a, BoolTerm b) { return leq(a, b); };
  BasicClosedMembership zero = basic_closed_contains(gens, term_zero(), order);
  CHECK(zero.in_ideal);
  CHECK_FALSE(zero.in_filter);
  BasicClosedMembership v0 = basic_closed_contains(gens, parse_term("v0"), order);
  CHECK(v0.in_filter);
  CHECK_FALSE(v0.in_ideal);
  BasicClosedMembership both =
      basic_closed_contains(gens, parse_term("v0 & v1"), order);
  CHECK_FALSE(both.in_ideal);
  CHECK_FALSE(both.in_filter);
}

TEST_CASE("membership is monotone") {
  std::mt19937_64 eng(47);
  for (int iter = 0; iter < 100; ++iter) {
    FinitePoset p = testutil::random_poset(eng, 2, 7);
    GeneratorSets<int> gens;
    gens.ideal_gens.push_back(static_cast<int>(eng() % p.size));
    gens.filter_gens.push_back(static_cast<int>(eng() % p.size));
    for (int z = 0; z < p.size; ++z)
      for (int w = 0; w < p.size; ++w) {
        if (!p.leq(z, w)) continue;
        if (basic_closed_contains(p, gens, w).in_ideal)
          CHECK(basic_closed_contains(p, gens, z).in_ideal);
        if (basic_closed_contains(p, gens, z).in_filter)
          CHECK(basic_closed_contains(p, gens, w).in_filter);
      }
  }
}

TEST_CASE("complement of a basic closed set is open") {
  std::mt19937_64 eng(53);
  for (int iter = 0; iter < 60; ++iter) {
    FinitePoset p = testutil::random_poset(eng, 1, 7);
    GeneratorSets<int> gens;
    int nx = 1 + static_cast<int>(eng() % 2), ny = 1 + static_cast<int>(eng() % 2);
    for (int i = 0; i < nx; ++i)
      gens.ideal_gens.push_back(static_cast<int>(eng() % p.size));
    for (int i = 0; i < ny; ++i)
      gens.filter_gens.push_back(static_cast<int>(eng() % p.size));
    ElemMask closed = 0;
    for (int z = 0; z < p.size; ++z) {
      BasicClosedMembership m = basic_closed_contains(p, gens, z);
      if (m.in_ideal || m.in_filter) closed |= single(z);
    }
    CHECK(interval_topology(p).is_open(full_mask(p.size) & ~closed));
  }
}

TEST_CASE("order topology vs interval topology") {
  for (const char* name : {"chain4", "powerset3", "n5", "m3", "antichain5"}) {
    OrderVsInterval result = compare_order_vs_interval(make_named_family(name));
    CHECK(result.relation == TopologyOrder::equal);
  }
  std::mt19937_64 eng(59);
  for (int iter = 0; iter < 40; ++iter) {
    FinitePoset p = testutil::random_poset(eng, 1, 7);
    OrderVsInterval result = compare_order_vs_interval(p);
    CHECK(result.relation != TopologyOrder::strictly_coarser);
    CHECK(result.relation == TopologyOrder::equal);
  }
}
