#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "ordtop/errors.hpp"
#include "ordtop/topology.hpp"
#include "test_util.hpp"

using namespace ordtop;

namespace {

Topology make(int n, std::vector<ElemMask> subbase) {
  return generate_from_subbase(n, subbase);
}

const Topology sierpinski = make(2, {single(0)});  // {{}, {0}, {0,1}}

}  // namespace

TEST_CASE("generation from a subbase") {
  Topology t = make(2, {single(0)});
  CHECK(t.opens == std::vector<ElemMask>{0, 1, 3});

  Topology indiscrete = make(2, {});
  CHECK(indiscrete.opens == std::vector<ElemMask>{0, 3});

  Topology discrete = make(2, {single(0), single(1)});
  CHECK(discrete.opens == std::vector<ElemMask>{0, 1, 2, 3});

  CHECK_THROWS_AS(make(17, {}), GroundTooLarge);
  CHECK_THROWS_AS(make(2, {single(3)}), BadIndex);
}

TEST_CASE("separation reports") {
  Topology discrete3 = make(3, {single(0), single(1), single(2)});
  SeparationReport d = separation_report(discrete3);
  CHECK(d.t1);
  CHECK(d.hausdorff);
  CHECK(d.discrete);

  SeparationReport s = separation_report(sierpinski);
  CHECK_FALSE(s.t1);
  CHECK_FALSE(s.hausdorff);
  CHECK_FALSE(s.discrete);

  SeparationReport i = separation_report(make(2, {}));
  CHECK_FALSE(i.t1);
  CHECK_FALSE(i.hausdorff);
  CHECK_FALSE(i.discrete);
}

TEST_CASE("comparison") {
  Topology discrete = make(2, {single(0), single(1)});
  Topology indiscrete = make(2, {});
  CHECK(compare(discrete, indiscrete) == TopologyOrder::strictly_finer);
  CHECK(compare(indiscrete, discrete) == TopologyOrder::strictly_coarser);
  CHECK(compare(discrete, discrete) == TopologyOrder::equal);
  CHECK(compare(make(2, {single(0)}), make(2, {single(1)})) ==
        TopologyOrder::incomparable);
  CHECK_THROWS_AS(compare(discrete, make(3, {})), GroundMismatch);
}

TEST_CASE("local structure") {
  LocalStructure at0 = local_structure(sierpinski, 0);
  CHECK(at0.min_nbhd == single(0));
  CHECK(at0.closure_of_singleton == (single(0) | single(1)));
  LocalStructure at1 = local_structure(sierpinski, 1);
  CHECK(at1.min_nbhd == (single(0) | single(1)));
  CHECK(at1.closure_of_singleton == single(1));

  Topology discrete = make(2, {single(0), single(1)});
  for (int x = 0; x < 2; ++x) {
    LocalStructure ls = local_structure(discrete, x);
    CHECK(ls.min_nbhd == single(x));
    CHECK(ls.closure_of_singleton == single(x));
  }
  CHECK_THROWS_AS(local_structure(sierpinski, 2), BadIndex);
}

TEST_CASE("dump format") {
  CHECK(dump_topology(sierpinski) == "2\n\n0\n0 1\n");
}

TEST_CASE("properties of generated topologies") {
  std::mt19937_64 eng(7);
  for (int iter = 0; iter < 300; ++iter) {
    int n = 1 + static_cast<int>(eng() % 6);
    int count = static_cast<int>(eng() % 5);
    std::vector<ElemMask> subbase;
    for (int i = 0; i < count; ++i) subbase.push_back(eng() & full_mask(n));
    Topology t = generate_from_subbase(n, subbase);
    CHECK(is_topology(t));

    // Idempotence: the opens generate themselves.
    Topology again = generate_from_subbase(n, t.opens);
    CHECK(again.opens == t.opens);

    // Monotonicity under a grown subbase.
    std::vector<ElemMask> larger = subbase;
    larger.push_back(eng() & full_mask(n));
    Topology finer = generate_from_subbase(n, larger);
    TopologyOrder rel = compare(finer, t);
    CHECK((rel == TopologyOrder::equal || rel == TopologyOrder::strictly_finer));

    // On finite spaces T1, Hausdorff and discreteness coincide.
    SeparationReport sep = separation_report(t);
    CHECK(sep.t1 == sep.discrete);
    CHECK(sep.hausdorff == sep.discrete);
  }
}

TEST_CASE("compare behaves like a partial order") {
  std::mt19937_64 eng(101);
  for (int iter = 0; iter < 100; ++iter) {
    int n = 1 + static_cast<int>(eng() % 4);
    auto random_topology = [&] {
      int count = static_cast<int>(eng() % 4);
      std::vector<ElemMask> subbase;
      for (int i = 0; i < count; ++i) subbase.push_back(eng() & full_mask(n));
      return generate_from_subbase(n, subbase);
    };
    Topology a = random_topology(), b = random_topology(), c = random_topology();
    CHECK(compare(a, a) == TopologyOrder::equal);
    if (compare(a, b) == TopologyOrder::strictly_finer)
      CHECK(compare(b, a) == TopologyOrder::strictly_coarser);
    if (compare(a, b) == TopologyOrder::equal) CHECK(a.opens == b.opens);
    bool a_ge_b = compare(a, b) == TopologyOrder::strictly_finer ||
                  compare(a, b) == TopologyOrder::equal;
    bool b_ge_c = compare(b, c) == TopologyOrder::strictly_finer ||
                  compare(b, c) == TopologyOrder::equal;
    bool a_ge_c = compare(a, c) == TopologyOrder::strictly_finer ||
                  compare(a, c) == TopologyOrder::equal;
    if (a_ge_b && b_ge_c) CHECK(a_ge_c);
  }
}
