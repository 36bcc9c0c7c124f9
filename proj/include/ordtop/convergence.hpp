#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ordtop/bits.hpp"
#include "ordtop/poset.hpp"
#include "ordtop/topology.hpp"

namespace ordtop {

// A filter on a finite set, represented by its core: the intersection of all
// members, itself a member. The represented filter is {S : S >= core}, and
// every filter on a finite set arises this way. Singleton cores give
// ultrafilters (the point filters P_x).
struct PrincipalFilter {
  int ground_size = 0;
  ElemMask core = 0;

  PrincipalFilter(int ground_size, ElemMask core);
};

// One filter per nonempty subset of the ground set, in ascending core order;
// 2^n - 1 filters in total.
std::vector<PrincipalFilter> enumerate_filters(int ground_size);

// A convergence relation, kept closed at all times: every filter inherits the
// limits of the filters it contains (core A' <= A means filter A' is the
// larger filter), and each point filter converges to its point. limits is
// indexed by core mask; entry 0 is unused.
struct ConvergenceRelation {
  int ground_size = 0;
  std::vector<ElemMask> limits;

  ElemMask limits_of(ElemMask core) const { return limits[core]; }
};

using CoreLimit = std::pair<ElemMask, int>;

// Smallest convergence relation containing the raw (core, limit) pairs.
ConvergenceRelation convergence_closure(int ground_size,
                                        std::span<const CoreLimit> raw);

// U is open iff U belongs to every filter converging to a point of U, i.e.
// every core with a limit in U is contained in U.
Topology induced_topology(const ConvergenceRelation& c);

// True iff every filter converges to at most one point.
bool unique_limits(const ConvergenceRelation& c);

struct Fact22Result {
  bool holds = true;
  ElemMask core = 0;  // witness, meaningful iff !holds
  int point = 0;
};

// Checks whether "a filter containing all open neighborhoods of x converges
// to x" holds in the induced topology. This is not automatic: some finite
// convergence spaces violate it, and the checker reports the first failing
// (core, point) pair in ascending order.
Fact22Result fact22_check(const ConvergenceRelation& c);

// Union of upper (lower) bound sets over all members of the filter; collapses
// to the bounds of the core, since the core is the smallest member.
ElemMask filter_bounds(const FinitePoset& p, const PrincipalFilter& f,
                       BoundSide side);

// F order-converges to x iff inf of the filter's upper bounds and sup of its
// lower bounds both exist and equal x. The limit, when any, is unique.
bool order_converges(const FinitePoset& p, const PrincipalFilter& f, int x);

// The full order-convergence relation of a poset (a closed relation).
ConvergenceRelation order_convergence(const FinitePoset& p);

// Topology induced by order convergence; discrete on every finite poset.
Topology order_topology(const FinitePoset& p);

struct ExploreConfig {
  int ground_size = 2;
  bool exhaustive = true;
  std::uint64_t samples = 0;  // sampled mode only
  std::uint64_t seed = 0;
  double q = 0.25;  // per-pair inclusion probability when sampling
};

struct ExploreWitness {
  std::string category;  // "dir1", "dir2" or "fact22"
  std::string relation;  // closed relation as {core}->{limits};...
  std::string detail;
};

// dir1 counts spaces where unique limits hold but the induced topology is
// not Hausdorff; dir2 counts the converse; fact22 counts spaces violating
// the neighborhood-filter convergence property. Witnesses are capped at 5
// per category and ordered by the canonical relation encoding.
struct ExploreReport {
  ExploreConfig config;
  std::uint64_t spaces_checked = 0;
  std::uint64_t dir1_violations = 0;
  std::uint64_t dir2_violations = 0;
  std::uint64_t fact22_violations = 0;
  std::vector<ExploreWitness> witnesses;
};

// Exhaustive mode sweeps every closed convergence relation on the ground set
// (allowed through ground size 3, deduplicated after closure); sampled mode
// draws each raw (core, limit) pair independently with probability q and
// closes, once per sample.
ExploreReport explore_prop23(const ExploreConfig& config);

std::string encode_relation(const ConvergenceRelation& c);
std::string format_explore_report(const ExploreReport& report, bool human);

}  // namespace ordtop
