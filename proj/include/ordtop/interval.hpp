#pragma once

#include <vector>

#include "ordtop/poset.hpp"
#include "ordtop/topology.hpp"

namespace ordtop {

// Finite generating sets for a basic closed set: the order ideal is the union
// of the principal down-sets of ideal_gens, the order filter the union of the
// principal up-sets of filter_gens. Generic over the carrier element type so
// the same membership logic serves finite posets and the term algebra.
template <class Elem>
struct GeneratorSets {
  std::vector<Elem> ideal_gens;
  std::vector<Elem> filter_gens;
};

struct BasicClosedMembership {
  bool in_ideal = false;
  bool in_filter = false;
};

// Membership needs one generator above (below) z, not joins.
template <class Elem, class LeqFn>
BasicClosedMembership basic_closed_contains(const GeneratorSets<Elem>& gens,
                                            const Elem& z, LeqFn leq) {
  BasicClosedMembership out;
  for (const Elem& x : gens.ideal_gens)
    if (leq(z, x)) {
      out.in_ideal = true;
      break;
    }
  for (const Elem& y : gens.filter_gens)
    if (leq(y, z)) {
      out.in_filter = true;
      break;
    }
  return out;
}

// Finite-poset carrier; throws CarrierMismatch when z or a generator is
// outside the ground set.
BasicClosedMembership basic_closed_contains(const FinitePoset& p,
                                            const GeneratorSets<int>& gens, int z);

// Topology generated by the complements of all principal down-sets and
// up-sets. Discrete on every finite poset.
Topology interval_topology(const FinitePoset& p);

struct OrderVsInterval {
  Topology order;
  Topology interval;
  TopologyOrder relation = TopologyOrder::equal;
};

// relation = compare(order, interval); never strictly_coarser, and on finite
// posets both topologies are discrete, hence equal.
OrderVsInterval compare_order_vs_interval(const FinitePoset& p);

}  // namespace ordtop
