#include "ordtop/interval.hpp"

#include "ordtop/convergence.hpp"
#include "ordtop/errors.hpp"

namespace ordtop {

BasicClosedMembership basic_closed_contains(const FinitePoset& p,
                                            const GeneratorSets<int>& gens, int z) {
  if (!p.has(z)) throw CarrierMismatch("element outside the poset carrier");
  for (int g : gens.ideal_gens)
    if (!p.has(g)) throw CarrierMismatch("ideal generator outside the poset carrier");
  for (int g : gens.filter_gens)
    if (!p.has(g)) throw CarrierMismatch("filter generator outside the poset carrier");
  return basic_closed_contains(gens, z, [&p](int a, int b) { return p.leq(a, b); });
}

Topology interval_topology(const FinitePoset& p) {
  if (p.size > kMaxEnumGround)
    throw GroundTooLarge("poset size " + std::to_string(p.size) + " exceeds " +
                         std::to_string(kMaxEnumGround));
  const ElemMask all = full_mask(p.size);
  std::vector<ElemMask> subbase;
  subbase.reserve(2 * p.size);
  for (int x = 0; x < p.size; ++x) {
    subbase.push_back(all & ~p.down[x]);
    subbase.push_back(all & ~p.up[x]);
  }
  return generate_from_subbase(p.size, subbase);
}

OrderVsInterval compare_order_vs_interval(const FinitePoset& p) {
  OrderVsInterval out;
  out.order = order_topology(p);
  out.interval = interval_topology(p);
  out.relation = compare(out.order, out.interval);
  return out;
}

}  // namespace ordtop
