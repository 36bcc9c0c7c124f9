#include "ordtop/topology.hpp"

#include <algorithm>

#include "ordtop/errors.hpp"

namespace ordtop {

bool Topology::is_open(ElemMask u) const {
  return std::binary_search(opens.begin(), opens.end(), u);
}

namespace {

void check_enum_ground(int n) {
  if (n < 0) throw BadIndex("ground size must be nonnegative");
  if (n > kMaxEnumGround)
    throw GroundTooLarge("ground size " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxEnumGround));
}

// Opens of the generated topology are exactly the sets closed under the
// point -> minimal-basic-neighborhood map.
Topology from_min_neighborhoods(int n, const std::vector<ElemMask>& nbhd) {
  Topology t;
  t.ground_size = n;
  const ElemMask all = full_mask(n);
  for (ElemMask u = 0;; ++u) {
    bool open = true;
    for (ElemMask rest = u; rest; rest &= rest - 1)
      if (!subset_of(nbhd[std::countr_zero(rest)], u)) {
        open = false;
        break;
      }
    if (open) t.opens.push_back(u);
    if (u == all) break;
  }
  return t;
}

}  // namespace

Topology generate_from_subbase(int ground_size, std::span<const ElemMask> subbase) {
  check_enum_ground(ground_size);
  const ElemMask all = full_mask(ground_size);
  for (ElemMask s : subbase)
    if (!subset_of(s, all)) throw BadIndex("subbase member outside ground set");
  // Minimal basic open around x: the intersection of every subbase member
  // containing x (the empty intersection is the whole space).
  std::vector<ElemMask> nbhd(ground_size, all);
  for (int x = 0; x < ground_size; ++x)
    for (ElemMask s : subbase)
      if (contains(s, x)) nbhd[x] &= s;
  return from_min_neighborhoods(ground_size, nbhd);
}

ElemMask min_neighborhood(const Topology& t, int x) {
  if (x < 0 || x >= t.ground_size)
    throw BadIndex("point " + std::to_string(x) + " out of range");
  ElemMask acc = full_mask(t.ground_size);
  for (ElemMask u : t.opens)
    if (contains(u, x)) acc &= u;
  return acc;
}

SeparationReport separation_report(const Topology& t) {
  const int n = t.ground_size;
  std::vector<ElemMask> mn(n);
  for (int x = 0; x < n; ++x) mn[x] = min_neighborhood(t, x);

  SeparationReport r;
  r.t1 = true;
  for (int x = 0; x < n; ++x)
    if (mn[x] != single(x)) r.t1 = false;
  r.hausdorff = true;
  for (int x = 0; x < n && r.hausdorff; ++x)
    for (int y = x + 1; y < n; ++y)
      if (mn[x] & mn[y]) {
        r.hausdorff = false;
        break;
      }
  r.discrete = true;
  for (int x = 0; x < n; ++x)
    if (!t.is_open(single(x))) r.discrete = false;
  return r;
}

TopologyOrder compare(const Topology& t1, const Topology& t2) {
  if (t1.ground_size != t2.ground_size)
    throw GroundMismatch("topologies live on different ground sets");
  bool le = std::includes(t2.opens.begin(), t2.opens.end(), t1.opens.begin(),
                          t1.opens.end());
  bool ge = std::includes(t1.opens.begin(), t1.opens.end(), t2.opens.begin(),
                          t2.opens.end());
  if (le && ge) return TopologyOrder::equal;
  if (ge) return TopologyOrder::strictly_finer;
  if (le) return TopologyOrder::strictly_coarser;
  return TopologyOrder::incomparable;
}

const char* to_string(TopologyOrder order) {
  switch (order) {
    case TopologyOrder::equal: return "equal";
    case TopologyOrder::strictly_finer: return "strictly_finer";
    case TopologyOrder::strictly_coarser: return "strictly_coarser";
    case TopologyOrder::incomparable: return "incomparable";
  }
  return "?";
}

LocalStructure local_structure(const Topology& t, int x) {
  if (x < 0 || x >= t.ground_size)
    throw BadIndex("point " + std::to_string(x) + " out of range");
  LocalStructure out;
  out.min_nbhd = min_neighborhood(t, x);
  ElemMask avoiding = 0;
  for (ElemMask u : t.opens)
    if (!contains(u, x)) avoiding |= u;
  out.closure_of_singleton = full_mask(t.ground_size) & ~avoiding;
  return out;
}

bool is_topology(const Topology& t) {
  if (t.ground_size < 0 || t.ground_size > kMaxEnumGround) return false;
  if (!std::is_sorted(t.opens.begin(), t.opens.end())) return false;
  if (std::adjacent_find(t.opens.begin(), t.opens.end()) != t.opens.end())
    return false;
  const ElemMask all = full_mask(t.ground_size);
  if (!t.is_open(0) || !t.is_open(all)) return false;
  for (ElemMask u : t.opens) {
    if (!subset_of(u, all)) return false;
    for (ElemMask v : t.opens)
      if (!t.is_open(u & v) || !t.is_open(u | v)) return false;
  }
  return true;
}

std::string dump_topology(const Topology& t) {
  std::string out = std::to_string(t.ground_size) + "\n";
  for (ElemMask u : t.opens) {
    bool first = true;
    for (int x : set_elements(u)) {
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace ordtop
