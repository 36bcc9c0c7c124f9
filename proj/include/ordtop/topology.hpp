#pragma once

#include <span>
#include <string>
#include <vector>

#include "ordtop/bits.hpp"

namespace ordtop {

// A finite topology stored as the explicit family of open sets, sorted
// ascending by mask. Members always include {} and the full ground set and
// the family is closed under unions and intersections; the generating
// functions guarantee this.
struct Topology {
  int ground_size = 0;
  std::vector<ElemMask> opens;

  bool is_open(ElemMask u) const;
};

// Smallest topology containing the subbase: finite intersections (the empty
// intersection being the whole ground set) closed under unions. Ground size
// is capped at 16 since all 2^n subsets are scanned.
Topology generate_from_subbase(int ground_size, std::span<const ElemMask> subbase);

struct SeparationReport {
  bool t1 = false;
  bool hausdorff = false;
  bool discrete = false;
};

// Separation axioms decided through minimal open neighborhoods; on a finite
// space all three coincide, but each is computed from its own definition.
SeparationReport separation_report(const Topology& t);

enum class TopologyOrder { equal, strictly_finer, strictly_coarser, incomparable };

// Containment comparison of the open families ("finer" = more opens on the
// left). Throws GroundMismatch for different ground sizes.
TopologyOrder compare(const Topology& t1, const Topology& t2);

const char* to_string(TopologyOrder order);

struct LocalStructure {
  ElemMask min_nbhd = 0;              // intersection of all opens containing x
  ElemMask closure_of_singleton = 0;  // complement of the union of opens avoiding x
};

LocalStructure local_structure(const Topology& t, int x);

ElemMask min_neighborhood(const Topology& t, int x);

// Checks the representation invariants; the generators make them hold by
// construction, so this is for tests and assertions.
bool is_topology(const Topology& t);

// Dump format: ground size on the first line, then one line per open set as
// a sorted space-separated index list (the empty set is an empty line).
// Opens appear in ascending mask order.
std::string dump_topology(const Topology& t);

}  // namespace ordtop
