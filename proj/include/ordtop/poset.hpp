#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordtop/bits.hpp"

namespace ordtop {

// A finite poset on indices 0..size-1. The relation is stored as one upset
// mask per element; it is reflexive, transitive and antisymmetric by
// construction (build_poset rejects anything else) and immutable afterwards.
struct FinitePoset {
  int size = 0;
  std::vector<ElemMask> up;    // up[x]   = {y : x <= y}
  std::vector<ElemMask> down;  // down[y] = {x : x <= y}

  bool leq(int x, int y) const { return contains(up[x], y); }
  bool has(int x) const { return x >= 0 && x < size; }
};

enum class Dir { down, up };
enum class BoundSide { lower, upper };
enum class ExtremumKind { inf, sup };

// Builds the poset whose order is the reflexive-transitive closure of the
// given pairs (i, j), each meaning i <= j. Throws CycleDetected if the
// closure would relate two distinct elements both ways, BadIndex on
// out-of-range pairs, GroundTooLarge above 64 elements.
FinitePoset build_poset(int n, std::span<const std::pair<int, int>> covers);

FinitePoset make_chain(int k);
FinitePoset make_antichain(int k);
FinitePoset make_powerset(int k);  // subsets of a k-set ordered by inclusion
FinitePoset make_n5();
FinitePoset make_m3();

// Accepts "chain4", "antichain3", "powerset3", "n5", "m3".
FinitePoset make_named_family(std::string_view name);
bool is_named_family(std::string_view name);

// {y : y <= x} for down, {y : y >= x} for up.
ElemMask principal_set(const FinitePoset& p, int x, Dir dir);

// Upper (lower) bounds of S; bounds of the empty set are the whole ground set.
ElemMask bounds(const FinitePoset& p, ElemMask s, BoundSide side);

// Greatest lower / least upper bound, when it exists. inf of the empty set is
// the top of the poset (if any), sup of the empty set its bottom.
std::optional<int> extremum(const FinitePoset& p, ElemMask s, ExtremumKind kind);

enum class LatticeKind { not_lattice, lattice, distributive_lattice, boolean_algebra };

struct LatticeClassification {
  LatticeKind kind = LatticeKind::not_lattice;
  ElemMask atoms = 0;    // minimal nonzero elements; meaningful for lattices
  ElemMask coatoms = 0;  // maximal non-top elements; meaningful for lattices
  std::vector<int> complement;  // element -> complement; nonempty iff boolean_algebra
};

// Classifies by exhausting pairs (meets/joins), triples (distributivity) and
// complements. Distributivity uses x/\(y\/z) = (x/\y)\/(x/\z).
LatticeClassification lattice_classify(const FinitePoset& p);

const char* to_string(LatticeKind kind);

// Poset file format: a JSON document {"n": int, "labels": [...], "covers":
// [[i,j], ...]} where labels are optional display names kept out of the
// in-memory poset.
struct PosetDocument {
  FinitePoset poset;
  std::vector<std::string> labels;  // empty or size n
};

PosetDocument parse_poset_json(const std::string& text);
PosetDocument load_poset_file(const std::string& path);

// Covering pairs (x, y) with x < y and nothing strictly between; used by the
// CLI to echo a poset back in file-format form.
std::vector<std::pair<int, int>> cover_pairs(const FinitePoset& p);

}  // namespace ordtop
