#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ordtop {

// Subsets of a ground set {0..n-1} are bit masks; bit x set means x is a
// member. Ground sets are capped at 64 elements by the mask width, and at 16
// for every operation that enumerates all 2^n subsets.
using ElemMask = std::uint64_t;

inline constexpr int kMaxGround = 64;
inline constexpr int kMaxEnumGround = 16;

inline constexpr ElemMask full_mask(int n) {
  return n >= kMaxGround ? ~ElemMask{0} : (ElemMask{1} << n) - 1;
}

inline constexpr ElemMask single(int x) { return ElemMask{1} << x; }

inline constexpr bool contains(ElemMask s, int x) { return (s >> x) & 1; }

inline constexpr bool subset_of(ElemMask a, ElemMask b) { return (a & ~b) == 0; }

inline int set_size(ElemMask s) { return std::popcount(s); }

inline std::vector<int> set_elements(ElemMask s) {
  std::vector<int> out;
  for (; s; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

// "{0,2,5}"; the empty set prints as "{}".
inline std::string set_to_string(ElemMask s) {
  std::string out = "{";
  bool first = true;
  for (int x : set_elements(s)) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace ordtop
