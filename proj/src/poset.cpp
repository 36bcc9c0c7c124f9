#include "ordtop/poset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "ordtop/errors.hpp"

namespace ordtop {

FinitePoset build_poset(int n, std::span<const std::pair<int, int>> covers) {
  if (n < 0) throw BadIndex("element count must be nonnegative");
  if (n > kMaxGround)
    throw GroundTooLarge("element count " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxGround));
  FinitePoset p;
  p.size = n;
  p.up.assign(n, 0);
  for (int x = 0; x < n; ++x) p.up[x] = single(x);
  for (auto [i, j] : covers) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw BadIndex("cover pair (" + std::to_string(i) + "," + std::to_string(j) +
                     ") out of range");
    p.up[i] |= single(j);
  }
  // Reflexive-transitive closure: up[x] |= up[y] for every y already above x,
  // iterated to a fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      ElemMask acc = p.up[x];
      for (ElemMask rest = acc; rest; rest &= rest - 1)
        acc |= p.up[std::countr_zero(rest)];
      if (acc != p.up[x]) {
        p.up[x] = acc;
        changed = true;
      }
    }
  }
  for (int x = 0; x < n; ++x)
    for (ElemMask rest = p.up[x] & ~single(x); rest; rest &= rest - 1) {
      int y = std::countr_zero(rest);
      if (contains(p.up[y], x))
        throw CycleDetected("closure forces " + std::to_string(x) + " <= " +
                            std::to_string(y) + " <= " + std::to_string(x));
    }
  p.down.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (ElemMask rest = p.up[x]; rest; rest &= rest - 1)
      p.down[std::countr_zero(rest)] |= single(x);
  return p;
}

FinitePoset make_chain(int k) {
  if (k < 1) throw BadIndex("chain needs at least one element");
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
  return build_poset(k, covers);
}

FinitePoset make_antichain(int k) {
  if (k < 1) throw BadIndex("antichain needs at least one element");
  return build_poset(k, {});
}

FinitePoset make_powerset(int k) {
  if (k < 0 || k > 5) throw BadIndex("powerset exponent must be in 0..5");
  int n = 1 << k;
  std::vector<std::pair<int, int>> covers;
  for (int s = 0; s < n; ++s)
    for (int b = 0; b < k; ++b)
      if (!(s >> b & 1)) covers.emplace_back(s, s | (1 << b));
  return build_poset(n, covers);
}

FinitePoset make_n5() {
  // 0 < 1 < 2 < 4 and 0 < 3 < 4, with 3 incomparable to 1 and 2.
  std::vector<std::pair<int, int>> covers = {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return build_poset(5, covers);
}

FinitePoset make_m3() {
  std::vector<std::pair<int, int>> covers = {{0, 1}, {0, 2}, {0, 3},
                                             {1, 4}, {2, 4}, {3, 4}};
  return build_poset(5, covers);
}

namespace {

bool split_named(std::string_view name, std::string_view stem, int& k) {
  if (name.substr(0, stem.size()) != stem) return false;
  std::string_view digits = name.substr(stem.size());
  if (digits.empty() || digits.size() > 2) return false;
  k = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    k = k * 10 + (c - '0');
  }
  return true;
}

}  // namespace

bool is_named_family(std::string_view name) {
  int k;
  return name == "n5" || name == "m3" || split_named(name, "chain", k) ||
         split_named(name, "antichain", k) || split_named(name, "powerset", k);
}

FinitePoset make_named_family(std::string_view name) {
  int k;
  if (name == "n5") return make_n5();
  if (name == "m3") return make_m3();
  if (split_named(name, "chain", k)) return make_chain(k);
  if (split_named(name, "antichain", k)) return make_antichain(k);
  if (split_named(name, "powerset", k)) return make_powerset(k);
  throw BadIndex("unknown poset family '" + std::string(name) + "'");
}

ElemMask principal_set(const FinitePoset& p, int x, Dir dir) {
  if (!p.has(x)) throw BadIndex("element " + std::to_string(x) + " out of range");
  return dir == Dir::down ? p.down[x] : p.up[x];
}

ElemMask bounds(const FinitePoset& p, ElemMask s, BoundSide side) {
  if (!subset_of(s, full_mask(p.size))) throw BadIndex("set outside ground set");
  ElemMask acc = full_mask(p.size);
  for (ElemMask rest = s; rest; rest &= rest - 1) {
    int e = std::countr_zero(rest);
    acc &= (side == BoundSide::upper) ? p.up[e] : p.down[e];
  }
  return acc;
}

namespace {

// Largest element of s, if s has one.
std::optional<int> largest_of(const FinitePoset& p, ElemMask s) {
  for (ElemMask rest = s; rest; rest &= rest - 1) {
    int cand = std::countr_zero(rest);
    if (subset_of(s, p.down[cand])) return cand;
  }
  return std::nullopt;
}

std::optional<int> smallest_of(const FinitePoset& p, ElemMask s) {
  for (ElemMask rest = s; rest; rest &= rest - 1) {
    int cand = std::countr_zero(rest);
    if (subset_of(s, p.up[cand])) return cand;
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> extremum(const FinitePoset& p, ElemMask s, ExtremumKind kind) {
  if (kind == ExtremumKind::inf) return largest_of(p, bounds(p, s, BoundSide::lower));
  return smallest_of(p, bounds(p, s, BoundSide::upper));
}

LatticeClassification lattice_classify(const FinitePoset& p) {
  LatticeClassification out;
  const int n = p.size;
  if (n == 0) return out;

  // Meet/join tables via bounds; -1 marks absence.
  std::vector<int> meet(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> join(static_cast<std::size_t>(n) * n, -1);
  bool is_lattice = true;
  for (int x = 0; x < n && is_lattice; ++x)
    for (int y = x; y < n; ++y) {
      auto m = extremum(p, single(x) | single(y), ExtremumKind::inf);
      auto j = extremum(p, single(x) | single(y), ExtremumKind::sup);
      if (!m || !j) {
        is_lattice = false;
        break;
      }
      meet[x * n + y] = meet[y * n + x] = *m;
      join[x * n + y] = join[y * n + x] = *j;
    }
  if (!is_lattice) return out;

  out.kind = LatticeKind::lattice;
  int bottom = *extremum(p, 0, ExtremumKind::sup);
  int top = *extremum(p, 0, ExtremumKind::inf);
  for (int x = 0; x < n; ++x) {
    if (x != bottom && (p.down[x] & ~single(bottom) & ~single(x)) == 0)
      out.atoms |= single(x);
    if (x != top && (p.up[x] & ~single(top) & ~single(x)) == 0)
      out.coatoms |= single(x);
  }

  bool distributive = true;
  for (int x = 0; x < n && distributive; ++x)
    for (int y = 0; y < n && distributive; ++y)
      for (int z = 0; z < n; ++z)
        if (meet[x * n + join[y * n + z]] !=
            join[meet[x * n + y] * n + meet[x * n + z]]) {
          distributive = false;
          break;
        }
  if (!distributive) return out;
  out.kind = LatticeKind::distributive_lattice;

  std::vector<int> compl_map(n, -1);
  bool complemented = true;
  for (int x = 0; x < n && complemented; ++x) {
    complemented = false;
    for (int y = 0; y < n; ++y)
      if (meet[x * n + y] == bottom && join[x * n + y] == top) {
        compl_map[x] = y;
        complemented = true;
        break;
      }
  }
  if (complemented) {
    out.kind = LatticeKind::boolean_algebra;
    out.complement = std::move(compl_map);
  }
  return out;
}

const char* to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::not_lattice: return "not_lattice";
    case LatticeKind::lattice: return "lattice";
    case LatticeKind::distributive_lattice: return "distributive_lattice";
    case LatticeKind::boolean_algebra: return "boolean_algebra";
  }
  return "?";
}

PosetDocument parse_poset_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(0, std::string("poset file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw SyntaxError(0, "poset file needs an integer field 'n'");
  int n = doc["n"].get<int>();
  std::vector<std::pair<int, int>> covers;
  if (doc.contains("covers")) {
    for (const auto& pair : doc["covers"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
          !pair[1].is_number_integer())
        throw SyntaxError(0, "each cover must be a pair [i, j]");
      covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
  }
  PosetDocument out;
  out.poset = build_poset(n, covers);
  if (doc.contains("labels")) {
    for (const auto& label : doc["labels"]) {
      if (!label.is_string()) throw SyntaxError(0, "labels must be strings");
      out.labels.push_back(label.get<std::string>());
    }
    if (static_cast<int>(out.labels.size()) != n)
      throw SyntaxError(0, "labels array must have length n");
  }
  return out;
}

PosetDocument load_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadArgument("cannot open poset file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poset_json(buf.str());
}

std::vector<std::pair<int, int>> cover_pairs(const FinitePoset& p) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < p.size; ++x)
    for (ElemMask rest = p.up[x] & ~single(x); rest; rest &= rest - 1) {
      int y = std::countr_zero(rest);
      ElemMask between = p.up[x] & p.down[y] & ~single(x) & ~single(y);
      if (between == 0) out.emplace_back(x, y);
    }
  return out;
}

}  // namespace ordtop
