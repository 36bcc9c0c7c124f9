#include "ordtop/convergence.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "ordtop/errors.hpp"

namespace ordtop {

namespace {

void check_ground(int n) {
  if (n < 1) throw BadIndex("ground size must be at least 1");
  if (n > kMaxEnumGround)
    throw GroundTooLarge("ground size " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxEnumGround));
}

// Uniform double in [0,1) from the top 53 bits; avoids the
// implementation-defined std::uniform_real_distribution so that seeded runs
// reproduce byte-identical reports everywhere.
double canonical_double(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * (1.0 / 9007199254740992.0);
}

}  // namespace

PrincipalFilter::PrincipalFilter(int ground_size, ElemMask core)
    : ground_size(ground_size), core(core) {
  check_ground(ground_size);
  if (core == 0) throw EmptyCore("filter core must be nonempty");
  if (!subset_of(core, full_mask(ground_size)))
    throw BadIndex("filter core outside ground set");
}

std::vector<PrincipalFilter> enumerate_filters(int ground_size) {
  check_ground(ground_size);
  std::vector<PrincipalFilter> out;
  const ElemMask all = full_mask(ground_size);
  out.reserve(all);
  for (ElemMask core = 1; core <= all; ++core)
    out.emplace_back(ground_size, core);
  return out;
}

ConvergenceRelation convergence_closure(int ground_size,
                                        std::span<const CoreLimit> raw) {
  check_ground(ground_size);
  const ElemMask all = full_mask(ground_size);
  ConvergenceRelation c;
  c.ground_size = ground_size;
  c.limits.assign(all + 1, 0);
  for (auto [core, x] : raw) {
    if (core == 0) throw EmptyCore("raw convergence core must be nonempty");
    if (!subset_of(core, all)) throw BadIndex("raw convergence core out of range");
    if (x < 0 || x >= ground_size) throw BadIndex("raw convergence limit out of range");
    c.limits[core] |= single(x);
  }
  // Propagate limits downward to sub-cores (= super-filters), one bit at a
  // time; then add the point convergences.
  for (int b = 0; b < ground_size; ++b)
    for (ElemMask a = 1; a <= all; ++a)
      if (!contains(a, b)) c.limits[a] |= c.limits[a | single(b)];
  for (int x = 0; x < ground_size; ++x) c.limits[single(x)] |= single(x);
  return c;
}

Topology induced_topology(const ConvergenceRelation& c) {
  const int n = c.ground_size;
  const ElemMask all = full_mask(n);
  // reach[x] = union of all cores converging to x; U is open iff it contains
  // reach[x] for each of its points.
  std::vector<ElemMask> reach(n, 0);
  for (ElemMask a = 1; a <= all; ++a)
    for (ElemMask rest = c.limits[a]; rest; rest &= rest - 1)
      reach[std::countr_zero(rest)] |= a;

  Topology t;
  t.ground_size = n;
  for (ElemMask u = 0;; ++u) {
    bool open = true;
    for (ElemMask rest = u; rest; rest &= rest - 1)
      if (!subset_of(reach[std::countr_zero(rest)], u)) {
        open = false;
        break;
      }
    if (open) t.opens.push_back(u);
    if (u == all) break;
  }
  return t;
}

bool unique_limits(const ConvergenceRelation& c) {
  const ElemMask all = full_mask(c.ground_size);
  for (ElemMask a = 1; a <= all; ++a)
    if (set_size(c.limits[a]) > 1) return false;
  return true;
}

Fact22Result fact22_check(const ConvergenceRelation& c) {
  const int n = c.ground_size;
  const ElemMask all = full_mask(n);
  Topology t = induced_topology(c);
  std::vector<ElemMask> mn(n);
  for (int x = 0; x < n; ++x) mn[x] = min_neighborhood(t, x);
  // The filter with core A contains every open neighborhood of x exactly
  // when A is inside the minimal one.
  for (ElemMask a = 1; a <= all; ++a)
    for (int x = 0; x < n; ++x)
      if (subset_of(a, mn[x]) && !contains(c.limits[a], x))
        return {false, a, x};
  return {true, 0, 0};
}

ElemMask filter_bounds(const FinitePoset& p, const PrincipalFilter& f,
                       BoundSide side) {
  if (p.size != f.ground_size)
    throw GroundMismatch("filter and poset ground sizes differ");
  // Members of the filter are the supersets of the core, and bounds shrink
  // as sets grow, so the union over members is the bounds of the core.
  return bounds(p, f.core, side);
}

bool order_converges(const FinitePoset& p, const PrincipalFilter& f, int x) {
  if (p.size != f.ground_size)
    throw GroundMismatch("filter and poset ground sizes differ");
  if (!p.has(x)) throw BadIndex("limit point out of range");
  auto inf_upper = extremum(p, filter_bounds(p, f, BoundSide::upper), ExtremumKind::inf);
  auto sup_lower = extremum(p, filter_bounds(p, f, BoundSide::lower), ExtremumKind::sup);
  return inf_upper && sup_lower && *inf_upper == x && *sup_lower == x;
}

ConvergenceRelation order_convergence(const FinitePoset& p) {
  check_ground(p.size);
  const ElemMask all = full_mask(p.size);
  ConvergenceRelation c;
  c.ground_size = p.size;
  c.limits.assign(all + 1, 0);
  for (ElemMask core = 1; core <= all; ++core) {
    auto inf_upper = extremum(p, bounds(p, core, BoundSide::upper), ExtremumKind::inf);
    auto sup_lower = extremum(p, bounds(p, core, BoundSide::lower), ExtremumKind::sup);
    if (inf_upper && sup_lower && *inf_upper == *sup_lower)
      c.limits[core] = single(*inf_upper);
  }
  return c;
}

Topology order_topology(const FinitePoset& p) {
  return induced_topology(order_convergence(p));
}

std::string encode_relation(const ConvergenceRelation& c) {
  std::string out;
  const ElemMask all = full_mask(c.ground_size);
  for (ElemMask a = 1; a <= all; ++a) {
    if (a > 1) out += ';';
    out += set_to_string(a) + "->" + set_to_string(c.limits[a]);
  }
  return out;
}

namespace {

// Keeps at most `cap` witnesses, smallest canonical encodings first, so the
// report does not depend on visit order.
class WitnessBucket {
 public:
  void add(const std::vector<ElemMask>& key, const std::string& detail) {
    entries_.emplace(key, detail);
    if (entries_.size() > kCap) entries_.erase(std::prev(entries_.end()));
  }
  void emit(const std::string& category, int ground_size,
            std::vector<ExploreWitness>& out) const {
    for (const auto& [key, detail] : entries_) {
      ConvergenceRelation c;
      c.ground_size = ground_size;
      c.limits = key;
      out.push_back({category, encode_relation(c), detail});
    }
  }

 private:
  static constexpr std::size_t kCap = 5;
  std::map<std::vector<ElemMask>, std::string> entries_;
};

struct ExploreState {
  ExploreReport report;
  WitnessBucket dir1, dir2, fact22;

  void visit(const ConvergenceRelation& c) {
    report.spaces_checked++;
    bool unique = unique_limits(c);
    bool hausdorff = separation_report(induced_topology(c)).hausdorff;
    if (unique && !hausdorff) {
      report.dir1_violations++;
      dir1.add(c.limits, "unique_limits=true hausdorff=false");
    }
    if (hausdorff && !unique) {
      report.dir2_violations++;
      dir2.add(c.limits, "hausdorff=true unique_limits=false");
    }
    Fact22Result f = fact22_check(c);
    if (!f.holds) {
      report.fact22_violations++;
      fact22.add(c.limits, "core=" + set_to_string(f.core) +
                               " point=" + std::to_string(f.point));
    }
  }
};

}  // namespace

ExploreReport explore_prop23(const ExploreConfig& config) {
  const int n = config.ground_size;
  check_ground(n);
  if (config.q < 0.0 || config.q > 1.0)
    throw BadArgument("sampling probability must lie in [0,1]");
  const ElemMask all = full_mask(n);
  const int cores = static_cast<int>(all);

  ExploreState state;
  state.report.config = config;

  if (config.exhaustive) {
    if (n > 3)
      throw TooLargeForExhaustive("exhaustive sweep is limited to ground size 3");
    // Every closed relation is the closure of some raw pair set, so sweeping
    // all raw sets and deduplicating after closure visits each exactly once.
    const int raw_bits = cores * n;
    std::vector<bool> seen(std::size_t{1} << raw_bits, false);
    std::vector<CoreLimit> raw;
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << raw_bits); ++r) {
      raw.clear();
      for (int ci = 0; ci < cores; ++ci)
        for (int x = 0; x < n; ++x)
          if (r >> (ci * n + x) & 1) raw.emplace_back(ElemMask(ci + 1), x);
      ConvergenceRelation c = convergence_closure(n, raw);
      std::uint64_t key = 0;
      for (int ci = 0; ci < cores; ++ci)
        key |= c.limits[ci + 1] << (ci * n);
      if (seen[key]) continue;
      seen[key] = true;
      state.visit(c);
    }
  } else {
    std::mt19937_64 eng(config.seed);
    std::vector<CoreLimit> raw;
    for (std::uint64_t s = 0; s < config.samples; ++s) {
      raw.clear();
      for (int ci = 0; ci < cores; ++ci)
        for (int x = 0; x < n; ++x)
          if (canonical_double(eng) < config.q) raw.emplace_back(ElemMask(ci + 1), x);
      state.visit(convergence_closure(n, raw));
    }
  }

  state.dir1.emit("dir1", n, state.report.witnesses);
  state.dir2.emit("dir2", n, state.report.witnesses);
  state.fact22.emit("fact22", n, state.report.witnesses);
  return state.report;
}

std::string format_explore_report(const ExploreReport& report, bool human) {
  std::ostringstream out;
  out << "report: convergence-explore\n";
  out << "n: " << report.config.ground_size << "\n";
  out << "mode: " << (report.config.exhaustive ? "exhaustive" : "sampled") << "\n";
  out << "samples: " << (report.config.exhaustive ? 0 : report.config.samples) << "\n";
  out << "seed: " << report.config.seed << "\n";
  out << "q: " << report.config.q << "\n";
  out << "spaces_checked: " << report.spaces_checked << "\n";
  out << "dir1_violations: " << report.dir1_violations << "\n";
  out << "dir2_violations: " << report.dir2_violations << "\n";
  out << "fact22_violations: " << report.fact22_violations << "\n";
  if (human) {
    out << "# dir1 would refute 'unique limits implies Hausdorff' (a theorem;"
           " any hit is a bug).\n";
    out << "# dir2 probes the open converse 'Hausdorff implies unique limits';"
           " counts are evidence, not proof.\n";
    out << "# fact22 lists spaces where a filter refines every neighborhood"
           " filter yet fails to converge.\n";
  }
  for (const auto& w : report.witnesses)
    out << "witness: " << w.category << " " << w.relation << " " << w.detail << "\n";
  return out.str();
}

}  // namespace ordtop
