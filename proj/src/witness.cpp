#include "ordtop/witness.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "ordtop/errors.hpp"

namespace ordtop {

const char* to_string(CandidateStatus status) {
  switch (status) {
    case CandidateStatus::ok: return "ok";
    case CandidateStatus::empty_generators: return "empty_generators";
    case CandidateStatus::ideal_contains_top: return "ideal_contains_top";
    case CandidateStatus::filter_contains_bottom: return "filter_contains_bottom";
  }
  return "?";
}

CandidateStatus validate_candidate(BoolTerm lower, BoolTerm upper,
                                   const GeneratorSets<BoolTerm>& gens) {
  if (gens.ideal_gens.empty() || gens.filter_gens.empty())
    return CandidateStatus::empty_generators;
  for (BoolTerm x : gens.ideal_gens)
    if (x == upper) return CandidateStatus::ideal_contains_top;
  for (BoolTerm y : gens.filter_gens)
    if (y == lower) return CandidateStatus::filter_contains_bottom;
  return CandidateStatus::ok;
}

CandidateStatus validate_candidate(const GeneratorSets<BoolTerm>& gens) {
  return validate_candidate(term_zero(), term_one(), gens);
}

namespace {

// View of the interval algebra [lo, hi]; meet and join are inherited, the
// relative complement of z is lo \/ (hi /\ ~z). lo = 0, hi = 1 gives the
// whole algebra back.
struct IntervalView {
  BoolTerm lo, hi;

  BoolTerm rel_complement(BoolTerm z) const {
    return join(lo, meet(hi, complement(z)));
  }
  // Strict split inside the interval: the part of z above lo is cut with a
  // fresh generator, which leaves lo < result < z whenever z > lo.
  BoolTerm rel_split(BoolTerm z, std::uint32_t fresh_var) const {
    return join(lo, meet(meet(z, complement(lo)), term_var(fresh_var)));
  }
};

// Atoms of the finite subalgebra of [lo, hi] generated by Z: nonzero (i.e.
// != lo) full meets over all sign choices, ordered canonically by their part
// above lo.
SubalgebraBasis interval_subalgebra(const IntervalView& view,
                                    const std::vector<BoolTerm>& generators) {
  if (generators.size() > 16)
    throw BadArgument("subalgebra generation is limited to 16 generators");
  const std::size_t k = generators.size();
  std::vector<BoolTerm> atoms;
  std::unordered_set<std::uint32_t> seen;
  for (std::size_t m = (std::size_t{1} << k); m-- > 0;) {
    BoolTerm acc = view.hi;
    for (std::size_t i = 0; i < k && !(acc == view.lo); ++i) {
      bool positive = (m >> (k - 1 - i)) & 1;
      acc = meet(acc, positive ? generators[i] : view.rel_complement(generators[i]));
    }
    if (!(acc == view.lo) && seen.insert(acc.id).second) atoms.push_back(acc);
  }

  std::vector<BoolTerm> stripped;
  stripped.reserve(atoms.size());
  for (BoolTerm atom : atoms) stripped.push_back(meet(atom, complement(view.lo)));
  std::vector<std::size_t> order = partition_order(stripped);

  SubalgebraBasis basis;
  basis.generators = generators;
  for (std::size_t i : order) basis.atoms.push_back(atoms[i]);
  for (BoolTerm atom : basis.atoms)
    basis.coatoms.push_back(view.rel_complement(atom));

  // Partition-of-unity sanity relative to the interval; a failure here is a
  // kernel bug, not an input property.
  BoolTerm all = view.lo;
  for (std::size_t i = 0; i < basis.atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.atoms.size(); ++j)
      if (!(meet(basis.atoms[i], basis.atoms[j]) == view.lo))
        throw VerificationFailed("subalgebra atoms are not disjoint");
    all = join(all, basis.atoms[i]);
  }
  if (!(all == view.hi))
    throw VerificationFailed("subalgebra atoms do not join to the top");
  for (BoolTerm gen : generators) {
    BoolTerm joined = view.lo;
    for (BoolTerm atom : basis.atoms)
      if (leq(atom, gen)) joined = join(joined, atom);
    if (!(joined == gen))
      throw VerificationFailed("generator is not the join of its atoms");
  }
  return basis;
}

std::uint32_t fresh_variable_base(const IntervalView& view,
                                  const GeneratorSets<BoolTerm>& gens) {
  std::uint32_t base = 0;
  auto bump = [&base](BoolTerm t) {
    std::vector<std::uint32_t> vars = support(t);
    if (!vars.empty()) base = std::max(base, vars.back() + 1);
  };
  bump(view.lo);
  bump(view.hi);
  for (BoolTerm x : gens.ideal_gens) bump(x);
  for (BoolTerm y : gens.filter_gens) bump(y);
  return base;
}

WitnessReport witness_core(const IntervalView& view,
                           const GeneratorSets<BoolTerm>& gens) {
  CandidateStatus status = validate_candidate(view.lo, view.hi, gens);
  if (status != CandidateStatus::ok)
    throw InvalidCandidate(to_string(status));

  WitnessReport report;
  report.input = gens;
  report.lower = view.lo;
  report.upper = view.hi;

  std::vector<BoolTerm> generators = gens.ideal_gens;
  generators.insert(generators.end(), gens.filter_gens.begin(),
                    gens.filter_gens.end());
  report.basis = interval_subalgebra(view, generators);

  // One fresh generator per atom, allocated left to right past everything
  // the input mentions, so the splits are provably independent cuts.
  const std::uint32_t fresh = fresh_variable_base(view, gens);
  const std::size_t p = report.basis.atoms.size();
  for (std::size_t i = 0; i < p; ++i)
    report.splits.push_back(view.rel_split(report.basis.atoms[i],
                                           fresh + static_cast<std::uint32_t>(i)));

  BoolTerm w = view.lo;
  for (BoolTerm s : report.splits) w = join(w, s);
  report.witness = w;

  auto add = [&report](std::string name, bool pass) {
    report.checks.push_back({std::move(name), pass});
  };

  {
    BoolTerm again = view.lo;
    for (BoolTerm s : report.splits) again = join(again, s);
    add("witness_is_join_of_splits", again == w);
  }
  for (std::size_t i = 0; i < p; ++i) {
    BoolTerm v = report.basis.atoms[i];
    BoolTerm wi = report.splits[i];
    add("split_strict[" + std::to_string(i) + "]",
        leq(view.lo, wi) && leq(wi, v) && !(wi == view.lo) && !(wi == v));
    add("atom_meet_witness_is_split[" + std::to_string(i) + "]",
        meet(v, w) == wi);
    add("atom_not_below_witness[" + std::to_string(i) + "]", !leq(v, w));
  }
  for (std::size_t j = 0; j < p; ++j)
    add("witness_not_below_coatom[" + std::to_string(j) + "]",
        !leq(w, report.basis.coatoms[j]));
  for (std::size_t k = 0; k < gens.ideal_gens.size(); ++k)
    add("witness_escapes_ideal[" + std::to_string(k) + "]",
        !leq(w, gens.ideal_gens[k]));
  for (std::size_t k = 0; k < gens.filter_gens.size(); ++k)
    add("witness_escapes_filter[" + std::to_string(k) + "]",
        !leq(gens.filter_gens[k], w));
  for (std::size_t k = 0; k < gens.ideal_gens.size(); ++k) {
    bool below = false;
    for (BoolTerm u : report.basis.coatoms)
      if (leq(gens.ideal_gens[k], u)) below = true;
    add("ideal_gen_below_some_coatom[" + std::to_string(k) + "]", below);
  }
  for (std::size_t k = 0; k < gens.filter_gens.size(); ++k) {
    bool above = false;
    for (BoolTerm v : report.basis.atoms)
      if (leq(v, gens.filter_gens[k])) above = true;
    add("filter_gen_above_some_atom[" + std::to_string(k) + "]", above);
  }

  for (const WitnessCheck& check : report.checks)
    if (!check.pass)
      throw VerificationFailed("witness check failed: " + check.name);
  report.valid = true;
  return report;
}

}  // namespace

WitnessReport separation_witness(const GeneratorSets<BoolTerm>& gens) {
  return witness_core({term_zero(), term_one()}, gens);
}

WitnessReport relativized_witness(BoolTerm a, BoolTerm b,
                                  const GeneratorSets<BoolTerm>& gens) {
  if (!leq(a, b) || a == b)
    throw NotAnInterval("need a < b strictly");
  for (BoolTerm x : gens.ideal_gens)
    if (!leq(a, x) || !leq(x, b))
      throw InvalidCandidate("ideal generator outside the interval");
  for (BoolTerm y : gens.filter_gens)
    if (!leq(a, y) || !leq(y, b))
      throw InvalidCandidate("filter generator outside the interval");
  return witness_core({a, b}, gens);
}

GeneratorSets<BoolTerm> random_candidate(std::mt19937_64& eng,
                                         const FuzzConfig& config) {
  GeneratorSets<BoolTerm> gens;
  std::size_t n_ideal = 1 + eng() % config.max_gens;
  std::size_t n_filter = 1 + eng() % config.max_gens;
  for (std::size_t i = 0; i < n_ideal; ++i)
    gens.ideal_gens.push_back(
        random_term(eng, config.max_depth, config.max_var, true));
  for (std::size_t i = 0; i < n_filter; ++i)
    gens.filter_gens.push_back(
        random_term(eng, config.max_depth, config.max_var, true));
  return gens;
}

FuzzReport fuzz_refute(const FuzzConfig& config) {
  if (config.trials < 1)
    throw BadArgument("fuzz needs at least one trial");
  if (config.max_gens < 1 || config.max_depth < 1 || config.max_var < 1)
    throw BadArgument("fuzz limits must be at least 1");
  FuzzReport report;
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    std::mt19937_64 eng(config.seed + t);
    GeneratorSets<BoolTerm> gens = random_candidate(eng, config);
    report.trials_run++;
    if (validate_candidate(gens) != CandidateStatus::ok) {
      report.rejected_candidates++;
      continue;
    }
    try {
      separation_witness(gens);
      report.valid_witnesses++;
    } catch (const VerificationFailed& e) {
      report.failures++;
      if (report.first_failure.empty())
        report.first_failure =
            "trial " + std::to_string(t) + ": " + e.what();
    }
  }
  return report;
}

namespace {

void append_terms(std::ostringstream& out, const std::string& label,
                  const std::vector<BoolTerm>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i)
    out << label << " " << i << ": " << format_term(terms[i]) << "\n";
}

}  // namespace

std::string format_witness_report(const WitnessReport& report, bool human) {
  std::ostringstream out;
  out << "report: witness\n";
  out << "interval_lower: " << format_term(report.lower) << "\n";
  out << "interval_upper: " << format_term(report.upper) << "\n";
  if (human)
    out << "# Candidate cover: the order ideal of the ideal generators plus"
           " the order filter of the filter generators.\n";
  out << "ideal_gens: " << report.input.ideal_gens.size() << "\n";
  append_terms(out, "ideal_gen", report.input.ideal_gens);
  out << "filter_gens: " << report.input.filter_gens.size() << "\n";
  append_terms(out, "filter_gen", report.input.filter_gens);
  if (human)
    out << "# Atoms of the finite subalgebra generated by the candidate: a"
           " partition of unity. Coatoms are their complements.\n";
  out << "atoms: " << report.basis.atoms.size() << "\n";
  append_terms(out, "atom", report.basis.atoms);
  append_terms(out, "coatom", report.basis.coatoms);
  if (human)
    out << "# Each split cuts one cell with a fresh generator (atomlessness"
           " in action); the witness W is the join of the splits.\n";
  append_terms(out, "split", report.splits);
  out << "witness: " << format_term(report.witness) << "\n";
  if (human)
    out << "# The checks verify W meets every cell strictly, escapes every"
           " coatom ideal and atom filter, and so lies outside the cover.\n";
  for (const WitnessCheck& check : report.checks)
    out << "check " << check.name << ": " << (check.pass ? "pass" : "fail") << "\n";
  out << "valid: " << (report.valid ? "true" : "false") << "\n";
  return out.str();
}

std::string format_fuzz_report(const FuzzReport& report, const FuzzConfig& config) {
  std::ostringstream out;
  out << "report: fuzz\n";
  out << "trials: " << config.trials << "\n";
  out << "max_gens: " << config.max_gens << "\n";
  out << "max_depth: " << config.max_depth << "\n";
  out << "max_var: " << config.max_var << "\n";
  out << "seed: " << config.seed << "\n";
  out << "trials_run: " << report.trials_run << "\n";
  out << "rejected_candidates: " << report.rejected_candidates << "\n";
  out << "valid_witnesses: " << report.valid_witnesses << "\n";
  out << "failures: " << report.failures << "\n";
  if (!report.first_failure.empty())
    out << "first_failure: " << report.first_failure << "\n";
  return out.str();
}

}  // namespace ordtop
