#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ordtop/boolterm.hpp"
#include "ordtop/interval.hpp"

namespace ordtop {

enum class CandidateStatus {
  ok,
  empty_generators,
  ideal_contains_top,
  filter_contains_bottom,
};

const char* to_string(CandidateStatus status);

// A candidate basic-closed cover of the algebra: the order ideal generated by
// ideal_gens must miss the top and the order filter generated by filter_gens
// must miss the bottom, which holds exactly when no ideal generator is the
// top and no filter generator the bottom (the ideal automatically contains
// the bottom and the filter the top).
CandidateStatus validate_candidate(const GeneratorSets<BoolTerm>& gens);

// Same conditions relative to the interval [lower, upper].
CandidateStatus validate_candidate(BoolTerm lower, BoolTerm upper,
                                   const GeneratorSets<BoolTerm>& gens);

struct WitnessCheck {
  std::string name;
  bool pass = false;
};

// The record of one refutation run: the finite subalgebra generated by the
// candidate's generators, one strict split per atom, their join W, and every
// verification the construction performs. A returned report always has
// valid = true; a failing check raises VerificationFailed instead, because
// success is guaranteed for valid candidates.
struct WitnessReport {
  GeneratorSets<BoolTerm> input;
  BoolTerm lower, upper;  // carrier interval; 0 and 1 for the whole algebra
  SubalgebraBasis basis;  // atoms/coatoms relative to the interval
  std::vector<BoolTerm> splits;
  BoolTerm witness;
  std::vector<WitnessCheck> checks;
  bool valid = false;
};

// Runs the refutation on the whole algebra: no basic closed cover separating
// 0 from 1 can be exhaustive, and W is the constructed escape element.
// Throws InvalidCandidate when validate_candidate rejects.
WitnessReport separation_witness(const GeneratorSets<BoolTerm>& gens);

// The same construction inside the interval algebra [a, b] (meet and join
// inherited, relative complement of z is a \/ (b /\ ~z)); shows a cannot be
// separated from b. Throws NotAnInterval unless a < b strictly, and
// InvalidCandidate when a generator leaves the interval or validation fails.
WitnessReport relativized_witness(BoolTerm a, BoolTerm b,
                                  const GeneratorSets<BoolTerm>& gens);

struct FuzzConfig {
  std::uint64_t trials = 1;
  int max_gens = 2;
  int max_depth = 3;
  int max_var = 3;
  std::uint64_t seed = 0;
};

struct FuzzReport {
  std::uint64_t trials_run = 0;
  std::uint64_t valid_witnesses = 0;
  std::uint64_t rejected_candidates = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when failures = 0
};

// Random candidates, one engine per trial seeded with seed + trial index so
// results do not depend on execution order. Candidates failing validation
// are counted as rejected; every other trial must produce a verified witness
// and any VerificationFailed is tallied (never thrown).
FuzzReport fuzz_refute(const FuzzConfig& config);

// The candidate generator used by fuzz_refute, exposed for test drivers.
GeneratorSets<BoolTerm> random_candidate(std::mt19937_64& eng,
                                         const FuzzConfig& config);

std::string format_witness_report(const WitnessReport& report, bool human);
std::string format_fuzz_report(const FuzzReport& report, const FuzzConfig& config);

}  // namespace ordtop
