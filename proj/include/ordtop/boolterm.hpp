#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ordtop {

// An element of the free countable Boolean algebra over generators v0, v1,
// ... (the clopen algebra of the Cantor cube). Terms are canonical reduced
// ordered decision diagrams hash-consed in a process-wide store, so two
// terms denote the same element iff their ids are equal. Handles are
// trivially copyable and shareable across threads; the store linearizes
// insertions internally. The algebra is atomless: split() always finds an
// element strictly between 0 and any nonzero input.
struct BoolTerm {
  std::uint32_t id = 0;  // 0 and 1 are the constants
  friend bool operator==(const BoolTerm&, const BoolTerm&) = default;
};

BoolTerm term_zero();
BoolTerm term_one();
BoolTerm term_var(std::uint32_t index);

BoolTerm meet(BoolTerm a, BoolTerm b);
BoolTerm join(BoolTerm a, BoolTerm b);
BoolTerm complement(BoolTerm a);

enum class BoolOp { meet, join, complement };

// Dispatches on op; throws ArityMismatch when b is present for complement or
// absent for the binary operations.
BoolTerm apply(BoolOp op, BoolTerm a, std::optional<BoolTerm> b = std::nullopt);

// a <= b iff a /\ b = a.
bool leq(BoolTerm a, BoolTerm b);

bool is_zero(BoolTerm t);
bool is_one(BoolTerm t);

// Generator indices the function depends on, ascending.
std::vector<std::uint32_t> support(BoolTerm t);

// Value under the assignment; variables beyond the vector read as false.
bool eval(BoolTerm t, const std::vector<bool>& assignment);

// b /\ v_k for the first generator index k past the support of b (k = 0 for
// constants); strictly between 0 and b since b does not depend on v_k.
// Throws SplitOfZero for b = 0.
BoolTerm split(BoolTerm b);

// Atoms and coatoms of the finite subalgebra generated by `generators`: the
// atoms are the nonzero full meets over all sign choices of the generators
// (a finite partition of unity), the coatoms their complements.
struct SubalgebraBasis {
  std::vector<BoolTerm> generators;
  std::vector<BoolTerm> atoms;
  std::vector<BoolTerm> coatoms;  // coatoms[i] = complement(atoms[i])
};

SubalgebraBasis subalgebra_atoms(std::span<const BoolTerm> generators);

// Canonical order for a family of pairwise-disjoint nonzero terms: descending
// by the maximal satisfying assignment over the joint support (lowest
// generator index most significant). Returns the permutation of indices.
std::vector<std::size_t> partition_order(std::span<const BoolTerm> disjoint);

// Grammar (whitespace insignificant, ~ binds tighter than & tighter than |,
// binary operators left-associative):
//   term  := term "|" term2 | term2
//   term2 := term2 "&" term3 | term3
//   term3 := "~" term3 | "0" | "1" | VAR | "(" term ")"
//   VAR   := "v" DIGITS
BoolTerm parse_term(std::string_view text);

// Unambiguous textual form with parse(format(t)) == t: the disjunction of
// the diagram's paths to 1, each a conjunction of literals.
std::string format_term(BoolTerm t);

// Deterministic random term with and/or nesting below max_depth over
// v0..v(max_var-1); negations do not count toward depth. With nonconstant
// set, rejection-samples until the canonical form is neither 0 nor 1 and
// throws ExhaustedRejection after 256 attempts.
BoolTerm random_term(std::mt19937_64& eng, int max_depth, int max_var,
                     bool nonconstant);
BoolTerm random_term(int max_depth, int max_var, std::uint64_t seed,
                     bool nonconstant);

// Nodes currently in the store (diagnostics).
std::size_t term_store_size();

}  // namespace ordtop
