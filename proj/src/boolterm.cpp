#include "ordtop/boolterm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "ordtop/errors.hpp"

namespace ordtop {

namespace {

constexpr std::uint32_t kFalse = 0;
constexpr std::uint32_t kTrue = 1;
constexpr std::uint32_t kNoVar = 0xffffffffu;  // terminal marker; sorts last
constexpr std::uint32_t kMaxVarIndex = 1u << 20;

struct NodeKey {
  std::uint32_t var, lo, hi;
  bool operator==(const NodeKey&) const = default;
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const {
    std::uint64_t h = k.var;
    h = h * 0x9e3779b97f4a7c15ull + k.lo;
    h = (h ^ (h >> 29)) * 0xbf58476d1ce4e5b9ull + k.hi;
    return static_cast<std::size_t>(h ^ (h >> 32));
  }
};

// Process-wide hash-consed node store. Nodes are append-only (a deque keeps
// references stable across growth); the unique table enforces canonicity.
// Operation memos are pure caches and get dropped when they grow large.
class TermStore {
 public:
  static TermStore& instance() {
    static TermStore store;
    return store;
  }

  std::recursive_mutex mutex;

  struct Node {
    std::uint32_t var, lo, hi;
  };

  std::uint32_t var_of(std::uint32_t id) const { return nodes_[id].var; }
  std::uint32_t lo_of(std::uint32_t id) const { return nodes_[id].lo; }
  std::uint32_t hi_of(std::uint32_t id) const { return nodes_[id].hi; }
  std::size_t size() const { return nodes_.size(); }

  std::uint32_t mk(std::uint32_t var, std::uint32_t lo, std::uint32_t hi) {
    if (lo == hi) return lo;
    NodeKey key{var, lo, hi};
    auto it = unique_.find(key);
    if (it != unique_.end()) return it->second;
    nodes_.push_back({var, lo, hi});
    std::uint32_t id = static_cast<std::uint32_t>(nodes_.size() - 1);
    unique_.emplace(key, id);
    return id;
  }

  std::uint32_t make_var(std::uint32_t index) {
    if (index >= kMaxVarIndex)
      throw BadArgument("generator index " + std::to_string(index) + " too large");
    return mk(index, kFalse, kTrue);
  }

  std::uint32_t op_not(std::uint32_t a) {
    if (a == kFalse) return kTrue;
    if (a == kTrue) return kFalse;
    if (auto it = not_memo_.find(a); it != not_memo_.end()) return it->second;
    std::uint32_t r = mk(var_of(a), op_not(lo_of(a)), op_not(hi_of(a)));
    not_memo_.emplace(a, r);
    return r;
  }

  std::uint32_t op_and(std::uint32_t a, std::uint32_t b) {
    if (a == b) return a;
    if (a == kFalse || b == kFalse) return kFalse;
    if (a == kTrue) return b;
    if (b == kTrue) return a;
    std::uint64_t key = pack(std::min(a, b), std::max(a, b));
    if (auto it = and_memo_.find(key); it != and_memo_.end()) return it->second;
    auto [v, alo, ahi, blo, bhi] = cofactors(a, b);
    std::uint32_t r = mk(v, op_and(alo, blo), op_and(ahi, bhi));
    and_memo_.emplace(key, r);
    return r;
  }

  std::uint32_t op_or(std::uint32_t a, std::uint32_t b) {
    if (a == b) return a;
    if (a == kTrue || b == kTrue) return kTrue;
    if (a == kFalse) return b;
    if (b == kFalse) return a;
    std::uint64_t key = pack(std::min(a, b), std::max(a, b));
    if (auto it = or_memo_.find(key); it != or_memo_.end()) return it->second;
    auto [v, alo, ahi, blo, bhi] = cofactors(a, b);
    std::uint32_t r = mk(v, op_or(alo, blo), op_or(ahi, bhi));
    or_memo_.emplace(key, r);
    return r;
  }

  void trim_memos() {
    constexpr std::size_t kMemoCap = 1u << 20;
    if (and_memo_.size() + or_memo_.size() + not_memo_.size() > kMemoCap) {
      and_memo_.clear();
      or_memo_.clear();
      not_memo_.clear();
    }
  }

 private:
  TermStore() {
    nodes_.push_back({kNoVar, kFalse, kFalse});  // 0
    nodes_.push_back({kNoVar, kTrue, kTrue});    // 1
  }

  static std::uint64_t pack(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  struct Cof {
    std::uint32_t v, alo, ahi, blo, bhi;
  };

  Cof cofactors(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t v = std::min(var_of(a), var_of(b));
    Cof c{v, a, a, b, b};
    if (var_of(a) == v) {
      c.alo = lo_of(a);
      c.ahi = hi_of(a);
    }
    if (var_of(b) == v) {
      c.blo = lo_of(b);
      c.bhi = hi_of(b);
    }
    return c;
  }

  std::deque<Node> nodes_;
  std::unordered_map<NodeKey, std::uint32_t, NodeKeyHash> unique_;
  std::unordered_map<std::uint64_t, std::uint32_t> and_memo_, or_memo_;
  std::unordered_map<std::uint32_t, std::uint32_t> not_memo_;
};

using Guard = std::lock_guard<std::recursive_mutex>;

void collect_support(const TermStore& s, std::uint32_t id,
                     std::unordered_set<std::uint32_t>& seen,
                     std::vector<std::uint32_t>& vars) {
  if (id <= kTrue || !seen.insert(id).second) return;
  vars.push_back(s.var_of(id));
  collect_support(s, s.lo_of(id), seen, vars);
  collect_support(s, s.hi_of(id), seen, vars);
}

std::vector<std::uint32_t> support_unlocked(const TermStore& s, std::uint32_t id) {
  std::unordered_set<std::uint32_t> seen;
  std::vector<std::uint32_t> vars;
  collect_support(s, id, seen, vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

// Greedy maximal satisfying assignment of a nonzero term: prefer the high
// branch whenever it is satisfiable; generators off the chosen path are free.
std::vector<std::pair<std::uint32_t, bool>> max_sat_path(const TermStore& s,
                                                         std::uint32_t id) {
  std::vector<std::pair<std::uint32_t, bool>> path;
  while (id > kTrue) {
    if (s.hi_of(id) != kFalse) {
      path.emplace_back(s.var_of(id), true);
      id = s.hi_of(id);
    } else {
      path.emplace_back(s.var_of(id), false);
      id = s.lo_of(id);
    }
  }
  return path;
}

}  // namespace

BoolTerm term_zero() { return {kFalse}; }
BoolTerm term_one() { return {kTrue}; }

BoolTerm term_var(std::uint32_t index) {
  TermStore& s = TermStore::instance();
  Guard g(s.mutex);
  return {s.make_var(index)};
}

BoolTerm meet(BoolTerm a, BoolTerm b) {
  TermStore& s = TermStore::instance();
  Guard g(s.mutex);
  s.trim_memos();
  return {s.op_and(a.id, b.id)};
}

BoolTerm join(BoolTerm a, BoolTerm b) {
  TermStore& s = TermStore::instance();
  Guard g(s.mutex);
  s.trim_memos();
  return {s.op_or(a.id, b.id)};
}

BoolTerm complement(BoolTerm a) {
  TermStore& s = TermStore::instance();
  Guard g(s.mutex);
  s.trim_memos();
  return {s.op_not(a.id)};
}

BoolTerm apply(BoolOp op, BoolTerm a, std::optional<BoolTerm> b) {
  switch (op) {
    case BoolOp::meet:
      if (!b) throw ArityMismatch("meet needs two operands");
      return meet(a, *b);
    case BoolOp::join:
      if (!b) throw ArityMismatch("join needs two operands");
      return join(a, *b);
    case BoolOp::complement:
      if (b) throw ArityMismatch("complement takes one operand");
      return complement(a);
  }
  throw ArityMismatch("unknown operation");
}

bool leq(BoolTerm a, BoolTerm b) { return meet(a, b) == a; }

bool is_zero(BoolTerm t) { return t.id == kFalse; }
bool is_one(BoolTerm t) { return t.id == kTrue; }

std::vector<std::uint32_t> support(BoolTerm t) {
  TermStore& s = TermStore::instance();
  Guard g(s.mutex);
  return support_unlocked(s, t.id);
}

bool eval(BoolTerm t, const std::vector<bool>& assignment) {
  TermStore& s = TermStore::instance();
  Guard g(s.mutex);
  std::uint32_t id = t.id;
  while (id > kTrue) {
    std::uint32_t v = s.var_of(id);
    bool value = v < assignment.size() && assignment[v];
    id = value ? s.hi_of(id) : s.lo_of(id);
  }
  return id == kTrue;
}

BoolTerm split(BoolTerm b) {
  TermStore& s = TermStore::instance();
  Guard g(s.mutex);
  if (b.id == kFalse) throw SplitOfZero("cannot split 0");
  std::vector<std::uint32_t> vars = support_unlocked(s, b.id);
  std::uint32_t fresh = vars.empty() ? 0 : vars.back() + 1;
  return {s.op_and(b.id, s.make_var(fresh))};
}

std::vector<std::size_t> partition_order(std::span<const BoolTerm> disjoint) {
  TermStore& s = TermStore::instance();
  Guard g(s.mutex);
  std::vector<std::uint32_t> joint;
  for (BoolTerm t : disjoint) {
    auto vars = support_unlocked(s, t.id);
    joint.insert(joint.end(), vars.begin(), vars.end());
  }
  std::sort(joint.begin(), joint.end());
  joint.erase(std::unique(joint.begin(), joint.end()), joint.end());

  // One assignment row per term over the joint support, free slots true.
  std::vector<std::vector<char>> rows(disjoint.size(),
                                      std::vector<char>(joint.size(), 1));
  for (std::size_t i = 0; i < disjoint.size(); ++i)
    for (auto [var, value] : max_sat_path(s, disjoint[i].id)) {
      auto pos = std::lower_bound(joint.begin(), joint.end(), var) - joint.begin();
      rows[i][static_cast<std::size_t>(pos)] = value ? 1 : 0;
    }

  std::vector<std::size_t> order(disjoint.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&rows](std::size_t a, std::size_t b) { return rows[a] > rows[b]; });
  return order;
}

SubalgebraBasis subalgebra_atoms(std::span<const BoolTerm> generators) {
  if (generators.empty())
    throw BadArgument("subalgebra needs at least one generator");
  if (generators.size() > 16)
    throw BadArgument("subalgebra generation is limited to 16 generators");
  TermStore& s = TermStore::instance();
  Guard g(s.mutex);

  const std::size_t k = generators.size();
  std::vector<BoolTerm> atoms;
  std::unordered_set<std::uint32_t> seen;
  // Full meets over all sign vectors, first generator most significant,
  // positive sign before negative.
  for (std::size_t m = (std::size_t{1} << k); m-- > 0;) {
    std::uint32_t acc = kTrue;
    for (std::size_t i = 0; i < k && acc != kFalse; ++i) {
      bool positive = (m >> (k - 1 - i)) & 1;
      acc = s.op_and(acc, positive ? generators[i].id
                                   : s.op_not(generators[i].id));
    }
    if (acc != kFalse && seen.insert(acc).second) atoms.push_back({acc});
  }

  std::vector<std::size_t> order = partition_order(atoms);
  SubalgebraBasis basis;
  basis.generators.assign(generators.begin(), generators.end());
  basis.atoms.reserve(atoms.size());
  for (std::size_t i : order) basis.atoms.push_back(atoms[i]);
  for (BoolTerm atom : basis.atoms) basis.coatoms.push_back({s.op_not(atom.id)});

  // The kernel guarantees these; failure means a canonicalization bug.
  std::uint32_t all = kFalse;
  for (std::size_t i = 0; i < basis.atoms.size(); ++i) {
    if (basis.atoms[i].id == kFalse)
      throw VerificationFailed("subalgebra atom is zero");
    for (std::size_t j = i + 1; j < basis.atoms.size(); ++j)
      if (s.op_and(basis.atoms[i].id, basis.atoms[j].id) != kFalse)
        throw VerificationFailed("subalgebra atoms are not disjoint");
    all = s.op_or(all, basis.atoms[i].id);
  }
  if (all != kTrue) throw VerificationFailed("subalgebra atoms do not join to 1");
  for (BoolTerm gen : basis.generators) {
    std::uint32_t joined = kFalse;
    for (BoolTerm atom : basis.atoms)
      if (s.op_and(atom.id, gen.id) == atom.id) joined = s.op_or(joined, atom.id);
    if (joined != gen.id)
      throw VerificationFailed("generator is not the join of its atoms");
  }
  return basis;
}

namespace {

// Recursive-descent parser over the fixed grammar.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::uint32_t parse() {
    std::uint32_t t = parse_or(0);
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected trailing input");
    return t;
  }

 private:
  static constexpr int kMaxNesting = 4096;

  std::uint32_t parse_or(int depth) {
    std::uint32_t t = parse_and(depth);
    while (peek() == '|') {
      ++pos_;
      t = TermStore::instance().op_or(t, parse_and(depth));
    }
    return t;
  }

  std::uint32_t parse_and(int depth) {
    std::uint32_t t = parse_unary(depth);
    while (peek() == '&') {
      ++pos_;
      t = TermStore::instance().op_and(t, parse_unary(depth));
    }
    return t;
  }

  std::uint32_t parse_unary(int depth) {
    if (depth > kMaxNesting) throw SyntaxError(pos_, "term is nested too deeply");
    char c = peek();
    if (c == '~') {
      ++pos_;
      return TermStore::instance().op_not(parse_unary(depth + 1));
    }
    if (c == '0') {
      ++pos_;
      return kFalse;
    }
    if (c == '1') {
      ++pos_;
      return kTrue;
    }
    if (c == '(') {
      ++pos_;
      std::uint32_t t = parse_or(depth + 1);
      if (peek() != ')') throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return t;
    }
    if (c == 'v') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(raw_peek())))
        throw SyntaxError(pos_, "expected digits after 'v'");
      std::uint64_t index = 0;
      while (std::isdigit(static_cast<unsigned char>(raw_peek()))) {
        index = index * 10 + (raw_peek() - '0');
        if (index >= kMaxVarIndex)
          throw SyntaxError(pos_, "generator index too large");
        ++pos_;
      }
      return TermStore::instance().make_var(static_cast<std::uint32_t>(index));
    }
    if (c == '\0') throw SyntaxError(pos_, "unexpected end of input");
    throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  // Next character after whitespace, or '\0' at the end.
  char peek() {
    skip_ws();
    return raw_peek();
  }

  char raw_peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_paths(const TermStore& s, std::uint32_t id,
                   std::vector<std::string>& lits, std::vector<std::string>& paths) {
  if (id == kFalse) return;
  if (id == kTrue) {
    std::string conj;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i) conj += " & ";
      conj += lits[i];
    }
    paths.push_back(std::move(conj));
    return;
  }
  std::string var = "v" + std::to_string(s.var_of(id));
  lits.push_back(var);
  collect_paths(s, s.hi_of(id), lits, paths);
  lits.back() = "~" + var;
  collect_paths(s, s.lo_of(id), lits, paths);
  lits.pop_back();
}

}  // namespace

BoolTerm parse_term(std::string_view text) {
  TermStore& s = TermStore::instance();
  Guard g(s.mutex);
  s.trim_memos();
  return {Parser(text).parse()};
}

std::string format_term(BoolTerm t) {
  TermStore& s = TermStore::instance();
  Guard g(s.mutex);
  if (t.id == kFalse) return "0";
  if (t.id == kTrue) return "1";
  std::vector<std::string> lits, paths;
  collect_paths(s, t.id, lits, paths);
  if (paths.size() == 1) return paths[0];
  std::string out;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (i) out += " | ";
    bool multi = paths[i].find(" & ") != std::string::npos;
    out += multi ? "(" + paths[i] + ")" : paths[i];
  }
  return out;
}

namespace {

BoolTerm random_tree(std::mt19937_64& eng, int depth, int max_var) {
  BoolTerm t;
  bool leaf = depth <= 1 || eng() % 3 == 0;
  if (leaf) {
    std::uint64_t r = eng() % 10;
    if (r == 0)
      t = term_zero();
    else if (r == 1)
      t = term_one();
    else
      t = term_var(static_cast<std::uint32_t>(eng() % max_var));
  } else if (eng() % 2 == 0) {
    BoolTerm a = random_tree(eng, depth - 1, max_var);
    BoolTerm b = random_tree(eng, depth - 1, max_var);
    t = meet(a, b);
  } else {
    BoolTerm a = random_tree(eng, depth - 1, max_var);
    BoolTerm b = random_tree(eng, depth - 1, max_var);
    t = join(a, b);
  }
  if (eng() % 2 == 0) t = complement(t);
  return t;
}

}  // namespace

BoolTerm random_term(std::mt19937_64& eng, int max_depth, int max_var,
                     bool nonconstant) {
  if (max_depth < 1 || max_var < 1)
    throw BadArgument("random_term needs max_depth >= 1 and max_var >= 1");
  constexpr int kRetryCap = 256;
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    BoolTerm t = random_tree(eng, max_depth, max_var);
    if (!nonconstant || (!is_zero(t) && !is_one(t))) return t;
  }
  throw ExhaustedRejection("no nonconstant term after 256 attempts");
}

BoolTerm random_term(int max_depth, int max_var, std::uint64_t seed,
                     bool nonconstant) {
  std::mt19937_64 eng(seed);
  return random_term(eng, max_depth, max_var, nonconstant);
}

std::size_t term_store_size() {
  TermStore& s = TermStore::instance();
  Guard g(s.mutex);
  return s.size();
}

}  // namespace ordtop
