#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ordtop/convergence.hpp"
#include "ordtop/errors.hpp"
#include "ordtop/interval.hpp"
#include "ordtop/poset.hpp"
#include "ordtop/topology.hpp"
#include "ordtop/witness.hpp"

namespace {

using namespace ordtop;

PosetDocument resolve_poset(const std::string& arg) {
  if (is_named_family(arg)) return {make_named_family(arg), {}};
  return load_poset_file(arg);
}

std::vector<BoolTerm> parse_term_list(const std::string& text) {
  std::vector<BoolTerm> terms;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, ',')) terms.push_back(parse_term(piece));
  if (terms.empty()) throw BadArgument("expected at least one term");
  return terms;
}

void print_separation(std::ostream& out, const Topology& t) {
  SeparationReport sep = separation_report(t);
  out << "t1: " << (sep.t1 ? "true" : "false") << "\n";
  out << "hausdorff: " << (sep.hausdorff ? "true" : "false") << "\n";
  out << "discrete: " << (sep.discrete ? "true" : "false") << "\n";
}

void cmd_poset_show(const std::string& arg, bool human) {
  PosetDocument doc = resolve_poset(arg);
  std::ostream& out = std::cout;
  out << "report: poset-show\n";
  out << "poset: " << arg << "\n";
  out << "n: " << doc.poset.size << "\n";
  auto covers = cover_pairs(doc.poset);
  out << "covers: " << covers.size() << "\n";
  for (std::size_t i = 0; i < covers.size(); ++i)
    out << "cover " << i << ": " << covers[i].first << " " << covers[i].second << "\n";
  for (std::size_t i = 0; i < doc.labels.size(); ++i)
    out << "label " << i << ": " << doc.labels[i] << "\n";
  if (human) {
    out << "# relation rows, x: {y : x <= y}\n";
    for (int x = 0; x < doc.poset.size; ++x)
      out << "# " << x << ": " << set_to_string(doc.poset.up[x]) << "\n";
  }
}

void cmd_poset_classify(const std::string& arg, bool human) {
  PosetDocument doc = resolve_poset(arg);
  LatticeClassification cls = lattice_classify(doc.poset);
  std::ostream& out = std::cout;
  out << "report: poset-classify\n";
  out << "poset: " << arg << "\n";
  out << "n: " << doc.poset.size << "\n";
  out << "kind: " << to_string(cls.kind) << "\n";
  if (cls.kind != LatticeKind::not_lattice) {
    out << "bottom: " << *extremum(doc.poset, 0, ExtremumKind::sup) << "\n";
    out << "top: " << *extremum(doc.poset, 0, ExtremumKind::inf) << "\n";
    out << "atoms: " << set_to_string(cls.atoms) << "\n";
    out << "coatoms: " << set_to_string(cls.coatoms) << "\n";
  }
  for (std::size_t x = 0; x < cls.complement.size(); ++x)
    out << "complement " << x << ": " << cls.complement[x] << "\n";
  if (human && cls.kind == LatticeKind::not_lattice)
    out << "# some pair has no meet or no join\n";
}

void cmd_topology(const std::string& which, const std::string& arg, bool dump,
                  bool human) {
  PosetDocument doc = resolve_poset(arg);
  Topology t = which == "interval" ? interval_topology(doc.poset)
                                   : order_topology(doc.poset);
  std::ostream& out = std::cout;
  out << "report: " << which << "-topology\n";
  out << "poset: " << arg << "\n";
  out << "n: " << t.ground_size << "\n";
  out << "opens: " << t.opens.size() << "\n";
  print_separation(out, t);
  if (human && which == "interval")
    out << "# subbase: complements of principal down-sets and up-sets\n";
  if (dump) {
    out << "dump:\n";
    out << dump_topology(t);
  }
}

void cmd_topology_compare(const std::string& arg, bool human) {
  PosetDocument doc = resolve_poset(arg);
  OrderVsInterval result = compare_order_vs_interval(doc.poset);
  std::ostream& out = std::cout;
  out << "report: topology-compare\n";
  out << "poset: " << arg << "\n";
  out << "n: " << result.order.ground_size << "\n";
  out << "interval_opens: " << result.interval.opens.size() << "\n";
  out << "order_opens: " << result.order.opens.size() << "\n";
  out << "relation: " << to_string(result.relation) << "\n";
  if (human)
    out << "# relation compares the order topology against the interval"
           " topology; on finite posets both are discrete\n";
}

void cmd_ba_eval(const std::string& text, bool human) {
  BoolTerm t = parse_term(text);
  std::ostream& out = std::cout;
  out << "report: term\n";
  out << "input: " << text << "\n";
  out << "canonical: " << format_term(t) << "\n";
  std::vector<std::uint32_t> vars = support(t);
  out << "support:";
  for (std::uint32_t v : vars) out << " v" << v;
  out << "\n";
  out << "zero: " << (is_zero(t) ? "true" : "false") << "\n";
  out << "one: " << (is_one(t) ? "true" : "false") << "\n";
  if (human)
    out << "# terms with the same canonical line denote the same element\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval and order topologies on finite posets, plus a"
               " witness engine refuting Hausdorffness of the interval"
               " topology on the free atomless Boolean algebra"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output = "human";
  app.add_option("--output", output, "output mode")
      ->check(CLI::IsMember({"human", "machine"}));

  int exit_code = 0;
  const auto human = [&output] { return output == "human"; };

  // poset
  CLI::App* poset = app.add_subcommand("poset", "poset inspection");
  poset->require_subcommand(1);
  std::string poset_arg;
  CLI::App* poset_show = poset->add_subcommand("show", "echo a poset");
  poset_show->add_option("--poset", poset_arg, "poset file or named family")
      ->required();
  poset_show->callback([&] { cmd_poset_show(poset_arg, human()); });
  CLI::App* poset_classify =
      poset->add_subcommand("classify", "lattice classification");
  poset_classify->add_option("--poset", poset_arg, "poset file or named family")
      ->required();
  poset_classify->callback([&] { cmd_poset_classify(poset_arg, human()); });

  // topology
  CLI::App* topology = app.add_subcommand("topology", "finite topologies");
  topology->require_subcommand(1);
  std::string topo_arg;
  bool dump = false;
  CLI::App* topo_interval =
      topology->add_subcommand("interval", "interval topology of a poset");
  topo_interval->add_option("--poset", topo_arg, "poset file or named family")
      ->required();
  topo_interval->add_flag("--dump", dump, "print the open family");
  topo_interval->callback(
      [&] { cmd_topology("interval", topo_arg, dump, human()); });
  CLI::App* topo_order =
      topology->add_subcommand("order", "order topology of a poset");
  topo_order->add_option("--poset", topo_arg, "poset file or named family")
      ->required();
  topo_order->add_flag("--dump", dump, "print the open family");
  topo_order->callback([&] { cmd_topology("order", topo_arg, dump, human()); });
  CLI::App* topo_compare =
      topology->add_subcommand("compare", "compare order vs interval topology");
  topo_compare->add_option("--poset", topo_arg, "poset file or named family")
      ->required();
  topo_compare->callback([&] { cmd_topology_compare(topo_arg, human()); });

  // convergence
  CLI::App* convergence = app.add_subcommand("convergence", "convergence spaces");
  convergence->require_subcommand(1);
  CLI::App* explore = convergence->add_subcommand(
      "explore", "sweep convergence spaces for limit-uniqueness vs Hausdorff");
  ExploreConfig explore_config;
  explore->add_option("--n", explore_config.ground_size, "ground size")->required();
  CLI::Option* samples_opt =
      explore->add_option("--samples", explore_config.samples,
                          "number of sampled spaces (omit for exhaustive)");
  explore->add_option("--seed", explore_config.seed, "random seed");
  explore->add_option("--q", explore_config.q, "per-pair inclusion probability");
  explore->callback([&] {
    explore_config.exhaustive = samples_opt->count() == 0;
    std::cout << format_explore_report(explore_prop23(explore_config), human());
  });

  // ba
  CLI::App* ba = app.add_subcommand("ba", "the free atomless Boolean algebra");
  ba->require_subcommand(1);
  std::string term_text, ideal_text, filter_text, a_text, b_text;
  CLI::App* eval = ba->add_subcommand("eval", "canonicalize a term");
  eval->add_option("--term", term_text, "term")->required();
  eval->callback([&] { cmd_ba_eval(term_text, human()); });

  CLI::App* witness = ba->add_subcommand(
      "witness", "escape element for a candidate basic-closed cover");
  witness->add_option("--ideal", ideal_text, "comma-separated ideal generators")
      ->required();
  witness->add_option("--filter", filter_text, "comma-separated filter generators")
      ->required();
  witness->callback([&] {
    GeneratorSets<BoolTerm> gens{parse_term_list(ideal_text),
                                 parse_term_list(filter_text)};
    WitnessReport report = separation_witness(gens);
    std::cout << format_witness_report(report, human());
    if (!report.valid) exit_code = 1;
  });

  CLI::App* witness_rel = ba->add_subcommand(
      "witness-rel", "the same construction inside an interval [a, b]");
  witness_rel->add_option("--a", a_text, "interval lower endpoint")->required();
  witness_rel->add_option("--b", b_text, "interval upper endpoint")->required();
  witness_rel->add_option("--ideal", ideal_text, "comma-separated ideal generators")
      ->required();
  witness_rel
      ->add_option("--filter", filter_text, "comma-separated filter generators")
      ->required();
  witness_rel->callback([&] {
    GeneratorSets<BoolTerm> gens{parse_term_list(ideal_text),
                                 parse_term_list(filter_text)};
    WitnessReport report =
        relativized_witness(parse_term(a_text), parse_term(b_text), gens);
    std::cout << format_witness_report(report, human());
    if (!report.valid) exit_code = 1;
  });

  CLI::App* fuzz = ba->add_subcommand(
      "fuzz", "random candidate covers, each must yield a verified witness");
  FuzzConfig fuzz_config;
  fuzz->add_option("--trials", fuzz_config.trials, "number of trials")->required();
  fuzz->add_option("--max-gens", fuzz_config.max_gens, "max generators per side");
  fuzz->add_option("--max-depth", fuzz_config.max_depth, "max term depth");
  fuzz->add_option("--max-var", fuzz_config.max_var, "generators drawn from v0..");
  fuzz->add_option("--seed", fuzz_config.seed, "random seed");
  fuzz->callback([&] {
    FuzzReport report = fuzz_refute(fuzz_config);
    std::cout << format_fuzz_report(report, fuzz_config);
    if (report.failures != 0) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
