// Command-line front end.
//
//   groupcover sigma <expr> [--check] [--json]
//   groupcover maximals <expr> [--json]
//   groupcover classify <expr> [--all-subgroups] [--json]
//   groupcover verify [--max-order N] [--tier lattice|product|full] [--json]
//
// Global: --order-cap N, --seed N, --table FILE (Cayley-table input in place
// of an expression). Exit codes: 0 success, 1 verification failure, 2
// usage/parse error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "groupcover/groupcover.hpp"

namespace {

using namespace groupcover;

struct Options {
  std::string expr;
  std::string table_file;
  std::uint32_t order_cap = kDefaultOrderCap;
  std::uint64_t seed = BuildOptions{}.assoc_seed;
  bool json = false;
  bool check = false;
  bool all_subgroups_pool = false;
  std::uint32_t max_order = 576;
  std::string tier = "full";
};

GroupPtr load_group(const Options& opt) {
  BuildOptions build{opt.order_cap, opt.seed};
  if (!opt.table_file.empty()) {
    std::ifstream in(opt.table_file);
    if (!in) throw Error("cannot open table file: " + opt.table_file);
    return read_table(in, opt.table_file, build);
  }
  if (opt.expr.empty()) throw SyntaxError("missing group expression", 0);
  return evaluate_expression(opt.expr, build);
}

void print_member_line(const Subgroup& m) {
  std::cout << "  - order " << m.size << ", index " << m.index() << ", mask 0x"
            << m.members.to_hex() << "\n";
}

int cmd_sigma(const Options& opt) {
  GroupPtr g = load_group(opt);
  SigmaResult res;
  std::optional<SigmaResult> oracle;
  if (g->product()) {
    res = sigma_product(g);
    if (opt.check)
      oracle = is_cyclic(g) ? SigmaResult{SigmaValue::infinity(), std::nullopt, SigmaMethod::kOracle}
                            : sigma_bruteforce(g, maximal_subgroups(g));
  } else {
    res = is_cyclic(g) ? SigmaResult{SigmaValue::infinity(), std::nullopt, SigmaMethod::kOracle}
                       : sigma_bruteforce(g, maximal_subgroups(g));
    if (opt.check) oracle = res;  // the oracle is the only route here
  }
  const bool mismatch = oracle && !(oracle->value == res.value);

  if (opt.json) {
    nlohmann::json j = sigma_to_json(g, res);
    if (oracle) {
      j["check"] = {{"oracle_sigma", oracle->value.is_infinite()
                                         ? nlohmann::json("infinity")
                                         : nlohmann::json(oracle->value.finite_value())},
                    {"match", !mismatch}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group: " << g->name() << ", order " << g->order() << "\n";
    if (res.value.is_infinite()) {
      std::cout << "sigma = infinity (cyclic)\n";
    } else {
      std::cout << "sigma = " << res.value.finite_value() << "\n";
      std::cout << "method: " << to_string(res.method) << "\n";
      if (res.witness) {
        std::cout << "witness (" << res.witness->members.size() << " subgroups):\n";
        for (const Subgroup& m : res.witness->members) print_member_line(m);
      }
    }
    if (oracle) {
      std::cout << "oracle: sigma = " << oracle->value.to_string() << "\n";
      std::cout << (mismatch ? "check: MISMATCH\n" : "check: ok\n");
    }
  }
  return mismatch ? 1 : 0;
}

int cmd_maximals(const Options& opt) {
  GroupPtr g = load_group(opt);
  if (!g->product()) {
    const std::vector<Subgroup> maxes = maximal_subgroups(g);
    if (opt.json) {
      nlohmann::json j;
      j["group"] = g->name();
      j["maximal_subgroups"] = nlohmann::json::array();
      for (const Subgroup& m : maxes)
        j["maximal_subgroups"].push_back({{"order", m.size}, {"mask", m.members.to_hex()}});
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "group: " << g->name() << ", order " << g->order() << "\n";
      std::cout << "maximal subgroups: " << maxes.size() << " (lattice)\n";
      for (const Subgroup& m : maxes) print_member_line(m);
    }
    return 0;
  }

  const auto all = all_maximals_product(g);
  std::size_t standard = 0;
  for (const auto& [d, s] : all)
    if (d.is_standard()) ++standard;

  if (opt.json) {
    nlohmann::json j;
    j["group"] = g->name();
    j["maximal_subgroups"] = nlohmann::json::array();
    for (const auto& [d, s] : all) j["maximal_subgroups"].push_back(descriptor_to_json(d));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group: " << g->name() << ", order " << g->order() << "\n";
    std::cout << "maximal subgroups: " << all.size() << " (" << standard << " standard, "
              << (all.size() - standard) << " diagonal)\n";
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& [d, s] = all[i];
      std::cout << "  [" << i << "] ";
      if (const auto* sl = std::get_if<StandardLeftDesc>(&d.form))
        std::cout << "standard_left  X1=#" << sl->factor_index;
      else if (const auto* sr = std::get_if<StandardRightDesc>(&d.form))
        std::cout << "standard_right X2=#" << sr->factor_index;
      else {
        const auto& dd = std::get<DiagonalDesc>(d.form);
        std::cout << "diagonal       N1=#" << dd.n1_index << " N2=#" << dd.n2_index;
      }
      std::cout << " -> order " << s.size << ", index " << d.index_in_g << "\n";
    }
  }
  return 0;
}

int cmd_classify(const Options& opt) {
  GroupPtr g = load_group(opt);
  if (!g->product()) throw NotAProduct("classify requires a direct product expression");
  if (is_cyclic(g)) throw CyclicGroupError("cyclic groups have no cover to classify");

  const SigmaResult oracle = sigma_bruteforce(g, maximal_subgroups(g));
  std::vector<Subgroup> pool;
  if (opt.all_subgroups_pool) {
    for (const Subgroup& s : all_subgroups(g))
      if (s.is_proper()) pool.push_back(s);
  } else {
    pool = maximal_subgroups(g);
  }
  const std::vector<Cover> covers =
      enumerate_minimum_covers(g, pool, oracle.value.finite_value(), 100000);
  ProductCoverAnalysis analysis(g);

  if (opt.json) {
    nlohmann::json j;
    j["group"] = g->name();
    j["sigma"] = oracle.value.finite_value();
    j["pool"] = opt.all_subgroups_pool ? "all-proper-subgroups" : "maximal-subgroups";
    j["covers"] = nlohmann::json::array();
    for (const Cover& c : covers) {
      nlohmann::json jc = classification_to_json(analysis.classify(c));
      jc["members"] = nlohmann::json::array();
      for (const Subgroup& m : c.members) jc["members"].push_back(m.members.to_hex());
      j["covers"].push_back(std::move(jc));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group: " << g->name() << ", order " << g->order() << "\n";
    std::cout << "sigma = " << oracle.value.finite_value() << ", minimum covers: " << covers.size()
              << " (pool: " << (opt.all_subgroups_pool ? "all proper subgroups" : "maximal subgroups")
              << ")\n";
    for (std::size_t i = 0; i < covers.size(); ++i) {
      const CoverClassification cls = analysis.classify(covers[i]);
      std::cout << "  cover " << i << ": ";
      switch (cls.which) {
        case CoverCase::kFactorLeft:
          std::cout << "case 1 (left-factor cover of size " << cls.factor_cover->members.size()
                    << ")";
          break;
        case CoverCase::kFactorRight:
          std::cout << "case 2 (right-factor cover of size " << cls.factor_cover->members.size()
                    << ")";
          break;
        case CoverCase::kPrimeQuotient:
          std::cout << "case 3 (p=" << cls.p;
          if (cls.n1 && cls.n2)
            std::cout << ", |N1|=" << cls.n1->size << ", |N2|=" << cls.n2->size;
          else
            std::cout << ", kernel order " << cls.kernel->size << " (non-split)";
          std::cout << ")";
          break;
        case CoverCase::kUnclassified:
          std::cout << "UNCLASSIFIED";
          break;
      }
      if (!cls.note.empty()) std::cout << "  [" << cls.note << "]";
      std::cout << "\n";
    }
    const bool any_unclassified =
        std::any_of(covers.begin(), covers.end(), [&](const Cover& c) {
          return analysis.classify(c).which == CoverCase::kUnclassified;
        });
    if (any_unclassified) return 1;
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  Catalog cat;
  std::vector<CheckResult> results;
  const bool lattice_tier = opt.tier == "lattice" || opt.tier == "full";
  const bool product_tier = opt.tier == "product" || opt.tier == "full";

  if (lattice_tier)
    results.push_back(check_product_vs_lattice_maximals(cat, std::min(opt.max_order, 64u)));
  if (product_tier) {
    results.push_back(check_prime_square_covers(cat));
    results.push_back(check_sigma_formula_vs_oracle(cat, opt.max_order));
    results.push_back(check_cover_builders(cat, opt.max_order));
    results.push_back(check_coprime_sigma(cat, opt.max_order));
  }
  if (opt.tier == "full") {
    TrichotomyResults t = check_cover_trichotomy(cat, opt.max_order);
    results.push_back(t.maximal_pool);
    results.push_back(t.full_pool);
    results.push_back(t.predicates);
    results.push_back(check_quotient_lift_monotonicity(cat));
  }

  bool all_pass = true;
  if (opt.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const CheckResult& r : results) {
      j.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
      all_pass = all_pass && r.pass;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const CheckResult& r : results) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " — " << r.detail << "\n";
      all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "verify: all checks passed\n" : "verify: FAILURES\n");
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covering numbers of finite groups and their direct products"};
  app.require_subcommand(1);
  Options opt;

  app.add_option("--order-cap", opt.order_cap, "maximum group order for construction");
  app.add_option("--seed", opt.seed, "seed for randomized associativity sampling");

  auto add_group_input = [&](CLI::App* cmd) {
    cmd->add_option("expr", opt.expr, "group expression, e.g. \"S3 x C5\"");
    cmd->add_option("--table", opt.table_file, "Cayley-table text file in place of an expression");
    cmd->add_flag("--json", opt.json, "machine-readable JSON output");
    cmd->add_option("--order-cap", opt.order_cap, "maximum group order for construction");
    cmd->add_option("--seed", opt.seed, "seed for randomized associativity sampling");
  };

  CLI::App* sigma = app.add_subcommand("sigma", "compute the covering number");
  add_group_input(sigma);
  sigma->add_flag("--check", opt.check, "also run the brute-force oracle and compare");

  CLI::App* maximals = app.add_subcommand("maximals", "list maximal subgroups");
  add_group_input(maximals);

  CLI::App* classify = app.add_subcommand("classify", "enumerate and classify minimum covers");
  add_group_input(classify);
  classify->add_flag("--all-subgroups", opt.all_subgroups_pool,
                     "enumerate over all proper subgroups instead of maximal ones");

  CLI::App* verify = app.add_subcommand("verify", "run the catalog verification sweep");
  verify->add_flag("--json", opt.json, "machine-readable JSON output");
  verify->add_option("--max-order", opt.max_order, "largest product order to sweep");
  verify->add_option("--tier", opt.tier, "lattice | product | full")
      ->check(CLI::IsMember({"lattice", "product", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (sigma->parsed()) return cmd_sigma(opt);
    if (maximals->parsed()) return cmd_maximals(opt);
    if (classify->parsed()) return cmd_classify(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "cap error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
