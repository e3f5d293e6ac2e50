// omsr: verify, sweep and reproduce valency-two OmSR classifications.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "omsr/constructions.hpp"
#include "omsr/error.hpp"
#include "omsr/group_spec.hpp"
#include "omsr/sweep.hpp"
#include "omsr/verifier.hpp"

namespace {

struct CacheFlags {
  std::string dir = "witnesses";
  bool regen = false;
  bool none = false;
};

void add_cache_flags(CLI::App* cmd, CacheFlags& flags) {
  cmd->add_option("--witness-dir", flags.dir, "Directory of cached search witnesses");
  cmd->add_flag("--regen", flags.regen, "Search again and overwrite cached witnesses");
  cmd->add_flag("--no-cache", flags.none, "Neither read nor write cached witnesses");
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"m-Cayley digraph OmSR verifier"};
  app.require_subcommand(1);

  CacheFlags cache_flags;
  omsr::WitnessCache cache;
  omsr::ConstructOptions options;
  auto use_cache = [&] {
    if (!cache_flags.none) {
      cache.directory = cache_flags.dir;
      cache.regenerate = cache_flags.regen;
      options.cache = &cache;
    }
  };

  // verify
  std::string group_arg;
  std::size_t m = 2;
  std::string recipe = "auto";
  bool json = false;
  std::string export_table;
  std::string export_arcs;
  auto* verify = app.add_subcommand("verify", "Build and certify one (G, m) instance");
  verify->add_option("--group", group_arg, "Group spec file or catalog:<name>[:<params>]")
      ->required();
  verify->add_option("--m", m, "Number of blocks")->required()->check(CLI::PositiveNumber);
  verify->add_option("--recipe", recipe, "cyclic|abelian|nonabelian|auto")
      ->check(CLI::IsMember({"cyclic", "abelian", "nonabelian", "auto"}));
  verify->add_flag("--json", json, "Print the report as JSON");
  verify->add_option("--export-table", export_table, "Write the connection table here");
  verify->add_option("--export-arcs", export_arcs, "Write the arc list here");
  add_cache_flags(verify, cache_flags);

  // sweep
  std::size_t valency = 2;
  bool all_witnesses = false;
  bool no_guard = false;
  auto* sweep = app.add_subcommand("sweep", "Enumerate every valency-regular oriented table");
  sweep->add_option("--group", group_arg, "Group spec file or catalog:<name>[:<params>]")
      ->required();
  sweep->add_option("--m", m, "Number of blocks")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--valency", valency, "Out- and in-valency")->check(CLI::PositiveNumber);
  sweep->add_flag("--all-witnesses", all_witnesses, "Store and print every witness");
  sweep->add_flag("--no-guard", no_guard, "Skip the feasibility guard");
  sweep->add_flag("--json", json, "Print the result as JSON");

  // reproduce
  std::size_t max_order = 4;
  std::size_t max_m = 7;
  std::string json_path;
  auto* reproduce = app.add_subcommand("reproduce", "Verdict table over the group catalog");
  reproduce->add_option("--max-order", max_order, "Largest group order")
      ->check(CLI::PositiveNumber);
  reproduce->add_option("--max-m", max_m, "Largest m")->check(CLI::Range(2, 10));
  reproduce->add_option("--json", json_path, "Also write the table as JSON here");
  add_cache_flags(reproduce, cache_flags);

  // simple
  std::string name;
  auto* simple = app.add_subcommand("simple", "Spot-check a small simple group");
  simple->add_option("--name", name, "Z2|Z3|Z5|Z7|A5")->required();
  simple->add_option("--m", m, "Number of blocks")->required()->check(CLI::PositiveNumber);
  simple->add_flag("--json", json, "Print the report as JSON");
  add_cache_flags(simple, cache_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : omsr::kExitInputError;
  }

  try {
    options.aut.vertex_cap = omsr::default_vertex_cap();
    options.sweep.aut = options.aut;
    options.random.aut = options.aut;

    if (*verify || *simple) {
      use_cache();
      omsr::VerifyOutcome outcome;
      if (*verify) {
        options.forced_recipe = omsr::parse_recipe(recipe);
        outcome = omsr::verify_instance(omsr::load_group_spec(group_arg), m, options);
      } else {
        outcome = omsr::simple_group_check(name, m, options);
      }
      std::cout << (json ? outcome.to_json() + "\n" : outcome.to_text());
      if (outcome.witness) {
        if (!export_table.empty() &&
            !write_file(export_table, outcome.witness->digraph.table().to_text())) {
          return omsr::kExitInputError;
        }
        if (!export_arcs.empty() &&
            !write_file(export_arcs, outcome.witness->digraph.export_arcs())) {
          return omsr::kExitInputError;
        }
      }
      return outcome.exit_code;
    }

    if (*sweep) {
      const auto entry = omsr::load_group_spec(group_arg);
      omsr::SweepOptions so = options.sweep;
      so.valency = valency;
      so.enforce_guard = !no_guard;
      if (all_witnesses) {
        so.max_stored_witnesses = std::numeric_limits<std::size_t>::max();
      }
      const auto result = omsr::exhaustive_sweep(entry.group, m, so);
      if (json) {
        std::cout << result.to_json(true) << "\n";
      } else {
        std::cout << "group " << result.group_label << ", m = " << result.m
                  << ", valency = " << result.valency << "\n"
                  << "families (row/column sums): " << result.tables_enumerated << "\n"
                  << "oriented tables: " << result.oriented_count << "\n"
                  << "witnesses: " << result.witness_count << "\n"
                  << "|Aut| range: " << result.min_aut_order_seen << ".."
                  << result.max_aut_order_seen << "\n"
                  << "verdict: " << omsr::to_string(result.verdict) << "\n";
        for (std::size_t k = 0; k < result.witnesses.size(); ++k) {
          const auto& w = result.witnesses[k];
          std::cout << "# witness " << k + 1 << (w.connected ? "" : " (disconnected)") << "\n"
                    << w.table.to_text();
        }
      }
      return omsr::kExitVerified;
    }

    use_cache();
    const auto table = omsr::reproduce_theorem(max_order, max_m, options);
    std::cout << table.to_text();
    if (!json_path.empty() && !write_file(json_path, table.to_json() + "\n")) {
      return omsr::kExitInputError;
    }
    return table.all_agree() ? omsr::kExitVerified : omsr::kExitFailed;
  } catch (const omsr::Error& e) {
    std::cerr << "error (" << omsr::to_string(e.kind()) << "): " << e.what();
    if (e.line() > 0) {
      std::cerr << " at line " << e.line() << ", column " << e.column();
    }
    std::cerr << "\n";
    switch (e.kind()) {
      case omsr::ErrorKind::SearchBudgetExceeded:
      case omsr::ErrorKind::TooLarge:
      case omsr::ErrorKind::InfeasibleSweep:
        return omsr::kExitBudget;
      default:
        return omsr::kExitInputError;
    }
  }
}
