// Command-line front end: analyze, compare, scan.

#include <iostream>

#include "CLI11.hpp"

#include "gammafield/commands.hpp"

int main(int argc, char** argv) {
  using namespace gammafield;

  CLI::App app{"Ramification and integral trace form invariants of number fields"};
  app.require_subcommand(1);

  CommandOptions opts;
  bool json_flag = false;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json_flag, "JSON output (default)");
    cmd->add_flag("--human", opts.human, "Render a plain-text table");
    cmd->add_flag("--no-cache", [&](std::int64_t) { opts.use_cache = false; }, "Bypass the analysis cache");
    cmd->add_option("--cache-dir", opts.cache_dir, "Cache directory (overrides GAMMAFIELD_CACHE_DIR)");
  };

  std::string poly_a, poly_b, corpus;
  auto* analyze = app.add_subcommand("analyze", "Analyze one number field");
  analyze->add_option("polynomial", poly_a, "Monic irreducible polynomial")->required();
  add_common(analyze);

  auto* compare = app.add_subcommand("compare", "Decide spinor genus equality of two integral trace forms");
  compare->add_option("polynomial_a", poly_a)->required();
  compare->add_option("polynomial_b", poly_b)->required();
  add_common(compare);

  auto* scan = app.add_subcommand("scan", "Analyze a CSV corpus of label,polynomial records");
  scan->add_option("corpus", corpus, "Corpus file")->required();
  scan->add_flag("--pairs", opts.pairs, "Cross-validate all applicable Gamma-field pairs");
  scan->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_common(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitParse;
  }
  if (json_flag && opts.human) {
    std::cerr << "error: --json and --human are mutually exclusive\n";
    return kExitParse;
  }

  CommandResult result;
  if (*analyze)
    result = cmd_analyze(poly_a, opts);
  else if (*compare)
    result = cmd_compare(poly_a, poly_b, opts);
  else
    result = cmd_scan(corpus, opts);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
