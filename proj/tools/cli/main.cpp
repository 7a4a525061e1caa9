#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "wordmap/errors.hpp"

using namespace wordmap;
using namespace wordmap::cli;

namespace {

Sign parse_sign(const std::string& text) {
  try {
    return Sign::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("bad --eps: " + text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power-word images in SL/SU/PSL/PSU: torus structure, bounds and exhaustive checks"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  bool no_timestamp = false;
  std::optional<std::uint64_t> budget_cap;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "Write records to this file instead of stdout");
  app.add_flag("--no-timestamp", no_timestamp, "Omit the timestamp field");
  app.add_option("--budget", budget_cap,
                 std::string("Largest group order to enumerate (default: $") + kBudgetEnvVar + " or 1000000)");

  std::string eps_text = "+";

  auto* decompose = app.add_subcommand("decompose", "Standard decomposition of a maximal torus");
  DecomposeArgs dec;
  decompose->add_option("--eps", eps_text, "+ for SL/PSL, - for SU/PSU");
  decompose->add_option("--n", dec.n, "Matrix size")->required();
  decompose->add_option("--q", dec.q, "Field size")->required();
  decompose->add_option("--partition", dec.partition, "Torus type, e.g. 2,1")->required();
  decompose->add_flag("--projective", dec.projective, "Image in the projective group");
  decompose->add_flag("--oracle", dec.oracle, "Cross-check against the lattice model");

  auto* bound = app.add_subcommand("bound", "Evaluate a bound, optionally against the exact count");
  BoundArgs bnd;
  std::optional<unsigned> bnd_n;
  std::optional<std::uint64_t> bnd_q, bnd_p, bnd_m;
  bound->add_option("--theorem", bnd.theorem, "Bound to evaluate")
      ->required()
      ->check(CLI::IsMember({"1torus", "th1", "th2", "main", "ss"}));
  bound->add_option("--eps", eps_text, "+ or -");
  bound->add_option("--n", bnd_n, "Matrix size");
  bound->add_option("--q", bnd_q, "Field size");
  bound->add_option("--p", bnd_p, "Characteristic (theorem main)");
  bound->add_option("--l", bnd.l, "Field degree q = p^l (theorem main)");
  bound->add_option("--M", bnd_m, "Word exponent");
  bound->add_flag("--projective", bnd.projective, "Use the projective group");
  bound->add_flag("--exact", bnd.exact, "Also compute the exact value by enumeration");

  auto* verify = app.add_subcommand("verify", "Run an exhaustive check suite");
  std::string suite;
  verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(verify_suites()));

  auto* scan = app.add_subcommand("scan", "Tabulate a bound over a parameter grid");
  ScanArgs sc;
  scan->add_option("--theorem", sc.theorem, "th2, 1torus or example")
      ->required()
      ->check(CLI::IsMember({"th2", "1torus", "example"}));
  scan->add_option("--eps", eps_text, "+ or -");
  scan->add_option("--n", sc.n, "Matrix sizes")->delimiter(',');
  scan->add_option("--q", sc.q, "Field sizes")->delimiter(',');
  scan->add_option("--M", sc.M, "Word exponents")->delimiter(',');
  scan->add_option("--c", sc.c, "Constants c for the example generator")->delimiter(',');
  scan->add_flag("--projective", sc.projective, "Use projective groups");
  scan->add_flag("--exact", sc.exact, "Compute exact image sizes by enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const EnumerationBudget budget = budget_cap ? EnumerationBudget(*budget_cap) : EnumerationBudget::from_environment();

  CommandResult result;
  try {
    const Sign eps = parse_sign(eps_text);
    if (*decompose) {
      dec.eps = eps;
      result = run_decompose(dec);
    } else if (*bound) {
      bnd.eps = eps;
      bnd.n = bnd_n;
      bnd.q = bnd_q;
      bnd.p = bnd_p;
      bnd.M = bnd_m;
      bnd.budget = budget;
      result = run_bound(bnd);
    } else if (*verify) {
      result = run_verify(suite, budget);
    } else {
      sc.eps = eps;
      sc.budget = budget;
      result = run_scan(sc);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  }

  EmitOptions options;
  options.format = format == "csv" ? Format::Csv : Format::Json;
  options.timestamp = !no_timestamp;
  if (options.timestamp) {
    const auto stamp = utc_timestamp();
    for (auto& r : result.records) r.timestamp = stamp;
  }

  if (out_path.empty()) {
    emit(std::cout, result.schema, result.records, options);
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kExitUsage;
    }
    emit(file, result.schema, result.records, options);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kExitUsage;
    }
  }
  return result.exit_code;
}
