// polarmac — polar varieties, MacPherson cycles and Euler obstructions of
// affine varieties, from polynomial input over an exact coefficient field.
//
// Exit codes: 0 success, 2 invalid input, 3 genericity failure after the
// retry budget, 4 bad-prime exhaustion, 5 property-check failure.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "polarmac/report.hpp"

namespace {

polarmac::FieldSpec parse_field_flag(const std::string& text) {
  if (text == "rational") return polarmac::FieldSpec::rational();
  if (text.rfind("gfp:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(text.substr(4));
    } catch (...) {
      throw polarmac::InputError("cannot parse --field modulus in '" + text + "'");
    }
    if (!polarmac::is_prime_u64(p) || p < (1ULL << 20) || p >= (1ULL << 32))
      throw polarmac::InputError("--field gfp modulus must be a prime in (2^20, 2^32)");
    return polarmac::FieldSpec::prime(p);
  }
  throw polarmac::InputError("--field must be 'gfp:P' or 'rational'");
}

struct Cli {
  std::string file;
  std::string field_text;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int resamples = 0;
  int cycle_k = -1;
  bool text = false;
  bool json = false;
  bool parallel = false;
};

void add_common(CLI::App* cmd, Cli& cli) {
  cmd->add_option("file", cli.file, "problem file (JSON)")->required();
  cmd->add_option("--seed", cli.seed, "override the problem seed")
      ->each([&cli](const std::string&) { cli.seed_set = true; });
  cmd->add_option("--resamples", cli.resamples,
                  "independent generic draws per degree (>= 2)")
      ->check(CLI::Range(2, 64));
  cmd->add_option("--field", cli.field_text, "gfp:P or rational");
  cmd->add_flag("--json", cli.json, "emit the JSON report (default)");
  cmd->add_flag("--text", cli.text, "emit a human-readable rendering");
  cmd->add_flag("--parallel", cli.parallel,
                "compute per-stratum profiles concurrently");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "polar variety degrees, MacPherson cycles, Euler obstructions and "
      "weighted Euler characteristics of affine varieties"};
  app.require_subcommand(1);

  Cli cli;
  const char* names[] = {"profile", "eu", "eulerfn", "chi", "check"};
  const char* descs[] = {
      "polar degree vector of every stratum closure",
      "global Euler obstruction of the top stratum closure",
      "local Euler obstruction values along each stratum",
      "weighted Euler characteristic and slice invariants",
      "run the property suite and report pass/fail per property"};
  for (int i = 0; i < 5; ++i) add_common(app.add_subcommand(names[i], descs[i]), cli);
  CLI::App* cycle = app.add_subcommand(
      "cycle", "MacPherson cycle terms for one index k");
  cycle->add_option("-k", cli.cycle_k, "cycle index in [0, n]")->required();
  add_common(cycle, cli);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    polarmac::RunOptions options;
    options.command = app.get_subcommands().front()->get_name();
    options.cycle_k = cli.cycle_k;
    options.parallel = cli.parallel;
    if (cli.seed_set) options.seed = cli.seed;
    if (cli.resamples != 0) options.resamples = cli.resamples;
    if (!cli.field_text.empty()) options.field = parse_field_flag(cli.field_text);

    polarmac::ProblemFile problem = polarmac::load_problem(cli.file);
    polarmac::RunResult result = polarmac::run_command(problem, options);
    if (cli.text)
      std::cout << polarmac::render_text(result.report);
    else
      std::cout << result.report.dump(2) << "\n";
    return result.exit_code;
  } catch (const polarmac::InputError& e) {
    std::cerr << "error (input): " << e.what() << "\n";
    return 2;
  } catch (const polarmac::GenericityError& e) {
    std::cerr << "error (genericity): " << e.what() << "\n";
    return 3;
  } catch (const polarmac::BadPrimeError& e) {
    std::cerr << "error (bad prime): " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
