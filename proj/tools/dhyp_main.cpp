#include <cstdio>
#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "dhyp/commands.hpp"

namespace {

void add_common_flags(CLI::App* sub, dhyp::RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "matrix size");
  sub->add_option("--r", cfg.r, "number of matrices in a tuple");
  sub->add_option("--prime", cfg.prime, "prime modulus override");
  sub->add_option("--seed", cfg.seed, "PRNG seed");
  sub->add_option("--trials", cfg.trials, "number of sampled tuples");
  sub->add_option("--input", cfg.input_path, "path to a JSON matrix tuple");
  sub->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic checks for the characteristic-polynomial map on matrix tuples"};
  app.require_subcommand(1);
  dhyp::RunConfig cfg;
  std::vector<int> qargs;

  CLI::App* rank = app.add_subcommand("rank", "Jacobian rank certification on random tuples");
  CLI::App* grading = app.add_subcommand("grading", "graded kernel computation at the Weyl pair");
  CLI::App* qbinom = app.add_subcommand("qbinom", "Gaussian binomial identity checks");
  CLI::App* charpoly = app.add_subcommand("charpoly", "coefficient vector of an input tuple");
  CLI::App* fiber = app.add_subcommand("fiber", "transpose fiber and non-conjugacy witnesses");
  CLI::App* all = app.add_subcommand("all", "every suite in one report");
  for (CLI::App* sub : {rank, grading, qbinom, charpoly, fiber, all}) {
    add_common_flags(sub, cfg);
  }
  qbinom->add_option("dab", qargs, "optional evaluation arguments d a b")->expected(0, 3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? dhyp::kExitPass : dhyp::kExitUsageError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (!qargs.empty()) {
    if (qargs.size() != 3) {
      std::fprintf(stderr, "config error: qbinom evaluation takes exactly three arguments d a b\n");
      return dhyp::kExitUsageError;
    }
    cfg.qbinom_args = std::array<int, 3>{qargs[0], qargs[1], qargs[2]};
  }

  std::string out;
  int code;
  try {
    code = dhyp::run_command(cfg, out);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal check failure: %s\n", e.what());
    return dhyp::kExitVerificationFailure;
  }
  std::fputs(out.c_str(), stdout);
  return code;
}
