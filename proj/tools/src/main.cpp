#include <iostream>

#include "CLI11.hpp"
#include "common.hpp"

namespace cli = singraph::cli;

int main(int argc, char** argv) {
  CLI::App app{"Cayley graphs of SL_n over finite fields and rings: spectra, "
               "chromatic bounds and verification suites"};
  app.require_subcommand(1);

  cli::RunConfig cfg;
  try {
    cli::apply_env_caps(cfg);
  } catch (const singraph::BadArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitBadArgs;
  }

  const auto add_common = [&cfg](CLI::App* cmd) {
    cmd->add_option("--q", cfg.q, "field order (prime power)");
    cmd->add_option("--p", cfg.p, "prime for zmod/hyperbola rings");
    cmd->add_option("--n", cfg.n, "ring exponent (Z/p^n)");
    cmd->add_option("--ring", cfg.ring_kind, "ring kind: field | zmod")
        ->check(CLI::IsMember({"field", "zmod"}));
    cmd->add_option("--enum-cap", cfg.enum_cap, "group enumeration cap");
    cmd->add_option("--dense-cap", cfg.dense_cap, "dense materialization / eigensolver cap");
    cmd->add_option("--exact-cap", cfg.exact_cap, "exact solver vertex cap");
    cmd->add_option("--budget", cfg.budget_seconds, "solver time budget in seconds");
    cmd->add_option("--format", cfg.format, "output format: json | csv | dimacs")
        ->check(CLI::IsMember({"json", "csv", "dimacs"}));
    cmd->add_option("--out", cfg.out, "output file (default stdout)");
    cmd->add_option("--dimacs", cfg.dimacs_out, "also export the graph as DIMACS to this path");
    cmd->add_option("--seed", cfg.seed, "random seed");
    cmd->add_option("--threads", cfg.threads, "worker threads for edge verification")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "adjacency spectrum of a graph family");
  spectrum->add_option("--family", cfg.family, "sing2 | rank-le | hyperbola")
      ->check(CLI::IsMember({"sing2", "rank-le", "hyperbola"}));
  spectrum->add_option("--method", cfg.method, "exact | dense | both")
      ->check(CLI::IsMember({"exact", "dense", "both"}));
  spectrum->add_option("--nmat", cfg.nmat, "matrix dimension for rank-le");
  spectrum->add_option("--l", cfg.ell, "rank cut for rank-le");
  add_common(spectrum);

  CLI::App* chi = app.add_subcommand("chi", "chromatic bounds and colorings");
  chi->add_option("--family", cfg.family, "sing2 | rank-le | hyperbola")
      ->check(CLI::IsMember({"sing2", "rank-le", "hyperbola"}));
  chi->add_option("--bounds", cfg.bounds,
                  "comma-separated: hoffman,sarnak,quasirandom,kloosterman,clique,"
                  "theta,coset,greedy,exact,lift")
      ->delimiter(',');
  chi->add_option("--variant", cfg.variant, "coset variant: squares | fourth-powers")
      ->check(CLI::IsMember({"squares", "fourth-powers"}));
  chi->add_option("--quasirandom-d", cfg.quasirandom_d,
                  "quasirandomness degree D (default: (p-1)/2 lookup for prime fields)");
  chi->add_option("--nmat", cfg.nmat, "matrix dimension for rank-le");
  chi->add_option("--l", cfg.ell, "rank cut for rank-le");
  chi->add_option("--samples", cfg.samples, "sample count for oracle-scale verification");
  add_common(chi);

  CLI::App* verify = app.add_subcommand("verify", "named verification suites (JSONL output)");
  verify->add_option("--suite", cfg.suite,
                     "weil | embed | chartable | mixing | spectrum | sandwich | lift | "
                     "slope | chromatic")
      ->required()
      ->check(CLI::IsMember({"weil", "embed", "chartable", "mixing", "spectrum", "sandwich",
                             "lift", "slope", "chromatic"}));
  verify->add_option("--trials", cfg.trials, "mixing trials");
  verify->add_option("--d", cfg.d, "quasirandomness degree for mixing");
  verify->add_option("--samples", cfg.samples, "samples for oracle-scale lift verification");
  verify->add_option("--nmat", cfg.nmat, "matrix dimension for slope");
  verify->add_option("--l", cfg.ell, "rank cut for slope");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitBadArgs;
  }

  try {
    if (spectrum->parsed()) return cli::cmd_spectrum(cfg);
    if (chi->parsed()) return cli::cmd_chi(cfg);
    if (verify->parsed()) return cli::cmd_verify(cfg);
  } catch (const singraph::CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return cli::kExitCap;
  } catch (const singraph::BadArgumentError& e) {
    std::cerr << "bad arguments: " << e.what() << "\n";
    return cli::kExitBadArgs;
  } catch (const singraph::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitAssertion;
  }
  return cli::kExitBadArgs;
}
