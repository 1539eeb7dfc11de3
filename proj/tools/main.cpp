#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "witbound/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Constructs optimal entanglement witnesses and evaluates certified lower "
      "bounds on the witness-based entanglement measure of bipartite states."};
  app.require_subcommand(1);

  std::string state_path;
  CLI::App* bound = app.add_subcommand("bound", "Evaluate every applicable bound on a state file");
  bound->add_option("path", state_path, "density matrix file (JSON: d1, d2, matrix)")->required();

  witbound::SweepArgs sweep;
  double sweep_x = 0.0;
  CLI::App* sw = app.add_subcommand("sweep", "Write bound curves over a one-parameter family to CSV");
  sw->add_option("--family", sweep.family, "pure2x2, mixed2x2, pure3x3 or mixed3x3")->required();
  CLI::Option* x_opt =
      sw->add_option("--x", sweep_x, "mixing weight in [0, 1]; mixed families only");
  sw->add_option("--a-min", sweep.a_min, "lower end of the family parameter")->required();
  sw->add_option("--a-max", sweep.a_max, "upper end of the family parameter")->required();
  sw->add_option("--steps", sweep.steps, "grid points, endpoints included (>= 2)")->required();
  sw->add_option("--out", sweep.out_path, "output CSV path")->required();

  std::uint64_t seed = 42;
  int samples = 200;
  CLI::App* st = app.add_subcommand("selftest", "Run the property suites and report per-suite results");
  st->add_option("--seed", seed, "base seed for all sampled suites");
  st->add_option("--samples", samples, "cases per sampled suite (>= 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : witbound::kExitInputError;
  }

  if (bound->parsed()) return witbound::cmd_bound(state_path, std::cout, std::cerr);
  if (sw->parsed()) {
    if (x_opt->count() > 0) sweep.x = sweep_x;
    return witbound::cmd_sweep(sweep, std::cout, std::cerr);
  }
  return witbound::cmd_selftest(seed, samples, std::cout, std::cerr);
}
