#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cvf/errors.hpp"
#include "cvf/scenario.hpp"

namespace {

void print_summary(const cvf::RunReport& rep) {
  for (const cvf::CheckReport& c : rep.checks) {
    std::cerr << (c.pass ? "PASS" : "FAIL") << "  " << c.name
              << "  max=" << c.max_residual << "  tol=" << c.tolerance;
    if (c.truncated) std::cerr << "  [truncated]";
    if (!c.note.empty()) std::cerr << "  (" << c.note << ")";
    std::cerr << "\n";
  }
  std::cerr << (rep.overall_pass ? "OVERALL PASS" : "OVERALL FAIL") << "  ("
            << rep.checks.size() << " checks, " << rep.wall_ms << " ms)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cvf: conformal vector field residual checker"};
  app.require_subcommand(1);

  std::string file;
  std::optional<double> tolerance;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> check;

  CLI::App* verify = app.add_subcommand("verify", "run a scenario file");
  verify->add_option("file", file, "scenario JSON path")->required();
  verify->add_option("--tolerance", tolerance, "override scenario tolerance");
  verify->add_option("--samples", samples, "override sampling count");
  verify->add_option("--seed", seed, "override sampling seed");
  verify->add_option("--check", check, "run only the named check");

  CLI::App* catalog = app.add_subcommand("catalog", "list model identifiers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (catalog->parsed()) {
      std::cout << cvf::catalog_table();
      return 0;
    }
    const cvf::Scenario sc = cvf::load_scenario(file);
    cvf::RunOptions opt;
    opt.tolerance = tolerance;
    opt.samples = samples;
    opt.seed = seed;
    opt.check_filter = check;
    const cvf::RunReport rep = cvf::run_scenario(sc, opt);
    std::cout << rep.to_json().dump(2) << "\n";
    print_summary(rep);
    return rep.overall_pass ? 0 : 1;
  } catch (const cvf::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const cvf::ValidationError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
