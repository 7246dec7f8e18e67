// s5sat-dimacs: solve a DIMACS CNF file with the embedded solver and answer
// in the external-solver format ("SAT" plus a model line, or "UNSAT"), so
// that it can stand in for S5SAT_EXTERNAL_SOLVER.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "s5/dimacs.hpp"
#include "s5/solver.hpp"

int main(int argc, char** argv) {
  std::string path;
  std::string algorithm = "cdcl";
  double timeout = 0;
  CLI::App app{"Embedded SAT solver on a DIMACS file"};
  app.add_option("file", path, "DIMACS CNF file")->required()->check(CLI::ExistingFile);
  app.add_option("--solver", algorithm, "Search procedure")
      ->check(CLI::IsMember({"cdcl", "dpll"}))
      ->capture_default_str();
  app.add_option("--timeout", timeout, "Time budget in seconds (0: none)")->check(CLI::NonNegativeNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    const s5::CnfInstance cnf = s5::parse_dimacs(text.str());

    s5::SolveOptions options;
    options.algorithm = algorithm == "dpll" ? s5::Algorithm::dpll : s5::Algorithm::cdcl;
    if (timeout > 0) options.budget = std::chrono::duration<double>(timeout);
    const s5::Outcome out = s5::solve(cnf, options);

    std::cout << s5::to_string(out.status) << '\n';
    if (out.sat()) {
      for (std::size_t v = 1; v < out.model.size(); ++v) std::cout << (out.model[v] ? "" : "-") << v << ' ';
      std::cout << "0\n";
      return 10;
    }
    return out.status == s5::SolveStatus::unsat ? 20 : 30;
  } catch (const std::exception& e) {
    std::cerr << "s5sat-dimacs: " << e.what() << '\n';
    return 1;
  }
}
