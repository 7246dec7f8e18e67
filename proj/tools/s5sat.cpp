// s5sat: decide satisfiability of an S5 formula.
//
// Exit status: 10 SAT, 20 UNSAT, 30 timeout, 1 usage or input error,
// 2 when a model fails verification or the oracle disagrees.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "s5/asp.hpp"
#include "s5/dimacs.hpp"
#include "s5/oracle.hpp"
#include "s5/parser.hpp"
#include "s5/pipeline.hpp"

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitTimeout = 30;
constexpr int kExitInput = 1;
constexpr int kExitCheck = 2;

struct Config {
  std::string input = "-";
  std::string format;
  std::string encoding = "reach";
  std::string algorithm = "cdcl";
  bool conflicts = false;
  bool boxes = false;
  bool diamonds = false;
  bool all = false;
  std::string dimacs_path;
  std::string asp_prefix;
  bool model = false;
  bool verify = false;
  bool oracle = false;
  bool stats = false;
  double timeout = 0;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path);
}

std::string millis(std::chrono::duration<double> d) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << d.count() * 1000.0 << "ms";
  return out.str();
}

void print_stats(const s5::PipelineResult& r, std::chrono::duration<double> total) {
  const auto& nf = r.normal_form;
  std::cout << "c normal form: " << nf.atoms().size() << " atoms, " << nf.box_count() << " boxes, "
            << nf.diamond_count() << " diamonds, " << nf.clauses().size() << " clauses\n";
  for (const auto& stage : r.stages) {
    std::cout << "c encoding " << stage.label << ": " << stage.stats.variables << " variables, "
              << stage.stats.clauses << " clauses, " << stage.stats.literals << " literals\n";
  }
  const auto& s = r.solver_stats;
  std::cout << "c solver: " << s.decisions << " decisions, " << s.conflicts << " conflicts, " << s.propagations
            << " propagations, " << s.restarts << " restarts\n";
  std::cout << "c time: normalize " << millis(r.timings.normalize) << ", encode " << millis(r.timings.encode)
            << ", solve " << millis(r.timings.solve) << ", extract " << millis(r.timings.extract) << ", total "
            << millis(total) << '\n';
}

int run(const Config& cfg) {
  const auto start = std::chrono::steady_clock::now();

  s5::ParseOptions parse_options;
  if (!cfg.format.empty()) {
    parse_options.format = cfg.format == "intohylo" ? s5::SourceFormat::intohylo : s5::SourceFormat::native;
  } else if (cfg.input != "-") {
    parse_options.format = s5::format_for_path(cfg.input);
  }
  const s5::Formula formula = s5::parse(read_input(cfg.input), parse_options);

  s5::PipelineOptions options;
  options.encoding.kind = cfg.encoding == "full" ? s5::EncodingKind::full
                          : cfg.encoding == "he" ? s5::EncodingKind::he
                                                 : s5::EncodingKind::reach;
  options.encoding.enrichments = {cfg.conflicts || cfg.all, cfg.boxes || cfg.all, cfg.diamonds || cfg.all};
  options.solve.algorithm = cfg.algorithm == "dpll" ? s5::Algorithm::dpll : s5::Algorithm::cdcl;
  if (cfg.timeout > 0) options.solve.budget = std::chrono::duration<double>(cfg.timeout);
  options.external = s5::external_solver_from_env();
  options.verify = cfg.verify;

  const s5::PipelineResult r = s5::run_pipeline(formula, options);

  if (!cfg.dimacs_path.empty()) write_file(cfg.dimacs_path, s5::emit_dimacs(r.instance));
  if (!cfg.asp_prefix.empty()) {
    const auto variant = s5::asp_variant_for(options.encoding.kind, options.encoding.enrichments);
    if (!variant) throw std::runtime_error("no ASP program for encoding " + cfg.encoding);
    if (r.normal_form.trivially_false()) {
      std::cerr << "s5sat: normal form is trivially false; ASP output skipped\n";
    } else {
      write_file(cfg.asp_prefix + ".facts.lp", s5::emit_facts(r.normal_form, *variant));
      write_file(cfg.asp_prefix + ".program.lp", s5::emit_program(*variant));
    }
  }

  std::cout << s5::to_string(r.status) << '\n';
  if (r.model && cfg.model) std::cout << r.model->to_string();
  if (cfg.stats) print_stats(r, std::chrono::steady_clock::now() - start);

  int code = r.status == s5::SolveStatus::sat     ? kExitSat
             : r.status == s5::SolveStatus::unsat ? kExitUnsat
                                                  : kExitTimeout;

  if (cfg.verify && r.verified == false) {
    std::cerr << "s5sat: extracted model does not satisfy the input formula\n";
    code = kExitCheck;
  }

  if (cfg.oracle) {
    try {
      const s5::OracleVerdict v = s5::decide(formula);
      std::cout << "c oracle: " << (v.sat ? "SAT" : "UNSAT") << '\n';
      if (r.status != s5::SolveStatus::timed_out && v.sat != (r.status == s5::SolveStatus::sat)) {
        std::cerr << "s5sat: oracle disagrees with the solver\n";
        code = kExitCheck;
      }
    } catch (const s5::OracleLimitError& e) {
      std::cout << "c oracle: skipped (" << e.what() << ")\n";
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Satisfiability checking for modal logic S5"};
  app.add_option("input", cfg.input, "Formula file, or - for standard input");
  app.add_option("--format", cfg.format, "Input syntax (default: from the file extension)")
      ->check(CLI::IsMember({"native", "intohylo"}));
  app.add_option("--encoding", cfg.encoding, "Propositional encoding")
      ->check(CLI::IsMember({"he", "full", "reach"}))
      ->capture_default_str();
  app.add_flag("--conflicts", cfg.conflicts, "Forbid box/diamond pairs that cannot hold together");
  app.add_flag("--boxes", cfg.boxes, "Propagate box literals to the boxes they entail");
  app.add_flag("--diamonds", cfg.diamonds, "Merge worlds of diamonds related by inclusion");
  app.add_flag("--all", cfg.all, "Enable --conflicts, --boxes and --diamonds");
  app.add_option("--dimacs", cfg.dimacs_path, "Write the CNF instance to this file");
  app.add_option("--asp", cfg.asp_prefix, "Write <prefix>.facts.lp and <prefix>.program.lp");
  app.add_flag("--model", cfg.model, "Print the Kripke model when satisfiable");
  app.add_flag("--verify", cfg.verify, "Check the model against the input formula");
  app.add_flag("--oracle", cfg.oracle, "Cross-check the verdict with the semantic oracle");
  app.add_flag("--stats", cfg.stats, "Report sizes and timings");
  app.add_option("--timeout", cfg.timeout, "Solver time budget in seconds (0: none)")->check(CLI::NonNegativeNumber);
  app.add_option("--solver", cfg.algorithm, "Embedded search procedure")
      ->check(CLI::IsMember({"cdcl", "dpll"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  const bool enriched = cfg.conflicts || cfg.boxes || cfg.diamonds || cfg.all;
  if (enriched && cfg.encoding != "reach") {
    std::cerr << "s5sat: --conflicts, --boxes, --diamonds and --all require --encoding reach\n";
    return kExitInput;
  }

  try {
    return run(cfg);
  } catch (const s5::ParseError& e) {
    std::cerr << "s5sat: " << (cfg.input == "-" ? "<stdin>" : cfg.input) << ':' << e.what() << '\n';
    return kExitInput;
  } catch (const s5::VerificationError& e) {
    std::cerr << "s5sat: " << e.what() << '\n';
    return kExitCheck;
  } catch (const std::invalid_argument& e) {
    std::cerr << "s5sat: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::logic_error& e) {
    std::cerr << "s5sat: internal error: " << e.what() << '\n';
    return kExitCheck;
  } catch (const std::exception& e) {
    std::cerr << "s5sat: " << e.what() << '\n';
    return kExitInput;
  }
}
