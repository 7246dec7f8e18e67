#include "s5/external_solver.hpp"

#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "s5/dimacs.hpp"

namespace s5 {

std::optional<ExternalSolver> external_solver_from_env() {
  const char* value = std::getenv(kExternalSolverEnv);
  if (value == nullptr) return std::nullopt;
  std::string command(value);
  if (command.find_first_not_of(" \t") == std::string::npos) return std::nullopt;
  return ExternalSolver{command};
}

Outcome parse_solver_output(const std::string& output, std::size_t num_vars) {
  std::optional<SolveStatus> status;
  std::vector<int> literals;
  std::istringstream lines(output);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream words(line);
    std::string first;
    if (!(words >> first) || first == "c") continue;
    if (first == "s") words >> first;
    if (first == "SAT" || first == "SATISFIABLE") {
      status = SolveStatus::sat;
      continue;
    }
    if (first == "UNSAT" || first == "UNSATISFIABLE") {
      status = SolveStatus::unsat;
      continue;
    }
    if (first == "UNKNOWN" || first == "TIMEOUT" || first == "INDETERMINATE") {
      status = SolveStatus::timed_out;
      continue;
    }
    if (!status) continue;  // banner text before the verdict
    std::istringstream values(first == "v" ? line.substr(line.find('v') + 1) : line);
    std::string token;
    while (values >> token) {
      try {
        std::size_t used = 0;
        const int lit = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        if (lit != 0) literals.push_back(lit);
      } catch (const std::exception&) {
        throw ExternalSolverError("unreadable model token '" + token + "'");
      }
    }
  }
  if (!status) throw ExternalSolverError("external solver printed no verdict");

  Outcome out;
  out.status = *status;
  if (out.sat()) {
    out.model.assign(num_vars + 1, false);
    for (int lit : literals) {
      const auto var = static_cast<std::size_t>(std::abs(lit));
      if (var > num_vars) throw ExternalSolverError("model mentions unknown variable " + std::to_string(var));
      out.model[var] = lit > 0;
    }
  }
  return out;
}

namespace {

class TempFile {
 public:
  TempFile() {
    std::string pattern = (std::filesystem::temp_directory_path() / "s5sat-XXXXXX").string();
    const int fd = ::mkstemp(pattern.data());
    if (fd < 0) throw ExternalSolverError("cannot create a temporary DIMACS file");
    ::close(fd);
    path_ = pattern;
  }
  ~TempFile() {
    std::error_code ignored;
    std::filesystem::remove(path_, ignored);
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

Outcome solve_external(const ExternalSolver& solver, const CnfInstance& instance) {
  TempFile file;
  {
    std::ofstream out(file.path());
    write_dimacs(out, instance);
    if (!out) throw ExternalSolverError("cannot write " + file.path());
  }

  const std::string command = solver.command + " '" + file.path() + "'";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(::popen(command.c_str(), "r"), ::pclose);
  if (!pipe) throw ExternalSolverError("cannot run '" + solver.command + "'");
  std::string output;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe.get())) > 0) output.append(buffer.data(), n);
  pipe.reset();

  Outcome out = parse_solver_output(output, instance.num_vars());
  if (out.sat() && !satisfies(out.model, instance.clauses())) {
    throw VerificationError("external solver returned an assignment that falsifies a clause");
  }
  return out;
}

}  // namespace s5
