// Subprocess bridge to an external DIMACS solver.
//
// The command is run with the path of a DIMACS file appended as its last
// argument. It must print "SAT" or "UNSAT" on a line of its own (the
// competition forms "s SATISFIABLE" / "s UNSATISFIABLE" are accepted too)
// and, for SAT, the model as space-separated literals, optionally on "v"
// lines. A missing or unreadable answer is reported as an error.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "s5/solver.hpp"

namespace s5 {

inline constexpr const char* kExternalSolverEnv = "S5SAT_EXTERNAL_SOLVER";

class ExternalSolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExternalSolver {
  std::string command;
};

/// Reads S5SAT_EXTERNAL_SOLVER; empty when unset or blank.
std::optional<ExternalSolver> external_solver_from_env();

/// Parses a solver transcript. Throws ExternalSolverError when no verdict is
/// found or the model is malformed.
Outcome parse_solver_output(const std::string& output, std::size_t num_vars);

/// Writes the instance to a temporary file, runs the solver and checks any
/// returned model against the clauses (VerificationError on mismatch).
Outcome solve_external(const ExternalSolver& solver, const CnfInstance& instance);

}  // namespace s5
