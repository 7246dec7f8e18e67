// Embedded SAT solver. CDCL (two watched literals, first-UIP learning, VSIDS,
// phase saving, Luby restarts) with a plain DPLL mode kept for differential
// testing. Runs are deterministic: branching starts from variable order.
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "s5/encoder.hpp"

namespace s5 {

enum class SolveStatus : std::uint8_t { sat, unsat, timed_out };
enum class Algorithm : std::uint8_t { cdcl, dpll };

struct SolverStats {
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t propagations = 0;
  std::uint64_t restarts = 0;
  std::uint64_t learned = 0;
};

struct Outcome {
  SolveStatus status = SolveStatus::unsat;
  /// Indexed by variable; entry 0 is unused. Empty unless status is sat.
  std::vector<bool> model;
  SolverStats stats;

  bool sat() const { return status == SolveStatus::sat; }
  /// Truth value of a DIMACS literal under the model.
  bool value(int lit) const;
};

struct SolveOptions {
  Algorithm algorithm = Algorithm::cdcl;
  std::optional<std::chrono::duration<double>> budget;
  /// Conflicts before the first restart; later intervals follow Luby.
  std::uint32_t restart_base = 64;
};

/// Raised when a model claimed by a solver does not satisfy its instance.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Outcome solve(std::size_t num_vars, const std::vector<Clause>& clauses,
              const SolveOptions& options = {});
Outcome solve(const CnfInstance& instance, const SolveOptions& options = {});

/// Clause-by-clause check of a 1-based model.
bool satisfies(const std::vector<bool>& model, const std::vector<Clause>& clauses);

std::string to_string(SolveStatus status);

}  // namespace s5
