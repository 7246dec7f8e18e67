// DIMACS CNF reading and writing.
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "s5/encoder.hpp"

namespace s5 {

class DimacsError : public std::runtime_error {
 public:
  DimacsError(const std::string& message, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Header "p cnf V C" and one 0-terminated clause per line. Instances built
/// by the encoder are preceded by "c <var> <name>" lines naming every
/// variable; raw instances get no comments.
std::string emit_dimacs(const CnfInstance& instance);
void write_dimacs(std::ostream& out, const CnfInstance& instance);

/// Accepts comments anywhere, clauses spanning several lines and a missing
/// final 0. The header must precede the first clause and its counts must
/// match the body.
CnfInstance parse_dimacs(std::string_view text);

}  // namespace s5
