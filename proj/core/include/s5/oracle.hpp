// Semantic S5 satisfiability for small formulas, independent of the
// normaliser and the encoders. Used as ground truth by the test suites.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "s5/formula.hpp"
#include "s5/kripke.hpp"

namespace s5 {

class OracleLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OracleLimits {
  std::size_t max_atoms = 6;
  std::size_t max_modal = 6;
};

struct OracleVerdict {
  bool sat = false;
  std::optional<KripkeModel> model;  // set when sat; verify(f, *model) holds
  std::size_t explored_bound = 0;    // largest world count searched
};

/// 1 + the number of diamonds in the negation normal form of f, counted by
/// polarity without building the NNF. Enough worlds for any satisfiable f.
std::size_t world_bound(const Formula& f);

/// Enumerates sets of k distinct interpretations over atoms(f), k = 1 up to
/// max_worlds (default world_bound(f)), and accepts the first set in which
/// f holds at some world. Throws OracleLimitError beyond the limits.
OracleVerdict brute_force(const Formula& f, std::optional<std::size_t> max_worlds = std::nullopt,
                          const OracleLimits& limits = {});

/// Exact search over truth values of the modal subformulas: a choice fixes
/// which interpretations may occur as worlds (those meeting every true box
/// body and falsifying every false diamond body) and is accepted when the
/// remaining existential demands and world 0 can be met. Handles larger
/// inputs than brute_force; OracleLimitError beyond the defaults below.
OracleVerdict valuation_search(const Formula& f, const OracleLimits& limits = {16, 24});

/// valuation_search with its default limits.
OracleVerdict decide(const Formula& f);

}  // namespace s5
