// Seeded random formulas for property tests.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "s5/formula.hpp"
#include "s5/s5nf.hpp"

namespace s5::testing {

struct FormulaShape {
  int atoms = 5;
  int max_depth = 4;
  int max_boxes = 4;     // counted in negation normal form
  int max_diamonds = 4;  // counted in negation normal form
  int max_nodes = 0;     // 0: no limit
  bool sugar = true;     // allow -> and <->
  int conjuncts = 1;     // >1: top-level conjunction of this many parts
};

/// Boxes and diamonds of the negation normal form of f, by polarity.
std::pair<int, int> nnf_modal_counts(const Formula& f);

class FormulaGenerator {
 public:
  FormulaGenerator(std::uint64_t seed, FormulaShape shape) : rng_(seed), shape_(shape) {}

  /// Next formula meeting the shape (rejection sampling).
  Formula next();

 private:
  Formula grow(int depth);
  Formula conjunction();
  Formula atom();

  std::mt19937_64 rng_;
  FormulaShape shape_;
};

struct NormalFormShape {
  int atoms = 5;
  int boxes = 4;
  int diamonds = 4;
  int clauses = 4;
  int min_body = 1;
  int max_body = 3;
  int max_clause = 3;
};

/// Random formulas already in S5 normal form: every box and diamond of the
/// pools is used by some clause.
class NormalFormGenerator {
 public:
  NormalFormGenerator(std::uint64_t seed, NormalFormShape shape) : rng_(seed), shape_(shape) {}

  Formula next();

 private:
  std::vector<Formula> body(int size);

  std::mt19937_64 rng_;
  NormalFormShape shape_;
};

std::string atom_name(int i);

}  // namespace s5::testing
