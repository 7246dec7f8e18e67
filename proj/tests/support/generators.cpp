#include "generators.hpp"

#include <algorithm>
#include <numeric>

namespace s5::testing {

std::string atom_name(int i) {
  static const char* kNames[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
  if (i < 8) return kNames[i];
  return "a" + std::to_string(i);
}

namespace {

std::pair<int, int> counts(const Formula& f, bool positive) {
  switch (f.op()) {
    case Op::atom: return {0, 0};
    case Op::negation: return counts(f.child(), !positive);
    case Op::conjunction:
    case Op::disjunction: {
      std::pair<int, int> total{0, 0};
      for (const auto& c : f.children()) {
        auto [b, d] = counts(c, positive);
        total.first += b;
        total.second += d;
      }
      return total;
    }
    case Op::implication: {
      auto [b1, d1] = counts(f.child(0), !positive);
      auto [b2, d2] = counts(f.child(1), positive);
      return {b1 + b2, d1 + d2};
    }
    case Op::equivalence: {
      std::pair<int, int> total{0, 0};
      for (const auto& c : f.children()) {
        for (bool pol : {true, false}) {
          auto [b, d] = counts(c, pol);
          total.first += b;
          total.second += d;
        }
      }
      return total;
    }
    case Op::box:
    case Op::diamond: {
      auto [b, d] = counts(f.child(), positive);
      const bool is_box = (f.op() == Op::box) == positive;
      return {b + (is_box ? 1 : 0), d + (is_box ? 0 : 1)};
    }
  }
  return {0, 0};
}

}  // namespace

std::pair<int, int> nnf_modal_counts(const Formula& f) { return counts(f, true); }

Formula FormulaGenerator::atom() {
  std::uniform_int_distribution<int> pick(0, shape_.atoms - 1);
  return Formula::atom(atom_name(pick(rng_)));
}

Formula FormulaGenerator::grow(int depth) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (depth == 0 || unit(rng_) < 0.25) {
    Formula a = atom();
    return unit(rng_) < 0.3 ? neg(a) : a;
  }
  const int choices = shape_.sugar ? 8 : 6;
  std::uniform_int_distribution<int> op(0, choices - 1);
  switch (op(rng_)) {
    case 0: return neg(grow(depth - 1));
    case 1: return conj({grow(depth - 1), grow(depth - 1)});
    case 2: return disj({grow(depth - 1), grow(depth - 1)});
    case 3:
    case 4: return box(grow(depth - 1));
    case 5: return dia(grow(depth - 1));
    case 6: return implies(grow(depth - 1), grow(depth - 1));
    default: return iff(grow(depth - 1), grow(depth - 1));
  }
}

// Conjunctions constrain the formula more than a single random tree, which
// keeps the share of unsatisfiable draws from collapsing.
Formula FormulaGenerator::conjunction() {
  std::vector<Formula> parts;
  for (int i = 0; i < shape_.conjuncts; ++i) parts.push_back(grow(shape_.max_depth - 1));
  return conj(std::move(parts));
}

Formula FormulaGenerator::next() {
  for (;;) {
    Formula f = shape_.conjuncts > 1 ? conjunction() : grow(shape_.max_depth);
    auto [boxes, diamonds] = nnf_modal_counts(f);
    if (boxes > shape_.max_boxes || diamonds > shape_.max_diamonds) continue;
    if (shape_.max_nodes > 0 && f.node_count() > static_cast<std::size_t>(shape_.max_nodes)) continue;
    return f;
  }
}

std::vector<Formula> NormalFormGenerator::body(int size) {
  std::vector<int> atoms(static_cast<std::size_t>(shape_.atoms));
  std::iota(atoms.begin(), atoms.end(), 0);
  std::shuffle(atoms.begin(), atoms.end(), rng_);
  std::bernoulli_distribution negative(0.5);
  std::vector<Formula> out;
  for (int k = 0; k < size && k < shape_.atoms; ++k) {
    Formula a = Formula::atom(atom_name(atoms[static_cast<std::size_t>(k)]));
    out.push_back(negative(rng_) ? neg(a) : a);
  }
  return out;
}

Formula NormalFormGenerator::next() {
  std::uniform_int_distribution<int> body_size(shape_.min_body, shape_.max_body);
  std::vector<std::vector<Formula>> clauses(static_cast<std::size_t>(std::max(shape_.clauses, 1)));
  std::uniform_int_distribution<std::size_t> which(0, clauses.size() - 1);

  for (int i = 0; i < shape_.boxes; ++i) clauses[which(rng_)].push_back(box(disj(body(body_size(rng_)))));
  for (int j = 0; j < shape_.diamonds; ++j) {
    clauses[which(rng_)].push_back(dia(conj(body(body_size(rng_)))));
  }
  std::uniform_int_distribution<int> extra(0, 1);
  for (std::size_t k = 0; k < clauses.size(); ++k) {
    auto& c = clauses[k];
    const int props = c.empty() ? 1 + extra(rng_) : extra(rng_);
    for (int i = 0; i < props; ++i) c.push_back(body(1).front());
    if (static_cast<int>(c.size()) > shape_.max_clause) {
      // Move the overflow into a fresh clause so widths stay bounded.
      std::vector<Formula> spill(c.begin() + shape_.max_clause, c.end());
      c.erase(c.begin() + shape_.max_clause, c.end());
      clauses.push_back(std::move(spill));
    }
  }
  std::vector<Formula> parts;
  for (auto& c : clauses) parts.push_back(disj(std::move(c)));
  return conj(std::move(parts));
}

}  // namespace s5::testing
