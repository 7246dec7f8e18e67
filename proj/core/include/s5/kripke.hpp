// S5 Kripke models: a nonempty list of worlds, world 0 designated. Since the
// accessibility relation is total, box and dia range over every world.
#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "s5/encoder.hpp"
#include "s5/formula.hpp"

namespace s5 {

using World = std::set<std::string>;  // atoms true in the world

class KripkeModel {
 public:
  /// Throws std::invalid_argument on an empty list.
  explicit KripkeModel(std::vector<World> worlds);

  const std::vector<World>& worlds() const { return worlds_; }
  std::size_t size() const { return worlds_.size(); }
  const World& world(std::size_t i) const { return worlds_.at(i); }

  /// Drops worlds after the first that repeat an earlier one.
  KripkeModel deduplicated() const;

  /// One line per world: "w<i>: {a, b}".
  std::string to_string() const;

  friend bool operator==(const KripkeModel&, const KripkeModel&) = default;

 private:
  std::vector<World> worlds_;
};

/// Truth of f at world i. Implications and equivalences are evaluated
/// directly. Throws std::out_of_range for a bad index.
bool evaluate(const Formula& f, const KripkeModel& m, std::size_t i);

/// evaluate(f, m, 0).
bool verify(const Formula& f, const KripkeModel& m);

/// Builds a model from a satisfying assignment (1-based, as in Outcome) of
/// an instance produced by the encoder. World 0 comes from the p(0)
/// variables; every selected diamond world that is not implied contributes
/// one more world, with (atom, world) pairs absent from the encoding taking
/// their value from world 0. Boxes skipped by the reach restriction are
/// then repaired by copying further atoms from world 0. Fresh atoms are
/// projected out and duplicate worlds removed.
///
/// Throws std::invalid_argument if the instance has no source normal form
/// or the assignment does not satisfy it.
KripkeModel extract_model(const std::vector<bool>& assignment, const CnfInstance& c);

}  // namespace s5
