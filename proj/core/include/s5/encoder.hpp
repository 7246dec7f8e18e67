// Propositional encodings of S5NF formulas.
//
// Every S5-literal of the normal form gets a selector variable (b_i for box
// literals, d_j for diamond literals); worlds are indexed 0 (the designated
// world) and 1..n (one per diamond literal, or one per merged group of
// diamond literals). Available encodings:
//
//   he     Herbrand expansion of the Skolemised formula.
//   full   he, with box constraints at world j guarded by d_j and ~implied_j,
//          where implied_j holds iff diamond j is already true at world 0.
//   reach  full, keeping box i at world j only if i is reachable from the
//          literals of diamond j by unit propagation through box bodies.
//
// plus the enrichments conflicts (~b_i | ~d_j for contradicting pairs), boxes
// (~b_i | b_j for subsumed box bodies) and diamonds (merged worlds and a
// widened definition of implied_j).
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "s5/s5nf.hpp"

namespace s5 {

enum class VarKind : std::uint8_t {
  world_atom,      // atom at a world
  box_select,      // b_i
  diamond_select,  // d_j
  implied,         // implied_j
  support,         // auxiliary for the widened implied_j definition
};

struct VarTag {
  VarKind kind = VarKind::world_atom;
  std::uint32_t index = 0;  // atom id, box id or diamond id
  std::uint32_t world = 0;  // world index for world_atom, otherwise 0

  friend auto operator<=>(const VarTag&, const VarTag&) = default;
};

/// Bijection between SAT variables (1..size()) and tagged names.
class VarMap {
 public:
  int get_or_add(const VarTag& tag, std::string name);
  std::optional<int> find(const VarTag& tag) const;

  const VarTag& tag(int var) const { return tags_.at(static_cast<std::size_t>(var - 1)); }
  const std::string& name(int var) const { return names_.at(static_cast<std::size_t>(var - 1)); }
  std::size_t size() const { return tags_.size(); }

  /// Adds an untagged variable, used for instances read from DIMACS.
  int add_anonymous();

 private:
  std::vector<VarTag> tags_;
  std::vector<std::string> names_;
  std::map<VarTag, int> ids_;
};

using Clause = std::vector<int>;

enum class EncodingKind : std::uint8_t { he, full, reach };

struct Enrichments {
  bool conflicts = false;
  bool boxes = false;
  bool diamonds = false;

  static Enrichments all() { return {true, true, true}; }
  bool any() const { return conflicts || boxes || diamonds; }
  friend bool operator==(const Enrichments&, const Enrichments&) = default;
};

std::string to_string(EncodingKind kind);
std::string describe(EncodingKind kind, const Enrichments& e);

/// Up-closures of the diamond literals and the reached box sets B_j.
struct ReachIndex {
  std::vector<LitSet> closure;                       // diamond j at index j - 1
  std::vector<std::vector<std::uint32_t>> reached;   // sorted box ids, index j - 1

  const std::vector<std::uint32_t>& boxes_reached_from(std::uint32_t diamond) const {
    return reached.at(diamond - 1);
  }
  bool reaches(std::uint32_t diamond, std::uint32_t box) const;
};

/// Groups of diamond literals that share a world. The first member of every
/// group is its largest literal and names the world.
struct WorldPartition {
  std::vector<std::vector<std::uint32_t>> worlds;
  std::vector<std::uint32_t> world_of;  // diamond j at index j - 1 -> world index

  static WorldPartition identity(std::size_t diamond_count);
  std::uint32_t world(std::uint32_t diamond) const { return world_of.at(diamond - 1); }
};

struct CnfStats {
  std::size_t variables = 0;
  std::size_t clauses = 0;
  std::size_t literals = 0;
};

class CnfInstance {
 public:
  /// Raw instance without an S5 source (e.g. read from DIMACS).
  static CnfInstance from_clauses(std::size_t num_vars, std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  const VarMap& varmap() const { return varmap_; }
  std::size_t num_vars() const { return varmap_.size(); }
  std::size_t num_clauses() const { return clauses_.size(); }
  CnfStats stats() const;

  EncodingKind kind() const { return kind_; }
  const Enrichments& enrichments() const { return enrichments_; }
  /// True when the source normal form was trivially false; the instance then
  /// holds one empty clause.
  bool trivially_unsat() const { return trivially_unsat_; }

  /// Null for raw instances.
  const S5NF* source() const { return source_.get(); }
  const WorldPartition& partition() const { return partition_; }
  /// Empty unless the encoding is reach-based.
  const std::optional<ReachIndex>& reach() const { return reach_; }

 private:
  friend class CnfBuilder;

  std::vector<Clause> clauses_;
  VarMap varmap_;
  EncodingKind kind_ = EncodingKind::he;
  Enrichments enrichments_;
  bool trivially_unsat_ = false;
  std::shared_ptr<const S5NF> source_;
  WorldPartition partition_;
  std::optional<ReachIndex> reach_;
};

LitSet up_closure(const LitSet& seed, const S5NF& f);
ReachIndex reach_sets(const S5NF& f);
WorldPartition compute_worlds(const S5NF& f);

CnfInstance encode_he(const S5NF& f);
CnfInstance encode_full(const S5NF& f);
CnfInstance encode_reach(const S5NF& f);

/// Adds ~b_i | ~d_j whenever the complement of box i's body is contained in
/// diamond j's body. c must have been built from f.
CnfInstance apply_conflicts(const CnfInstance& c, const S5NF& f);
/// Adds ~b_i | b_j whenever box i's body is a subset of box j's body.
CnfInstance apply_boxes(const CnfInstance& c, const S5NF& f);
/// reach over merged worlds, with implied_j also set by any selected diamond
/// whose body is a superset of diamond j's body.
CnfInstance apply_diamonds(const S5NF& f);

struct EncodingOptions {
  EncodingKind kind = EncodingKind::reach;
  Enrichments enrichments;
};

/// Throws std::invalid_argument when enrichments are combined with he.
CnfInstance encode(const S5NF& f, const EncodingOptions& options);

}  // namespace s5
