// S5 normal form: conjunctions of S5-clauses over propositional, box and
// diamond literals.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "s5/formula.hpp"

namespace s5 {

using AtomId = std::uint32_t;

/// Propositional literal over an interned atom. The code packs the atom id
/// and the sign so that complementary literals are adjacent in sort order.
class Lit {
 public:
  constexpr Lit(AtomId atom, bool positive)
      : code_((atom << 1) | (positive ? 0u : 1u)) {}

  static constexpr Lit from_code(std::uint32_t code) {
    Lit l(0, true);
    l.code_ = code;
    return l;
  }

  constexpr AtomId atom() const { return code_ >> 1; }
  constexpr bool positive() const { return (code_ & 1u) == 0; }
  constexpr std::uint32_t code() const { return code_; }
  constexpr Lit operator~() const { return from_code(code_ ^ 1u); }

  friend constexpr auto operator<=>(Lit, Lit) = default;

 private:
  std::uint32_t code_;
};

constexpr Lit complement(Lit l) { return ~l; }

/// Sorted, duplicate-free set of literals.
using LitSet = std::vector<Lit>;

LitSet make_lit_set(std::vector<Lit> lits);
LitSet complement(const LitSet& s);
bool is_subset(const LitSet& small, const LitSet& big);
bool intersects(const LitSet& a, const LitSet& b);
bool contains(const LitSet& s, Lit l);
/// True if the set holds some literal together with its complement.
bool has_complementary_pair(const LitSet& s);
LitSet set_union(const LitSet& a, const LitSet& b);

enum class S5LitKind : std::uint8_t { prop, box, diamond };

/// A disjunct of an S5-clause. Box and diamond literals refer by id (1-based)
/// to the literal sets held by the enclosing S5NF.
struct S5Literal {
  S5LitKind kind = S5LitKind::prop;
  Lit lit{0, true};
  std::uint32_t id = 0;

  static S5Literal prop(Lit l) { return {S5LitKind::prop, l, 0}; }
  static S5Literal box(std::uint32_t id) { return {S5LitKind::box, Lit(0, true), id}; }
  static S5Literal diamond(std::uint32_t id) {
    return {S5LitKind::diamond, Lit(0, true), id};
  }

  friend bool operator==(const S5Literal&, const S5Literal&) = default;
};

struct S5Clause {
  std::uint32_t id = 0;
  std::vector<S5Literal> disjuncts;

  friend bool operator==(const S5Clause&, const S5Clause&) = default;
};

/// Conjunction of S5-clauses together with the fixed enumeration of its box
/// literals (ids 1..m) and diamond literals (ids 1..n).
///
/// Construction prunes degenerate parts: a clause containing a literal and
/// its complement, or a box over complementary literals, is a tautology and
/// is dropped; a diamond over complementary literals is unsatisfiable and is
/// removed from its clause. If a clause becomes empty the whole S5NF is
/// trivially false. Identical modal literals share one id.
class S5NF {
 public:
  /// Requires is_s5nf(f); throws std::invalid_argument otherwise.
  static S5NF from_formula(const Formula& f);

  const std::vector<S5Clause>& clauses() const { return clauses_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<LitSet>& boxes() const { return boxes_; }
  const std::vector<LitSet>& diamonds() const { return diamonds_; }

  std::size_t box_count() const { return boxes_.size(); }
  std::size_t diamond_count() const { return diamonds_.size(); }

  const LitSet& box(std::uint32_t id) const { return boxes_.at(id - 1); }
  const LitSet& diamond(std::uint32_t id) const { return diamonds_.at(id - 1); }
  const Atom& atom(AtomId id) const { return atoms_.at(id); }
  std::optional<AtomId> find_atom(const std::string& name) const;

  bool trivially_false() const { return trivially_false_; }
  /// No clauses left after pruning.
  bool trivially_true() const { return !trivially_false_ && clauses_.empty(); }

  /// Re-renders the normal form as a Formula; is_s5nf holds on the result.
  Formula to_formula() const;
  Formula literal_formula(Lit l) const;

  friend bool operator==(const S5NF&, const S5NF&) = default;

 private:
  std::vector<S5Clause> clauses_;
  std::vector<Atom> atoms_;
  std::vector<LitSet> boxes_;
  std::vector<LitSet> diamonds_;
  bool trivially_false_ = false;
};

bool is_s5nf(const Formula& f);

LitSet lits(const S5NF& f, const S5Literal& l);
LitSet lits(const S5NF& f, const S5Clause& c);
LitSet lits(const S5NF& f);

std::string to_string(const S5NF& f, Lit l);

}  // namespace s5
