// Formula syntax trees for propositional modal logic S5.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace s5 {

/// Identifiers starting with this prefix are reserved for atoms introduced by
/// the toolkit itself (naming atoms, the constant-truth atom). The parser
/// rejects them in user input.
inline constexpr std::string_view kReservedPrefix = "__";

enum class AtomOrigin : std::uint8_t { source, fresh };

struct Atom {
  std::string name;
  AtomOrigin origin = AtomOrigin::source;
  // Counter value of the generator that produced a fresh atom; 0 for source
  // atoms and for the reserved truth atom.
  unsigned generation = 0;

  bool is_fresh() const { return origin == AtomOrigin::fresh; }

  friend bool operator==(const Atom& a, const Atom& b) { return a.name == b.name; }
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
    return a.name <=> b.name;
  }
};

bool is_identifier(std::string_view text);
bool is_reserved_name(std::string_view name);

enum class Op : std::uint8_t {
  atom,
  negation,
  conjunction,
  disjunction,
  implication,
  equivalence,
  box,
  diamond,
};

std::string_view op_name(Op op);

/// Immutable formula handle. Nodes are shared, so copies are cheap and a
/// Formula can be passed between threads freely.
///
/// Conjunction and disjunction are n-ary: the factories flatten nested nodes
/// of the same connective and collapse single-child lists, so every
/// conjunction/disjunction node has at least two children.
class Formula {
 public:
  static Formula atom(std::string_view name);
  static Formula atom(Atom a);

  Op op() const;
  bool is_atom() const { return op() == Op::atom; }
  bool is_modal() const { return op() == Op::box || op() == Op::diamond; }
  /// Atom or negated atom.
  bool is_literal() const;

  /// Only valid for atoms.
  const Atom& atom_value() const;
  std::span<const Formula> children() const;
  const Formula& child(std::size_t i = 0) const { return children()[i]; }

  std::size_t node_count() const;
  std::size_t depth() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Op op, std::vector<Formula> children);

  friend Formula neg(Formula f);
  friend Formula conj(std::vector<Formula> parts);
  friend Formula disj(std::vector<Formula> parts);
  friend Formula implies(Formula lhs, Formula rhs);
  friend Formula iff(Formula lhs, Formula rhs);
  friend Formula box(Formula f);
  friend Formula dia(Formula f);

  std::shared_ptr<const Node> node_;
};

Formula neg(Formula f);
/// Throws std::invalid_argument on an empty list.
Formula conj(std::vector<Formula> parts);
Formula disj(std::vector<Formula> parts);
Formula implies(Formula lhs, Formula rhs);
Formula iff(Formula lhs, Formula rhs);
Formula box(Formula f);
Formula dia(Formula f);

inline Formula conj(std::initializer_list<Formula> parts) {
  return conj(std::vector<Formula>(parts));
}
inline Formula disj(std::initializer_list<Formula> parts) {
  return disj(std::vector<Formula>(parts));
}

/// Atom used to express the constants true/false of benchmark inputs.
Atom truth_atom();
Formula verum();
Formula falsum();

std::set<Atom> atoms_of(const Formula& f);
/// Number of box and diamond operator occurrences.
std::size_t modal_count(const Formula& f);

}  // namespace s5
