#include "s5/formula.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace s5 {

struct Formula::Node {
  Op op;
  Atom atom;
  std::vector<Formula> children;
  std::size_t size;
  std::size_t height;
};

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto head = static_cast<unsigned char>(text.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(text.begin() + 1, text.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

bool is_reserved_name(std::string_view name) {
  return name.substr(0, kReservedPrefix.size()) == kReservedPrefix;
}

std::string_view op_name(Op op) {
  switch (op) {
    case Op::atom: return "atom";
    case Op::negation: return "not";
    case Op::conjunction: return "and";
    case Op::disjunction: return "or";
    case Op::implication: return "implies";
    case Op::equivalence: return "iff";
    case Op::box: return "box";
    case Op::diamond: return "dia";
  }
  return "?";
}

Formula Formula::atom(std::string_view name) {
  if (!is_identifier(name)) {
    throw std::invalid_argument("invalid atom name '" + std::string(name) + "'");
  }
  if (is_reserved_name(name)) {
    throw std::invalid_argument("atom name '" + std::string(name) +
                                "' uses the reserved prefix");
  }
  return atom(Atom{std::string(name), AtomOrigin::source, 0});
}

Formula Formula::atom(Atom a) {
  if (!is_identifier(a.name)) {
    throw std::invalid_argument("invalid atom name '" + a.name + "'");
  }
  auto node = std::make_shared<Node>();
  node->op = Op::atom;
  node->atom = std::move(a);
  node->size = 1;
  node->height = 1;
  return Formula(std::move(node));
}

Formula Formula::make(Op op, std::vector<Formula> children) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->size = 1;
  node->height = 0;
  for (const auto& c : children) {
    node->size += c.node_->size;
    node->height = std::max(node->height, c.node_->height);
  }
  node->height += 1;
  node->children = std::move(children);
  return Formula(std::move(node));
}

Op Formula::op() const { return node_->op; }

bool Formula::is_literal() const {
  return op() == Op::atom || (op() == Op::negation && child().op() == Op::atom);
}

const Atom& Formula::atom_value() const {
  if (op() != Op::atom) throw std::logic_error("atom_value() on a non-atom");
  return node_->atom;
}

std::span<const Formula> Formula::children() const { return node_->children; }

std::size_t Formula::node_count() const { return node_->size; }
std::size_t Formula::depth() const { return node_->height; }

bool operator==(const Formula& a, const Formula& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.op() <=> b.op(); c != 0) return c;
  if (a.op() == Op::atom) return a.node_->atom.name <=> b.node_->atom.name;
  const auto& ca = a.node_->children;
  const auto& cb = b.node_->children;
  if (auto c = ca.size() <=> cb.size(); c != 0) return c;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (auto c = ca[i] <=> cb[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Formula neg(Formula f) { return Formula::make(Op::negation, {std::move(f)}); }

Formula conj(std::vector<Formula> parts) {
  if (parts.size() == 1) return parts.front();
  if (parts.empty()) throw std::invalid_argument("empty conjunction");
  std::vector<Formula> flat;
  for (auto& p : parts) {
    if (p.op() == Op::conjunction) {
      auto kids = p.children();
      flat.insert(flat.end(), kids.begin(), kids.end());
    } else {
      flat.push_back(std::move(p));
    }
  }
  return Formula::make(Op::conjunction, std::move(flat));
}

Formula disj(std::vector<Formula> parts) {
  if (parts.size() == 1) return parts.front();
  if (parts.empty()) throw std::invalid_argument("empty disjunction");
  std::vector<Formula> flat;
  for (auto& p : parts) {
    if (p.op() == Op::disjunction) {
      auto kids = p.children();
      flat.insert(flat.end(), kids.begin(), kids.end());
    } else {
      flat.push_back(std::move(p));
    }
  }
  return Formula::make(Op::disjunction, std::move(flat));
}

Formula implies(Formula lhs, Formula rhs) {
  return Formula::make(Op::implication, {std::move(lhs), std::move(rhs)});
}

Formula iff(Formula lhs, Formula rhs) {
  return Formula::make(Op::equivalence, {std::move(lhs), std::move(rhs)});
}

Formula box(Formula f) { return Formula::make(Op::box, {std::move(f)}); }
Formula dia(Formula f) { return Formula::make(Op::diamond, {std::move(f)}); }

Atom truth_atom() {
  return Atom{std::string(kReservedPrefix) + "top", AtomOrigin::fresh, 0};
}

Formula verum() {
  auto t = Formula::atom(truth_atom());
  return disj({t, neg(t)});
}

Formula falsum() {
  auto t = Formula::atom(truth_atom());
  return conj({t, neg(t)});
}

namespace {

void collect_atoms(const Formula& f, std::set<Atom>& out) {
  if (f.is_atom()) {
    out.insert(f.atom_value());
    return;
  }
  for (const auto& c : f.children()) collect_atoms(c, out);
}

}  // namespace

std::set<Atom> atoms_of(const Formula& f) {
  std::set<Atom> out;
  collect_atoms(f, out);
  return out;
}

std::size_t modal_count(const Formula& f) {
  std::size_t n = f.is_modal() ? 1 : 0;
  for (const auto& c : f.children()) n += modal_count(c);
  return n;
}

}  // namespace s5
