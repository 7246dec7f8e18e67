#include "s5/asp.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace s5 {

namespace {

// r14 and r15 use the pos/neg polarity constants of r16-r25.
constexpr std::array<std::string_view, 30> kRules = {
    "world(D,D) :- diamond(D).",
    "{true(X)} :- box(X).",
    "{true(X)} :- diamond(X).",
    "{true(X)} :- atom(X).",
    "{true(X,W)} :- world(W,_), atom(X).",
    ":- clause(C); not true(X) : pos_clause(C,X); true(X) : neg_clause(C,X).",
    ":- box(B), true(B); not true(X) : pos_box(B,X); true(X) : neg_box(B,X).",
    ":- world(W,D); box(B), true(B), diamond(D), true(D), not implied(D);\n"
    "   not true(X,W) : pos_box(B,X); true(X,W) : neg_box(B,X).",
    "implied(D) :- diamond(D); true(X) : pos_diamond(D,X);\n"
    "   not true(X) : neg_diamond(D,X).",
    ":- diamond(D), implied(D), not true(D).",
    ":- pos_diamond(D,X); true(D), not implied(D); world(W,D), not true(X,W).",
    ":- neg_diamond(D,X); true(D), not implied(D); world(W,D), true(X,W).",
    "need(W) :- world(W,D), true(D), not implied(D).",
    ":- atom(X), world(W,_), not need(W), true(X,W).",
    "{true(Y,W)} :- world(W,D), pos_diamond(D,X), lrl(X,pos,Y,_).",
    "{true(Y,W)} :- world(W,D), neg_diamond(D,X), lrl(X,neg,Y,_).",
    "lrl(X,pos,X,pos) :- atom(X), pos_diamond(_,X).",
    "lrl(X,neg,X,neg) :- atom(X), neg_diamond(_,X).",
    "lrl(X,PX,Z,pos) :- lrl(X,PX,Y,neg); pos_box(B,Y); pos_box(B,Z), Z!=Y.",
    "lrl(X,PX,Z,neg) :- lrl(X,PX,Y,neg); pos_box(B,Y); neg_box(B,Z).",
    "lrl(X,PX,Z,pos) :- lrl(X,PX,Y,pos); neg_box(B,Y); pos_box(B,Z).",
    "lrl(X,PX,Z,neg) :- lrl(X,PX,Y,pos); neg_box(B,Y); neg_box(B,Z), Z!=Y.",
    "lrb(X,P,B) :- lrl(X,P,Y,neg); pos_box(B,Y).",
    "lrb(X,P,B) :- lrl(X,P,Y,pos); neg_box(B,Y).",
    "reach_box(W,B) :- world(W,D), pos_diamond(D,X); lrb(X,pos,B).",
    "reach_box(W,B) :- world(W,D), neg_diamond(D,X); lrb(X,neg,B).",
    ":- world(W,D), diamond(D), true(D), not implied(D); reach_box(W,B);\n"
    "   true(B); not true(X,W) : pos_box(B,X); true(X,W) : neg_box(B,X).",
    ":- box_diamond_conflict(B,D); true(B), true(D).",
    ":- box_subset(B,B'), true(B), not true(B').",
    "implied(D) :- diamond_subset(D,D'), true(D').",
};

bool uses_conflicts(AspVariant v) { return v == AspVariant::reach_conflicts || v == AspVariant::reach_all; }
bool uses_boxes(AspVariant v) { return v == AspVariant::reach_boxes || v == AspVariant::reach_all; }
bool uses_diamonds(AspVariant v) { return v == AspVariant::reach_diamonds || v == AspVariant::reach_all; }

// Identifiers the emitter itself generates: b<k>, c<k>, d<k>.
bool looks_generated(std::string_view s) {
  if (s.size() < 2 || (s[0] != 'b' && s[0] != 'c' && s[0] != 'd')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

std::string box_id(std::uint32_t i) { return "b" + std::to_string(i); }
std::string diamond_id(std::uint32_t j) { return "d" + std::to_string(j); }

}  // namespace

std::string to_string(AspVariant v) {
  switch (v) {
    case AspVariant::full: return "full";
    case AspVariant::reach: return "reach";
    case AspVariant::reach_conflicts: return "reach+conflicts";
    case AspVariant::reach_boxes: return "reach+boxes";
    case AspVariant::reach_diamonds: return "reach+diamonds";
    case AspVariant::reach_all: return "reach+all";
  }
  return "?";
}

std::optional<AspVariant> asp_variant_from_string(std::string_view name) {
  for (auto v : {AspVariant::full, AspVariant::reach, AspVariant::reach_conflicts, AspVariant::reach_boxes,
                 AspVariant::reach_diamonds, AspVariant::reach_all}) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

std::optional<AspVariant> asp_variant_for(EncodingKind kind, const Enrichments& e) {
  if (kind == EncodingKind::he) return std::nullopt;
  if (kind == EncodingKind::full) {
    if (e.any()) return std::nullopt;
    return AspVariant::full;
  }
  const int count = int{e.conflicts} + int{e.boxes} + int{e.diamonds};
  if (count == 0) return AspVariant::reach;
  if (count == 3) return AspVariant::reach_all;
  if (count > 1) return std::nullopt;
  if (e.conflicts) return AspVariant::reach_conflicts;
  if (e.boxes) return AspVariant::reach_boxes;
  return AspVariant::reach_diamonds;
}

std::vector<int> asp_rule_numbers(AspVariant v) {
  std::vector<int> rules;
  for (int r = 0; r <= 13; ++r) rules.push_back(r);
  if (v == AspVariant::full) return rules;

  std::erase_if(rules, [&](int r) { return r == 4 || r == 7 || (r == 0 && uses_diamonds(v)); });
  for (int r = 14; r <= 26; ++r) rules.push_back(r);
  if (uses_conflicts(v)) rules.push_back(27);
  if (uses_boxes(v)) rules.push_back(28);
  if (uses_diamonds(v)) rules.push_back(29);
  return rules;
}

std::string_view asp_rule(int n) {
  if (n < 0 || n >= static_cast<int>(kRules.size())) throw std::out_of_range("no rule r" + std::to_string(n));
  return kRules[static_cast<std::size_t>(n)];
}

std::string asp_constant(std::string_view name) {
  const bool plain = !name.empty() && std::islower(static_cast<unsigned char>(name[0])) &&
                     std::all_of(name.begin(), name.end(), [](char ch) {
                       return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
                     }) &&
                     !looks_generated(name) && name != "not";
  if (plain) return std::string(name);
  std::string out = "\"";
  for (char ch : name) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

std::string emit_facts(const S5NF& f, AspVariant v) {
  if (f.trivially_false()) throw std::invalid_argument("emit_facts: the normal form is trivially false");
  std::ostringstream out;
  auto atom = [&](Lit l) { return asp_constant(f.atom(l.atom()).name); };

  std::vector<std::string> names;
  for (const auto& a : f.atoms()) names.push_back(asp_constant(a.name));
  std::sort(names.begin(), names.end());
  for (const auto& n : names) out << "atom(" << n << ").\n";

  for (std::uint32_t i = 1; i <= f.box_count(); ++i) {
    out << "box(" << box_id(i) << ").\n";
    for (Lit l : f.box(i)) out << (l.positive() ? "pos_box(" : "neg_box(") << box_id(i) << ',' << atom(l) << ").\n";
  }
  for (std::uint32_t j = 1; j <= f.diamond_count(); ++j) {
    out << "diamond(" << diamond_id(j) << ").\n";
    for (Lit l : f.diamond(j)) {
      out << (l.positive() ? "pos_diamond(" : "neg_diamond(") << diamond_id(j) << ',' << atom(l) << ").\n";
    }
  }
  for (std::size_t k = 0; k < f.clauses().size(); ++k) {
    const std::string c = "c" + std::to_string(k + 1);
    out << "clause(" << c << ").\n";
    for (const auto& d : f.clauses()[k].disjuncts) {
      switch (d.kind) {
        case S5LitKind::prop:
          out << (d.lit.positive() ? "pos_clause(" : "neg_clause(") << c << ',' << atom(d.lit) << ").\n";
          break;
        case S5LitKind::box: out << "pos_clause(" << c << ',' << box_id(d.id) << ").\n"; break;
        case S5LitKind::diamond: out << "pos_clause(" << c << ',' << diamond_id(d.id) << ").\n"; break;
      }
    }
  }

  if (uses_conflicts(v)) {
    for (std::uint32_t i = 1; i <= f.box_count(); ++i) {
      const LitSet negated = complement(f.box(i));
      for (std::uint32_t j = 1; j <= f.diamond_count(); ++j) {
        if (is_subset(negated, f.diamond(j))) {
          out << "box_diamond_conflict(" << box_id(i) << ',' << diamond_id(j) << ").\n";
        }
      }
    }
  }
  if (uses_boxes(v)) {
    for (std::uint32_t i = 1; i <= f.box_count(); ++i) {
      for (std::uint32_t j = 1; j <= f.box_count(); ++j) {
        if (i != j && is_subset(f.box(i), f.box(j))) out << "box_subset(" << box_id(i) << ',' << box_id(j) << ").\n";
      }
    }
  }
  if (uses_diamonds(v)) {
    // A diamond listed as its own subset would make every true diamond
    // implied, so only distinct pairs are emitted.
    for (std::uint32_t j = 1; j <= f.diamond_count(); ++j) {
      for (std::uint32_t i = 1; i <= f.diamond_count(); ++i) {
        if (i != j && is_subset(f.diamond(j), f.diamond(i))) {
          out << "diamond_subset(" << diamond_id(j) << ',' << diamond_id(i) << ").\n";
        }
      }
    }
    auto partition = compute_worlds(f);
    std::sort(partition.worlds.begin(), partition.worlds.end());
    for (auto& w : partition.worlds) {
      const std::uint32_t rep = w.front();
      std::sort(w.begin(), w.end());
      for (std::uint32_t j : w) out << "world(" << diamond_id(rep) << ',' << diamond_id(j) << ").\n";
    }
  }
  return out.str();
}

std::string emit_program(AspVariant v) {
  std::string out;
  for (int r : asp_rule_numbers(v)) {
    out += "% r" + std::to_string(r) + "\n";
    out += asp_rule(r);
    out += '\n';
  }
  return out;
}

}  // namespace s5
