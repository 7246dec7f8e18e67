#include "s5/kripke.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "s5/solver.hpp"

namespace s5 {

KripkeModel::KripkeModel(std::vector<World> worlds) : worlds_(std::move(worlds)) {
  if (worlds_.empty()) throw std::invalid_argument("a Kripke model needs at least one world");
}

KripkeModel KripkeModel::deduplicated() const {
  std::vector<World> out;
  for (const auto& w : worlds_) {
    if (out.empty() || std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  return KripkeModel(std::move(out));
}

std::string KripkeModel::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < worlds_.size(); ++i) {
    out << 'w' << i << ": {";
    bool first = true;
    for (const auto& atom : worlds_[i]) {
      out << (first ? "" : ", ") << atom;
      first = false;
    }
    out << "}\n";
  }
  return out.str();
}

namespace {

// Truth of f in every world at once.
std::vector<bool> truth(const Formula& f, const KripkeModel& m) {
  const std::size_t k = m.size();
  switch (f.op()) {
    case Op::atom: {
      std::vector<bool> out(k);
      for (std::size_t i = 0; i < k; ++i) out[i] = m.world(i).contains(f.atom_value().name);
      return out;
    }
    case Op::negation: {
      auto out = truth(f.child(), m);
      out.flip();
      return out;
    }
    case Op::conjunction:
    case Op::disjunction: {
      const bool is_conj = f.op() == Op::conjunction;
      std::vector<bool> out(k, is_conj);
      for (const auto& c : f.children()) {
        const auto part = truth(c, m);
        for (std::size_t i = 0; i < k; ++i) out[i] = is_conj ? out[i] && part[i] : out[i] || part[i];
      }
      return out;
    }
    case Op::implication:
    case Op::equivalence: {
      const auto a = truth(f.child(0), m);
      const auto b = truth(f.child(1), m);
      std::vector<bool> out(k);
      for (std::size_t i = 0; i < k; ++i) {
        out[i] = f.op() == Op::implication ? (!a[i] || b[i]) : (a[i] == b[i]);
      }
      return out;
    }
    case Op::box:
    case Op::diamond: {
      const auto body = truth(f.child(), m);
      const bool value = f.op() == Op::box ? std::all_of(body.begin(), body.end(), [](bool b) { return b; })
                                           : std::any_of(body.begin(), body.end(), [](bool b) { return b; });
      return std::vector<bool>(k, value);
    }
  }
  throw std::logic_error("evaluate: unknown connective");
}

using Interpretation = std::vector<bool>;  // indexed by atom id

bool holds_some(const LitSet& body, const Interpretation& I) {
  return std::any_of(body.begin(), body.end(), [&](Lit l) { return I[l.atom()] == l.positive(); });
}

bool holds_all(const LitSet& body, const Interpretation& I) {
  return std::all_of(body.begin(), body.end(), [&](Lit l) { return I[l.atom()] == l.positive(); });
}

// Makes I satisfy every true box while keeping the required diamond
// literals. First copies atoms from world 0 into unsatisfied boxes that the
// encoding did not enforce here; if that is not enough, solves the world
// locally.
void repair_world(Interpretation& I, const Interpretation& world0, const S5NF& f, const LitSet& required,
                  const std::vector<std::uint32_t>& true_boxes, const std::vector<bool>& enforced) {
  std::vector<bool> pinned(f.atoms().size(), false);
  for (Lit l : required) pinned[l.atom()] = true;

  for (std::size_t round = 0; round <= true_boxes.size(); ++round) {
    bool changed = false;
    for (std::uint32_t i : true_boxes) {
      if (enforced[i] || holds_some(f.box(i), I)) continue;
      for (Lit l : f.box(i)) {
        if (!pinned[l.atom()] && I[l.atom()] != world0[l.atom()]) {
          I[l.atom()] = world0[l.atom()];
          changed = true;
        }
      }
    }
    if (!changed) break;
  }

  const auto consistent = [&] {
    return holds_all(required, I) && std::all_of(true_boxes.begin(), true_boxes.end(),
                                                 [&](std::uint32_t i) { return holds_some(f.box(i), I); });
  };
  if (consistent()) return;

  std::vector<Clause> clauses;
  auto dimacs = [](Lit l) { return static_cast<int>(l.atom() + 1) * (l.positive() ? 1 : -1); };
  for (Lit l : required) clauses.push_back({dimacs(l)});
  for (std::uint32_t i : true_boxes) {
    Clause c;
    for (Lit l : f.box(i)) c.push_back(dimacs(l));
    clauses.push_back(std::move(c));
  }
  const Outcome local = solve(f.atoms().size(), clauses);
  if (!local.sat()) throw std::logic_error("extract_model: a diamond world cannot be completed");
  for (std::size_t a = 0; a < I.size(); ++a) I[a] = local.model[a + 1];
}

}  // namespace

bool evaluate(const Formula& f, const KripkeModel& m, std::size_t i) {
  if (i >= m.size()) throw std::out_of_range("world index " + std::to_string(i) + " out of range");
  return truth(f, m)[i];
}

bool verify(const Formula& f, const KripkeModel& m) { return evaluate(f, m, 0); }

KripkeModel extract_model(const std::vector<bool>& assignment, const CnfInstance& c) {
  if (c.source() == nullptr) throw std::invalid_argument("extract_model: instance has no S5 source");
  if (assignment.size() < c.num_vars() + 1 || !satisfies(assignment, c.clauses())) {
    throw std::invalid_argument("extract_model: assignment does not satisfy the instance");
  }
  const S5NF& f = *c.source();
  const VarMap& vars = c.varmap();
  auto value = [&](const VarTag& tag) -> std::optional<bool> {
    if (auto v = vars.find(tag)) return static_cast<bool>(assignment[static_cast<std::size_t>(*v)]);
    return std::nullopt;
  };

  const std::size_t atom_count = f.atoms().size();
  Interpretation world0(atom_count);
  for (AtomId a = 0; a < atom_count; ++a) {
    world0[a] = value({VarKind::world_atom, a, 0}).value_or(false);
  }

  std::vector<std::uint32_t> true_boxes;
  for (std::uint32_t i = 1; i <= f.box_count(); ++i) {
    if (value({VarKind::box_select, i, 0}).value_or(false)) true_boxes.push_back(i);
  }

  std::vector<Interpretation> worlds{world0};
  for (const auto& group : c.partition().worlds) {
    LitSet required;
    std::vector<bool> enforced(f.box_count() + 1, !c.reach().has_value());
    bool active = false;
    for (std::uint32_t j : group) {
      const bool selected = value({VarKind::diamond_select, j, 0}).value_or(false);
      const bool implied = value({VarKind::implied, j, 0}).value_or(false);
      if (!selected || implied) continue;
      active = true;
      required = set_union(required, f.diamond(j));
      if (c.reach()) {
        for (std::uint32_t i : c.reach()->boxes_reached_from(j)) enforced[i] = true;
      }
    }
    if (!active) continue;

    const std::uint32_t w = c.partition().world(group.front());
    Interpretation I(atom_count);
    for (AtomId a = 0; a < atom_count; ++a) {
      I[a] = value({VarKind::world_atom, a, w}).value_or(world0[a]);
    }
    repair_world(I, world0, f, required, true_boxes, enforced);
    worlds.push_back(std::move(I));
  }

  std::vector<World> named;
  for (const auto& I : worlds) {
    World w;
    for (AtomId a = 0; a < atom_count; ++a) {
      if (I[a] && !f.atom(a).is_fresh()) w.insert(f.atom(a).name);
    }
    named.push_back(std::move(w));
  }
  return KripkeModel(std::move(named)).deduplicated();
}

}  // namespace s5
