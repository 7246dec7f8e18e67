#include "s5/encoder.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace s5 {

int VarMap::get_or_add(const VarTag& tag, std::string name) {
  if (auto it = ids_.find(tag); it != ids_.end()) return it->second;
  tags_.push_back(tag);
  names_.push_back(std::move(name));
  const int var = static_cast<int>(tags_.size());
  ids_.emplace(tag, var);
  return var;
}

std::optional<int> VarMap::find(const VarTag& tag) const {
  if (auto it = ids_.find(tag); it != ids_.end()) return it->second;
  return std::nullopt;
}

int VarMap::add_anonymous() {
  // Anonymous variables get a support tag keyed by their own number so the
  // map stays a bijection.
  const auto var = static_cast<std::uint32_t>(tags_.size() + 1);
  return get_or_add(VarTag{VarKind::support, var, ~0u}, "x" + std::to_string(var));
}

std::string to_string(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::he: return "he";
    case EncodingKind::full: return "full";
    case EncodingKind::reach: return "reach";
  }
  return "?";
}

std::string describe(EncodingKind kind, const Enrichments& e) {
  std::string out = to_string(kind);
  if (e.conflicts && e.boxes && e.diamonds) return out + "+all";
  if (e.conflicts) out += "+conflicts";
  if (e.boxes) out += "+boxes";
  if (e.diamonds) out += "+diamonds";
  return out;
}

bool ReachIndex::reaches(std::uint32_t diamond, std::uint32_t box) const {
  const auto& r = reached.at(diamond - 1);
  return std::binary_search(r.begin(), r.end(), box);
}

WorldPartition WorldPartition::identity(std::size_t diamond_count) {
  WorldPartition p;
  for (std::uint32_t j = 1; j <= diamond_count; ++j) {
    p.worlds.push_back({j});
    p.world_of.push_back(j);
  }
  return p;
}

CnfStats CnfInstance::stats() const {
  CnfStats s;
  s.variables = num_vars();
  s.clauses = num_clauses();
  for (const auto& c : clauses_) s.literals += c.size();
  return s;
}

namespace {

// Boxes indexed by the literals of their bodies.
class BoxOccurrences {
 public:
  explicit BoxOccurrences(const S5NF& f) : by_code_(2 * f.atoms().size()) {
    for (std::uint32_t i = 1; i <= f.box_count(); ++i) {
      for (Lit l : f.box(i)) by_code_[l.code()].push_back(i);
    }
  }

  const std::vector<std::uint32_t>& containing(Lit l) const {
    static const std::vector<std::uint32_t> none;
    return l.code() < by_code_.size() ? by_code_[l.code()] : none;
  }

 private:
  std::vector<std::vector<std::uint32_t>> by_code_;
};

LitSet closure_with(const LitSet& seed, const S5NF& f, const BoxOccurrences& occ) {
  std::vector<bool> member(2 * f.atoms().size(), false);
  std::vector<Lit> work;
  for (Lit l : seed) {
    if (l.code() >= member.size()) member.resize(l.code() + 1, false);
    if (!member[l.code()]) {
      member[l.code()] = true;
      work.push_back(l);
    }
  }
  for (std::size_t k = 0; k < work.size(); ++k) {
    const Lit l = work[k];
    for (std::uint32_t i : occ.containing(~l)) {
      for (Lit other : f.box(i)) {
        if (other == ~l || member[other.code()]) continue;
        member[other.code()] = true;
        work.push_back(other);
      }
    }
  }
  return make_lit_set(std::move(work));
}

}  // namespace

LitSet up_closure(const LitSet& seed, const S5NF& f) {
  return closure_with(seed, f, BoxOccurrences(f));
}

ReachIndex reach_sets(const S5NF& f) {
  BoxOccurrences occ(f);
  ReachIndex index;
  for (std::uint32_t j = 1; j <= f.diamond_count(); ++j) {
    LitSet closure = closure_with(f.diamond(j), f, occ);
    std::vector<std::uint32_t> boxes;
    for (Lit l : closure) {
      const auto& hit = occ.containing(~l);
      boxes.insert(boxes.end(), hit.begin(), hit.end());
    }
    std::sort(boxes.begin(), boxes.end());
    boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
    index.closure.push_back(std::move(closure));
    index.reached.push_back(std::move(boxes));
  }
  return index;
}

WorldPartition compute_worlds(const S5NF& f) {
  const std::size_t n = f.diamond_count();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 1u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return f.diamond(a).size() > f.diamond(b).size();
  });

  WorldPartition p;
  p.world_of.assign(n, 0);
  for (std::uint32_t j : order) {
    const LitSet& body = f.diamond(j);
    auto fits = [&](const std::vector<std::uint32_t>& world) {
      return std::all_of(world.begin(), world.end(),
                         [&](std::uint32_t k) { return is_subset(body, f.diamond(k)); });
    };
    auto it = std::find_if(p.worlds.begin(), p.worlds.end(), fits);
    if (it == p.worlds.end()) {
      p.worlds.push_back({j});
      p.world_of[j - 1] = j;
    } else {
      it->push_back(j);
      p.world_of[j - 1] = it->front();
    }
  }
  return p;
}

class CnfBuilder {
 public:
  CnfBuilder(const S5NF& f, EncodingKind kind) : f_(f) {
    inst_.kind_ = kind;
    inst_.source_ = std::make_shared<const S5NF>(f);
  }

  explicit CnfBuilder(const CnfInstance& base) : f_(*base.source()), inst_(base) {}

  int atom_at(Lit l, std::uint32_t world) {
    const int v = inst_.varmap_.get_or_add(
        {VarKind::world_atom, l.atom(), world},
        f_.atom(l.atom()).name + "(" + std::to_string(world) + ")");
    return l.positive() ? v : -v;
  }
  int box_select(std::uint32_t i) {
    return inst_.varmap_.get_or_add({VarKind::box_select, i, 0}, "b" + std::to_string(i));
  }
  int diamond_select(std::uint32_t j) {
    return inst_.varmap_.get_or_add({VarKind::diamond_select, j, 0}, "d" + std::to_string(j));
  }
  int implied(std::uint32_t j) {
    return inst_.varmap_.get_or_add({VarKind::implied, j, 0}, "implied" + std::to_string(j));
  }
  int support(std::uint32_t j) {
    return inst_.varmap_.get_or_add({VarKind::support, j, 0}, "sel" + std::to_string(j));
  }

  void add(Clause c) { inst_.clauses_.push_back(std::move(c)); }

  // Clause ~guard_1 | ... | body(world), with the guards given as literals.
  void add_box_at(std::vector<int> prefix, std::uint32_t box, std::uint32_t world) {
    for (Lit l : f_.box(box)) prefix.push_back(atom_at(l, world));
    add(std::move(prefix));
  }

  Enrichments& enrichments() { return inst_.enrichments_; }
  WorldPartition& partition() { return inst_.partition_; }
  std::optional<ReachIndex>& reach() { return inst_.reach_; }
  void mark_trivially_unsat() { inst_.trivially_unsat_ = true; }
  CnfInstance finish() { return std::move(inst_); }

 private:
  const S5NF& f_;
  CnfInstance inst_;
};

namespace {

struct BuildPlan {
  EncodingKind kind;
  bool merge_worlds;  // diamonds enrichment
};

CnfInstance build(const S5NF& f, const BuildPlan& plan) {
  CnfBuilder b(f, plan.kind);
  if (f.trivially_false()) {
    b.mark_trivially_unsat();
    b.add(Clause{});
    return b.finish();
  }

  const std::uint32_t m = static_cast<std::uint32_t>(f.box_count());
  const std::uint32_t n = static_cast<std::uint32_t>(f.diamond_count());
  b.partition() = plan.merge_worlds ? compute_worlds(f) : WorldPartition::identity(n);
  if (plan.kind == EncodingKind::reach) b.reach() = reach_sets(f);
  b.enrichments().diamonds = plan.merge_worlds;
  const WorldPartition& worlds = b.partition();
  const std::optional<ReachIndex>& reach = b.reach();

  for (const auto& clause : f.clauses()) {
    Clause c;
    for (const auto& d : clause.disjuncts) {
      switch (d.kind) {
        case S5LitKind::prop: c.push_back(b.atom_at(d.lit, 0)); break;
        case S5LitKind::box: c.push_back(b.box_select(d.id)); break;
        case S5LitKind::diamond: c.push_back(b.diamond_select(d.id)); break;
      }
    }
    b.add(std::move(c));
  }

  for (std::uint32_t i = 1; i <= m; ++i) {
    if (plan.kind == EncodingKind::he) {
      for (std::uint32_t w = 0; w <= n; ++w) b.add_box_at({-b.box_select(i)}, i, w);
      continue;
    }
    b.add_box_at({-b.box_select(i)}, i, 0);
    for (std::uint32_t j = 1; j <= n; ++j) {
      if (reach && !reach->reaches(j, i)) continue;
      b.add_box_at({-b.box_select(i), -b.diamond_select(j), b.implied(j)}, i, worlds.world(j));
    }
  }

  for (std::uint32_t j = 1; j <= n; ++j) {
    const LitSet& body = f.diamond(j);
    for (Lit l : body) b.add({-b.diamond_select(j), b.atom_at(l, worlds.world(j))});
    if (plan.kind == EncodingKind::he) continue;

    std::vector<std::uint32_t> supersets;
    if (plan.merge_worlds) {
      for (std::uint32_t i = 1; i <= n; ++i) {
        if (i != j && is_subset(body, f.diamond(i))) supersets.push_back(i);
      }
    }

    Clause backward{b.implied(j)};
    for (Lit l : body) backward.push_back(b.atom_at(~l, 0));
    if (supersets.empty()) {
      for (Lit l : body) b.add({-b.implied(j), b.atom_at(l, 0)});
      b.add(std::move(backward));
    } else {
      // implied_j <-> body(0) | d_i1 | ... | d_ik, with support_j -> body(0)
      // standing in for the conjunction in the forward direction.
      Clause forward{-b.implied(j)};
      for (std::uint32_t i : supersets) forward.push_back(b.diamond_select(i));
      forward.push_back(b.support(j));
      b.add(std::move(forward));
      for (Lit l : body) b.add({-b.support(j), b.atom_at(l, 0)});
      for (std::uint32_t i : supersets) b.add({b.implied(j), -b.diamond_select(i)});
      b.add(std::move(backward));
    }
    b.add({-b.implied(j), b.diamond_select(j)});
  }
  return b.finish();
}

void require_source(const CnfInstance& c, const S5NF& f) {
  if (c.source() == nullptr || !(*c.source() == f)) {
    throw std::invalid_argument("instance was not built from this normal form");
  }
}

}  // namespace

CnfInstance CnfInstance::from_clauses(std::size_t num_vars, std::vector<Clause> clauses) {
  CnfInstance inst;
  for (std::size_t v = 0; v < num_vars; ++v) inst.varmap_.add_anonymous();
  for (const auto& c : clauses) {
    for (int lit : c) {
      if (lit == 0) throw std::invalid_argument("literal 0 in clause");
      while (inst.varmap_.size() < static_cast<std::size_t>(std::abs(lit))) {
        inst.varmap_.add_anonymous();
      }
    }
  }
  inst.clauses_ = std::move(clauses);
  inst.trivially_unsat_ =
      std::any_of(inst.clauses_.begin(), inst.clauses_.end(), [](const Clause& c) { return c.empty(); });
  return inst;
}

CnfInstance encode_he(const S5NF& f) { return build(f, {EncodingKind::he, false}); }
CnfInstance encode_full(const S5NF& f) { return build(f, {EncodingKind::full, false}); }
CnfInstance encode_reach(const S5NF& f) { return build(f, {EncodingKind::reach, false}); }
CnfInstance apply_diamonds(const S5NF& f) { return build(f, {EncodingKind::reach, true}); }

CnfInstance apply_conflicts(const CnfInstance& c, const S5NF& f) {
  require_source(c, f);
  CnfBuilder b(c);
  b.enrichments().conflicts = true;
  if (c.trivially_unsat()) return b.finish();
  for (std::uint32_t i = 1; i <= f.box_count(); ++i) {
    const LitSet negated = complement(f.box(i));
    for (std::uint32_t j = 1; j <= f.diamond_count(); ++j) {
      if (is_subset(negated, f.diamond(j))) b.add({-b.box_select(i), -b.diamond_select(j)});
    }
  }
  return b.finish();
}

CnfInstance apply_boxes(const CnfInstance& c, const S5NF& f) {
  require_source(c, f);
  CnfBuilder b(c);
  b.enrichments().boxes = true;
  if (c.trivially_unsat()) return b.finish();
  for (std::uint32_t i = 1; i <= f.box_count(); ++i) {
    for (std::uint32_t j = 1; j <= f.box_count(); ++j) {
      if (i != j && is_subset(f.box(i), f.box(j))) b.add({-b.box_select(i), b.box_select(j)});
    }
  }
  return b.finish();
}

CnfInstance encode(const S5NF& f, const EncodingOptions& options) {
  if (options.kind == EncodingKind::he && options.enrichments.any()) {
    throw std::invalid_argument("enrichments need the full or reach encoding");
  }
  CnfInstance inst = build(f, {options.kind, options.enrichments.diamonds});
  if (options.enrichments.conflicts) inst = apply_conflicts(inst, f);
  if (options.enrichments.boxes) inst = apply_boxes(inst, f);
  return inst;
}

}  // namespace s5
