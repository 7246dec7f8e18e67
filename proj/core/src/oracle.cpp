#include "s5/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace s5 {

namespace {

// Formula flattened into postorder; children always precede parents and
// identical subformulas share one node.
struct Node {
  Op op;
  std::vector<int> kids;
  int atom = -1;
};

struct Compiled {
  std::vector<Node> nodes;
  std::vector<std::string> atoms;
  std::vector<int> modal;  // modal node indices, postorder
  int root = -1;
};

int compile_into(const Formula& f, Compiled& out, const std::map<std::string, int>& atom_index,
                 std::map<Formula, int>& seen) {
  if (auto it = seen.find(f); it != seen.end()) return it->second;
  Node n{f.op(), {}, -1};
  if (f.is_atom()) {
    n.atom = atom_index.at(f.atom_value().name);
  } else {
    for (const auto& c : f.children()) n.kids.push_back(compile_into(c, out, atom_index, seen));
  }
  out.nodes.push_back(std::move(n));
  const int id = static_cast<int>(out.nodes.size()) - 1;
  if (f.is_modal()) out.modal.push_back(id);
  seen.emplace(f, id);
  return id;
}

Compiled compile(const Formula& f) {
  Compiled out;
  std::map<std::string, int> index;
  for (const auto& a : atoms_of(f)) {
    index.emplace(a.name, static_cast<int>(out.atoms.size()));
    out.atoms.push_back(a.name);
  }
  std::map<Formula, int> seen;
  out.root = compile_into(f, out, index, seen);
  return out;
}

void check_limits(const Compiled& c, const OracleLimits& limits) {
  if (c.atoms.size() > limits.max_atoms) {
    throw OracleLimitError("oracle limit: " + std::to_string(c.atoms.size()) + " atoms (max " +
                           std::to_string(limits.max_atoms) + ")");
  }
  if (c.modal.size() > limits.max_modal) {
    throw OracleLimitError("oracle limit: " + std::to_string(c.modal.size()) + " modal operators (max " +
                           std::to_string(limits.max_modal) + ")");
  }
}

World world_of(std::uint64_t interpretation, const std::vector<std::string>& atoms) {
  World w;
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    if ((interpretation >> a) & 1u) w.insert(atoms[a]);
  }
  return w;
}

std::size_t diamonds_at(const Formula& f, bool positive) {
  switch (f.op()) {
    case Op::atom: return 0;
    case Op::negation: return diamonds_at(f.child(), !positive);
    case Op::conjunction:
    case Op::disjunction: {
      std::size_t n = 0;
      for (const auto& c : f.children()) n += diamonds_at(c, positive);
      return n;
    }
    case Op::implication: return diamonds_at(f.child(0), !positive) + diamonds_at(f.child(1), positive);
    case Op::equivalence: {
      std::size_t n = 0;
      for (const auto& c : f.children()) n += diamonds_at(c, true) + diamonds_at(c, false);
      return n;
    }
    case Op::box: return (positive ? 0 : 1) + diamonds_at(f.child(), positive);
    case Op::diamond: return (positive ? 1 : 0) + diamonds_at(f.child(), positive);
  }
  return 0;
}

// --- world-set enumeration -------------------------------------------------

// Truth masks over the k chosen worlds (bit i = world i).
std::uint64_t eval_worlds(const Compiled& c, const std::vector<std::uint64_t>& atom_masks, std::uint64_t full,
                          std::vector<std::uint64_t>& scratch) {
  for (std::size_t id = 0; id < c.nodes.size(); ++id) {
    const Node& n = c.nodes[id];
    std::uint64_t m = 0;
    switch (n.op) {
      case Op::atom: m = atom_masks[static_cast<std::size_t>(n.atom)]; break;
      case Op::negation: m = ~scratch[n.kids[0]] & full; break;
      case Op::conjunction:
        m = full;
        for (int k : n.kids) m &= scratch[k];
        break;
      case Op::disjunction:
        for (int k : n.kids) m |= scratch[k];
        break;
      case Op::implication: m = (~scratch[n.kids[0]] | scratch[n.kids[1]]) & full; break;
      case Op::equivalence: m = ~(scratch[n.kids[0]] ^ scratch[n.kids[1]]) & full; break;
      case Op::box: m = scratch[n.kids[0]] == full ? full : 0; break;
      case Op::diamond: m = scratch[n.kids[0]] != 0 ? full : 0; break;
    }
    scratch[id] = m;
  }
  return scratch[static_cast<std::size_t>(c.root)];
}

// --- valuation search ------------------------------------------------------

// Bit set over all interpretations of the atoms.
class Bits {
 public:
  Bits() = default;
  Bits(std::size_t bits, bool value)
      : words_((bits + 63) / 64, value ? ~std::uint64_t{0} : 0), bits_(bits) {
    trim();
  }

  static Bits atom(std::size_t atom, std::size_t bits) {
    Bits b(bits, false);
    for (std::size_t i = 0; i < bits; ++i) {
      if ((i >> atom) & 1u) b.words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return b;
  }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bits operator~() const {
    Bits b = *this;
    for (auto& w : b.words_) w = ~w;
    b.trim();
    return b;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator^(Bits a, const Bits& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) a.words_[i] ^= b.words_[i];
    return a;
  }

  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  bool all() const { return !(~*this).any(); }

  std::uint64_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) return i * 64 + static_cast<std::uint64_t>(std::countr_zero(words_[i]));
    }
    throw std::logic_error("first() on an empty set");
  }

 private:
  void trim() {
    if (bits_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
  }

  std::vector<std::uint64_t> words_;
  std::size_t bits_ = 0;
};

class ValuationSearch {
 public:
  explicit ValuationSearch(const Compiled& c)
      : c_(c),
        bits_(std::size_t{1} << c.atoms.size()),
        values_(c.nodes.size(), kUnknown),
        lo_(c.nodes.size()),
        hi_(c.nodes.size()) {
    for (std::size_t a = 0; a < c.atoms.size(); ++a) atom_bits_.push_back(Bits::atom(a, bits_));
  }

  std::optional<KripkeModel> run() {
    if (!search(0, Bits(bits_, true))) return std::nullopt;
    return model_;
  }

 private:
  static constexpr std::int8_t kUnknown = -1;

  // Three-valued truth sets under the current partial choice: lo_ holds
  // where a node is true whatever the undecided modal nodes become, hi_
  // where it can still be true. Nodes are in postorder, so one pass works.
  void evaluate() {
    for (std::size_t id = 0; id < c_.nodes.size(); ++id) {
      const Node& n = c_.nodes[id];
      auto lo = [&](int k) -> const Bits& { return lo_[static_cast<std::size_t>(k)]; };
      auto hi = [&](int k) -> const Bits& { return hi_[static_cast<std::size_t>(k)]; };
      switch (n.op) {
        case Op::atom:
          lo_[id] = hi_[id] = atom_bits_[static_cast<std::size_t>(n.atom)];
          break;
        case Op::negation:
          lo_[id] = ~hi(n.kids[0]);
          hi_[id] = ~lo(n.kids[0]);
          break;
        case Op::conjunction:
        case Op::disjunction: {
          const bool all = n.op == Op::conjunction;
          lo_[id] = hi_[id] = Bits(bits_, all);
          for (int k : n.kids) {
            if (all) {
              lo_[id] &= lo(k);
              hi_[id] &= hi(k);
            } else {
              lo_[id] |= lo(k);
              hi_[id] |= hi(k);
            }
          }
          break;
        }
        case Op::implication:
          lo_[id] = ~hi(n.kids[0]) | lo(n.kids[1]);
          hi_[id] = ~lo(n.kids[0]) | hi(n.kids[1]);
          break;
        case Op::equivalence: {
          const Bits &a_lo = lo(n.kids[0]), &a_hi = hi(n.kids[0]);
          const Bits &b_lo = lo(n.kids[1]), &b_hi = hi(n.kids[1]);
          lo_[id] = (a_lo & b_lo) | (~a_hi & ~b_hi);
          hi_[id] = ~((a_lo & ~b_hi) | (~a_hi & b_lo));
          break;
        }
        case Op::box:
        case Op::diamond:
          if (values_[id] == kUnknown) {
            lo_[id] = Bits(bits_, false);
            hi_[id] = Bits(bits_, true);
          } else {
            lo_[id] = hi_[id] = Bits(bits_, values_[id] == 1);
          }
          break;
      }
    }
  }

  // Modal nodes are decided innermost first, so the body of node k is
  // already two-valued when k is reached.
  bool search(std::size_t k, const Bits& allowed) {
    evaluate();
    // Some allowed world must still be able to satisfy the whole formula.
    if (!(hi_[static_cast<std::size_t>(c_.root)] & allowed).any()) return false;
    if (k == c_.modal.size()) return accept(allowed);

    const auto id = static_cast<std::size_t>(c_.modal[k]);
    const bool is_box = c_.nodes[id].op == Op::box;
    const Bits body = lo_[static_cast<std::size_t>(c_.nodes[id].kids[0])];

    for (bool value : {true, false}) {
      values_[id] = value ? 1 : 0;
      // Universal demands shrink the allowed worlds; existential ones need a
      // witness among them.
      const bool universal = is_box == value;
      const Bits shown = value ? body : ~body;
      if (universal) {
        Bits next = allowed & shown;
        // Every earlier existential demand must keep a witness.
        const bool viable = next.any() && std::all_of(demands_.begin(), demands_.end(),
                                                      [&](const Bits& d) { return (next & d).any(); });
        if (viable && search(k + 1, next)) return true;
      } else if ((allowed & shown).any()) {
        demands_.push_back(shown);
        if (search(k + 1, allowed)) return true;
        demands_.pop_back();
      }
    }
    values_[id] = kUnknown;
    return false;
  }

  bool accept(const Bits& allowed) {
    const Bits start = lo_[static_cast<std::size_t>(c_.root)] & allowed;
    if (!start.any()) return false;
    std::vector<std::uint64_t> chosen{start.first()};
    for (const auto& d : demands_) {
      const Bits witness = d & allowed;
      if (!witness.any()) return false;
      chosen.push_back(witness.first());
    }
    std::vector<World> worlds;
    for (auto i : chosen) worlds.push_back(world_of(i, c_.atoms));
    model_ = KripkeModel(std::move(worlds)).deduplicated();
    return true;
  }

  const Compiled& c_;
  std::size_t bits_;
  std::vector<Bits> atom_bits_;
  std::vector<std::int8_t> values_;  // modal nodes: 1, 0 or kUnknown
  std::vector<Bits> lo_;
  std::vector<Bits> hi_;
  std::vector<Bits> demands_;
  std::optional<KripkeModel> model_;
};

void confirm(const Formula& f, const OracleVerdict& v) {
  if (v.sat && !verify(f, *v.model)) throw std::logic_error("oracle produced a model that does not verify");
}

}  // namespace

std::size_t world_bound(const Formula& f) { return 1 + diamonds_at(f, true); }

OracleVerdict brute_force(const Formula& f, std::optional<std::size_t> max_worlds, const OracleLimits& limits) {
  const Compiled c = compile(f);
  check_limits(c, limits);
  const std::uint64_t universe = std::uint64_t{1} << c.atoms.size();
  const std::size_t bound =
      std::min<std::size_t>(max_worlds.value_or(world_bound(f)), static_cast<std::size_t>(universe));

  OracleVerdict verdict;
  std::vector<std::uint64_t> scratch(c.nodes.size());
  std::vector<std::uint64_t> atom_masks(c.atoms.size());
  for (std::size_t k = 1; k <= bound; ++k) {
    verdict.explored_bound = k;
    const std::uint64_t full = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    // Combinations pick[0] < ... < pick[k-1] of interpretations.
    std::vector<std::uint64_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      for (std::size_t a = 0; a < c.atoms.size(); ++a) {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < k; ++i) m |= ((pick[i] >> a) & 1u) << i;
        atom_masks[a] = m;
      }
      const std::uint64_t holds = eval_worlds(c, atom_masks, full, scratch);
      if (holds != 0) {
        const auto designated = static_cast<std::size_t>(std::countr_zero(holds));
        std::vector<World> worlds{world_of(pick[designated], c.atoms)};
        for (std::size_t i = 0; i < k; ++i) {
          if (i != designated) worlds.push_back(world_of(pick[i], c.atoms));
        }
        verdict.sat = true;
        verdict.model = KripkeModel(std::move(worlds));
        confirm(f, verdict);
        return verdict;
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == universe - k + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return verdict;
}

OracleVerdict valuation_search(const Formula& f, const OracleLimits& limits) {
  const Compiled c = compile(f);
  check_limits(c, limits);
  ValuationSearch search(c);
  OracleVerdict verdict;
  verdict.model = search.run();
  verdict.sat = verdict.model.has_value();
  verdict.explored_bound = verdict.sat ? verdict.model->size() : world_bound(f);
  confirm(f, verdict);
  return verdict;
}

OracleVerdict decide(const Formula& f) { return valuation_search(f); }

}  // namespace s5
