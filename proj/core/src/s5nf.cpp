#include "s5/s5nf.hpp"

#include <algorithm>
#include <stdexcept>

namespace s5 {

LitSet make_lit_set(std::vector<Lit> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return lits;
}

LitSet complement(const LitSet& s) {
  LitSet out;
  out.reserve(s.size());
  for (Lit l : s) out.push_back(~l);
  return make_lit_set(std::move(out));
}

bool is_subset(const LitSet& small, const LitSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool intersects(const LitSet& a, const LitSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

bool contains(const LitSet& s, Lit l) { return std::binary_search(s.begin(), s.end(), l); }

bool has_complementary_pair(const LitSet& s) {
  // Complementary literals have adjacent codes.
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1].atom() == s[i].atom()) return true;
  }
  return false;
}

LitSet set_union(const LitSet& a, const LitSet& b) {
  LitSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

bool is_prop_literal(const Formula& f) { return f.is_literal(); }

bool is_literal_list(const Formula& f, Op connective) {
  if (is_prop_literal(f)) return true;
  if (f.op() != connective) return false;
  return std::all_of(f.children().begin(), f.children().end(), is_prop_literal);
}

bool is_s5_literal(const Formula& f) {
  if (is_prop_literal(f)) return true;
  if (f.op() == Op::box) return is_literal_list(f.child(), Op::disjunction);
  if (f.op() == Op::diamond) return is_literal_list(f.child(), Op::conjunction);
  return false;
}

bool is_s5_clause(const Formula& f) {
  if (f.op() == Op::disjunction) {
    return std::all_of(f.children().begin(), f.children().end(), is_s5_literal);
  }
  return is_s5_literal(f);
}

// Literal expressed by atom name, before interning.
struct NamedLit {
  Atom atom;
  bool positive;
  friend bool operator==(const NamedLit& a, const NamedLit& b) {
    return a.atom.name == b.atom.name && a.positive == b.positive;
  }
};

NamedLit named_literal(const Formula& f) {
  if (f.is_atom()) return {f.atom_value(), true};
  return {f.child().atom_value(), false};
}

std::vector<NamedLit> literal_list(const Formula& f) {
  std::vector<NamedLit> out;
  if (f.is_literal()) {
    out.push_back(named_literal(f));
  } else {
    for (const auto& c : f.children()) out.push_back(named_literal(c));
  }
  return out;
}

struct RawLiteral {
  S5LitKind kind;
  std::vector<NamedLit> body;  // one element for prop literals
};

bool has_clash(const std::vector<NamedLit>& body) {
  for (std::size_t i = 0; i < body.size(); ++i) {
    for (std::size_t j = i + 1; j < body.size(); ++j) {
      if (body[i].atom.name == body[j].atom.name && body[i].positive != body[j].positive) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

bool is_s5nf(const Formula& f) {
  if (f.op() == Op::conjunction) {
    return std::all_of(f.children().begin(), f.children().end(), is_s5_clause);
  }
  return is_s5_clause(f);
}

S5NF S5NF::from_formula(const Formula& f) {
  if (!is_s5nf(f)) throw std::invalid_argument("formula is not in S5 normal form");

  std::vector<Formula> clause_formulas;
  if (f.op() == Op::conjunction) {
    clause_formulas.assign(f.children().begin(), f.children().end());
  } else {
    clause_formulas.push_back(f);
  }

  S5NF out;
  std::map<std::string, AtomId> atom_ids;
  auto intern = [&](const NamedLit& nl) {
    auto [it, inserted] = atom_ids.try_emplace(nl.atom.name, static_cast<AtomId>(out.atoms_.size()));
    if (inserted) out.atoms_.push_back(nl.atom);
    return Lit(it->second, nl.positive);
  };
  std::map<LitSet, std::uint32_t> box_ids;
  std::map<LitSet, std::uint32_t> diamond_ids;

  for (const auto& cf : clause_formulas) {
    std::vector<Formula> disjuncts;
    if (cf.op() == Op::disjunction) {
      disjuncts.assign(cf.children().begin(), cf.children().end());
    } else {
      disjuncts.push_back(cf);
    }

    std::vector<RawLiteral> raw;
    bool tautology = false;
    for (const auto& d : disjuncts) {
      if (d.is_literal()) {
        raw.push_back({S5LitKind::prop, {named_literal(d)}});
      } else if (d.op() == Op::box) {
        auto body = literal_list(d.child());
        if (has_clash(body)) {
          tautology = true;
          break;
        }
        raw.push_back({S5LitKind::box, std::move(body)});
      } else {
        auto body = literal_list(d.child());
        if (has_clash(body)) continue;  // unsatisfiable diamond
        raw.push_back({S5LitKind::diamond, std::move(body)});
      }
    }
    if (!tautology) {
      std::vector<NamedLit> props;
      for (const auto& r : raw) {
        if (r.kind == S5LitKind::prop) props.push_back(r.body.front());
      }
      tautology = has_clash(props);
    }
    if (tautology) continue;
    if (raw.empty()) {
      out.trivially_false_ = true;
      break;
    }

    S5Clause clause;
    for (const auto& r : raw) {
      S5Literal lit;
      if (r.kind == S5LitKind::prop) {
        lit = S5Literal::prop(intern(r.body.front()));
      } else {
        std::vector<Lit> body;
        for (const auto& nl : r.body) body.push_back(intern(nl));
        LitSet set = make_lit_set(std::move(body));
        auto& ids = r.kind == S5LitKind::box ? box_ids : diamond_ids;
        auto& sets = r.kind == S5LitKind::box ? out.boxes_ : out.diamonds_;
        auto [it, inserted] = ids.try_emplace(set, static_cast<std::uint32_t>(sets.size() + 1));
        if (inserted) sets.push_back(std::move(set));
        lit = r.kind == S5LitKind::box ? S5Literal::box(it->second)
                                       : S5Literal::diamond(it->second);
      }
      if (std::find(clause.disjuncts.begin(), clause.disjuncts.end(), lit) ==
          clause.disjuncts.end()) {
        clause.disjuncts.push_back(lit);
      }
    }
    clause.id = static_cast<std::uint32_t>(out.clauses_.size() + 1);
    out.clauses_.push_back(std::move(clause));
  }

  if (out.trivially_false_) {
    S5NF unsat;
    unsat.trivially_false_ = true;
    return unsat;
  }
  return out;
}

std::optional<AtomId> S5NF::find_atom(const std::string& name) const {
  for (AtomId i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].name == name) return i;
  }
  return std::nullopt;
}

Formula S5NF::literal_formula(Lit l) const {
  auto a = Formula::atom(atoms_.at(l.atom()));
  return l.positive() ? a : neg(a);
}

Formula S5NF::to_formula() const {
  if (trivially_false_) return falsum();
  if (clauses_.empty()) return verum();
  auto body = [this](const LitSet& s) {
    std::vector<Formula> parts;
    for (Lit l : s) parts.push_back(literal_formula(l));
    return parts;
  };
  std::vector<Formula> conjuncts;
  for (const auto& c : clauses_) {
    std::vector<Formula> disjuncts;
    for (const auto& d : c.disjuncts) {
      switch (d.kind) {
        case S5LitKind::prop: disjuncts.push_back(literal_formula(d.lit)); break;
        case S5LitKind::box: disjuncts.push_back(s5::box(disj(body(box(d.id))))); break;
        case S5LitKind::diamond: disjuncts.push_back(dia(conj(body(diamond(d.id))))); break;
      }
    }
    conjuncts.push_back(disj(std::move(disjuncts)));
  }
  return conj(std::move(conjuncts));
}

LitSet lits(const S5NF& f, const S5Literal& l) {
  switch (l.kind) {
    case S5LitKind::prop: return {l.lit};
    case S5LitKind::box: return f.box(l.id);
    case S5LitKind::diamond: return f.diamond(l.id);
  }
  return {};
}

LitSet lits(const S5NF& f, const S5Clause& c) {
  LitSet out;
  for (const auto& d : c.disjuncts) out = set_union(out, lits(f, d));
  return out;
}

LitSet lits(const S5NF& f) {
  LitSet out;
  for (const auto& c : f.clauses()) out = set_union(out, lits(f, c));
  return out;
}

std::string to_string(const S5NF& f, Lit l) {
  return (l.positive() ? "" : "~") + f.atom(l.atom()).name;
}

}  // namespace s5
