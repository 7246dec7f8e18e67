#include "s5/normalizer.hpp"

#include <deque>
#include <stdexcept>
#include <vector>

#include "s5/parser.hpp"

namespace s5 {

std::string FreshGen::prefix() { return std::string(kReservedPrefix) + "n"; }

Atom FreshGen::next() {
  ++counter_;
  return Atom{prefix() + std::to_string(counter_), AtomOrigin::fresh, counter_};
}

namespace {

Formula nnf(const Formula& f, bool positive) {
  switch (f.op()) {
    case Op::atom:
      return positive ? f : neg(f);
    case Op::negation:
      return nnf(f.child(), !positive);
    case Op::conjunction:
    case Op::disjunction: {
      std::vector<Formula> parts;
      parts.reserve(f.children().size());
      for (const auto& c : f.children()) parts.push_back(nnf(c, positive));
      const bool as_conj = (f.op() == Op::conjunction) == positive;
      return as_conj ? conj(std::move(parts)) : disj(std::move(parts));
    }
    case Op::box:
      return positive ? box(nnf(f.child(), true)) : dia(nnf(f.child(), false));
    case Op::diamond:
      return positive ? dia(nnf(f.child(), true)) : box(nnf(f.child(), false));
    case Op::implication:
    case Op::equivalence:
      break;
  }
  throw std::logic_error("nnf: unexpected connective");
}

// Applies a modal operator to a body that is already in pushed form and
// returns the pushed form of the result.
Formula apply_modal(Op op, const Formula& body) {
  if (body.is_modal()) return body;

  const Op distributes_over = op == Op::box ? Op::conjunction : Op::disjunction;
  const Op lifts_from = op == Op::box ? Op::disjunction : Op::conjunction;

  if (body.op() == distributes_over) {
    std::vector<Formula> parts;
    for (const auto& c : body.children()) parts.push_back(apply_modal(op, c));
    return op == Op::box ? conj(std::move(parts)) : disj(std::move(parts));
  }

  if (body.op() == lifts_from) {
    std::vector<Formula> plain;
    std::vector<Formula> modal;
    for (const auto& c : body.children()) (c.is_modal() ? modal : plain).push_back(c);
    if (!modal.empty()) {
      std::vector<Formula> parts;
      if (!plain.empty()) {
        Formula rest = op == Op::box ? disj(std::move(plain)) : conj(std::move(plain));
        parts.push_back(apply_modal(op, rest));
      }
      parts.insert(parts.end(), modal.begin(), modal.end());
      return op == Op::box ? disj(std::move(parts)) : conj(std::move(parts));
    }
  }

  return op == Op::box ? box(body) : dia(body);
}

Formula push(const Formula& f) {
  switch (f.op()) {
    case Op::atom:
    case Op::negation:
      return f;
    case Op::conjunction:
    case Op::disjunction: {
      std::vector<Formula> parts;
      parts.reserve(f.children().size());
      for (const auto& c : f.children()) parts.push_back(push(c));
      return f.op() == Op::conjunction ? conj(std::move(parts)) : disj(std::move(parts));
    }
    case Op::box:
    case Op::diamond:
      return apply_modal(f.op(), push(f.child()));
    case Op::implication:
    case Op::equivalence:
      break;
  }
  throw std::logic_error("push_modalities: input is not in negation normal form");
}

class Namer {
 public:
  explicit Namer(FreshGen& gen) : gen_(gen) {}

  Formula run(const Formula& f) {
    top(f);
    while (!pending_.empty()) {
      Formula def = pending_.front();
      pending_.pop_front();
      top(push(def));
    }
    return conj(std::move(clauses_));
  }

 private:
  void top(const Formula& f) {
    if (f.op() == Op::conjunction) {
      for (const auto& c : f.children()) top(c);
      return;
    }
    clauses_.push_back(clause(f));
  }

  Formula clause(const Formula& f) {
    std::vector<Formula> parts;
    if (f.op() == Op::disjunction) {
      for (const auto& c : f.children()) parts.push_back(s5_literal(c));
    } else {
      parts.push_back(s5_literal(f));
    }
    return disj(std::move(parts));
  }

  Formula s5_literal(const Formula& f) {
    if (f.is_literal()) return f;
    switch (f.op()) {
      case Op::conjunction:
        return name(f);
      case Op::box:
        return box(modal_body(f.child(), Op::disjunction));
      case Op::diamond:
        return dia(modal_body(f.child(), Op::conjunction));
      default:
        throw std::logic_error("name_nested: unexpected " + std::string(op_name(f.op())) +
                               " in clause position");
    }
  }

  // Body of a box (a disjunction of literals) or of a dia (a conjunction of
  // literals); any other member is named.
  Formula modal_body(const Formula& body, Op connective) {
    std::vector<Formula> members;
    if (body.op() == connective) {
      members.assign(body.children().begin(), body.children().end());
    } else {
      members.push_back(body);
    }
    std::vector<Formula> out;
    for (const auto& m : members) {
      if (m.is_literal()) {
        out.push_back(m);
      } else if (m.op() == Op::conjunction || m.op() == Op::disjunction) {
        out.push_back(name(m));
      } else {
        throw std::logic_error("name_nested: modal operator left inside a modal body");
      }
    }
    return connective == Op::disjunction ? disj(std::move(out)) : conj(std::move(out));
  }

  Formula name(const Formula& g) {
    if (auto it = cache_.find(g); it != cache_.end()) return it->second;
    Formula p = Formula::atom(gen_.next());
    cache_.emplace(g, p);
    if (g.op() == Op::conjunction) {
      for (const auto& c : g.children()) pending_.push_back(box(disj({neg(p), c})));
    } else {
      pending_.push_back(box(disj({neg(p), g})));
    }
    return p;
  }

  FreshGen& gen_;
  std::map<Formula, Formula> cache_;
  std::deque<Formula> pending_;
  std::vector<Formula> clauses_;
};

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(desugar(f), true); }

Formula push_modalities(const Formula& f) { return push(f); }

Formula name_nested(const Formula& f, FreshGen& gen) {
  if (is_s5nf(f)) return f;
  Namer namer(gen);
  return namer.run(push(f));
}

Formula normal_form_formula(const Formula& f, FreshGen& gen) {
  return name_nested(push_modalities(to_nnf(f)), gen);
}

S5NF normalize(const Formula& f) {
  FreshGen gen;
  return S5NF::from_formula(normal_form_formula(f, gen));
}

}  // namespace s5
