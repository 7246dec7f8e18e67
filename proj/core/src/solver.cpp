#include "s5/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace s5 {

bool Outcome::value(int lit) const {
  const auto var = static_cast<std::size_t>(std::abs(lit));
  if (var == 0 || var >= model.size()) throw std::out_of_range("literal outside the model");
  return model[var] == (lit > 0);
}

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::sat: return "SAT";
    case SolveStatus::unsat: return "UNSAT";
    case SolveStatus::timed_out: return "TIMEOUT";
  }
  return "?";
}

bool satisfies(const std::vector<bool>& model, const std::vector<Clause>& clauses) {
  return std::all_of(clauses.begin(), clauses.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](int lit) {
      const auto var = static_cast<std::size_t>(std::abs(lit));
      return var < model.size() && model[var] == (lit > 0);
    });
  });
}

namespace {

using Clock = std::chrono::steady_clock;

// Internal literals are 2 * var + sign with 0-based variables.
constexpr int lit_var(int l) { return l >> 1; }
constexpr std::int8_t kUndef = -1;

double luby(double base, std::uint64_t x) {
  std::uint64_t size = 1;
  int seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::pow(base, seq);
}

// Max-heap of variables by activity; ties go to the lower variable.
class VarHeap {
 public:
  explicit VarHeap(const std::vector<double>& activity)
      : activity_(activity), index_(activity.size(), -1) {}

  bool empty() const { return heap_.empty(); }
  bool contains(int v) const { return index_[v] >= 0; }

  void insert(int v) {
    if (contains(v)) return;
    index_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    up(index_[v]);
  }

  void increased(int v) {
    if (contains(v)) up(index_[v]);
  }

  int pop() {
    const int top = heap_.front();
    heap_.front() = heap_.back();
    index_[heap_.front()] = 0;
    heap_.pop_back();
    index_[top] = -1;
    if (!heap_.empty()) down(0);
    return top;
  }

 private:
  bool before(int a, int b) const {
    return activity_[a] > activity_[b] || (activity_[a] == activity_[b] && a < b);
  }

  void up(int i) {
    const int v = heap_[i];
    while (i > 0) {
      const int parent = (i - 1) / 2;
      if (!before(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      index_[heap_[i]] = i;
      i = parent;
    }
    heap_[i] = v;
    index_[v] = i;
  }

  void down(int i) {
    const int v = heap_[i];
    const int n = static_cast<int>(heap_.size());
    for (;;) {
      int child = 2 * i + 1;
      if (child >= n) break;
      if (child + 1 < n && before(heap_[child + 1], heap_[child])) ++child;
      if (!before(heap_[child], v)) break;
      heap_[i] = heap_[child];
      index_[heap_[i]] = i;
      i = child;
    }
    heap_[i] = v;
    index_[v] = i;
  }

  const std::vector<double>& activity_;
  std::vector<int> heap_;
  std::vector<int> index_;
};

struct StoredClause {
  std::vector<int> lits;
  bool learnt = false;
  double activity = 0;
};

class Engine {
 public:
  Engine(std::size_t num_vars, const std::vector<Clause>& clauses, const SolveOptions& options)
      : options_(options),
        n_(static_cast<int>(num_vars)),
        value_(num_vars, kUndef),
        level_(num_vars, 0),
        reason_(num_vars, -1),
        polarity_(num_vars, false),
        seen_(num_vars, 0),
        activity_(num_vars, 0.0),
        heap_(activity_),
        watches_(2 * num_vars) {
    if (options_.budget) deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(*options_.budget);
    std::vector<int> units;
    for (const auto& c : clauses) {
      std::vector<int> lits;
      lits.reserve(c.size());
      for (int d : c) {
        if (d == 0 || std::abs(d) > n_) throw std::invalid_argument("clause literal out of range");
        lits.push_back(2 * (std::abs(d) - 1) + (d < 0 ? 1 : 0));
      }
      std::sort(lits.begin(), lits.end());
      lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
      bool tautology = false;
      for (std::size_t k = 1; k < lits.size(); ++k) {
        if (lits[k] == (lits[k - 1] ^ 1)) tautology = true;
      }
      if (tautology) continue;
      if (lits.empty()) {
        ok_ = false;
      } else if (lits.size() == 1) {
        units.push_back(lits[0]);
      } else {
        attach(StoredClause{std::move(lits)});
      }
    }
    original_count_ = clauses_.size();
    for (int l : units) {
      const auto v = lit_value(l);
      if (v == 0) ok_ = false;
      if (v == kUndef) enqueue(l, -1);
    }
    for (int v = 0; v < n_; ++v) heap_.insert(v);
  }

  SolveStatus run() {
    if (!ok_ || propagate() >= 0) return SolveStatus::unsat;
    return options_.algorithm == Algorithm::cdcl ? cdcl() : dpll();
  }

  std::vector<bool> model() const {
    std::vector<bool> m(static_cast<std::size_t>(n_) + 1, false);
    for (int v = 0; v < n_; ++v) m[v + 1] = value_[v] == 1;
    return m;
  }

  SolverStats stats;

 private:
  int level() const { return static_cast<int>(trail_lim_.size()); }

  std::int8_t lit_value(int l) const {
    const std::int8_t v = value_[lit_var(l)];
    return v == kUndef ? kUndef : static_cast<std::int8_t>(v ^ (l & 1));
  }

  void attach(StoredClause c) {
    const int index = static_cast<int>(clauses_.size());
    watches_[c.lits[0]].push_back(index);
    watches_[c.lits[1]].push_back(index);
    clauses_.push_back(std::move(c));
  }

  void enqueue(int l, int reason) {
    const int v = lit_var(l);
    value_[v] = static_cast<std::int8_t>((l & 1) ^ 1);
    level_[v] = level();
    reason_[v] = reason;
    trail_.push_back(l);
  }

  void new_level() {
    trail_lim_.push_back(static_cast<int>(trail_.size()));
    flipped_.push_back(false);
  }

  // Returns the index of a conflicting clause, or -1.
  int propagate() {
    int conflict = -1;
    while (qhead_ < trail_.size()) {
      const int false_lit = trail_[qhead_++] ^ 1;
      ++stats.propagations;
      auto& ws = watches_[false_lit];
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < ws.size()) {
        const int ci = ws[i++];
        auto& lits = clauses_[ci].lits;
        if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
        if (lit_value(lits[0]) == 1) {
          ws[j++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < lits.size(); ++k) {
          if (lit_value(lits[k]) != 0) {
            std::swap(lits[1], lits[k]);
            watches_[lits[1]].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = ci;
        if (lit_value(lits[0]) == 0) {
          conflict = ci;
          qhead_ = trail_.size();
          while (i < ws.size()) ws[j++] = ws[i++];
        } else {
          enqueue(lits[0], ci);
        }
      }
      ws.resize(j);
      if (conflict >= 0) break;
    }
    return conflict;
  }

  void backtrack(int target) {
    if (level() <= target) return;
    for (std::size_t k = trail_.size(); k-- > static_cast<std::size_t>(trail_lim_[target]);) {
      const int v = lit_var(trail_[k]);
      polarity_[v] = value_[v] == 1;
      value_[v] = kUndef;
      reason_[v] = -1;
      heap_.insert(v);
    }
    trail_.resize(static_cast<std::size_t>(trail_lim_[target]));
    trail_lim_.resize(static_cast<std::size_t>(target));
    flipped_.resize(static_cast<std::size_t>(target));
    qhead_ = trail_.size();
  }

  void bump_var(int v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
      for (auto& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
    heap_.increased(v);
  }

  void bump_clause(StoredClause& c) {
    c.activity += cla_inc_;
    if (c.activity > 1e20) {
      for (auto& d : clauses_) d.activity *= 1e-20;
      cla_inc_ *= 1e-20;
    }
  }

  // First-UIP learning; returns the learnt clause with the asserting
  // literal first and the highest remaining level second.
  std::vector<int> analyze(int conflict, int& backjump) {
    std::vector<int> learnt{-1};
    int pending = 0;
    int p = -1;
    std::size_t idx = trail_.size();
    do {
      StoredClause& c = clauses_[conflict];
      if (c.learnt) bump_clause(c);
      for (int q : c.lits) {
        const int v = lit_var(q);
        if (p >= 0 && v == lit_var(p)) continue;
        if (seen_[v] || level_[v] == 0) continue;
        seen_[v] = 1;
        bump_var(v);
        if (level_[v] >= level()) {
          ++pending;
        } else {
          learnt.push_back(q);
        }
      }
      do {
        --idx;
      } while (!seen_[lit_var(trail_[idx])]);
      p = trail_[idx];
      conflict = reason_[lit_var(p)];
      seen_[lit_var(p)] = 0;
      --pending;
    } while (pending > 0);
    learnt[0] = p ^ 1;

    for (std::size_t k = 1; k < learnt.size(); ++k) seen_[lit_var(learnt[k])] = 0;

    backjump = 0;
    if (learnt.size() > 1) {
      std::size_t best = 1;
      for (std::size_t k = 2; k < learnt.size(); ++k) {
        if (level_[lit_var(learnt[k])] > level_[lit_var(learnt[best])]) best = k;
      }
      std::swap(learnt[1], learnt[best]);
      backjump = level_[lit_var(learnt[1])];
    }
    return learnt;
  }

  // At level 0 after propagation: drops satisfied clauses, strips false
  // literals, forgets the less active half of the learnt clauses and
  // rebuilds the watch lists.
  void reduce() {
    std::vector<std::size_t> learnt;
    for (std::size_t k = original_count_; k < clauses_.size(); ++k) {
      if (clauses_[k].lits.size() > 2) learnt.push_back(k);
    }
    std::sort(learnt.begin(), learnt.end(), [&](std::size_t a, std::size_t b) {
      return clauses_[a].activity < clauses_[b].activity;
    });
    std::vector<bool> drop(clauses_.size(), false);
    for (std::size_t k = 0; k < learnt.size() / 2; ++k) drop[learnt[k]] = true;

    std::vector<StoredClause> kept;
    std::size_t kept_original = 0;
    for (std::size_t k = 0; k < clauses_.size(); ++k) {
      if (drop[k]) continue;
      auto& lits = clauses_[k].lits;
      if (std::any_of(lits.begin(), lits.end(), [&](int l) { return lit_value(l) == 1; })) continue;
      lits.erase(std::remove_if(lits.begin(), lits.end(), [&](int l) { return lit_value(l) == 0; }),
                 lits.end());
      if (k < original_count_) ++kept_original;
      kept.push_back(std::move(clauses_[k]));
    }
    for (int v = 0; v < n_; ++v) reason_[v] = -1;
    for (auto& w : watches_) w.clear();
    clauses_.clear();
    original_count_ = kept_original;
    for (auto& c : kept) {
      if (c.lits.size() >= 2) {
        attach(std::move(c));
      } else if (c.lits.empty()) {
        ok_ = false;
      } else if (lit_value(c.lits[0]) == kUndef) {
        enqueue(c.lits[0], -1);
      }
    }
  }

  bool out_of_time() {
    if (!deadline_) return false;
    if (++clock_checks_ % 128 != 0) return false;
    return Clock::now() >= *deadline_;
  }

  SolveStatus cdcl() {
    std::uint64_t restarts = 0;
    std::uint64_t since_restart = 0;
    auto restart_limit = static_cast<std::uint64_t>(luby(2, 0) * options_.restart_base);
    double max_learnts = std::max<double>(1000.0, static_cast<double>(original_count_) / 3.0);

    for (;;) {
      const int conflict = propagate();
      if (conflict >= 0) {
        ++stats.conflicts;
        ++since_restart;
        if (level() == 0) return SolveStatus::unsat;
        int backjump = 0;
        std::vector<int> learnt = analyze(conflict, backjump);
        backtrack(backjump);
        if (learnt.size() == 1) {
          enqueue(learnt[0], -1);
        } else {
          const int index = static_cast<int>(clauses_.size());
          StoredClause c{std::move(learnt), true, 0.0};
          attach(std::move(c));
          bump_clause(clauses_.back());
          enqueue(clauses_.back().lits[0], index);
        }
        ++stats.learned;
        var_inc_ /= 0.95;
        cla_inc_ /= 0.999;
        if (out_of_time()) return SolveStatus::timed_out;
        continue;
      }

      if (since_restart >= restart_limit) {
        backtrack(0);
        ++stats.restarts;
        since_restart = 0;
        restart_limit = static_cast<std::uint64_t>(luby(2, ++restarts) * options_.restart_base);
        if (static_cast<double>(clauses_.size() - original_count_) > max_learnts) {
          reduce();
          if (!ok_) return SolveStatus::unsat;
          max_learnts *= 1.1;
        }
        continue;
      }

      if (out_of_time()) return SolveStatus::timed_out;
      int next = -1;
      while (!heap_.empty()) {
        const int v = heap_.pop();
        if (value_[v] == kUndef) {
          next = v;
          break;
        }
      }
      if (next < 0) return SolveStatus::sat;
      ++stats.decisions;
      new_level();
      enqueue(2 * next + (polarity_[next] ? 0 : 1), -1);
    }
  }

  SolveStatus dpll() {
    for (;;) {
      if (propagate() >= 0) {
        ++stats.conflicts;
        int lvl = level();
        while (lvl > 0 && flipped_[static_cast<std::size_t>(lvl - 1)]) --lvl;
        if (lvl == 0) return SolveStatus::unsat;
        const int decision = trail_[static_cast<std::size_t>(trail_lim_[lvl - 1])];
        backtrack(lvl - 1);
        new_level();
        flipped_.back() = true;
        enqueue(decision ^ 1, -1);
        if (out_of_time()) return SolveStatus::timed_out;
        continue;
      }
      if (out_of_time()) return SolveStatus::timed_out;
      int next = -1;
      for (int v = 0; v < n_; ++v) {
        if (value_[v] == kUndef) {
          next = v;
          break;
        }
      }
      if (next < 0) return SolveStatus::sat;
      ++stats.decisions;
      new_level();
      enqueue(2 * next + 1, -1);
    }
  }

  const SolveOptions& options_;
  int n_;
  bool ok_ = true;
  std::vector<std::int8_t> value_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<bool> polarity_;
  std::vector<char> seen_;
  std::vector<double> activity_;
  VarHeap heap_;
  std::vector<std::vector<int>> watches_;
  std::vector<StoredClause> clauses_;
  std::size_t original_count_ = 0;
  std::vector<int> trail_;
  std::vector<int> trail_lim_;
  std::vector<bool> flipped_;
  std::size_t qhead_ = 0;
  double var_inc_ = 1.0;
  double cla_inc_ = 1.0;
  std::optional<Clock::time_point> deadline_;
  std::uint64_t clock_checks_ = 0;
};

}  // namespace

Outcome solve(std::size_t num_vars, const std::vector<Clause>& clauses, const SolveOptions& options) {
  Engine engine(num_vars, clauses, options);
  Outcome out;
  out.status = engine.run();
  out.stats = engine.stats;
  if (out.sat()) {
    out.model = engine.model();
    if (!satisfies(out.model, clauses)) {
      throw VerificationError("solver returned an assignment that falsifies a clause");
    }
  }
  return out;
}

Outcome solve(const CnfInstance& instance, const SolveOptions& options) {
  return solve(instance.num_vars(), instance.clauses(), options);
}

}  // namespace s5
