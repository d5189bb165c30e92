#include "ordram/sat/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>

namespace ordram::sat {

const char* to_string(Status s) {
  switch (s) {
    case Status::Satisfiable: return "SAT";
    case Status::Unsatisfiable: return "UNSAT";
    case Status::Unknown: return "UNKNOWN";
  }
  return "?";
}

Budget Budget::unlimited() {
  return {1e300, UINT64_MAX};
}

namespace {

// Internal literal: 2 * var + negated, var 0-based.
using Lit = std::uint32_t;
using CRef = std::uint32_t;

constexpr CRef kNoReason = UINT32_MAX;
constexpr Lit kNoLit = UINT32_MAX;

constexpr Lit neg(Lit l) { return l ^ 1u; }
constexpr std::uint32_t var_of(Lit l) { return l >> 1; }

struct Watcher {
  CRef cref;
  Lit blocker;
};

// Clause layout in the arena: size, (lbd << 1) | learnt, activity bits, literals.
constexpr std::uint32_t kHeader = 3;

double luby(double y, int x) {
  int size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::pow(y, seq);
}

// Binary max-heap of variables keyed by activity.
class VarOrder {
 public:
  explicit VarOrder(const std::vector<double>& activity) : act_(activity) {}

  bool contains(std::uint32_t v) const { return v < pos_.size() && pos_[v] >= 0; }
  bool empty() const { return heap_.empty(); }

  void grow(std::uint32_t nvars) { pos_.resize(nvars, -1); }

  void insert(std::uint32_t v) {
    if (contains(v)) return;
    pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    up(pos_[v]);
  }

  void increased(std::uint32_t v) {
    if (contains(v)) up(pos_[v]);
  }

  std::uint32_t pop() {
    const std::uint32_t top = heap_[0];
    heap_[0] = heap_.back();
    pos_[heap_[0]] = 0;
    pos_[top] = -1;
    heap_.pop_back();
    if (heap_.size() > 1) down(0);
    return top;
  }

 private:
  bool better(std::uint32_t a, std::uint32_t b) const {
    return act_[a] > act_[b] || (act_[a] == act_[b] && a < b);
  }

  void up(int i) {
    const std::uint32_t v = heap_[i];
    while (i > 0) {
      const int parent = (i - 1) >> 1;
      if (!better(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      pos_[heap_[i]] = i;
      i = parent;
    }
    heap_[i] = v;
    pos_[v] = i;
  }

  void down(int i) {
    const std::uint32_t v = heap_[i];
    const int n = static_cast<int>(heap_.size());
    while (true) {
      int child = 2 * i + 1;
      if (child >= n) break;
      if (child + 1 < n && better(heap_[child + 1], heap_[child])) ++child;
      if (!better(heap_[child], v)) break;
      heap_[i] = heap_[child];
      pos_[heap_[i]] = i;
      i = child;
    }
    heap_[i] = v;
    pos_[v] = i;
  }

  const std::vector<double>& act_;
  std::vector<std::uint32_t> heap_;
  std::vector<int> pos_;
};

}  // namespace

struct Solver::Impl {
  explicit Impl(SolverOptions opts)
      : options(opts), order(activity), rng(opts.seed), level_stamp(1, 0) {}

  SolverOptions options;

  // Per variable.
  std::vector<std::int8_t> value;  // per literal: 1 true, -1 false, 0 unassigned
  std::vector<int> level;
  std::vector<CRef> reason;
  std::vector<double> activity;
  std::vector<std::uint8_t> phase;
  std::vector<std::uint8_t> seen;
  std::vector<std::vector<Watcher>> watches;  // watches[l]: visited when l becomes true
  VarOrder order;

  // Trail.
  std::vector<Lit> trail;
  std::vector<std::size_t> trail_lim;
  std::size_t qhead = 0;

  // Clauses.
  std::vector<std::uint32_t> mem;
  std::vector<CRef> originals;
  std::vector<CRef> learnts;
  std::size_t wasted = 0;

  bool ok = true;
  double var_inc = 1.0;
  double cla_inc = 1.0;
  std::uint64_t next_reduce = 2000;
  std::uint64_t reduce_rounds = 0;
  std::size_t simplified_trail = 0;

  std::vector<bool> model;
  Statistics stats;
  std::uint64_t total_conflicts = 0;
  std::mt19937_64 rng;

  // Scratch.
  std::vector<Lit> learnt_buf;
  std::vector<Lit> to_clear;
  std::vector<Lit> stack;
  std::vector<std::uint64_t> level_stamp;
  std::uint64_t stamp = 0;

  // Budget bookkeeping for the current solve().
  std::chrono::steady_clock::time_point started;
  double seconds_limit = 0;
  std::uint64_t conflict_limit = 0;
  bool out_of_budget = false;

  int nvars() const { return static_cast<int>(level.size()); }
  int decision_level() const { return static_cast<int>(trail_lim.size()); }
  std::int8_t val(Lit l) const { return value[l]; }

  std::uint32_t size(CRef c) const { return mem[c]; }
  bool is_learnt(CRef c) const { return (mem[c + 1] & 1u) != 0; }
  std::uint32_t lbd(CRef c) const { return mem[c + 1] >> 1; }
  float& clause_activity(CRef c) { return *reinterpret_cast<float*>(&mem[c + 2]); }
  Lit* lits(CRef c) { return &mem[c + kHeader]; }

  void grow_to(int count) {
    while (nvars() < count) {
      const auto v = static_cast<std::uint32_t>(nvars());
      value.push_back(0);
      value.push_back(0);
      level.push_back(0);
      reason.push_back(kNoReason);
      double a = 0.0;
      if (options.seed != 0) a = std::uniform_real_distribution<double>(0.0, 1e-5)(rng);
      activity.push_back(a);
      phase.push_back(options.default_phase ? 1 : 0);
      seen.push_back(0);
      watches.emplace_back();
      watches.emplace_back();
      level_stamp.push_back(0);
      order.grow(v + 1);
      order.insert(v);
    }
  }

  CRef alloc(const std::vector<Lit>& ls, bool learnt, std::uint32_t lbd_value) {
    const auto c = static_cast<CRef>(mem.size());
    mem.push_back(static_cast<std::uint32_t>(ls.size()));
    mem.push_back((lbd_value << 1) | (learnt ? 1u : 0u));
    mem.push_back(0);
    mem.insert(mem.end(), ls.begin(), ls.end());
    return c;
  }

  void attach(CRef c) {
    Lit* l = lits(c);
    watches[neg(l[0])].push_back({c, l[1]});
    watches[neg(l[1])].push_back({c, l[0]});
  }

  void assign(Lit p, CRef from) {
    const auto v = var_of(p);
    value[p] = 1;
    value[neg(p)] = -1;
    level[v] = decision_level();
    reason[v] = from;
    trail.push_back(p);
  }

  void cancel_until(int lvl) {
    if (decision_level() <= lvl) return;
    for (std::size_t i = trail.size(); i-- > trail_lim[lvl];) {
      const Lit p = trail[i];
      const auto v = var_of(p);
      value[p] = 0;
      value[neg(p)] = 0;
      phase[v] = (p & 1u) ? 0 : 1;
      order.insert(v);
    }
    trail.resize(trail_lim[lvl]);
    trail_lim.resize(lvl);
    qhead = trail.size();
  }

  CRef propagate() {
    CRef conflict = kNoReason;
    while (qhead < trail.size()) {
      const Lit p = trail[qhead++];
      const Lit false_lit = neg(p);
      auto& ws = watches[p];
      Watcher* i = ws.data();
      Watcher* j = i;
      Watcher* const end = i + ws.size();
      ++stats.propagations;
      while (i != end) {
        if (val(i->blocker) == 1) {
          *j++ = *i++;
          continue;
        }
        const CRef cr = i->cref;
        Lit* c = lits(cr);
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        ++i;
        const Lit first = c[0];
        const Watcher w{cr, first};
        if (val(first) == 1) {
          *j++ = w;
          continue;
        }
        const std::uint32_t sz = size(cr);
        bool moved = false;
        for (std::uint32_t k = 2; k < sz; ++k) {
          if (val(c[k]) != -1) {
            c[1] = c[k];
            c[k] = false_lit;
            watches[neg(c[1])].push_back(w);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        *j++ = w;
        if (val(first) == -1) {
          conflict = cr;
          qhead = trail.size();
          while (i != end) *j++ = *i++;
        } else {
          assign(first, cr);
        }
      }
      ws.resize(static_cast<std::size_t>(j - ws.data()));
    }
    return conflict;
  }

  void bump_var(std::uint32_t v) {
    activity[v] += var_inc;
    if (activity[v] > 1e100) {
      for (auto& a : activity) a *= 1e-100;
      var_inc *= 1e-100;
    }
    order.increased(v);
  }

  void bump_clause(CRef c) {
    float& a = clause_activity(c);
    a += static_cast<float>(cla_inc);
    if (a > 1e20f) {
      for (CRef l : learnts) clause_activity(l) *= 1e-20f;
      cla_inc *= 1e-20;
    }
  }

  std::uint32_t abstract_level(std::uint32_t v) const { return 1u << (level[v] & 31); }

  bool lit_redundant(Lit p, std::uint32_t abstract_levels) {
    stack.clear();
    stack.push_back(p);
    const std::size_t top = to_clear.size();
    while (!stack.empty()) {
      const CRef cr = reason[var_of(stack.back())];
      stack.pop_back();
      Lit* c = lits(cr);
      const std::uint32_t sz = size(cr);
      for (std::uint32_t i = 1; i < sz; ++i) {
        const Lit q = c[i];
        const auto v = var_of(q);
        if (seen[v] || level[v] == 0) continue;
        if (reason[v] != kNoReason && (abstract_level(v) & abstract_levels) != 0) {
          seen[v] = 1;
          stack.push_back(q);
          to_clear.push_back(q);
        } else {
          for (std::size_t k = top; k < to_clear.size(); ++k) seen[var_of(to_clear[k])] = 0;
          to_clear.resize(top);
          return false;
        }
      }
    }
    return true;
  }

  // First-UIP analysis; fills learnt_buf (asserting literal first) and
  // returns the backjump level.
  int analyze(CRef conflict, std::uint32_t& lbd_out) {
    learnt_buf.clear();
    learnt_buf.push_back(kNoLit);
    int path = 0;
    Lit p = kNoLit;
    std::size_t index = trail.size();
    CRef cr = conflict;
    do {
      if (is_learnt(cr)) bump_clause(cr);
      Lit* c = lits(cr);
      const std::uint32_t sz = size(cr);
      for (std::uint32_t k = (p == kNoLit ? 0 : 1); k < sz; ++k) {
        const Lit q = c[k];
        const auto v = var_of(q);
        if (seen[v] || level[v] == 0) continue;
        bump_var(v);
        seen[v] = 1;
        if (level[v] >= decision_level()) {
          ++path;
        } else {
          learnt_buf.push_back(q);
        }
      }
      while (!seen[var_of(trail[--index])]) {
      }
      p = trail[index];
      cr = reason[var_of(p)];
      seen[var_of(p)] = 0;
      --path;
    } while (path > 0);
    learnt_buf[0] = neg(p);

    to_clear.assign(learnt_buf.begin(), learnt_buf.end());
    std::uint32_t abstract_levels = 0;
    for (std::size_t k = 1; k < learnt_buf.size(); ++k) {
      abstract_levels |= abstract_level(var_of(learnt_buf[k]));
    }
    std::size_t kept = 1;
    for (std::size_t k = 1; k < learnt_buf.size(); ++k) {
      const auto v = var_of(learnt_buf[k]);
      if (reason[v] == kNoReason || !lit_redundant(learnt_buf[k], abstract_levels)) {
        learnt_buf[kept++] = learnt_buf[k];
      }
    }
    learnt_buf.resize(kept);
    for (Lit l : to_clear) seen[var_of(l)] = 0;

    int bt = 0;
    if (learnt_buf.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t k = 2; k < learnt_buf.size(); ++k) {
        if (level[var_of(learnt_buf[k])] > level[var_of(learnt_buf[max_i])]) max_i = k;
      }
      std::swap(learnt_buf[1], learnt_buf[max_i]);
      bt = level[var_of(learnt_buf[1])];
    }

    ++stamp;
    std::uint32_t distinct = 0;
    for (Lit l : learnt_buf) {
      const int lv = level[var_of(l)];
      if (level_stamp[lv] != stamp) {
        level_stamp[lv] = stamp;
        ++distinct;
      }
    }
    lbd_out = distinct;
    return bt;
  }

  bool locked(CRef c) {
    const Lit first = lits(c)[0];
    return val(first) == 1 && reason[var_of(first)] == c;
  }

  bool satisfied(CRef c) {
    Lit* l = lits(c);
    for (std::uint32_t k = 0; k < size(c); ++k) {
      if (val(l[k]) == 1 && level[var_of(l[k])] == 0) return true;
    }
    return false;
  }

  // Rebuilds the arena from the live clause lists and re-attaches watches.
  void compact() {
    std::vector<std::uint32_t> fresh;
    fresh.reserve(mem.size() - wasted);
    auto move_clause = [&](CRef c) {
      const auto nc = static_cast<CRef>(fresh.size());
      fresh.insert(fresh.end(), mem.begin() + c, mem.begin() + c + kHeader + size(c));
      mem[c + 2] = nc;  // forwarding address; the activity was copied already
      return nc;
    };
    for (auto& c : originals) c = move_clause(c);
    for (auto& c : learnts) c = move_clause(c);
    for (const Lit p : trail) {
      auto& r = reason[var_of(p)];
      if (r != kNoReason) r = mem[r + 2];
    }
    mem.swap(fresh);
    wasted = 0;
    for (auto& ws : watches) ws.clear();
    for (CRef c : originals) attach(c);
    for (CRef c : learnts) attach(c);
  }

  void reduce_db() {
    std::sort(learnts.begin(), learnts.end(), [&](CRef a, CRef b) {
      if (lbd(a) != lbd(b)) return lbd(a) > lbd(b);
      return clause_activity(a) < clause_activity(b);
    });
    const std::size_t target = learnts.size() / 2;
    std::size_t removed = 0;
    std::vector<CRef> keep;
    keep.reserve(learnts.size());
    for (CRef c : learnts) {
      if (removed < target && lbd(c) > 2 && !locked(c)) {
        wasted += kHeader + size(c);
        ++removed;
      } else {
        keep.push_back(c);
      }
    }
    learnts.swap(keep);
    compact();
  }

  // Root-level cleanup once new units have appeared.
  void simplify() {
    if (trail.size() == simplified_trail) return;
    simplified_trail = trail.size();
    for (const Lit p : trail) reason[var_of(p)] = kNoReason;
    auto drop = [&](std::vector<CRef>& list) {
      std::erase_if(list, [&](CRef c) {
        if (!satisfied(c)) return false;
        wasted += kHeader + size(c);
        return true;
      });
    };
    drop(originals);
    drop(learnts);
    compact();
  }

  std::int64_t pick_branch() {
    while (!order.empty()) {
      const auto v = order.pop();
      if (value[2 * v] == 0) {
        return static_cast<std::int64_t>(2 * v + (phase[v] ? 0u : 1u));
      }
    }
    return -1;
  }

  bool budget_exhausted() {
    if (stats.conflicts >= conflict_limit) return true;
    if ((stats.conflicts & 255u) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
      if (elapsed.count() >= seconds_limit) return true;
    }
    return false;
  }

  // Returns Satisfiable/Unsatisfiable, or Unknown for a restart or budget stop.
  Status search(std::uint64_t max_conflicts) {
    std::uint64_t local = 0;
    while (true) {
      const CRef conflict = propagate();
      if (conflict != kNoReason) {
        ++stats.conflicts;
        ++total_conflicts;
        ++local;
        if (decision_level() == 0) {
          ok = false;
          return Status::Unsatisfiable;
        }
        std::uint32_t lbd_value = 0;
        const int bt = analyze(conflict, lbd_value);
        cancel_until(bt);
        stats.learnt_literals += learnt_buf.size();
        if (learnt_buf.size() == 1) {
          assign(learnt_buf[0], kNoReason);
        } else {
          const CRef c = alloc(learnt_buf, true, lbd_value);
          learnts.push_back(c);
          attach(c);
          bump_clause(c);
          assign(learnt_buf[0], c);
        }
        var_inc /= options.var_decay;
        cla_inc /= options.clause_decay;
        if (budget_exhausted()) {
          out_of_budget = true;
          cancel_until(0);
          return Status::Unknown;
        }
        continue;
      }
      if (local >= max_conflicts) {
        cancel_until(0);
        return Status::Unknown;
      }
      if (decision_level() == 0) simplify();
      if (total_conflicts >= next_reduce) {
        ++reduce_rounds;
        next_reduce = total_conflicts + 2000 + 300 * reduce_rounds;
        reduce_db();
      }
      const std::int64_t next = pick_branch();
      if (next < 0) {
        model.assign(static_cast<std::size_t>(nvars()), false);
        for (int v = 0; v < nvars(); ++v) model[v] = value[2 * v] == 1;
        cancel_until(0);
        return Status::Satisfiable;
      }
      ++stats.decisions;
      trail_lim.push_back(trail.size());
      assign(static_cast<Lit>(next), kNoReason);
    }
  }
};

Solver::Solver(SolverOptions options) : impl_(std::make_unique<Impl>(options)) {}
Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

int Solver::new_var() {
  impl_->grow_to(impl_->nvars() + 1);
  return impl_->nvars();
}

void Solver::reserve_vars(int count) { impl_->grow_to(count); }

int Solver::var_count() const { return impl_->nvars(); }

bool Solver::add_clause(std::span<const int> literals) {
  auto& s = *impl_;
  if (!s.ok) return false;
  s.cancel_until(0);
  std::vector<Lit> ls;
  ls.reserve(literals.size());
  for (int x : literals) {
    if (x == 0) throw std::invalid_argument("literal 0 is not allowed");
    const int v = std::abs(x);
    s.grow_to(v);
    ls.push_back(2u * static_cast<std::uint32_t>(v - 1) + (x < 0 ? 1u : 0u));
  }
  std::sort(ls.begin(), ls.end());
  std::size_t kept = 0;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const Lit l = ls[i];
    if (s.val(l) == 1 || (i + 1 < ls.size() && ls[i + 1] == neg(l) && (l & 1u) == 0)) {
      return true;  // satisfied at the root, or tautology
    }
    if (s.val(l) == -1) continue;
    if (kept > 0 && ls[kept - 1] == l) continue;
    ls[kept++] = l;
  }
  ls.resize(kept);
  if (ls.empty()) {
    s.ok = false;
    return false;
  }
  if (ls.size() == 1) {
    s.assign(ls[0], kNoReason);
    if (s.propagate() != kNoReason) s.ok = false;
    return s.ok;
  }
  const CRef c = s.alloc(ls, false, 0);
  s.originals.push_back(c);
  s.attach(c);
  return true;
}

Status Solver::solve(const Budget& budget) {
  auto& s = *impl_;
  s.stats = {};
  s.started = std::chrono::steady_clock::now();
  auto finish = [&](Status st) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - s.started;
    s.stats.seconds = elapsed.count();
    return st;
  };
  if (!s.ok) return finish(Status::Unsatisfiable);
  if (budget.conflicts == 0 || budget.seconds <= 0) return finish(Status::Unknown);
  s.seconds_limit = budget.seconds;
  s.conflict_limit = budget.conflicts;
  s.out_of_budget = false;
  s.cancel_until(0);
  if (s.propagate() != kNoReason) {
    s.ok = false;
    return finish(Status::Unsatisfiable);
  }
  for (int round = 0;; ++round) {
    const auto limit = static_cast<std::uint64_t>(luby(2.0, round) * s.options.restart_unit);
    const Status st = s.search(limit);
    if (st != Status::Unknown) return finish(st);
    if (s.out_of_budget) return finish(Status::Unknown);
    ++s.stats.restarts;
  }
}

const std::vector<bool>& Solver::model() const { return impl_->model; }

bool Solver::model_value(int var) const {
  if (var < 1 || var > static_cast<int>(impl_->model.size())) {
    throw std::out_of_range("no model value for variable " + std::to_string(var));
  }
  return impl_->model[var - 1];
}

const Statistics& Solver::statistics() const { return impl_->stats; }

}  // namespace ordram::sat
