#pragma once

// A complete CDCL SAT solver: two watched literals, first-UIP learning with
// recursive clause minimization, VSIDS with phase saving, Luby restarts and
// LBD-guided learnt clause deletion. Runs are deterministic for a given seed.
//
// Literals use the DIMACS convention: variable v >= 1 is `v`, its negation
// `-v`.

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

namespace ordram::sat {

enum class Status { Satisfiable, Unsatisfiable, Unknown };

const char* to_string(Status s);

/// Per-solve limits. Either limit being hit yields Status::Unknown.
struct Budget {
  double seconds = 60.0;
  std::uint64_t conflicts = 10'000'000;

  static Budget unlimited();
};

struct Statistics {
  std::uint64_t conflicts = 0;
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t restarts = 0;
  std::uint64_t learnt_literals = 0;
  double seconds = 0.0;
};

struct SolverOptions {
  std::uint64_t seed = 0;  // 0: no activity jitter
  double var_decay = 0.95;
  double clause_decay = 0.999;
  int restart_unit = 100;  // conflicts per Luby unit
  bool default_phase = false;
};

class Solver {
 public:
  explicit Solver(SolverOptions options = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  int new_var();
  /// Grows the variable set to at least `count` variables.
  void reserve_vars(int count);
  int var_count() const;

  /// Adds a clause at the root. Returns false once the formula is known to be
  /// unsatisfiable. Variables beyond var_count() are created on demand.
  bool add_clause(std::span<const int> literals);
  bool add_clause(std::initializer_list<int> literals) {
    return add_clause(std::span<const int>(literals.begin(), literals.size()));
  }

  /// Can be called repeatedly; clauses may be added between calls.
  Status solve(const Budget& budget = {});

  /// Model of the last Satisfiable answer; index v - 1 holds variable v.
  const std::vector<bool>& model() const;
  bool model_value(int var) const;

  /// Counters of the last solve() call.
  const Statistics& statistics() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ordram::sat
