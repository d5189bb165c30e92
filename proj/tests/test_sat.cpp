#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "ordram/error.hpp"
#include "ordram/sat/dimacs.hpp"
#include "ordram/sat/external.hpp"
#include "ordram/sat/solver.hpp"

using namespace ordram::sat;

namespace {

using Clauses = std::vector<std::vector<int>>;

bool satisfied_by(const Clauses& f, const std::vector<bool>& model) {
  for (const auto& c : f) {
    bool sat = false;
    for (int l : c) sat = sat || (model[static_cast<std::size_t>(std::abs(l) - 1)] == (l > 0));
    if (!sat) return false;
  }
  return true;
}

bool brute_force_sat(const Clauses& f, int vars) {
  std::vector<bool> m(static_cast<std::size_t>(vars));
  for (std::uint32_t mask = 0; mask < (1u << vars); ++mask) {
    for (int v = 0; v < vars; ++v) m[static_cast<std::size_t>(v)] = (mask >> v) & 1;
    if (satisfied_by(f, m)) return true;
  }
  return false;
}

Clauses random_cnf(int vars, int clauses, int width, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> var(1, vars);
  std::bernoulli_distribution sign(0.5);
  Clauses f;
  for (int i = 0; i < clauses; ++i) {
    std::vector<int> c;
    for (int j = 0; j < width; ++j) c.push_back(sign(rng) ? var(rng) : -var(rng));
    f.push_back(c);
  }
  return f;
}

Status run(const Clauses& f, int vars, std::vector<bool>* model = nullptr, std::uint64_t seed = 0) {
  SolverOptions o;
  o.seed = seed;
  Solver s(o);
  s.reserve_vars(vars);
  for (const auto& c : f) s.add_clause(c);
  const auto st = s.solve(Budget::unlimited());
  if (model && st == Status::Satisfiable) *model = s.model();
  return st;
}

// Pigeonhole: n + 1 pigeons into n holes.
Clauses pigeonhole(int n, int& vars) {
  auto x = [n](int p, int h) { return p * n + h + 1; };
  vars = (n + 1) * n;
  Clauses f;
  for (int p = 0; p <= n; ++p) {
    std::vector<int> c;
    for (int h = 0; h < n; ++h) c.push_back(x(p, h));
    f.push_back(c);
  }
  for (int h = 0; h < n; ++h) {
    for (int p = 0; p <= n; ++p) {
      for (int q = p + 1; q <= n; ++q) f.push_back({-x(p, h), -x(q, h)});
    }
  }
  return f;
}

}  // namespace

TEST_CASE("trivial formulas") {
  Solver s;
  CHECK(s.solve() == Status::Satisfiable);
  CHECK(s.add_clause({1}));
  CHECK(s.solve() == Status::Satisfiable);
  CHECK(s.model_value(1));
  CHECK_FALSE(s.add_clause({-1}));
  CHECK(s.solve() == Status::Unsatisfiable);

  Solver t;
  t.add_clause({1, -1});
  CHECK(t.solve() == Status::Satisfiable);
  CHECK(t.var_count() == 1);
}

TEST_CASE("agrees with brute force on random 3-CNF") {
  std::mt19937_64 rng(1);
  int sat = 0, unsat = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int vars = 3 + trial % 12;
    const int clauses = static_cast<int>(vars * (3.0 + 0.5 * (trial % 5)));
    const auto f = random_cnf(vars, clauses, 3, rng);
    std::vector<bool> model;
    const auto st = run(f, vars, &model, trial % 3);
    REQUIRE(st != Status::Unknown);
    const bool expect = brute_force_sat(f, vars);
    REQUIRE((st == Status::Satisfiable) == expect);
    if (expect) {
      CHECK(satisfied_by(f, model));
      ++sat;
    } else {
      ++unsat;
    }
  }
  CHECK(sat > 50);
  CHECK(unsat > 50);
}

TEST_CASE("agrees with brute force on mixed-width formulas") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const int vars = 4 + trial % 10;
    auto f = random_cnf(vars, vars, 2, rng);
    const auto g = random_cnf(vars, vars * 2, 4, rng);
    f.insert(f.end(), g.begin(), g.end());
    f.push_back({1 + trial % vars});
    REQUIRE((run(f, vars) == Status::Satisfiable) == brute_force_sat(f, vars));
  }
}

TEST_CASE("pigeonhole formulas are refuted") {
  for (int n = 2; n <= 7; ++n) {
    int vars = 0;
    const auto f = pigeonhole(n, vars);
    CHECK(run(f, vars) == Status::Unsatisfiable);
  }
}

TEST_CASE("larger satisfiable instances") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const int vars = 200;
    const auto f = random_cnf(vars, 800, 3, rng);
    std::vector<bool> model;
    const auto st = run(f, vars, &model);
    REQUIRE(st != Status::Unknown);
    if (st == Status::Satisfiable) CHECK(satisfied_by(f, model));
  }
}

TEST_CASE("budgets") {
  int vars = 0;
  const auto f = pigeonhole(9, vars);
  Solver s;
  for (const auto& c : f) s.add_clause(c);
  Budget zero;
  zero.conflicts = 0;
  CHECK(s.solve(zero) == Status::Unknown);
  Budget tiny;
  tiny.conflicts = 10;
  CHECK(s.solve(tiny) == Status::Unknown);
  CHECK(s.statistics().conflicts <= 11);
}

TEST_CASE("incremental blocking enumerates all models") {
  // x1 xor x2, x3 free: four models.
  Solver s;
  s.add_clause({1, 2});
  s.add_clause({-1, -2});
  s.reserve_vars(3);
  int models = 0;
  while (s.solve() == Status::Satisfiable) {
    ++models;
    std::vector<int> block;
    for (int v = 1; v <= 3; ++v) block.push_back(s.model_value(v) ? -v : v);
    if (!s.add_clause(block)) break;
  }
  CHECK(models == 4);
}

TEST_CASE("runs are deterministic for a seed") {
  std::mt19937_64 rng(23);
  const auto f = random_cnf(120, 500, 3, rng);
  std::vector<bool> a, b;
  run(f, 120, &a, 5);
  run(f, 120, &b, 5);
  CHECK(a == b);
}

TEST_CASE("DIMACS round trip") {
  Cnf cnf;
  cnf.variable_count = 3;
  cnf.clauses = {{1, -2}, {2, 3}, {-1}};
  cnf.comments = {"example"};
  const auto text = write_dimacs(cnf);
  CHECK(text == "c example\np cnf 3 3\n1 -2 0\n2 3 0\n-1 0\n");
  const auto back = parse_dimacs(text);
  CHECK(back.variable_count == 3);
  CHECK(back.clauses == cnf.clauses);
  CHECK(back.comments == cnf.comments);

  const auto multi = parse_dimacs("p cnf 2 2\n1\n-2 0 2\n0\n");
  CHECK(multi.clauses == Clauses{{1, -2}, {2}});
}

TEST_CASE("DIMACS errors") {
  CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), ordram::ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n3 0\n"), ordram::ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 0\n"), ordram::ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), ordram::ParseError);
  CHECK_THROWS_AS(parse_dimacs("p dnf 2 1\n1 0\n"), ordram::ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 x 0\n"), ordram::ParseError);
}

TEST_CASE("solver output format") {
  std::vector<bool> model(30, false);
  model[0] = model[29] = true;
  const auto text = write_solver_output(Status::Satisfiable, model);
  for (std::size_t start = 0, end; (end = text.find('\n', start)) != std::string::npos; start = end + 1) {
    CHECK(end - start <= 80);
  }
  const auto back = parse_solver_output(text, 30);
  CHECK(back.status == Status::Satisfiable);
  CHECK(back.model == model);
  CHECK(parse_solver_output("s UNSATISFIABLE\n", 3).status == Status::Unsatisfiable);
  CHECK(parse_solver_output("garbage\n", 3).status == Status::Unknown);
}

TEST_CASE("external backend through a DIMACS child process") {
  Cnf cnf;
  cnf.variable_count = 2;
  cnf.clauses = {{1, 2}, {-1}};
  const auto r = run_external_solver(ORDRAM_SAT_BIN, cnf, Budget{});
  REQUIRE(r.status == Status::Satisfiable);
  CHECK_FALSE(r.model[0]);
  CHECK(r.model[1]);

  cnf.clauses.push_back({-2});
  CHECK(run_external_solver(ORDRAM_SAT_BIN, cnf, Budget{}).status == Status::Unsatisfiable);

  const auto missing = run_external_solver("/nonexistent/solver", cnf, Budget{});
  CHECK(missing.status == Status::Unknown);
  CHECK_FALSE(missing.diagnostic.empty());
}

TEST_CASE("external backend timeout") {
  Cnf cnf;
  cnf.variable_count = 1;
  cnf.clauses = {{1}};
  Budget b;
  b.seconds = 0.3;
  const auto script = std::filesystem::temp_directory_path() / "ordram_test_slow_solver.sh";
  {
    std::ofstream out(script);
    out << "#!/bin/sh\nsleep 5\necho 's SATISFIABLE'\n";
  }
  std::filesystem::permissions(script, std::filesystem::perms::owner_all);
  const auto r = run_external_solver(script.string(), cnf, b);
  std::filesystem::remove(script);
  CHECK(r.status == Status::Unknown);
  CHECK(r.seconds < 3.0);
}
