// DIMACS front-end for the built-in CDCL solver, usable wherever an external
// solver command is expected. Exit status follows the usual convention:
// 10 satisfiable, 20 unsatisfiable, 0 unknown, 1 on errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ordram/sat/dimacs.hpp"
#include "ordram/sat/solver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Solve a DIMACS CNF file with the built-in CDCL solver"};
  std::string input = "-";
  double seconds = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t seed = 0;
  bool stats = false;
  app.add_option("input", input, "CNF file, '-' for stdin");
  app.add_option("--seconds", seconds, "wall-clock limit (0: none)");
  app.add_option("--conflicts", conflicts, "conflict limit (0: none)");
  app.add_option("--seed", seed, "activity jitter seed");
  app.add_flag("--stats", stats, "print statistics as comment lines");
  CLI11_PARSE(app, argc, argv);

  std::stringstream text;
  if (input == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(input, std::ios::binary);
    if (!in) {
      std::cerr << "ordram-sat: cannot open " << input << "\n";
      return 1;
    }
    text << in.rdbuf();
  }

  ordram::sat::Cnf cnf;
  try {
    cnf = ordram::sat::parse_dimacs(text.str());
  } catch (const ordram::ParseError& e) {
    std::cerr << "ordram-sat: line " << e.line() << ": " << e.what() << "\n";
    return 1;
  }

  ordram::sat::SolverOptions options;
  options.seed = seed;
  ordram::sat::Solver solver(options);
  solver.reserve_vars(cnf.variable_count);
  for (const auto& c : cnf.clauses) solver.add_clause(c);
  auto budget = ordram::sat::Budget::unlimited();
  if (seconds > 0) budget.seconds = seconds;
  if (conflicts > 0) budget.conflicts = conflicts;
  const auto status = solver.solve(budget);

  if (stats) {
    const auto& s = solver.statistics();
    std::cout << "c conflicts " << s.conflicts << "\nc decisions " << s.decisions
              << "\nc propagations " << s.propagations << "\nc seconds " << s.seconds << "\n";
  }
  std::vector<bool> model;
  if (status == ordram::sat::Status::Satisfiable) {
    model = solver.model();
    model.resize(static_cast<std::size_t>(cnf.variable_count));
  }
  std::cout << ordram::sat::write_solver_output(status, model);
  switch (status) {
    case ordram::sat::Status::Satisfiable: return 10;
    case ordram::sat::Status::Unsatisfiable: return 20;
    default: return 0;
  }
}
