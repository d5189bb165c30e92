#pragma once

// DIMACS CNF text and the conventional solver output format
// ("s SATISFIABLE" / "s UNSATISFIABLE" plus "v" model lines).

#include <string>
#include <string_view>
#include <vector>

#include "ordram/error.hpp"
#include "ordram/sat/solver.hpp"

namespace ordram::sat {

struct Cnf {
  int variable_count = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<std::string> comments;
};

std::string write_dimacs(const Cnf& cnf);
/// Throws ParseError on a malformed header, out-of-range literals or a
/// clause count that disagrees with the header.
Cnf parse_dimacs(std::string_view text);

struct SolverOutput {
  Status status = Status::Unknown;
  std::vector<bool> model;  // index v - 1; unset variables read false
};

SolverOutput parse_solver_output(std::string_view text, int variable_count);
std::string write_solver_output(Status status, const std::vector<bool>& model);

}  // namespace ordram::sat
