#pragma once

// Runs a DIMACS solver as a child process: the instance is written to a
// temporary file whose path is appended to the command line, and standard
// output is read back in the usual "s ..."/"v ..." convention.

#include <optional>
#include <string>
#include <vector>

#include "ordram/sat/dimacs.hpp"
#include "ordram/sat/solver.hpp"

namespace ordram::sat {

inline constexpr const char* kExternalSolverEnv = "ORDRAM_SAT_SOLVER";

struct ExternalResult {
  Status status = Status::Unknown;
  std::vector<bool> model;
  double seconds = 0.0;
  int exit_code = -1;
  std::string diagnostic;  // non-empty when the run failed or timed out
};

/// `command` is split on whitespace into program and leading arguments.
/// Only the wall-clock part of the budget applies; the child is killed
/// when it runs out. Failures surface as Status::Unknown with a diagnostic.
ExternalResult run_external_solver(const std::string& command, const Cnf& cnf,
                                   const Budget& budget);

/// The command named by ORDRAM_SAT_SOLVER, if set and non-empty.
std::optional<std::string> external_solver_from_env();

}  // namespace ordram::sat
