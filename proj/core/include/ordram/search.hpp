#pragma once

// Solving arrowing instances and computing r_<(G, H) by bisection over N.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ordram/arrow.hpp"
#include "ordram/coloring.hpp"
#include "ordram/sat/solver.hpp"

namespace ordram {

enum class Backend { Builtin, External };

struct SolveConfig {
  Backend backend = Backend::Builtin;
  /// Command line of the external solver; it receives the DIMACS file path as
  /// its last argument.
  std::string external_command;
  sat::Budget budget;
  std::uint64_t seed = 0;
};

struct SolverVerdict {
  sat::Status status = sat::Status::Unknown;
  /// Decoded and re-verified model when Satisfiable.
  std::optional<TwoColoring> coloring;
  sat::Statistics statistics;
  std::string diagnostic;
};

/// Satisfiable answers are checked with verify_avoiding before returning; a
/// model that fails the check raises std::logic_error.
SolverVerdict solve(const CnfInstance& inst, const SolveConfig& config = {});

struct Enumeration {
  /// Distinct on the edge variables; sorted lexicographically over them.
  std::vector<TwoColoring> colorings;
  /// True when the blocked instance became UNSAT, i.e. the list is exhaustive.
  bool complete = false;
  /// Set when the model limit stopped the run.
  bool limit_reached = false;
  /// Status of the final call; Unknown means the budget ran out.
  sat::Status final_status = sat::Status::Unknown;
};

Enumeration enumerate_models(const CnfInstance& inst, const SolveConfig& config = {},
                             std::size_t limit = 1'000'000);

struct NVerdict {
  int n = 0;
  sat::Status status = sat::Status::Unknown;
  bool symmetric = false;
  double seconds = 0.0;
  std::uint64_t conflicts = 0;
};

struct RamseyOptions {
  std::optional<int> lo_hint;
  std::optional<int> hi_hint;
  SolveConfig config;
  bool symmetric_first = true;
  /// See EncodeOptions::path_levels; it only affects red monotone paths.
  bool path_levels = true;
  /// Galloping stops here when no UNSAT N has been found.
  int max_n = 256;
};

struct SearchReport {
  std::string red_id;
  std::string blue_id;
  /// r_< lies in [lo, hi]; hi is absent when no arrowing N was established.
  int lo = 1;
  std::optional<int> hi;
  /// Avoiding coloring on lo - 1 vertices.
  TwoColoring witness;
  std::vector<NVerdict> verdicts;
  std::vector<int> unknown;

  bool exact() const { return hi && *hi == lo; }
};

SearchReport ordered_ramsey(const OrderedGraph& red, const OrderedGraph& blue,
                            const RamseyOptions& options = {});

}  // namespace ordram
