#include "ordram/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "ordram/sat/external.hpp"

namespace ordram {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Soundness gate shared by solve and enumerate_models.
TwoColoring accept_model(const CnfInstance& inst, const std::vector<bool>& model) {
  TwoColoring c = decode_model(model, inst.vertex_count);
  const Verdict v = verify_avoiding(c, inst.red, inst.blue);
  if (!v.avoiding()) {
    throw std::logic_error("solver model is not avoiding (" + std::string(to_string(v.status)) +
                           ") for N=" + std::to_string(inst.vertex_count) + " red=" +
                           inst.red_id + " blue=" + inst.blue_id);
  }
  if (inst.options.symmetric && !is_symmetric(c)) {
    throw std::logic_error("symmetric instance produced an asymmetric model");
  }
  for (const auto& f : inst.options.fixed) {
    if (c.color(f.edge.u, f.edge.v) != f.color) {
      throw std::logic_error("model violates a fixed edge");
    }
  }
  return c;
}

sat::Budget remaining(const sat::Budget& total, double used_seconds, std::uint64_t used_conflicts) {
  sat::Budget b;
  b.seconds = std::max(0.0, total.seconds - used_seconds);
  b.conflicts = used_conflicts >= total.conflicts ? 0 : total.conflicts - used_conflicts;
  return b;
}

std::vector<int> blocking_clause(const std::vector<bool>& model, int variable_count) {
  std::vector<int> clause(static_cast<std::size_t>(variable_count));
  for (int v = 1; v <= variable_count; ++v) {
    clause[static_cast<std::size_t>(v - 1)] = model[static_cast<std::size_t>(v - 1)] ? -v : v;
  }
  return clause;
}

struct ExternalCall {
  sat::Status status = sat::Status::Unknown;
  std::vector<bool> model;
  double seconds = 0.0;
  std::string diagnostic;
};

ExternalCall call_external(const SolveConfig& config, const sat::Cnf& cnf,
                           const sat::Budget& budget) {
  ExternalCall out;
  std::string command = config.external_command;
  if (command.empty()) command = sat::external_solver_from_env().value_or("");
  if (command.empty()) {
    out.diagnostic = "no external solver configured (set " +
                     std::string(sat::kExternalSolverEnv) + ")";
    return out;
  }
  auto r = sat::run_external_solver(command, cnf, budget);
  out.status = r.status;
  out.seconds = r.seconds;
  out.diagnostic = std::move(r.diagnostic);
  out.model = std::move(r.model);
  if (out.status == sat::Status::Satisfiable &&
      out.model.size() < static_cast<std::size_t>(cnf.variable_count)) {
    out.status = sat::Status::Unknown;
    out.diagnostic = "external solver reported SAT without a complete model";
  }
  return out;
}

}  // namespace

SolverVerdict solve(const CnfInstance& inst, const SolveConfig& config) {
  SolverVerdict out;
  if (inst.contradiction) {
    out.status = sat::Status::Unsatisfiable;
    return out;
  }
  if (config.backend == Backend::External) {
    auto r = call_external(config, inst.to_cnf(), config.budget);
    out.status = r.status;
    out.statistics.seconds = r.seconds;
    out.diagnostic = std::move(r.diagnostic);
    if (out.status == sat::Status::Satisfiable) out.coloring = accept_model(inst, r.model);
    return out;
  }
  sat::SolverOptions so;
  so.seed = config.seed;
  sat::Solver s(so);
  s.reserve_vars(inst.variable_count);
  for (const auto& c : inst.clauses) s.add_clause(c);
  out.status = s.solve(config.budget);
  out.statistics = s.statistics();
  if (out.status == sat::Status::Satisfiable) out.coloring = accept_model(inst, s.model());
  if (out.status == sat::Status::Unknown) out.diagnostic = "budget exhausted";
  return out;
}

Enumeration enumerate_models(const CnfInstance& inst, const SolveConfig& config,
                             std::size_t limit) {
  Enumeration out;
  if (inst.contradiction) {
    out.complete = true;
    out.final_status = sat::Status::Unsatisfiable;
    return out;
  }
  const auto start = Clock::now();
  std::uint64_t conflicts = 0;

  if (config.backend == Backend::External) {
    sat::Cnf cnf = inst.to_cnf();
    while (true) {
      if (out.colorings.size() >= limit) {
        out.limit_reached = true;
        break;
      }
      auto r = call_external(config, cnf, remaining(config.budget, seconds_since(start), 0));
      out.final_status = r.status;
      if (r.status != sat::Status::Satisfiable) break;
      out.colorings.push_back(accept_model(inst, r.model));
      cnf.clauses.push_back(blocking_clause(r.model, inst.edge_variable_count));
    }
  } else {
    sat::SolverOptions so;
    so.seed = config.seed;
    sat::Solver s(so);
    s.reserve_vars(inst.variable_count);
    bool ok = true;
    for (const auto& c : inst.clauses) ok = s.add_clause(c) && ok;
    while (true) {
      if (out.colorings.size() >= limit) {
        out.limit_reached = true;
        break;
      }
      const auto status =
          ok ? s.solve(remaining(config.budget, seconds_since(start), conflicts))
             : sat::Status::Unsatisfiable;
      conflicts += s.statistics().conflicts;
      out.final_status = status;
      if (status != sat::Status::Satisfiable) break;
      out.colorings.push_back(accept_model(inst, s.model()));
      ok = s.add_clause(blocking_clause(s.model(), inst.edge_variable_count));
    }
  }
  out.complete = out.final_status == sat::Status::Unsatisfiable;
  // The solver finds models in no particular order; sorting makes the output
  // independent of clause order and backend.
  std::sort(out.colorings.begin(), out.colorings.end());
  return out;
}

SearchReport ordered_ramsey(const OrderedGraph& red, const OrderedGraph& blue,
                            const RamseyOptions& options) {
  SearchReport report;
  report.red_id = pattern_id(red);
  report.blue_id = pattern_id(blue);

  int known_sat = 0;
  std::optional<int> known_unsat;

  auto attempt = [&](int n, bool symmetric) {
    EncodeOptions eo;
    eo.symmetric = symmetric;
    eo.path_levels = options.path_levels;
    const CnfInstance inst = encode_arrow(n, red, blue, eo);
    const auto start = Clock::now();
    SolverVerdict v = solve(inst, options.config);
    report.verdicts.push_back(
        {n, v.status, symmetric, seconds_since(start), v.statistics.conflicts});
    if (v.status == sat::Status::Unsatisfiable && inst.options.symmetric) {
      v.status = sat::Status::Unknown;  // says nothing about arbitrary colorings
    }
    return v;
  };

  auto probe = [&](int n) {
    if (n <= known_sat) return sat::Status::Satisfiable;
    if (known_unsat && n >= *known_unsat) return sat::Status::Unsatisfiable;
    SolverVerdict v;
    if (options.symmetric_first && n >= 2) v = attempt(n, true);
    if (v.status != sat::Status::Satisfiable) v = attempt(n, false);
    switch (v.status) {
      case sat::Status::Satisfiable:
        known_sat = n;
        report.witness = *v.coloring;
        break;
      case sat::Status::Unsatisfiable:
        known_unsat = n;
        break;
      case sat::Status::Unknown:
        report.unknown.push_back(n);
        break;
    }
    return v.status;
  };

  if (options.lo_hint && *options.lo_hint >= 2) probe(*options.lo_hint - 1);
  if (options.hi_hint && *options.hi_hint >= 1) probe(*options.hi_hint);

  if (!known_unsat) {
    int step = 1;
    while (known_sat + step <= options.max_n) {
      const auto s = probe(known_sat + step);
      if (s != sat::Status::Satisfiable) break;
      step *= 2;
    }
  }
  while (known_unsat && *known_unsat - known_sat > 1) {
    const int mid = known_sat + (*known_unsat - known_sat) / 2;
    if (probe(mid) == sat::Status::Unknown) break;
  }

  report.lo = known_sat + 1;
  report.hi = known_unsat;
  std::sort(report.unknown.begin(), report.unknown.end());
  report.unknown.erase(std::unique(report.unknown.begin(), report.unknown.end()),
                       report.unknown.end());
  return report;
}

}  // namespace ordram
