#include "ordram/sat/dimacs.hpp"

#include <cstdlib>
#include <sstream>

namespace ordram::sat {

std::string write_dimacs(const Cnf& cnf) {
  std::string out;
  for (const auto& c : cnf.comments) out += "c " + c + "\n";
  out += "p cnf " + std::to_string(cnf.variable_count) + " " + std::to_string(cnf.clauses.size()) +
         "\n";
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) {
      out += std::to_string(lit);
      out.push_back(' ');
    }
    out += "0\n";
  }
  return out;
}

Cnf parse_dimacs(std::string_view text) {
  Cnf cnf;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_header = false;
  std::size_t declared = 0;
  std::vector<int> current;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == 'c') {
      cnf.comments.push_back(line.size() > 2 ? line.substr(2) : std::string{});
      continue;
    }
    if (line[0] == '%') break;  // some benchmark files end this way
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      long vars = -1, clauses = -1;
      if (have_header || !(ls >> p >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 ||
          clauses < 0) {
        throw ParseError(lineno, "bad problem line, expected 'p cnf <vars> <clauses>'");
      }
      have_header = true;
      cnf.variable_count = static_cast<int>(vars);
      declared = static_cast<std::size_t>(clauses);
      continue;
    }
    if (!have_header) throw ParseError(lineno, "clause before the problem line");
    long lit = 0;
    while (ls >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::labs(lit) > cnf.variable_count) {
        throw ParseError(lineno, "literal " + std::to_string(lit) + " exceeds variable count");
      }
      current.push_back(static_cast<int>(lit));
    }
    if (!ls.eof()) throw ParseError(lineno, "unexpected token");
  }
  if (!have_header) throw ParseError(0, "missing problem line");
  if (!current.empty()) throw ParseError(lineno, "last clause is not terminated by 0");
  if (cnf.clauses.size() != declared) {
    throw ParseError(0, "header declares " + std::to_string(declared) + " clauses, found " +
                            std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

SolverOutput parse_solver_output(std::string_view text, int variable_count) {
  SolverOutput out;
  out.model.assign(static_cast<std::size_t>(std::max(variable_count, 0)), false);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("s ", 0) == 0) {
      if (line == "s SATISFIABLE") {
        out.status = Status::Satisfiable;
      } else if (line == "s UNSATISFIABLE") {
        out.status = Status::Unsatisfiable;
      } else {
        out.status = Status::Unknown;
      }
    } else if (line.rfind("v ", 0) == 0 || line == "v") {
      std::istringstream ls(line.substr(1));
      long lit = 0;
      while (ls >> lit) {
        if (lit == 0) continue;
        const long v = std::labs(lit);
        if (v <= variable_count) out.model[static_cast<std::size_t>(v - 1)] = lit > 0;
      }
    }
  }
  return out;
}

std::string write_solver_output(Status status, const std::vector<bool>& model) {
  std::string out;
  switch (status) {
    case Status::Satisfiable: out = "s SATISFIABLE\n"; break;
    case Status::Unsatisfiable: return "s UNSATISFIABLE\n";
    case Status::Unknown: return "s UNKNOWN\n";
  }
  std::string line = "v";
  for (std::size_t v = 1; v <= model.size(); ++v) {
    const std::string token = " " + std::string(model[v - 1] ? "" : "-") + std::to_string(v);
    if (line.size() + token.size() > 78) {
      out += line + "\n";
      line = "v";
    }
    line += token;
  }
  out += line + " 0\n";
  return out;
}

}  // namespace ordram::sat
