#pragma once

#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "xdhh/core/errors.hpp"
#include "xdhh/core/rng.hpp"

namespace xdhh {

struct Literal {
  int var;        // 0-based
  bool positive;  // true for x, false for not-x
};

struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<Literal>> clauses;

  int num_clauses() const { return static_cast<int>(clauses.size()); }
};

// DIMACS CNF: comment lines start with 'c', the header is "p cnf <vars>
// <clauses>", clauses are 0-terminated literal runs. A trailing SATLIB-style
// "%" end marker (followed by a lone 0) is tolerated.
inline CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  CnfFormula f;
  long long declared_clauses = -1;

  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (first == "c" || first[0] == 'c') continue;
    if (first != "p") raise(Errc::MalformedHeader, "expected 'p cnf' header, got '" + first + "'");
    std::string fmt;
    long long vars = -1;
    if (!(ls >> fmt >> vars >> declared_clauses) || fmt != "cnf" || vars < 0 ||
        declared_clauses < 0)
      raise(Errc::MalformedHeader, "bad 'p cnf' header line: '" + line + "'");
    f.num_vars = static_cast<int>(vars);
    break;
  }
  if (declared_clauses < 0) raise(Errc::MalformedHeader, "missing 'p cnf' header");

  std::vector<Literal> clause;
  std::string tok;
  bool done = false;
  while (in >> tok) {
    if (tok[0] == 'c' && clause.empty() && !done) {  // comment amid clauses
      std::getline(in, line);
      continue;
    }
    if (tok == "%") {
      if (!clause.empty()) raise(Errc::UnterminatedClause, "clause open at end marker");
      done = true;
      continue;
    }
    char* end = nullptr;
    long long lit = std::strtoll(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0')
      raise(Errc::MalformedHeader, "non-numeric token '" + tok + "' in clause data");
    if (lit == 0) {
      if (done) continue;  // the lone 0 after the SATLIB end marker
      if (clause.empty()) raise(Errc::MalformedHeader, "empty clause");
      f.clauses.push_back(clause);
      clause.clear();
      continue;
    }
    if (done) raise(Errc::MalformedHeader, "literal after end marker");
    long long v = lit > 0 ? lit : -lit;
    if (v > f.num_vars)
      raise(Errc::LiteralOutOfRange, "literal " + std::to_string(lit) + " exceeds declared " +
                                         std::to_string(f.num_vars) + " variables");
    clause.push_back({static_cast<int>(v - 1), lit > 0});
  }
  if (!clause.empty()) raise(Errc::UnterminatedClause, "last clause is missing its 0 terminator");
  if (f.num_clauses() != declared_clauses)
    raise(Errc::MalformedHeader, "header declares " + std::to_string(declared_clauses) +
                                     " clauses but file holds " + std::to_string(f.num_clauses()));
  return f;
}

inline std::string to_dimacs(const CnfFormula& f) {
  std::string out = "p cnf " + std::to_string(f.num_vars) + " " +
                    std::to_string(f.num_clauses()) + "\n";
  for (const auto& clause : f.clauses) {
    for (const auto& lit : clause) {
      out += std::to_string(lit.positive ? lit.var + 1 : -(lit.var + 1));
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

// Uniform random 3-SAT: round(clause_ratio * vars) clauses of three distinct
// variables with independent random polarities.
inline CnfFormula generate_random_3sat(int vars, double clause_ratio, std::uint64_t seed) {
  if (vars < 3) raise(Errc::InvalidArgument, "3-SAT generation needs at least 3 variables");
  if (clause_ratio <= 0) raise(Errc::InvalidArgument, "clause ratio must be positive");
  Rng rng(seed);
  CnfFormula f;
  f.num_vars = vars;
  auto clauses = static_cast<std::size_t>(clause_ratio * vars + 0.5);
  f.clauses.reserve(clauses);
  for (std::size_t c = 0; c < clauses; ++c) {
    std::vector<Literal> clause;
    for (std::size_t v : sample_distinct(rng, static_cast<std::size_t>(vars), 3))
      clause.push_back({static_cast<int>(v), rng.next_bool()});
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

}  // namespace xdhh
