#ifndef POLARMAC_PROBLEM_HPP
#define POLARMAC_PROBLEM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polarmac/field.hpp"

namespace polarmac {

/// Parsed problem file. Polynomials stay as strings in the shared grammar;
/// they are evaluated once the coefficient field is fixed.
struct ProblemFile {
  struct StratumSpec {
    std::string name;
    std::vector<std::string> closure;
    int dim = 0;
  };

  std::vector<std::string> variables;
  FieldSpec field;
  std::uint64_t seed = 42;
  int resamples = 3;
  std::vector<StratumSpec> strata;
  std::optional<std::map<std::string, long long>> alpha;
  std::optional<std::map<std::string, long long>> eta;
  // links[S][S'] = χ(l_S ∩ S') for pairs S < S'
  std::map<std::string, std::map<std::string, long long>> links;
  std::optional<std::set<std::pair<std::string, std::string>>> order;
};

/// Reads and validates a problem file (schema-level checks only; polynomial
/// parsing and dimension verification happen when a command runs).
ProblemFile load_problem(const std::string& path);

/// Same, from in-memory JSON text.
ProblemFile parse_problem_text(const std::string& text,
                               const std::string& origin = "<memory>");

}  // namespace polarmac

#endif
