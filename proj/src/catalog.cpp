#include "polarmac/catalog.hpp"

#include <map>

#include "polarmac/errors.hpp"

namespace polarmac {
namespace {
const char* const k_line = R"json({
  "variables": ["x", "y"],
  "field": {"type": "gfp", "p": 2147483629},
  "seed": 42,
  "resamples": 3,
  "strata": [
    {"name": "S1", "closure": ["y"], "dim": 1}
  ],
  "alpha": {"S1": 1}
}
)json";

const char* const k_hyperbola = R"json({
  "variables": ["x", "y"],
  "field": {"type": "gfp", "p": 2147483629},
  "seed": 42,
  "resamples": 3,
  "strata": [
    {"name": "S1", "closure": ["x*y - 1"], "dim": 1}
  ],
  "alpha": {"S1": 1}
}
)json";

const char* const k_cusp = R"json({
  "variables": ["x", "y"],
  "field": {"type": "gfp", "p": 2147483629},
  "seed": 42,
  "resamples": 3,
  "strata": [
    {"name": "S1", "closure": ["y^2 - x^3"], "dim": 1},
    {"name": "S0", "closure": ["x", "y"], "dim": 0}
  ],
  "alpha": {"S1": 1, "S0": 1},
  "links": {"S0": {"S1": 2}},
  "order": [["S0", "S1"]]
}
)json";

const char* const k_node = R"json({
  "variables": ["x", "y"],
  "field": {"type": "gfp", "p": 2147483629},
  "seed": 42,
  "resamples": 3,
  "strata": [
    {"name": "S1", "closure": ["y^2 - x^3 - x^2"], "dim": 1},
    {"name": "S0", "closure": ["x", "y"], "dim": 0}
  ],
  "alpha": {"S1": 1, "S0": 1},
  "links": {"S0": {"S1": 2}},
  "order": [["S0", "S1"]]
}
)json";

const char* const k_quadric = R"json({
  "variables": ["x", "y", "z"],
  "field": {"type": "gfp", "p": 2147483629},
  "seed": 42,
  "resamples": 3,
  "strata": [
    {"name": "S2", "closure": ["z - x*y"], "dim": 2}
  ],
  "alpha": {"S2": 1}
}
)json";

const char* const k_umbrella = R"json({
  "variables": ["x", "y", "z"],
  "field": {"type": "gfp", "p": 2147483629},
  "seed": 42,
  "resamples": 3,
  "strata": [
    {"name": "S2", "closure": ["x^2 - z*y^2"], "dim": 2},
    {"name": "S1", "closure": ["x", "y"], "dim": 1},
    {"name": "S0", "closure": ["x", "y", "z"], "dim": 0}
  ],
  "alpha": {"S2": 1, "S1": 1, "S0": 1},
  "links": {"S1": {"S2": 2}, "S0": {"S2": -1, "S1": 1}},
  "order": [["S0", "S1"], ["S0", "S2"], ["S1", "S2"]]
}
)json";

const char* const k_point = R"json({
  "variables": ["x", "y"],
  "field": {"type": "gfp", "p": 2147483629},
  "seed": 42,
  "resamples": 3,
  "strata": [
    {"name": "S0", "closure": ["x", "y"], "dim": 0}
  ],
  "alpha": {"S0": 1}
}
)json";

const std::map<std::string, const char*>& table() {
  static const std::map<std::string, const char*> t = {
      {"line", k_line},
      {"hyperbola", k_hyperbola},
      {"cusp", k_cusp},
      {"node", k_node},
      {"quadric", k_quadric},
      {"umbrella", k_umbrella},
      {"point", k_point},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "line", "hyperbola", "cusp", "node", "quadric", "umbrella", "point"};
  return names;
}

const std::string& catalog_text(const std::string& name) {
  static const std::map<std::string, std::string> cache = [] {
    std::map<std::string, std::string> m;
    for (const auto& [key, text] : table()) m.emplace(key, text);
    return m;
  }();
  auto it = cache.find(name);
  if (it == cache.end())
    throw InputError("no catalog entry named '" + name + "'");
  return it->second;
}

ProblemFile catalog_problem(const std::string& name) {
  return parse_problem_text(catalog_text(name), "catalog:" + name);
}

}  // namespace polarmac
