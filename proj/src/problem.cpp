#include "polarmac/problem.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "polarmac/errors.hpp"

namespace polarmac {
namespace {

using nlohmann::json;

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw InputError(origin + ": " + what);
}

FieldSpec parse_field(const json& j, const std::string& origin) {
  if (!j.is_object()) fail(origin, "'field' must be an object");
  std::string type = j.value("type", "");
  if (type == "rational") {
    if (j.size() != 1) fail(origin, "'field' of type rational takes no other keys");
    return FieldSpec::rational();
  }
  if (type == "gfp") {
    if (!j.contains("p") || !j["p"].is_number_unsigned())
      fail(origin, "'field' of type gfp needs an unsigned prime 'p'");
    std::uint64_t p = j["p"].get<std::uint64_t>();
    if (!is_prime_u64(p) || p < (1ULL << 20) || p >= (1ULL << 32))
      fail(origin, "'p' must be a prime in (2^20, 2^32)");
    return FieldSpec::prime(p);
  }
  fail(origin, "'field.type' must be \"gfp\" or \"rational\"");
}

}  // namespace

ProblemFile parse_problem_text(const std::string& text,
                               const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(origin, "top level must be a JSON object");

  static const std::set<std::string> known{
      "variables", "field", "seed", "resamples", "strata",
      "alpha",     "eta",   "links", "order"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) fail(origin, "unknown key '" + key + "'");

  ProblemFile p;

  if (!j.contains("variables") || !j["variables"].is_array() ||
      j["variables"].empty())
    fail(origin, "'variables' must be a nonempty array of names");
  std::set<std::string> seen_vars;
  for (const auto& v : j["variables"]) {
    if (!v.is_string() || !valid_identifier(v.get<std::string>()))
      fail(origin, "variable names must be identifiers");
    if (!seen_vars.insert(v.get<std::string>()).second)
      fail(origin, "duplicate variable '" + v.get<std::string>() + "'");
    p.variables.push_back(v.get<std::string>());
  }

  p.field = j.contains("field") ? parse_field(j["field"], origin)
                                : FieldSpec::prime(FieldSpec::kDefaultPrime);

  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) fail(origin, "'seed' must be unsigned");
    p.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("resamples")) {
    if (!j["resamples"].is_number_integer() || j["resamples"].get<int>() < 2)
      fail(origin, "'resamples' must be an integer >= 2");
    p.resamples = j["resamples"].get<int>();
  }

  if (!j.contains("strata") || !j["strata"].is_array() || j["strata"].empty())
    fail(origin, "'strata' must be a nonempty array");
  std::set<std::string> names;
  for (const auto& s : j["strata"]) {
    if (!s.is_object()) fail(origin, "each stratum must be an object");
    for (const auto& [key, _] : s.items())
      if (key != "name" && key != "closure" && key != "dim")
        fail(origin, "unknown stratum key '" + key + "'");
    ProblemFile::StratumSpec spec;
    if (!s.contains("name") || !s["name"].is_string())
      fail(origin, "stratum needs a string 'name'");
    spec.name = s["name"].get<std::string>();
    if (spec.name.empty()) fail(origin, "stratum names must be nonempty");
    if (!names.insert(spec.name).second)
      fail(origin, "duplicate stratum name '" + spec.name + "'");
    if (!s.contains("closure") || !s["closure"].is_array() ||
        s["closure"].empty())
      fail(origin, "stratum '" + spec.name +
                       "' needs a nonempty 'closure' generator array");
    for (const auto& g : s["closure"]) {
      if (!g.is_string())
        fail(origin, "closure generators must be polynomial strings");
      spec.closure.push_back(g.get<std::string>());
    }
    if (!s.contains("dim") || !s["dim"].is_number_integer() ||
        s["dim"].get<int>() < 0)
      fail(origin, "stratum '" + spec.name + "' needs an integer 'dim' >= 0");
    spec.dim = s["dim"].get<int>();
    p.strata.push_back(std::move(spec));
  }

  auto read_values = [&](const char* key) {
    std::map<std::string, long long> out;
    const json& block = j[key];
    if (!block.is_object())
      fail(origin, std::string("'") + key + "' must map stratum names to integers");
    for (const auto& [name, value] : block.items()) {
      if (!names.count(name))
        fail(origin, std::string("'") + key + "' names unknown stratum '" + name + "'");
      if (!value.is_number_integer())
        fail(origin, std::string("'") + key + "' values must be integers");
      out[name] = value.get<long long>();
    }
    if (out.size() != names.size())
      fail(origin, std::string("'") + key + "' must assign a value to every stratum");
    return out;
  };

  if (j.contains("alpha") && j.contains("eta"))
    fail(origin, "'alpha' and 'eta' are mutually exclusive");
  if (j.contains("alpha")) p.alpha = read_values("alpha");
  if (j.contains("eta")) p.eta = read_values("eta");

  if (j.contains("links")) {
    if (!j["links"].is_object()) fail(origin, "'links' must be an object");
    for (const auto& [lo, row] : j["links"].items()) {
      if (!names.count(lo))
        fail(origin, "'links' names unknown stratum '" + lo + "'");
      if (!row.is_object())
        fail(origin, "'links." + lo + "' must map strata to integers");
      for (const auto& [hi, value] : row.items()) {
        if (!names.count(hi))
          fail(origin, "'links." + lo + "' names unknown stratum '" + hi + "'");
        if (!value.is_number_integer())
          fail(origin, "link values must be integers");
        p.links[lo][hi] = value.get<long long>();
      }
    }
  }
  if (p.alpha && p.strata.size() > 1 && p.links.empty())
    fail(origin,
         "'alpha' on a multi-stratum space requires the 'links' matrix");

  if (j.contains("order")) {
    if (!j["order"].is_array()) fail(origin, "'order' must be an array of pairs");
    std::set<std::pair<std::string, std::string>> order;
    for (const auto& pair : j["order"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          !pair[1].is_string())
        fail(origin, "'order' entries must be [low, high] name pairs");
      std::string lo = pair[0].get<std::string>();
      std::string hi = pair[1].get<std::string>();
      if (!names.count(lo) || !names.count(hi))
        fail(origin, "'order' names an unknown stratum");
      order.insert({std::move(lo), std::move(hi)});
    }
    p.order = std::move(order);
  }

  return p;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open problem file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str(), path);
}

}  // namespace polarmac
