#include "polarmac/report.hpp"

#include <algorithm>
#include <sstream>
#include <type_traits>

#include "polarmac/cycles.hpp"
#include "polarmac/parse.hpp"

namespace polarmac {
namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Semantic validation: parse the closure generators over the chosen field,
// verify declared dimensions, build the stratified space, and index the
// link matrix.
// ---------------------------------------------------------------------------
template <class F>
struct Validated {
  RingPtr<F> ring;
  StratifiedSpace<F> space;
  LinkMatrix links;
  std::optional<ConstructibleData> alpha;
  std::optional<ConstructibleData> eta;
};

template <class F>
Validated<F> validate_problem(const ProblemFile& p, F field) {
  Validated<F> v;
  v.ring = make_ring(std::move(field), p.variables);

  std::vector<Stratum<F>> strata;
  for (const auto& spec : p.strata) {
    std::vector<Polynomial<F>> gens;
    for (const auto& text : spec.closure) {
      try {
        gens.push_back(parse_polynomial<F>(text, v.ring));
      } catch (const InputError& e) {
        throw InputError("stratum '" + spec.name + "', generator \"" + text +
                         "\": " + e.what());
      }
    }
    strata.push_back(Stratum<F>{spec.name, Ideal<F>(v.ring, std::move(gens)),
                                spec.dim});
  }
  v.space = StratifiedSpace<F>::build(v.ring, std::move(strata), p.order);

  for (const auto& [lo, row] : p.links) {
    int i = v.space.index_of(lo);
    for (const auto& [hi, value] : row) {
      int j = v.space.index_of(hi);
      if (!v.space.less(static_cast<std::size_t>(i), static_cast<std::size_t>(j)))
        throw InputError("link entry " + lo + " -> " + hi +
                         " does not match a closure-order pair");
      v.links.entries[{static_cast<std::size_t>(i),
                       static_cast<std::size_t>(j)}] = value;
    }
  }

  auto to_values = [&](const std::map<std::string, long long>& m,
                       ConstructibleData::Basis basis) {
    ConstructibleData d{basis, std::vector<long long>(v.space.size(), 0)};
    for (const auto& [name, value] : m)
      d.values[static_cast<std::size_t>(v.space.index_of(name))] = value;
    return d;
  };
  if (p.alpha) v.alpha = to_values(*p.alpha, ConstructibleData::Basis::kAlpha);
  if (p.eta) v.eta = to_values(*p.eta, ConstructibleData::Basis::kEta);
  return v;
}

template <class F>
ConstructibleData need_eta(const Validated<F>& v) {
  if (v.eta) return *v.eta;
  if (v.alpha) return eta_from_alpha(v.space, *v.alpha, v.links);
  throw InputError(
      "this command needs constructible data: supply 'alpha' (with links) or 'eta'");
}

// ---------------------------------------------------------------------------
// JSON assembly
// ---------------------------------------------------------------------------
ordered_json field_json(const FieldSpec& f) {
  ordered_json j;
  if (f.kind == FieldSpec::Kind::kRational) {
    j["type"] = "rational";
  } else {
    j["type"] = "gfp";
    j["p"] = f.p;
  }
  return j;
}

ordered_json diag_json(const KDiagnostic& d) {
  ordered_json j;
  j["k"] = d.k;
  j["gamma"] = d.gamma;
  j["purity"] = d.purity;
  j["agreement"] = d.agreement;
  j["draws"] = d.draws;
  j["seeds"] = d.seeds;
  return j;
}

ordered_json profile_json(const PolarProfile& p, int declared_dim) {
  ordered_json j;
  j["stratum"] = p.name;
  j["dim"] = declared_dim;
  j["gamma"] = p.gamma;
  ordered_json per_k = ordered_json::array();
  for (const auto& d : p.diag) per_k.push_back(diag_json(d));
  j["per_k"] = per_k;
  return j;
}

template <class F>
ordered_json echo_problem(const ProblemFile& p, const FieldSpec& field,
                          std::uint64_t seed, int resamples,
                          const Validated<F>& v) {
  ordered_json j;
  j["variables"] = p.variables;
  j["field"] = field_json(field);
  j["seed"] = seed;
  j["resamples"] = resamples;
  ordered_json strata = ordered_json::array();
  for (const auto& s : p.strata) {
    ordered_json sj;
    sj["name"] = s.name;
    sj["closure"] = s.closure;
    sj["dim"] = s.dim;
    strata.push_back(sj);
  }
  j["strata"] = strata;
  if (p.alpha) j["alpha"] = *p.alpha;
  if (p.eta) j["eta"] = *p.eta;
  if (!p.links.empty()) j["links"] = p.links;
  ordered_json order = ordered_json::array();
  for (const auto& [lo, hi] : v.space.order_pairs())
    order.push_back(ordered_json::array({lo, hi}));
  j["order"] = order;
  return j;
}

void attach_validation(ordered_json& report,
                       const std::vector<PolarProfile>& profiles) {
  ordered_json val;
  val["order"] = "ok";
  if (profiles.empty()) {
    val["purity"] = "n/a";
    val["agreement"] = "n/a";
  } else {
    bool recovered = false;
    for (const auto& p : profiles)
      for (const auto& d : p.diag)
        if (d.agreement != "agreed") recovered = true;
    val["purity"] = "ok";
    val["agreement"] = recovered ? "recovered" : "agreed";
  }
  report["validation"] = val;
}

// ---------------------------------------------------------------------------
// Property suite for `check`
// ---------------------------------------------------------------------------
struct PropertyResult {
  std::string name;
  std::string status;  // pass | fail | skip
  std::string detail;
};

template <class F>
std::vector<PropertyResult> run_property_suite(const ProblemFile& problem,
                                               const Validated<F>& v,
                                               const FieldSpec& field,
                                               const ComputeOptions& opts);

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------
template <class F>
RunResult run_typed(const ProblemFile& problem, const RunOptions& options,
                    F field_impl, const FieldSpec& field, std::uint64_t seed,
                    int resamples, bool retried) {
  Validated<F> v = validate_problem(problem, std::move(field_impl));
  ComputeOptions opts{seed, resamples, options.parallel};

  ordered_json report;
  report["tool"] = "polarmac";
  report["command"] = options.command;
  report["problem"] = echo_problem(problem, field, seed, resamples, v);
  report["field_retried"] = retried;

  std::vector<PolarProfile> computed_profiles;
  ordered_json outputs;
  int exit_code = 0;

  if (options.command == "profile") {
    computed_profiles = stratum_profiles(v.space, opts);
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < computed_profiles.size(); ++i)
      arr.push_back(
          profile_json(computed_profiles[i], v.space.strata()[i].dim));
    outputs["profiles"] = arr;
  } else if (options.command == "eu") {
    std::size_t top = v.space.top_stratum();
    const Stratum<F>& s = v.space.strata()[top];
    PolarProfile prof = polar_profile(s.closure, s.dim, s.name,
                                      static_cast<std::uint64_t>(top), opts);
    outputs["stratum"] = s.name;
    outputs["gamma"] = prof.gamma;
    outputs["eu"] = euler_obstruction_from_profile(prof);
    computed_profiles.push_back(std::move(prof));
  } else if (options.command == "eulerfn") {
    std::size_t top = v.space.top_stratum();
    ConstructibleData eu = euler_obstruction_function(v.space, v.links, top);
    outputs["target"] = v.space.strata()[top].name;
    ordered_json values = ordered_json::array();
    for (std::size_t i = 0; i < v.space.size(); ++i) {
      ordered_json e;
      e["stratum"] = v.space.strata()[i].name;
      e["eu"] = eu.values[i];
      values.push_back(e);
    }
    outputs["values"] = values;
  } else if (options.command == "chi") {
    ConstructibleData eta = need_eta(v);
    computed_profiles = stratum_profiles(v.space, opts);
    std::vector<long long> gamma_alpha =
        generalized_degrees_from_profiles(v.space, eta, computed_profiles);
    EulerCharacteristics chi = euler_characteristics_from_degrees(gamma_alpha);
    outputs["gamma_alpha"] = gamma_alpha;
    outputs["chi_slices"] = chi.chi_slices;
    outputs["chi"] = chi.chi;
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < computed_profiles.size(); ++i)
      arr.push_back(
          profile_json(computed_profiles[i], v.space.strata()[i].dim));
    outputs["profiles"] = arr;
  } else if (options.command == "cycle") {
    ConstructibleData eta = need_eta(v);
    MacPhersonCycle<F> cycle =
        macpherson_cycle(v.space, eta, options.cycle_k, opts);
    outputs["k"] = cycle.k;
    ordered_json terms = ordered_json::array();
    for (const auto& t : cycle.terms) {
      ordered_json tj;
      tj["stratum"] = t.stratum;
      tj["coefficient"] = t.coefficient;
      tj["gamma_k"] = t.gamma_k;
      tj["status"] = t.status;
      ordered_json gens = ordered_json::array();
      if (t.polar)
        for (const auto& g : t.polar->ideal.groebner_basis())
          gens.push_back(g.str());
      tj["polar_generators"] = gens;
      terms.push_back(tj);
    }
    outputs["terms"] = terms;
    outputs["gamma_alpha_k"] = cycle.gamma_alpha_k;
  } else if (options.command == "check") {
    std::vector<PropertyResult> props =
        run_property_suite(problem, v, field, opts);
    ordered_json arr = ordered_json::array();
    bool all_pass = true;
    for (const auto& p : props) {
      ordered_json pj;
      pj["name"] = p.name;
      pj["status"] = p.status;
      pj["detail"] = p.detail;
      arr.push_back(pj);
      if (p.status == "fail") all_pass = false;
    }
    outputs["properties"] = arr;
    outputs["all_pass"] = all_pass;
    if (!all_pass) exit_code = 5;
  } else {
    throw InputError("unknown command '" + options.command + "'");
  }

  report["outputs"] = outputs;
  attach_validation(report, computed_profiles);
  report["status"] = exit_code == 0 ? "ok" : "fail";
  return {std::move(report), exit_code};
}

// ---------------------------------------------------------------------------
// Property implementations
// ---------------------------------------------------------------------------
template <class F>
std::vector<PropertyResult> run_property_suite(const ProblemFile& problem,
                                               const Validated<F>& v,
                                               const FieldSpec& field,
                                               const ComputeOptions& opts) {
  std::vector<PropertyResult> out;
  // Re-verify every basis computed while the suite runs.
  gbcert::Guard guard(true);

  auto run = [&](const std::string& name, auto&& body) {
    PropertyResult r;
    r.name = name;
    try {
      r = body();
      r.name = name;
    } catch (const GenericityError& e) {
      r.status = "fail";
      r.detail = e.what();
    } catch (const InputError& e) {
      r.status = "fail";
      r.detail = e.what();
    } catch (const EngineError& e) {
      r.status = "fail";
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  };

  const bool single = v.space.size() == 1;
  const bool links_ok = [&] {
    for (std::size_t i = 0; i < v.space.size(); ++i)
      for (std::size_t j = 0; j < v.space.size(); ++j)
        if (v.space.less(i, j) && !v.links.has(i, j)) return false;
    return true;
  }();

  std::vector<PolarProfile> profiles;

  run("order-inference", [&]() -> PropertyResult {
    return {"", "pass", "declared order matches the closure-containment order"};
  });

  run("resample-agreement", [&]() -> PropertyResult {
    profiles = stratum_profiles(v.space, opts);
    bool recovered = false;
    for (const auto& p : profiles)
      for (const auto& d : p.diag)
        if (d.agreement != "agreed") recovered = true;
    return {"", "pass",
            recovered ? "all draws agree (some after extra resamples)"
                      : "all draws agree"};
  });

  run("purity", [&]() -> PropertyResult {
    if (profiles.empty()) return {"", "skip", "profiles unavailable"};
    for (const auto& p : profiles)
      for (const auto& d : p.diag)
        if (d.purity != "pure" && d.purity != "empty")
          return {"", "fail", "non-pure polar variety in " + p.name};
    return {"", "pass", "every polar variety is pure of its index or empty"};
  });

  run("two-prime-agreement", [&]() -> PropertyResult {
    if constexpr (std::is_same_v<F, GfpField>) {
      if (profiles.empty()) return {"", "skip", "profiles unavailable"};
      Validated<F> alt =
          validate_problem(problem, GfpField(field.alternate_prime()));
      std::vector<PolarProfile> alt_profiles = stratum_profiles(alt.space, opts);
      for (std::size_t i = 0; i < profiles.size(); ++i) {
        if (profiles[i].gamma != alt_profiles[i].gamma)
          return {"", "fail",
                  "gamma vectors differ between primes for stratum " +
                      profiles[i].name};
      }
      return {"", "pass",
              "gamma vectors agree over p=" + std::to_string(field.p) +
                  " and p=" + std::to_string(field.alternate_prime())};
    } else {
      return {"", "skip", "only meaningful over a prime field"};
    }
  });

  run("alpha-eta-roundtrip", [&]() -> PropertyResult {
    if (!single && !links_ok)
      return {"", "skip", "needs the full link matrix"};
    Rng rng(mix_seed({opts.seed, seedtag::kRandomData, 1}));
    for (int trial = 0; trial < 100; ++trial) {
      ConstructibleData alpha{ConstructibleData::Basis::kAlpha, {}};
      for (std::size_t i = 0; i < v.space.size(); ++i)
        alpha.values.push_back(static_cast<long long>(rng.below(19)) - 9);
      ConstructibleData eta = eta_from_alpha(v.space, alpha, v.links);
      ConstructibleData back = alpha_from_eta(v.space, eta, v.links);
      if (back.values != alpha.values)
        return {"", "fail", "alpha -> eta -> alpha is not the identity"};
      ConstructibleData eta2 =
          eta_from_alpha(v.space, alpha_from_eta(v.space, eta, v.links), v.links);
      if (eta2.values != eta.values)
        return {"", "fail", "eta -> alpha -> eta is not the identity"};
    }
    return {"", "pass", "100 randomized round trips are exact"};
  });

  run("gysin-slicing", [&]() -> PropertyResult {
    if (v.space.top_dim() < 1)
      return {"", "skip", "needs a stratum of positive dimension"};
    if (!single && !links_ok)
      return {"", "skip", "needs the full link matrix"};
    if (profiles.empty()) return {"", "skip", "profiles unavailable"};
    SlicedSpace<F> sliced = slice_space(v.space, opts.seed);
    std::vector<PolarProfile> sliced_profiles =
        stratum_profiles(sliced.space, opts);
    Rng rng(mix_seed({opts.seed, seedtag::kRandomData, 2}));
    for (int trial = 0; trial < 5; ++trial) {
      ConstructibleData alpha{ConstructibleData::Basis::kAlpha, {}};
      for (std::size_t i = 0; i < v.space.size(); ++i)
        alpha.values.push_back(static_cast<long long>(rng.below(19)) - 9);
      ConstructibleData eta = eta_from_alpha(v.space, alpha, v.links);
      std::vector<long long> gamma =
          generalized_degrees_from_profiles(v.space, eta, profiles);
      ConstructibleData sliced_eta{ConstructibleData::Basis::kEta, {}};
      for (std::size_t idx : sliced.kept)
        sliced_eta.values.push_back(eta.values[idx]);
      std::vector<long long> sliced_gamma = generalized_degrees_from_profiles(
          sliced.space, sliced_eta, sliced_profiles);
      for (int k = 1; k <= v.space.top_dim(); ++k) {
        if (-gamma[static_cast<std::size_t>(k)] !=
            sliced_gamma[static_cast<std::size_t>(k) - 1])
          return {"", "fail",
                  "slice identity fails at k=" + std::to_string(k) +
                      " on trial " + std::to_string(trial)};
      }
    }
    return {"", "pass",
            "one generic hyperplane slice satisfies the degree-shift identity "
            "for 5 randomized weights"};
  });

  run("smooth-consistency", [&]() -> PropertyResult {
    if (!single) return {"", "skip", "only for single-stratum spaces"};
    const Stratum<F>& s = v.space.strata()[0];
    ConstructibleData ones{ConstructibleData::Basis::kAlpha,
                           std::vector<long long>(1, 1)};
    ConstructibleData eta = eta_from_alpha(v.space, ones, v.links);
    std::vector<long long> gamma = profiles.empty()
        ? generalized_degrees(v.space, eta, opts)
        : generalized_degrees_from_profiles(v.space, eta, profiles);
    long long chi = euler_characteristics_from_degrees(gamma).chi;
    long long eu = profiles.empty()
        ? global_euler_obstruction(s.closure, s.dim, opts)
        : euler_obstruction_from_profile(profiles[0]);
    if (chi != eu)
      return {"", "fail",
              "chi(X,1) = " + std::to_string(chi) + " but Eu(X) = " +
                  std::to_string(eu)};
    return {"", "pass", "chi(X,1) equals Eu(X) = " + std::to_string(eu)};
  });

  run("index-formula", [&]() -> PropertyResult {
    if (!v.space.pure_dimensional())
      return {"", "skip", "X is not the closure of a single top stratum"};
    if (!single && !links_ok)
      return {"", "skip", "needs the full link matrix"};
    if (profiles.empty()) return {"", "skip", "profiles unavailable"};
    std::size_t top = v.space.top_stratum();
    ConstructibleData eu_fn = euler_obstruction_function(v.space, v.links, top);
    ConstructibleData eta = eta_from_alpha(v.space, eu_fn, v.links);
    std::vector<long long> gamma =
        generalized_degrees_from_profiles(v.space, eta, profiles);
    long long chi = euler_characteristics_from_degrees(gamma).chi;
    long long eu = euler_obstruction_from_profile(profiles[top]);
    if (chi != eu)
      return {"", "fail",
              "chi(X,Eu) = " + std::to_string(chi) + " but Eu(X) = " +
                  std::to_string(eu)};
    return {"", "pass",
            "chi(X,Eu) equals Eu(X) = " + std::to_string(eu)};
  });

  run("buchberger-certificate", [&]() -> PropertyResult {
    // compute fresh bases (bypassing caches) with certification enabled
    for (const auto& s : v.space.strata()) {
      Ideal<F> fresh(v.ring, s.closure.generators());
      fresh.groebner_basis();
      fresh.groebner_basis(MonomialOrder::lex());
    }
    return {"", "pass",
            "all bases computed during this run verified their certificates"};
  });

  return out;
}

}  // namespace

RunResult run_command(const ProblemFile& problem, const RunOptions& options) {
  FieldSpec field = options.field.value_or(problem.field);
  std::uint64_t seed = options.seed.value_or(problem.seed);
  int resamples = options.resamples.value_or(problem.resamples);
  if (resamples < 2) throw InputError("resamples must be at least 2");
  if (options.command == "cycle" && options.cycle_k < 0)
    throw InputError("cycle needs a non-negative -k index");

  if (field.kind == FieldSpec::Kind::kRational) {
    return run_typed<RationalField>(problem, options, RationalField(), field,
                                    seed, resamples, false);
  }
  try {
    return run_typed<GfpField>(problem, options, GfpField(field.p), field, seed,
                               resamples, false);
  } catch (const BadPrimeError& first) {
    FieldSpec alt = FieldSpec::prime(field.alternate_prime());
    try {
      return run_typed<GfpField>(problem, options, GfpField(alt.p), alt, seed,
                                 resamples, true);
    } catch (const BadPrimeError& second) {
      throw BadPrimeError(std::string("both working primes failed: [") +
                          first.what() + "] then [" + second.what() + "]");
    }
  }
}

std::string render_text(const nlohmann::ordered_json& report) {
  std::ostringstream os;
  const std::string command = report.at("command").get<std::string>();
  os << "polarmac " << command << " over "
     << report.at("problem").at("field").at("type").get<std::string>();
  if (report.at("problem").at("field").contains("p"))
    os << " p=" << report.at("problem").at("field").at("p").get<std::uint64_t>();
  os << ", seed " << report.at("problem").at("seed").get<std::uint64_t>() << "\n";

  const auto& outputs = report.at("outputs");
  auto print_profiles = [&os](const nlohmann::ordered_json& arr) {
    for (const auto& p : arr) {
      os << "  " << p.at("stratum").get<std::string>() << " (dim "
         << p.at("dim").get<int>() << "): gamma = [";
      bool first = true;
      for (const auto& g : p.at("gamma")) {
        if (!first) os << ", ";
        os << g.get<long long>();
        first = false;
      }
      os << "]\n";
    }
  };

  if (command == "profile") {
    os << "polar degree profiles:\n";
    print_profiles(outputs.at("profiles"));
  } else if (command == "eu") {
    os << "Eu(" << outputs.at("stratum").get<std::string>()
       << " closure) = " << outputs.at("eu").get<long long>() << "  (gamma = [";
    bool first = true;
    for (const auto& g : outputs.at("gamma")) {
      if (!first) os << ", ";
      os << g.get<long long>();
      first = false;
    }
    os << "])\n";
  } else if (command == "eulerfn") {
    os << "local Euler obstruction of the closure of "
       << outputs.at("target").get<std::string>() << ":\n";
    for (const auto& e : outputs.at("values"))
      os << "  " << e.at("stratum").get<std::string>() << ": "
         << e.at("eu").get<long long>() << "\n";
  } else if (command == "chi") {
    os << "gamma(alpha) = [";
    bool first = true;
    for (const auto& g : outputs.at("gamma_alpha")) {
      if (!first) os << ", ";
      os << g.get<long long>();
      first = false;
    }
    os << "]\nchi slices = [";
    first = true;
    for (const auto& g : outputs.at("chi_slices")) {
      if (!first) os << ", ";
      os << g.get<long long>();
      first = false;
    }
    os << "]\nchi(X, alpha) = " << outputs.at("chi").get<long long>() << "\n";
  } else if (command == "cycle") {
    os << "MacPherson cycle k=" << outputs.at("k").get<int>() << ":\n";
    for (const auto& t : outputs.at("terms")) {
      os << "  " << t.at("stratum").get<std::string>() << ": coeff "
         << t.at("coefficient").get<long long>() << ", gamma_k "
         << t.at("gamma_k").get<long long>() << " ("
         << t.at("status").get<std::string>() << ")";
      if (!t.at("polar_generators").empty()) {
        os << " P_k = (";
        bool first = true;
        for (const auto& g : t.at("polar_generators")) {
          if (!first) os << ", ";
          os << g.get<std::string>();
          first = false;
        }
        os << ")";
      }
      os << "\n";
    }
    os << "gamma_alpha_k = " << outputs.at("gamma_alpha_k").get<long long>()
       << "\n";
  } else if (command == "check") {
    for (const auto& p : outputs.at("properties"))
      os << "  [" << p.at("status").get<std::string>() << "] "
         << p.at("name").get<std::string>() << ": "
         << p.at("detail").get<std::string>() << "\n";
    os << (outputs.at("all_pass").get<bool>() ? "all properties passed"
                                              : "PROPERTY FAILURES") << "\n";
  }
  os << "status: " << report.at("status").get<std::string>() << "\n";
  return os.str();
}

}  // namespace polarmac
