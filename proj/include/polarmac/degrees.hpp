#ifndef POLARMAC_DEGREES_HPP
#define POLARMAC_DEGREES_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polarmac/polar.hpp"
#include "polarmac/zerodim.hpp"

namespace polarmac {

struct ComputeOptions {
  std::uint64_t seed = 42;
  int resamples = 3;
  bool parallel = false;
};

namespace seedtag {
// purpose tags for deterministic seed splitting
constexpr std::uint64_t kPolarDraw = 1;
constexpr std::uint64_t kGysinSlice = 2;
constexpr std::uint64_t kRandomData = 3;
}  // namespace seedtag

/// One attempt at γ_k: either a count or a non-generic verdict.
template <class F>
struct DegreeDraw {
  bool ok = false;
  long long count = 0;
  std::string reason;  // why the draw was rejected
  std::uint64_t seed = 0;
  std::optional<PolarIdeal<F>> polar;
};

/// Draw ω_1..ω_{k+1} and values t_1..t_k, build P_k, and count the distinct
/// points of the fiber of (ω_1,..,ω_k) over (t_1,..,t_k). The same ω prefix
/// is used inside P_k and for the slice. Non-reduced or non-finite slices
/// are rejected as non-generic.
template <class F>
DegreeDraw<F> polar_degree_draw(const Ideal<F>& ideal, int n, int k, Rng& rng) {
  DegreeDraw<F> out;
  const RingPtr<F>& ring = ideal.ring();
  std::vector<GenericForm<F>> forms =
      sample_generic_forms(ring, static_cast<std::size_t>(k) + 1, rng, false);
  std::vector<typename F::Value> values;
  for (int j = 0; j < k; ++j) values.push_back(ring->field.random_nonzero(rng));

  PolarIdeal<F> polar = polar_variety_ideal(ideal, forms, n);
  out.polar = polar;
  if (polar.purity == Purity::kFailed) {
    std::ostringstream os;
    os << "P_" << k << " is not pure " << k << "-dimensional (dim "
       << polar.dims.dimension << ")";
    out.reason = os.str();
    return out;
  }
  if (polar.purity == Purity::kEmpty) {
    out.ok = true;
    out.count = 0;
    return out;
  }

  Ideal<F> slice = polar.ideal;
  if (k > 0) {
    std::vector<Polynomial<F>> eqs;
    for (int j = 0; j < k; ++j) {
      GenericForm<F> affine = forms[static_cast<std::size_t>(j)];
      affine.affine = true;
      affine.constant = values[static_cast<std::size_t>(j)];
      eqs.push_back(affine.affine_equation(ring));
    }
    slice = ideal_sum(slice, eqs);
    DimensionDegree dd = dimension_and_degree(slice);
    if (dd.dimension == -1) {
      out.reason = "generic fiber is empty";
      return out;
    }
    if (dd.dimension != 0) {
      std::ostringstream os;
      os << "generic fiber is not finite (dim " << dd.dimension << ")";
      out.reason = os.str();
      return out;
    }
  }
  long long mult = quotient_dimension(slice);
  long long distinct = distinct_point_count(slice);
  if (mult != distinct) {
    std::ostringstream os;
    os << "fiber is non-reduced (" << mult << " vs " << distinct << " points)";
    out.reason = os.str();
    return out;
  }
  out.ok = true;
  out.count = distinct;
  return out;
}

struct KDiagnostic {
  int k = 0;
  long long gamma = 0;
  std::string purity;     // "pure" | "empty"
  std::string agreement;  // "agreed" | "recovered"
  int draws = 0;
  std::vector<std::uint64_t> seeds;
};

/// Per-stratum polar degree vector [γ_0..γ_n] with diagnostics.
struct PolarProfile {
  std::string name;
  int n = 0;
  std::vector<long long> gamma;
  std::vector<KDiagnostic> diag;
};

/// Agreement protocol: `resamples` independent draws must all be generic and
/// agree; on disagreement the budget doubles once, and a split after that is
/// a hard error (no majority voting).
template <class F>
std::pair<long long, KDiagnostic> polar_degree_agreed(
    const Ideal<F>& ideal, int n, int k, std::uint64_t base_seed,
    std::uint64_t stratum_tag, int resamples,
    std::optional<PolarIdeal<F>>* witness = nullptr) {
  if (resamples < 2) throw InputError("resamples must be at least 2");
  KDiagnostic diag;
  diag.k = k;
  std::vector<DegreeDraw<F>> draws;
  auto run_draw = [&](int d) {
    std::uint64_t s = mix_seed({base_seed, seedtag::kPolarDraw, stratum_tag,
                                static_cast<std::uint64_t>(k),
                                static_cast<std::uint64_t>(d)});
    Rng rng(s);
    DegreeDraw<F> dr = polar_degree_draw(ideal, n, k, rng);
    dr.seed = s;
    diag.seeds.push_back(s);
    draws.push_back(std::move(dr));
  };
  for (int d = 0; d < resamples; ++d) run_draw(d);

  auto all_ok_equal = [&]() {
    for (const auto& d : draws)
      if (!d.ok || d.count != draws.front().count) return false;
    return true;
  };

  bool agreed = all_ok_equal();
  if (!agreed) {
    for (int d = resamples; d < 2 * resamples; ++d) run_draw(d);
    std::vector<long long> generic_counts;
    for (const auto& d : draws)
      if (d.ok) generic_counts.push_back(d.count);
    bool uniform = !generic_counts.empty();
    for (long long c : generic_counts)
      if (c != generic_counts.front()) uniform = false;
    if (!uniform || static_cast<int>(generic_counts.size()) < resamples) {
      std::ostringstream os;
      os << "genericity failure for gamma_" << k << " after "
         << draws.size() << " draws:";
      for (const auto& d : draws) {
        os << " [seed " << d.seed << ": "
           << (d.ok ? "count " + std::to_string(d.count) : d.reason) << "]";
      }
      os << "; re-run with --field rational to rule out a bad prime";
      throw GenericityError(os.str());
    }
  }

  long long gamma = 0;
  for (const auto& d : draws) {
    if (d.ok) {
      gamma = d.count;
      if (witness != nullptr && !witness->has_value()) *witness = d.polar;
    }
  }
  diag.gamma = gamma;
  diag.purity = gamma == 0 ? "empty" : "pure";
  diag.agreement = agreed ? "agreed" : "recovered";
  diag.draws = static_cast<int>(draws.size());
  return {gamma, std::move(diag)};
}

/// Full profile [γ_0..γ_n(X)] for V(I) of dimension n.
template <class F>
PolarProfile polar_profile(const Ideal<F>& ideal, int n, std::string name,
                           std::uint64_t stratum_tag,
                           const ComputeOptions& opts) {
  PolarProfile profile;
  profile.name = std::move(name);
  profile.n = n;
  for (int k = 0; k <= n; ++k) {
    auto [gamma, diag] =
        polar_degree_agreed(ideal, n, k, opts.seed, stratum_tag, opts.resamples);
    profile.gamma.push_back(gamma);
    profile.diag.push_back(std::move(diag));
  }
  return profile;
}

/// Eu(X) = Σ_{k=0}^n (-1)^{n-k} γ_k(X).
inline long long euler_obstruction_from_profile(const PolarProfile& p) {
  long long acc = 0;
  for (int k = 0; k <= p.n; ++k) {
    long long term = p.gamma[static_cast<std::size_t>(k)];
    acc += ((p.n - k) % 2 == 0) ? term : -term;
  }
  return acc;
}

template <class F>
long long global_euler_obstruction(const Ideal<F>& ideal, int n,
                                   const ComputeOptions& opts,
                                   std::uint64_t stratum_tag = 0) {
  return euler_obstruction_from_profile(
      polar_profile(ideal, n, "", stratum_tag, opts));
}

}  // namespace polarmac

#endif
