#ifndef POLARMAC_CYCLES_HPP
#define POLARMAC_CYCLES_HPP

#include <future>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polarmac/degrees.hpp"

namespace polarmac {

template <class F>
struct Stratum {
  std::string name;
  Ideal<F> closure;  // ideal of the closure in C^N
  int dim = 0;
};

/// Ambient dimension, strata, and the closure partial order S < S'
/// (S contained in the closure of S').
template <class F>
class StratifiedSpace {
 public:
  enum class DimCheck { kStrict, kGeneric };

  /// Builds the space, inferring the partial order from generator
  /// membership: S < S' when every generator of I(S̄') lies in I(S̄).
  /// When `expected_order` is supplied it must match the inferred one.
  static StratifiedSpace build(
      RingPtr<F> ring, std::vector<Stratum<F>> strata,
      const std::optional<std::set<std::pair<std::string, std::string>>>&
          expected_order = std::nullopt,
      DimCheck mode = DimCheck::kStrict) {
    StratifiedSpace sp;
    sp.ring_ = std::move(ring);
    sp.strata_ = std::move(strata);
    if (sp.strata_.empty()) throw InputError("a space needs at least one stratum");

    std::set<std::string> names;
    for (const auto& s : sp.strata_) {
      if (!names.insert(s.name).second)
        throw InputError("duplicate stratum name '" + s.name + "'");
      if (s.dim < 0) throw InputError("stratum dimension must be non-negative");
      DimensionDegree dd = dimension_and_degree(s.closure);
      if (dd.dimension != s.dim) {
        std::string msg = "stratum '" + s.name + "': declared dim " +
                          std::to_string(s.dim) + " but computed dim " +
                          std::to_string(dd.dimension);
        if (mode == DimCheck::kStrict) throw InputError(msg);
        throw GenericityError(msg);
      }
      sp.top_ = std::max(sp.top_, s.dim);
    }
    if (static_cast<std::size_t>(sp.top_) >= sp.ring_->nvars())
      throw InputError("top stratum dimension must be below the ambient dimension");

    const std::size_t n = sp.strata_.size();
    sp.less_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        // closure containment: I(S̄_j) ⊆ I(S̄_i)
        bool contained = true;
        for (const auto& g : sp.strata_[j].closure.generators()) {
          if (!sp.strata_[i].closure.contains(g)) {
            contained = false;
            break;
          }
        }
        sp.less_[i][j] = contained;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!sp.less_[i][j]) continue;
        if (sp.less_[j][i])
          throw InputError("strata '" + sp.strata_[i].name + "' and '" +
                           sp.strata_[j].name + "' have equal closures");
        if (sp.strata_[i].dim >= sp.strata_[j].dim)
          throw InputError("stratum '" + sp.strata_[i].name +
                           "' lies in the closure of '" + sp.strata_[j].name +
                           "' but does not have smaller dimension");
      }
    }
    if (expected_order) {
      std::set<std::pair<std::string, std::string>> inferred;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (sp.less_[i][j])
            inferred.insert({sp.strata_[i].name, sp.strata_[j].name});
      if (inferred != *expected_order)
        throw InputError(
            "supplied stratum order does not match the inferred closure order");
    }
    return sp;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Stratum<F>>& strata() const { return strata_; }
  std::size_t size() const { return strata_.size(); }
  int top_dim() const { return top_; }
  bool less(std::size_t i, std::size_t j) const { return less_[i][j]; }

  std::vector<std::pair<std::string, std::string>> order_pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (less_[i][j]) out.push_back({strata_[i].name, strata_[j].name});
    return out;
  }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < strata_.size(); ++i)
      if (strata_[i].name == name) return static_cast<int>(i);
    return -1;
  }

  /// The unique stratum of maximal dimension (errors on a tie).
  std::size_t top_stratum() const {
    int found = -1;
    for (std::size_t i = 0; i < strata_.size(); ++i) {
      if (strata_[i].dim == top_) {
        if (found >= 0)
          throw InputError("several strata share the top dimension");
        found = static_cast<int>(i);
      }
    }
    return static_cast<std::size_t>(found);
  }

  /// True when every stratum lies in the closure of the top stratum, i.e.
  /// X equals the closure of its top stratum (pure-dimensional input).
  bool pure_dimensional() const {
    int t = -1;
    for (std::size_t i = 0; i < strata_.size(); ++i)
      if (strata_[i].dim == top_) {
        if (t >= 0) return false;
        t = static_cast<int>(i);
      }
    for (std::size_t i = 0; i < strata_.size(); ++i)
      if (static_cast<int>(i) != t && !less_[i][static_cast<std::size_t>(t)])
        return false;
    return true;
  }

 private:
  RingPtr<F> ring_;
  std::vector<Stratum<F>> strata_;
  std::vector<std::vector<bool>> less_;
  int top_ = 0;
};

/// E[S][S'] = χ(l_S ∩ S'), defined for pairs S < S'. Entries are user input:
/// complex links are topological data the symbolic layer cannot derive.
struct LinkMatrix {
  std::map<std::pair<std::size_t, std::size_t>, long long> entries;

  bool has(std::size_t i, std::size_t j) const {
    return entries.count({i, j}) != 0;
  }
  long long at(std::size_t i, std::size_t j) const {
    auto it = entries.find({i, j});
    if (it == entries.end()) throw EngineError("missing link entry");
    return it->second;
  }
};

/// Per-stratum integer data, in either the function-value basis (alpha) or
/// the normal-Morse-index basis (eta).
struct ConstructibleData {
  enum class Basis { kAlpha, kEta };
  Basis basis = Basis::kAlpha;
  std::vector<long long> values;
};

namespace cdetail {

template <class F>
void require_links(const StratifiedSpace<F>& space, const LinkMatrix& links) {
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = 0; j < space.size(); ++j)
      if (space.less(i, j) && !links.has(i, j))
        throw InputError("missing link entry for pair " +
                         space.strata()[i].name + " < " +
                         space.strata()[j].name);
}

/// Stratum indices sorted by decreasing dimension (stable).
template <class F>
std::vector<std::size_t> by_descending_dim(const StratifiedSpace<F>& space) {
  std::vector<std::size_t> idx(space.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return space.strata()[a].dim > space.strata()[b].dim;
  });
  return idx;
}

}  // namespace cdetail

/// η(S) = α(S) - Σ_{S'>S} α(S')·E[S][S']; on maximal strata the link is
/// empty and η = α.
template <class F>
ConstructibleData eta_from_alpha(const StratifiedSpace<F>& space,
                                 const ConstructibleData& alpha,
                                 const LinkMatrix& links) {
  if (alpha.basis != ConstructibleData::Basis::kAlpha)
    throw InputError("eta_from_alpha expects alpha-basis data");
  if (alpha.values.size() != space.size())
    throw InputError("constructible data must cover every stratum");
  cdetail::require_links(space, links);
  ConstructibleData eta{ConstructibleData::Basis::kEta,
                        std::vector<long long>(space.size(), 0)};
  for (std::size_t i = 0; i < space.size(); ++i) {
    long long link_chi = 0;
    for (std::size_t j = 0; j < space.size(); ++j)
      if (space.less(i, j)) link_chi += alpha.values[j] * links.at(i, j);
    eta.values[i] = alpha.values[i] - link_chi;
  }
  return eta;
}

/// Inverse of eta_from_alpha, solved top-down by dimension.
template <class F>
ConstructibleData alpha_from_eta(const StratifiedSpace<F>& space,
                                 const ConstructibleData& eta,
                                 const LinkMatrix& links) {
  if (eta.basis != ConstructibleData::Basis::kEta)
    throw InputError("alpha_from_eta expects eta-basis data");
  if (eta.values.size() != space.size())
    throw InputError("constructible data must cover every stratum");
  cdetail::require_links(space, links);
  ConstructibleData alpha{ConstructibleData::Basis::kAlpha,
                          std::vector<long long>(space.size(), 0)};
  for (std::size_t i : cdetail::by_descending_dim(space)) {
    long long link_chi = 0;
    for (std::size_t j = 0; j < space.size(); ++j)
      if (space.less(i, j)) link_chi += alpha.values[j] * links.at(i, j);
    alpha.values[i] = eta.values[i] + link_chi;
  }
  return alpha;
}

/// Local Euler obstruction of the closure of the target stratum, as an
/// alpha-basis function: the characteristic-cycle coefficient vector of the
/// target's conormal cycle is the delta at the target, so invert that and
/// fix the sign.
template <class F>
ConstructibleData euler_obstruction_function(const StratifiedSpace<F>& space,
                                             const LinkMatrix& links,
                                             std::size_t target) {
  if (target >= space.size()) throw InputError("no such stratum");
  // restrict to strata inside the closure of the target
  std::vector<std::size_t> sub;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (i == target || space.less(i, target)) sub.push_back(i);

  for (std::size_t a : sub)
    for (std::size_t b : sub)
      if (space.less(a, b) && !links.has(a, b))
        throw InputError("missing link entry for pair " +
                         space.strata()[a].name + " < " +
                         space.strata()[b].name);

  const int dt = space.strata()[target].dim;
  std::vector<long long> alpha_sub(space.size(), 0);
  for (std::size_t i : cdetail::by_descending_dim(space)) {
    bool in_sub = i == target || space.less(i, target);
    if (!in_sub) continue;
    long long eta_i = (i == target) ? ((dt % 2 == 0) ? 1 : -1) : 0;
    long long link_chi = 0;
    for (std::size_t j = 0; j < space.size(); ++j)
      if (space.less(i, j) && (j == target || space.less(j, target)))
        link_chi += alpha_sub[j] * links.at(i, j);
    alpha_sub[i] = eta_i + link_chi;
  }
  ConstructibleData eu{ConstructibleData::Basis::kAlpha,
                       std::vector<long long>(space.size(), 0)};
  const long long sign = (dt % 2 == 0) ? 1 : -1;
  for (std::size_t i : sub) eu.values[i] = sign * alpha_sub[i];
  return eu;
}

/// Characteristic-cycle coefficients m_S = (-1)^{dim S} η(S).
template <class F>
std::vector<long long> characteristic_cycle(const StratifiedSpace<F>& space,
                                            const ConstructibleData& eta) {
  if (eta.basis != ConstructibleData::Basis::kEta)
    throw InputError("characteristic_cycle expects eta-basis data");
  std::vector<long long> out(space.size(), 0);
  for (std::size_t i = 0; i < space.size(); ++i) {
    long long sign = (space.strata()[i].dim % 2 == 0) ? 1 : -1;
    out[i] = sign * eta.values[i];
  }
  return out;
}

/// Run fn(i) over strata, optionally in parallel; results are assembled in
/// stratum order so parallel and serial runs are indistinguishable.
template <class F, class T>
std::vector<T> map_strata(const StratifiedSpace<F>& space, bool parallel,
                          const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(space.size());
  if (parallel && space.size() > 1) {
    std::vector<std::future<T>> futs;
    futs.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i)
      futs.push_back(std::async(std::launch::async, fn, i));
    for (std::size_t i = 0; i < space.size(); ++i) out[i] = futs[i].get();
  } else {
    for (std::size_t i = 0; i < space.size(); ++i) out[i] = fn(i);
  }
  return out;
}

/// Polar profile of every stratum closure (seeded per stratum index).
template <class F>
std::vector<PolarProfile> stratum_profiles(const StratifiedSpace<F>& space,
                                           const ComputeOptions& opts) {
  return map_strata<F, PolarProfile>(space, opts.parallel, [&](std::size_t i) {
    const Stratum<F>& s = space.strata()[i];
    return polar_profile(s.closure, s.dim, s.name, static_cast<std::uint64_t>(i),
                         opts);
  });
}

template <class F>
struct MacPhersonTerm {
  std::string stratum;
  long long coefficient = 0;  // (-1)^{dim S} η(S)
  long long gamma_k = 0;
  std::string status;  // "pure" | "empty" | "skipped" (dim S < k)
  std::optional<PolarIdeal<F>> polar;
  std::optional<KDiagnostic> diag;
};

template <class F>
struct MacPhersonCycle {
  int k = 0;
  std::vector<MacPhersonTerm<F>> terms;
  long long gamma_alpha_k = 0;  // Σ coefficient · γ_k(S̄)
};

/// Λ_k(α) = Σ_S (-1)^{dim S} η(S,α) · P_k(S̄), with γ_k(S̄) attached per term.
template <class F>
MacPhersonCycle<F> macpherson_cycle(const StratifiedSpace<F>& space,
                                    const ConstructibleData& eta, int k,
                                    const ComputeOptions& opts) {
  if (eta.basis != ConstructibleData::Basis::kEta)
    throw InputError("macpherson_cycle expects eta-basis data");
  if (k < 0 || k > space.top_dim())
    throw InputError("cycle index k must lie in [0, n]");
  std::vector<long long> cc = characteristic_cycle(space, eta);
  MacPhersonCycle<F> cycle;
  cycle.k = k;
  cycle.terms = map_strata<F, MacPhersonTerm<F>>(
      space, opts.parallel, [&](std::size_t i) {
        const Stratum<F>& s = space.strata()[i];
        MacPhersonTerm<F> term;
        term.stratum = s.name;
        term.coefficient = cc[i];
        if (s.dim < k) {
          term.status = "skipped";  // P_k of a lower-dimensional closure is empty
          term.gamma_k = 0;
          return term;
        }
        std::optional<PolarIdeal<F>> witness;
        auto [gamma, diag] = polar_degree_agreed(
            s.closure, s.dim, k, opts.seed, static_cast<std::uint64_t>(i),
            opts.resamples, &witness);
        term.gamma_k = gamma;
        term.status = diag.purity;
        term.polar = std::move(witness);
        return term;
      });
  for (const auto& t : cycle.terms)
    cycle.gamma_alpha_k += t.coefficient * t.gamma_k;
  return cycle;
}

/// γ_k(α) = Σ_S (-1)^{dim S} η(S,α) γ_k(S̄) for k = 0..n, computed from
/// per-stratum profiles.
template <class F>
std::vector<long long> generalized_degrees_from_profiles(
    const StratifiedSpace<F>& space, const ConstructibleData& eta,
    const std::vector<PolarProfile>& profiles) {
  if (eta.basis != ConstructibleData::Basis::kEta)
    throw InputError("generalized degrees expect eta-basis data");
  std::vector<long long> cc = characteristic_cycle(space, eta);
  const int n = space.top_dim();
  std::vector<long long> out(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k <= n; ++k) {
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (space.strata()[i].dim < k) continue;  // γ_k vanishes beyond the dimension
      out[static_cast<std::size_t>(k)] +=
          cc[i] * profiles[i].gamma[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

template <class F>
std::vector<long long> generalized_degrees(const StratifiedSpace<F>& space,
                                           const ConstructibleData& eta,
                                           const ComputeOptions& opts) {
  return generalized_degrees_from_profiles(space, eta,
                                           stratum_profiles(space, opts));
}

struct EulerCharacteristics {
  std::vector<long long> chi_slices;  // χ_j = χ(X ∩ {j generic hyperplanes}, α)
  long long chi = 0;                  // χ_0 = χ(X, α)
};

/// χ_j = Σ_{k ≥ j} (-1)^k γ_k(α) (telescoping the slice formula, with the
/// empty slice χ_{n+1} = 0).
inline EulerCharacteristics euler_characteristics_from_degrees(
    const std::vector<long long>& gamma_alpha) {
  const int n = static_cast<int>(gamma_alpha.size()) - 1;
  EulerCharacteristics out;
  out.chi_slices.assign(static_cast<std::size_t>(n) + 2, 0);
  for (int j = n; j >= 0; --j) {
    long long term = gamma_alpha[static_cast<std::size_t>(j)];
    if (j % 2 != 0) term = -term;
    out.chi_slices[static_cast<std::size_t>(j)] =
        out.chi_slices[static_cast<std::size_t>(j) + 1] + term;
  }
  out.chi = out.chi_slices[0];
  return out;
}

template <class F>
struct SlicedSpace {
  StratifiedSpace<F> space;
  std::vector<std::size_t> kept;  // original index of each surviving stratum
  GenericForm<F> form;
};

/// Intersects every stratum closure with one generic affine hyperplane and
/// drops strata that the hyperplane misses (dimension 0). Normal Morse
/// indices carry over to the surviving strata unchanged.
template <class F>
SlicedSpace<F> slice_space(const StratifiedSpace<F>& space,
                           std::uint64_t seed) {
  const RingPtr<F>& ring = space.ring();
  for (int attempt = 0; attempt < 3; ++attempt) {
    Rng rng(mix_seed({seed, seedtag::kGysinSlice,
                      static_cast<std::uint64_t>(attempt)}));
    GenericForm<F> form = sample_generic_forms(ring, 1, rng, true).front();
    Polynomial<F> h = form.affine_equation(ring);
    std::vector<Stratum<F>> strata;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < space.size(); ++i) {
      const Stratum<F>& s = space.strata()[i];
      if (s.dim == 0) continue;  // a generic hyperplane misses points
      strata.push_back(Stratum<F>{s.name, ideal_sum(s.closure, {h}), s.dim - 1});
      kept.push_back(i);
    }
    if (strata.empty()) throw InputError("slicing needs a stratum of positive dimension");
    try {
      StratifiedSpace<F> sliced = StratifiedSpace<F>::build(
          ring, std::move(strata), std::nullopt,
          StratifiedSpace<F>::DimCheck::kGeneric);
      return {std::move(sliced), std::move(kept), std::move(form)};
    } catch (const GenericityError&) {
      // bad hyperplane draw; resample
    }
  }
  throw GenericityError("could not find a generic hyperplane slice in 3 draws");
}

}  // namespace polarmac

#endif
