#ifndef POLARMAC_HILBERT_HPP
#define POLARMAC_HILBERT_HPP

#include <optional>
#include <vector>

#include "polarmac/groebner.hpp"

namespace polarmac {

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of the quotient by the
/// monomial ideal generated by `gens` in `nvars` variables. Coefficients are
/// indexed by degree. Computed by the generator-splitting recursion with a
/// memo on the minimalized generator set.
std::vector<long long> hilbert_numerator(std::vector<Monomial> gens,
                                         std::size_t nvars);

/// Dimension and degree of V(I). dimension = -1 encodes the empty variety
/// (unit ideal), with the degree left undefined; the zero ideal has
/// dimension N and degree 1.
struct DimensionDegree {
  long long dimension = -1;
  std::optional<long long> degree;
  bool operator==(const DimensionDegree& o) const {
    return dimension == o.dimension && degree == o.degree;
  }
};

namespace hdetail {

inline void divide_by_one_minus_t(std::vector<long long>& num) {
  // N(t) = (1-t) * Q(t): synthetic division, exact by precondition.
  std::vector<long long> q(num.size() > 0 ? num.size() - 1 : 0, 0);
  long long carry = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    carry = num[i] + carry;
    q[i] = carry;
  }
  num = std::move(q);
  while (!num.empty() && num.back() == 0) num.pop_back();
}

inline long long eval_at_one(const std::vector<long long>& num) {
  long long s = 0;
  for (long long c : num) s += c;
  return s;
}

}  // namespace hdetail

/// Krull dimension and degree of V(I) from the Hilbert series of the
/// lead-term ideal of a grevlex basis: the dimension is the pole order of
/// the series at t = 1 and the degree is the numerator value there after
/// clearing the pole.
template <class F>
DimensionDegree dimension_and_degree(const Ideal<F>& ideal) {
  const std::size_t n = ideal.ring()->nvars();
  if (!ideal.has_generators()) return {static_cast<long long>(n), 1};
  const auto& gb = ideal.groebner_basis();
  MonomialOrder g = MonomialOrder::grevlex();
  std::vector<Monomial> leads;
  leads.reserve(gb.size());
  for (const auto& p : gb) leads.push_back(p.leading_term(g).mono);
  std::vector<long long> num = hilbert_numerator(std::move(leads), n);
  if (num.empty()) return {-1, std::nullopt};  // unit ideal
  std::size_t cleared = 0;
  while (hdetail::eval_at_one(num) == 0) {
    hdetail::divide_by_one_minus_t(num);
    ++cleared;
  }
  return {static_cast<long long>(n - cleared), hdetail::eval_at_one(num)};
}

/// Monomials outside the lead-term ideal of I; finite exactly when I is
/// zero-dimensional (every variable then has a pure power among the leads).
template <class F>
std::vector<Monomial> standard_monomials(const Ideal<F>& ideal) {
  const std::size_t n = ideal.ring()->nvars();
  if (!ideal.has_generators())
    throw ZeroDimError("ideal is not zero-dimensional");
  const auto& gb = ideal.groebner_basis();
  MonomialOrder g = MonomialOrder::grevlex();
  std::vector<Monomial> leads;
  for (const auto& p : gb) leads.push_back(p.leading_term(g).mono);

  std::vector<std::int32_t> bound(n, -1);
  for (const auto& m : leads) {
    int support = -1;
    bool pure = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      if (support >= 0) {
        pure = false;
        break;
      }
      support = static_cast<int>(i);
    }
    if (m.is_one()) return {};  // unit ideal: no standard monomials
    if (pure && support >= 0) {
      std::size_t i = static_cast<std::size_t>(support);
      if (bound[i] < 0 || m[i] < bound[i]) bound[i] = m[i];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] < 0) throw ZeroDimError("ideal is not zero-dimensional");

  std::vector<Monomial> out;
  std::vector<std::int32_t> e(n, 0);
  auto divisible = [&](const Monomial& m) {
    for (const auto& l : leads)
      if (l.divides(m)) return true;
    return false;
  };
  // enumerate the bounding box, pruning nothing: the box is tiny at this scale
  while (true) {
    Monomial m{std::vector<std::int32_t>(e)};
    if (!divisible(m)) out.push_back(std::move(m));
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (e[i] + 1 < bound[i]) {
        ++e[i];
        break;
      }
      e[i] = 0;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Vector-space dimension of the quotient ring of a zero-dimensional ideal.
template <class F>
long long quotient_dimension(const Ideal<F>& ideal) {
  return static_cast<long long>(standard_monomials(ideal).size());
}

}  // namespace polarmac

#endif
