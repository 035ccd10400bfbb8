#ifndef POLARMAC_ZERODIM_HPP
#define POLARMAC_ZERODIM_HPP

#include <vector>

#include "polarmac/hilbert.hpp"

namespace polarmac {

// Univariate helpers over the coefficient field. Polynomials are dense
// coefficient vectors indexed by degree, normalized (no trailing zeros).
namespace univar {

template <class F>
void normalize(const F& k, std::vector<typename F::Value>& p) {
  while (!p.empty() && k.is_zero(p.back())) p.pop_back();
}

template <class F>
std::vector<typename F::Value> derivative(const F& k,
                                          const std::vector<typename F::Value>& p) {
  std::vector<typename F::Value> d;
  for (std::size_t i = 1; i < p.size(); ++i)
    d.push_back(k.mul(p[i], k.from_long(static_cast<long long>(i))));
  normalize(k, d);
  return d;
}

template <class F>
void make_monic(const F& k, std::vector<typename F::Value>& p) {
  if (p.empty() || k.is_one(p.back())) return;
  typename F::Value s = k.inv(p.back());
  for (auto& c : p) c = k.mul(c, s);
}

/// In-place remainder of a by b (b monic-normalized inside); returns remainder.
template <class F>
std::vector<typename F::Value> rem(const F& k,
                                   std::vector<typename F::Value> a,
                                   std::vector<typename F::Value> b) {
  make_monic(k, b);
  while (a.size() >= b.size() && !b.empty()) {
    typename F::Value c = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + shift] = k.sub(a[i + shift], k.mul(c, b[i]));
    normalize(k, a);
    if (a.size() < b.size()) break;
  }
  return a;
}

template <class F>
std::vector<typename F::Value> gcd(const F& k,
                                   std::vector<typename F::Value> a,
                                   std::vector<typename F::Value> b) {
  normalize(k, a);
  normalize(k, b);
  while (!b.empty()) {
    std::vector<typename F::Value> r = rem(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(k, a);
  return a;
}

/// Exact quotient a / b (requires b | a).
template <class F>
std::vector<typename F::Value> div_exact(const F& k,
                                         std::vector<typename F::Value> a,
                                         const std::vector<typename F::Value>& b) {
  if (b.empty()) throw EngineError("univariate division by zero");
  std::vector<typename F::Value> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0,
                                   k.zero());
  typename F::Value lead_inv = k.inv(b.back());
  while (a.size() >= b.size()) {
    typename F::Value c = k.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + shift] = k.sub(a[i + shift], k.mul(c, b[i]));
    normalize(k, a);
    if (a.empty()) break;
  }
  if (!a.empty()) throw EngineError("univariate division was not exact");
  normalize(k, q);
  return q;
}

}  // namespace univar

/// Squarefree part g / gcd(g, g'). Throws BadPrimeError when the
/// characteristic degenerates the computation (g' vanishes, or the result
/// fails its own squarefree check), in which case the caller should retry
/// over another prime.
template <class F>
std::vector<typename F::Value> squarefree_part(
    const F& k, std::vector<typename F::Value> g) {
  univar::normalize(k, g);
  if (g.size() <= 1) return g;
  std::vector<typename F::Value> d = univar::derivative(k, g);
  if (d.empty())
    throw BadPrimeError("derivative of a nonconstant eliminant vanished");
  std::vector<typename F::Value> common = univar::gcd(k, g, d);
  std::vector<typename F::Value> sf = univar::div_exact(k, std::move(g), common);
  univar::make_monic(k, sf);
  std::vector<typename F::Value> check = univar::derivative(k, sf);
  if (check.empty() && sf.size() > 1)
    throw BadPrimeError("squarefree part is degenerate in this characteristic");
  if (!check.empty()) {
    std::vector<typename F::Value> g2 = univar::gcd(k, sf, check);
    if (g2.size() > 1)
      throw BadPrimeError("squarefree reduction left a repeated factor");
  }
  return sf;
}

/// Monic generator of I ∩ k[x_i]: the minimal polynomial of x_i acting on 1
/// in the quotient ring, found by a linear-dependency search over the
/// standard-monomial basis.
template <class F>
std::vector<typename F::Value> variable_minimal_polynomial(
    const Ideal<F>& ideal, std::size_t var) {
  using V = typename F::Value;
  const RingPtr<F>& ring = ideal.ring();
  const F& k = ring->field;
  if (var >= ring->nvars()) throw InputError("variable index out of range");

  std::vector<Monomial> basis = standard_monomials(ideal);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  const std::size_t dim = basis.size();

  const auto& gb = ideal.groebner_basis();
  MonomialOrder g = MonomialOrder::grevlex();
  Polynomial<F> x = Polynomial<F>::variable(ring, var);

  auto coords = [&](const Polynomial<F>& p) {
    std::vector<V> v(dim, k.zero());
    for (const auto& t : p.terms()) {
      auto it = index.find(t.mono);
      if (it == index.end())
        throw EngineError("normal form left the standard-monomial span");
      v[it->second] = t.coef;
    }
    return v;
  };

  // Row-reduced powers with history rows tracking the combination of the
  // original power sequence; the first dependency is the minimal polynomial.
  std::vector<std::vector<V>> rows, hist;
  std::vector<std::size_t> pivots;

  Polynomial<F> cur = Polynomial<F>::constant(ring, k.one());
  for (std::size_t step = 0; step <= dim; ++step) {
    std::vector<V> w = coords(cur);
    std::vector<V> h(step + 1, k.zero());
    h[step] = k.one();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const V& c = w[pivots[r]];
      if (k.is_zero(c)) continue;
      V f = c;  // rows are pivot-normalized
      for (std::size_t i = 0; i < dim; ++i) w[i] = k.sub(w[i], k.mul(f, rows[r][i]));
      for (std::size_t i = 0; i < hist[r].size() && i < h.size(); ++i)
        h[i] = k.sub(h[i], k.mul(f, hist[r][i]));
    }
    std::size_t pivot = dim;
    for (std::size_t i = 0; i < dim; ++i) {
      if (!k.is_zero(w[i])) {
        pivot = i;
        break;
      }
    }
    if (pivot == dim) return h;  // monic by construction (h[step] == 1)
    V s = k.inv(w[pivot]);
    for (std::size_t i = 0; i < dim; ++i) w[i] = k.mul(w[i], s);
    for (auto& c : h) c = k.mul(c, s);
    rows.push_back(std::move(w));
    hist.push_back(std::move(h));
    pivots.push_back(pivot);
    cur = normal_form(x * cur, gb, g);
  }
  throw EngineError("minimal polynomial search exceeded the quotient dimension");
}

template <class F>
Polynomial<F> univariate_to_polynomial(const RingPtr<F>& ring, std::size_t var,
                                       const std::vector<typename F::Value>& c) {
  Polynomial<F> x = Polynomial<F>::variable(ring, var);
  Polynomial<F> acc = Polynomial<F>::zero(ring);
  for (std::size_t i = c.size(); i-- > 0;)
    acc = acc * x + Polynomial<F>::constant(ring, c[i]);
  return acc;
}

/// Number of distinct points of V(I) over the algebraic closure: adjoin the
/// squarefree part of every variable's eliminant and count standard
/// monomials of the enlarged (radical) ideal.
template <class F>
long long distinct_point_count(const Ideal<F>& ideal) {
  DimensionDegree dd = dimension_and_degree(ideal);
  if (dd.dimension != 0) throw ZeroDimError("ideal is not zero-dimensional");
  const RingPtr<F>& ring = ideal.ring();
  const F& k = ring->field;
  std::vector<Polynomial<F>> extra;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    auto mp = variable_minimal_polynomial(ideal, i);
    auto sf = squarefree_part(k, std::move(mp));
    extra.push_back(univariate_to_polynomial(ring, i, sf));
  }
  Ideal<F> radical_part = ideal_sum(ideal, extra);
  return quotient_dimension(radical_part);
}

}  // namespace polarmac

#endif
