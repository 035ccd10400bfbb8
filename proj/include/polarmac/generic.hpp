#ifndef POLARMAC_GENERIC_HPP
#define POLARMAC_GENERIC_HPP

#include <cstdint>
#include <vector>

#include "polarmac/polynomial.hpp"
#include "polarmac/rng.hpp"

namespace polarmac {

/// A sampled linear form ω (optionally with an affine value t, for slice
/// equations ω - t). Seed provenance is recorded so runs are reproducible.
template <class F>
struct GenericForm {
  std::vector<typename F::Value> coeffs;  // length N, all nonzero
  typename F::Value constant{};           // slice value; meaningful iff affine
  bool affine = false;
  std::uint64_t seed = 0;
  int draw_index = 0;

  Polynomial<F> linear(const RingPtr<F>& ring) const {
    Polynomial<F> acc = Polynomial<F>::zero(ring);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      acc = acc + Polynomial<F>::variable(ring, i).scaled(coeffs[i]);
    return acc;
  }

  /// ω - t, the equation of the affine slice {ω = t}.
  Polynomial<F> affine_equation(const RingPtr<F>& ring) const {
    return linear(ring) - Polynomial<F>::constant(ring, constant);
  }
};

/// Draws `count` forms with independently uniform nonzero coefficients
/// (and nonzero constants when affine). Deterministic given the generator
/// state; successive calls advance it.
template <class F>
std::vector<GenericForm<F>> sample_generic_forms(const RingPtr<F>& ring,
                                                 std::size_t count, Rng& rng,
                                                 bool affine) {
  const F& k = ring->field;
  std::vector<GenericForm<F>> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    GenericForm<F> f;
    f.affine = affine;
    f.coeffs.reserve(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i)
      f.coeffs.push_back(k.random_nonzero(rng));
    f.constant = affine ? k.random_nonzero(rng) : k.zero();
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace polarmac

#endif
