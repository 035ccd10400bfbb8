#ifndef POLARMAC_POLAR_HPP
#define POLARMAC_POLAR_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "polarmac/generic.hpp"
#include "polarmac/hilbert.hpp"

namespace polarmac {

template <class F>
struct PolyMatrix {
  RingPtr<F> ring;
  std::size_t rows = 0, cols = 0;
  std::vector<Polynomial<F>> entries;  // row-major

  const Polynomial<F>& at(std::size_t r, std::size_t c) const {
    return entries[r * cols + c];
  }
};

/// m x N matrix of partials: entry (i, j) = ∂F_i/∂x_j.
template <class F>
PolyMatrix<F> jacobian_matrix(const std::vector<Polynomial<F>>& fs) {
  if (fs.empty()) throw InputError("jacobian of an empty system");
  const RingPtr<F>& ring = fs.front().ring();
  PolyMatrix<F> m;
  m.ring = ring;
  m.rows = fs.size();
  m.cols = ring->nvars();
  m.entries.reserve(m.rows * m.cols);
  for (const auto& f : fs) {
    require_same_ring(ring, f.ring());
    for (std::size_t j = 0; j < m.cols; ++j)
      m.entries.push_back(f.derivative(j));
  }
  return m;
}

namespace pdetail {

// Determinant of the submatrix picked by (rows, cols) index lists, by
// cofactor expansion with memoized sub-determinants keyed by index bitmasks.
template <class F>
Polynomial<F> minor_det(const PolyMatrix<F>& m, const std::vector<int>& rows,
                        const std::vector<int>& cols,
                        std::map<std::uint64_t, Polynomial<F>>& memo) {
  if (rows.size() == 1) return m.at(rows[0], cols[0]);
  std::uint64_t key = 0;
  for (int r : rows) key |= 1ULL << r;
  for (int c : cols) key |= 1ULL << (32 + c);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const RingPtr<F>& ring = m.ring;
  Polynomial<F> acc = Polynomial<F>::zero(ring);
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Polynomial<F>& e = m.at(rows[0], cols[j]);
    if (e.is_zero()) continue;
    std::vector<int> sub_cols;
    sub_cols.reserve(cols.size() - 1);
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    Polynomial<F> sub = minor_det(m, sub_rows, sub_cols, memo);
    Polynomial<F> contrib = e * sub;
    acc = (j % 2 == 0) ? acc + contrib : acc - contrib;
  }
  memo.emplace(key, acc);
  return acc;
}

inline void enumerate_subsets(int n, int r, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    fn(pick);
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace pdetail

/// Ideal of all r x r minors. r larger than either dimension is a vacuous
/// rank condition and yields the zero ideal.
template <class F>
Ideal<F> minors_ideal(const PolyMatrix<F>& m, int r) {
  if (r < 1) throw InputError("minor size must be at least 1");
  if (static_cast<std::size_t>(r) > m.rows || static_cast<std::size_t>(r) > m.cols)
    return Ideal<F>(m.ring, {});
  if (m.rows > 32 || m.cols > 32)
    throw EngineError("minor memoization supports at most 32 rows/cols");
  std::map<std::uint64_t, Polynomial<F>> memo;
  std::vector<Polynomial<F>> gens;
  pdetail::enumerate_subsets(static_cast<int>(m.rows), r, [&](const std::vector<int>& rows) {
    pdetail::enumerate_subsets(static_cast<int>(m.cols), r, [&](const std::vector<int>& cols) {
      Polynomial<F> d = pdetail::minor_det(m, rows, cols, memo);
      if (!d.is_zero()) gens.push_back(std::move(d));
    });
  });
  return Ideal<F>(m.ring, std::move(gens));
}

/// I plus the c x c minors of the Jacobian of its generators, c = N - n:
/// on a reduced pure n-dimensional X this cuts out the singular locus.
template <class F>
Ideal<F> singular_locus_ideal(const Ideal<F>& ideal, int n) {
  const std::size_t nvars = ideal.ring()->nvars();
  const int c = static_cast<int>(nvars) - n;
  if (n < 0 || c < 1) throw InputError("singular locus: dimension out of range");
  PolyMatrix<F> jac = jacobian_matrix(ideal.generators());
  if (static_cast<std::size_t>(c) > jac.rows)
    throw EngineError("fewer generators than the codimension");
  Ideal<F> minors = minors_ideal(jac, c);
  return ideal_sum(ideal, minors.generators());
}

/// I plus the (c+k+1) x (c+k+1) minors of the Jacobian stacked over the
/// coefficient rows of ω_1..ω_{k+1}; for c+k+1 > N the rank condition is
/// vacuous and the result is I itself (so k = n reproduces X).
template <class F>
Ideal<F> critical_locus_ideal(const Ideal<F>& ideal,
                              const std::vector<GenericForm<F>>& forms, int n) {
  const RingPtr<F>& ring = ideal.ring();
  const std::size_t nvars = ring->nvars();
  const int c = static_cast<int>(nvars) - n;
  const int k = static_cast<int>(forms.size()) - 1;
  if (forms.empty()) throw InputError("critical locus needs at least one form");
  if (k > n) throw InputError("critical locus: k exceeds the dimension");
  if (c < 1) throw InputError("critical locus: dimension out of range");

  PolyMatrix<F> jac = jacobian_matrix(ideal.generators());
  PolyMatrix<F> stacked;
  stacked.ring = ring;
  stacked.rows = jac.rows + forms.size();
  stacked.cols = nvars;
  stacked.entries = jac.entries;
  for (const auto& w : forms)
    for (std::size_t i = 0; i < nvars; ++i)
      stacked.entries.push_back(Polynomial<F>::constant(ring, w.coeffs[i]));

  Ideal<F> minors = minors_ideal(stacked, c + k + 1);
  if (!minors.has_generators()) return ideal;
  return ideal_sum(ideal, minors.generators());
}

enum class Purity { kPure, kEmpty, kFailed };

inline std::string purity_name(Purity p) {
  switch (p) {
    case Purity::kPure:
      return "pure";
    case Purity::kEmpty:
      return "empty";
    case Purity::kFailed:
      return "failed";
  }
  return "?";
}

template <class F>
struct PolarIdeal {
  int k = 0;
  Ideal<F> ideal;
  std::vector<GenericForm<F>> forms;
  Purity purity = Purity::kFailed;
  DimensionDegree dims;
};

/// P_k(X, ω): the critical locus of ω_1..ω_{k+1} on the smooth part,
/// closed up by saturating away the singular locus. A failed purity check
/// marks a non-generic draw for the caller to resample, not an error.
template <class F>
PolarIdeal<F> polar_variety_ideal(const Ideal<F>& ideal,
                                  const std::vector<GenericForm<F>>& forms,
                                  int n) {
  const int k = static_cast<int>(forms.size()) - 1;
  PolarIdeal<F> out;
  out.k = k;
  out.forms = forms;
  if (k == n) {
    out.ideal = ideal;
    out.purity = Purity::kPure;
    out.dims = dimension_and_degree(ideal);
    return out;
  }
  Ideal<F> crit = critical_locus_ideal(ideal, forms, n);
  Ideal<F> sing = singular_locus_ideal(ideal, n);
  out.ideal = sing.is_unit() ? crit : saturate_ideal(crit, sing);
  out.dims = dimension_and_degree(out.ideal);
  if (out.dims.dimension == -1)
    out.purity = Purity::kEmpty;
  else if (out.dims.dimension == k)
    out.purity = Purity::kPure;
  else
    out.purity = Purity::kFailed;
  return out;
}

}  // namespace polarmac

#endif
