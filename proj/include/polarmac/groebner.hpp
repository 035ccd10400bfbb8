#ifndef POLARMAC_GROEBNER_HPP
#define POLARMAC_GROEBNER_HPP

#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <utility>
#include <vector>

#include "polarmac/polynomial.hpp"

namespace polarmac {

// When enabled, every Buchberger run re-checks its own certificate (all
// S-polynomials and all input generators reduce to zero) and throws
// EngineError on failure. Used by the acceptance suite and `check`.
namespace gbcert {
inline std::atomic<bool>& flag() {
  static std::atomic<bool> f{false};
  return f;
}
inline void enable(bool on) { flag().store(on); }
inline bool enabled() { return flag().load(); }
struct Guard {
  explicit Guard(bool on) { enable(on); }
  ~Guard() { enable(false); }
};
}  // namespace gbcert

namespace gbdetail {

// Engine-internal shape: monic, sorted descending in the active order.
template <class F>
struct OrdPoly {
  std::vector<Term<F>> t;
  const Monomial& lead() const { return t.front().mono; }
};

template <class F>
OrdPoly<F> to_ordered(const Polynomial<F>& p, const MonomialOrder& order) {
  OrdPoly<F> o;
  o.t = p.terms();
  std::sort(o.t.begin(), o.t.end(), [&](const Term<F>& a, const Term<F>& b) {
    return order.compare(a.mono, b.mono) > 0;
  });
  return o;
}

template <class F>
Polynomial<F> to_polynomial(const RingPtr<F>& ring, const OrdPoly<F>& o) {
  return Polynomial<F>::collect(ring, o.t);
}

template <class F>
void make_monic(const F& field, OrdPoly<F>& o) {
  if (o.t.empty()) return;
  typename F::Value lead = o.t.front().coef;
  if (field.is_one(lead)) return;
  typename F::Value s = field.inv(lead);
  for (auto& x : o.t) x.coef = field.mul(x.coef, s);
}

// a[head..] - c * x^m * b, both descending; the caller arranges that the
// leading terms cancel. Result is descending with head at 0.
template <class F>
std::vector<Term<F>> mul_sub(const F& field, const std::vector<Term<F>>& a,
                             std::size_t head, const std::vector<Term<F>>& b,
                             const typename F::Value& c, const Monomial& m,
                             const MonomialOrder& order) {
  std::vector<Term<F>> out;
  out.reserve(a.size() - head + b.size());
  std::size_t i = head, j = 0;
  while (i < a.size() && j < b.size()) {
    Monomial bm = b[j].mono.times(m);
    int cmp = order.compare(a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(bm), field.neg(field.mul(c, b[j].coef))});
      ++j;
    } else {
      typename F::Value v = field.sub(a[i].coef, field.mul(c, b[j].coef));
      if (!field.is_zero(v)) out.push_back({a[i].mono, std::move(v)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j)
    out.push_back({b[j].mono.times(m), field.neg(field.mul(c, b[j].coef))});
  return out;
}

// Full multivariate division: no term of the remainder is divisible by any
// lead monomial of the (monic) reducers.
template <class F>
std::vector<Term<F>> reduce_full(const F& field, std::vector<Term<F>> work,
                                 const std::vector<const OrdPoly<F>*>& reducers,
                                 const MonomialOrder& order) {
  std::vector<Term<F>> out;
  std::size_t head = 0;
  while (head < work.size()) {
    const Term<F>& t = work[head];
    const OrdPoly<F>* red = nullptr;
    for (const OrdPoly<F>* g : reducers) {
      if (g->lead().divides(t.mono)) {
        red = g;
        break;
      }
    }
    if (red == nullptr) {
      out.push_back(t);
      ++head;
      continue;
    }
    Monomial q = t.mono.divided_by(red->lead());
    work = mul_sub(field, work, head, red->t, t.coef, q, order);
    head = 0;
  }
  return out;
}

template <class F>
std::vector<Term<F>> spoly(const F& field, const OrdPoly<F>& f,
                           const OrdPoly<F>& g, const MonomialOrder& order) {
  Monomial l = Monomial::lcm(f.lead(), g.lead());
  Monomial uf = l.divided_by(f.lead());
  Monomial ug = l.divided_by(g.lead());
  std::vector<Term<F>> a;
  a.reserve(f.t.size());
  for (const auto& x : f.t) a.push_back({x.mono.times(uf), x.coef});
  return mul_sub(field, a, 0, g.t, field.one(), ug, order);
}

}  // namespace gbdetail

/// Remainder of multivariate division of f by the list G (not necessarily a
/// Groebner basis). Deterministic: the first applicable divisor in list
/// order is used at every step.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f,
                          const std::vector<Polynomial<F>>& gs,
                          const MonomialOrder& order) {
  using namespace gbdetail;
  if (gs.empty()) throw InputError("normal_form needs a nonempty divisor list");
  const RingPtr<F>& ring = f.ring();
  const F& field = ring->field;
  std::vector<OrdPoly<F>> basis;
  basis.reserve(gs.size());
  for (const auto& g : gs) {
    require_same_ring(ring, g.ring());
    if (g.is_zero()) continue;
    basis.push_back(to_ordered(g, order));
  }
  // remainders are unchanged by scaling the divisors, so reduce monically
  for (auto& b : basis) make_monic(field, b);
  std::vector<const OrdPoly<F>*> ptrs;
  for (const auto& b : basis) ptrs.push_back(&b);
  auto w = to_ordered(f, order);
  auto r = reduce_full(field, std::move(w.t), ptrs, order);
  return Polynomial<F>::collect(ring, std::move(r));
}

/// The unique reduced Groebner basis of the ideal generated by `gens`.
/// Buchberger with the normal selection strategy plus the product and chain
/// criteria; output is monic, inter-reduced and sorted by lead monomial.
template <class F>
std::vector<Polynomial<F>> buchberger_reduced(
    const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens,
    const MonomialOrder& order) {
  using namespace gbdetail;
  const F& field = ring->field;

  std::vector<OrdPoly<F>> basis;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    if (g.is_zero()) continue;
    OrdPoly<F> o = to_ordered(g, order);
    make_monic(field, o);
    basis.push_back(std::move(o));
  }
  if (basis.empty()) return {};

  struct PairKey {
    std::int64_t deg;
    Monomial lcm;
    std::uint32_t i, j;
    bool operator<(const PairKey& o) const {
      if (deg != o.deg) return deg < o.deg;
      int c = Monomial::cmp_struct(lcm, o.lcm);
      if (c != 0) return c < 0;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };
  std::set<PairKey> queue;
  std::set<std::pair<std::uint32_t, std::uint32_t>> pending;

  auto push_pair = [&](std::uint32_t i, std::uint32_t j) {
    Monomial l = Monomial::lcm(basis[i].lead(), basis[j].lead());
    queue.insert({l.degree(), std::move(l), i, j});
    pending.insert({i, j});
  };
  for (std::uint32_t j = 1; j < basis.size(); ++j)
    for (std::uint32_t i = 0; i < j; ++i) push_pair(i, j);

  auto coprime = [](const Monomial& a, const Monomial& b) {
    return Monomial::gcd(a, b).is_one();
  };

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pk.i, pk.j});

    const Monomial& li = basis[pk.i].lead();
    const Monomial& lj = basis[pk.j].lead();
    if (coprime(li, lj)) continue;  // product criterion

    // chain criterion: some other lead divides the lcm and both side pairs
    // have already left the queue
    bool skip = false;
    for (std::uint32_t k = 0; k < basis.size(); ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!basis[k].lead().divides(pk.lcm)) continue;
      auto key = [](std::uint32_t a, std::uint32_t b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      };
      if (pending.count(key(pk.i, k)) == 0 && pending.count(key(pk.j, k)) == 0) {
        skip = true;
        break;
      }
    }
    if (skip) continue;

    std::vector<const OrdPoly<F>*> ptrs;
    ptrs.reserve(basis.size());
    for (const auto& b : basis) ptrs.push_back(&b);
    auto rem = reduce_full(field, spoly(field, basis[pk.i], basis[pk.j], order),
                           ptrs, order);
    if (rem.empty()) continue;

    OrdPoly<F> nu{std::move(rem)};
    make_monic(field, nu);
    basis.push_back(std::move(nu));
    const std::uint32_t m = static_cast<std::uint32_t>(basis.size() - 1);
    for (std::uint32_t i = 0; i < m; ++i) push_pair(i, m);
  }

  // minimalize: keep only elements whose lead no kept lead divides
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    int c = order.compare(basis[a].lead(), basis[b].lead());
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<OrdPoly<F>> minimal;
  for (std::size_t i : idx) {
    bool redundant = false;
    for (const auto& kept : minimal) {
      if (kept.lead().divides(basis[i].lead())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // inter-reduce the tails until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<const OrdPoly<F>*> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(&minimal[j]);
      if (others.empty()) break;
      auto r = reduce_full(field, minimal[i].t, others, order);
      OrdPoly<F> nu{std::move(r)};
      make_monic(field, nu);
      if (nu.t != minimal[i].t) {
        // lead monomial is untouched (no other lead divides it)
        minimal[i] = std::move(nu);
        changed = true;
      }
    }
  }

  std::vector<Polynomial<F>> out;
  out.reserve(minimal.size());
  for (const auto& b : minimal) out.push_back(to_polynomial(ring, b));

  if (gbcert::enabled()) {
    for (const auto& g : gens)
      if (!g.is_zero() && !normal_form(g, out, order).is_zero())
        throw EngineError("basis certificate: generator does not reduce to 0");
    std::vector<OrdPoly<F>> ord;
    ord.reserve(out.size());
    for (const auto& g : out) ord.push_back(to_ordered(g, order));
    std::vector<const OrdPoly<F>*> ptrs;
    for (const auto& g : ord) ptrs.push_back(&g);
    for (std::size_t i = 0; i < ord.size(); ++i) {
      for (std::size_t j = i + 1; j < ord.size(); ++j) {
        if (!reduce_full(field, spoly(field, ord[i], ord[j], order), ptrs, order)
                 .empty())
          throw EngineError("basis certificate: S-polynomial does not reduce to 0");
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ideal: immutable generator list with a per-order reduced-basis memo.
// Copies share the memo; concurrent lookups may duplicate work but always
// observe a consistent value (first insert wins, results are identical).
// ---------------------------------------------------------------------------
template <class F>
class Ideal {
 public:
  Ideal() = default;

  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens)
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    std::vector<Polynomial<F>> kept;
    for (auto& g : gens) {
      require_same_ring(ring_, g.ring());
      if (!g.is_zero()) kept.push_back(std::move(g));
    }
    gens_ = std::make_shared<const std::vector<Polynomial<F>>>(std::move(kept));
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return *gens_; }
  bool has_generators() const { return !gens_->empty(); }

  const std::vector<Polynomial<F>>& groebner_basis(
      const MonomialOrder& order = MonomialOrder::grevlex()) const {
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->bases.find(order);
      if (it != cache_->bases.end()) return *it->second;
    }
    auto computed = std::make_shared<const std::vector<Polynomial<F>>>(
        buchberger_reduced(ring_, *gens_, order));
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, inserted] = cache_->bases.emplace(order, std::move(computed));
    return *it->second;
  }

  bool is_unit() const {
    const auto& g = groebner_basis();
    return g.size() == 1 && g.front().is_constant();
  }

  bool contains(const Polynomial<F>& f) const {
    require_same_ring(ring_, f.ring());
    if (f.is_zero()) return true;
    if (!has_generators()) return false;
    return normal_form(f, groebner_basis(), MonomialOrder::grevlex()).is_zero();
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<MonomialOrder,
             std::shared_ptr<const std::vector<Polynomial<F>>>> bases;
  };

  RingPtr<F> ring_;
  std::shared_ptr<const std::vector<Polynomial<F>>> gens_;
  std::shared_ptr<Cache> cache_;
};

template <class F>
bool ideal_membership(const Polynomial<F>& f, const Ideal<F>& ideal) {
  return ideal.contains(f);
}

/// Equality as ideals (mutual membership of generators).
template <class F>
bool ideals_equal(const Ideal<F>& a, const Ideal<F>& b) {
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  for (const auto& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const std::vector<Polynomial<F>>& extra) {
  std::vector<Polynomial<F>> gens = a.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal<F>(a.ring(), std::move(gens));
}

namespace gbdetail {

/// Fresh auxiliary variable name that cannot collide with user variables
/// ('@' never survives the parser).
template <class F>
std::string fresh_aux_name(const RingPtr<F>& ring) {
  std::string base = "@t";
  if (ring->index_of(base) < 0) return base;
  for (int i = 1;; ++i) {
    std::string name = base + std::to_string(i);
    if (ring->index_of(name) < 0) return name;
  }
}

template <class F>
RingPtr<F> ring_with_aux_front(const RingPtr<F>& ring, const std::string& aux) {
  std::vector<std::string> vars;
  vars.reserve(ring->nvars() + 1);
  vars.push_back(aux);
  vars.insert(vars.end(), ring->vars.begin(), ring->vars.end());
  return make_ring(ring->field, std::move(vars));
}

}  // namespace gbdetail

/// I restricted to the subring without the first k variables, computed by
/// selecting the members of a block(k) basis that avoid them. Returned in
/// the smaller ring context (possibly with no generators at all).
template <class F>
Ideal<F> eliminate(const Ideal<F>& ideal, std::size_t k) {
  const RingPtr<F>& ring = ideal.ring();
  if (k < 1 || k >= ring->nvars())
    throw InputError("eliminate: variable count out of range");
  RingPtr<F> small = make_ring(
      ring->field, std::vector<std::string>(ring->vars.begin() + k,
                                            ring->vars.end()));
  if (!ideal.has_generators()) return Ideal<F>(small, {});
  const auto& gb = ideal.groebner_basis(MonomialOrder::block_elim(static_cast<int>(k)));
  std::vector<Polynomial<F>> kept;
  for (const auto& g : gb) {
    bool free = true;
    for (const auto& t : g.terms())
      if (t.mono.uses_front(k)) {
        free = false;
        break;
      }
    if (free) kept.push_back(drop_front(g, small, k));
  }
  return Ideal<F>(small, std::move(kept));
}

/// I ∩ J via the single-auxiliary-variable construction t·I + (1−t)·J.
template <class F>
Ideal<F> ideal_intersection(const Ideal<F>& a, const Ideal<F>& b) {
  require_same_ring(a.ring(), b.ring());
  if (!a.has_generators() || !b.has_generators())
    return Ideal<F>(a.ring(), {});
  using namespace gbdetail;
  const RingPtr<F>& ring = a.ring();
  RingPtr<F> big = ring_with_aux_front(ring, fresh_aux_name(ring));
  using P = Polynomial<F>;
  P t = P::variable(big, 0);
  P one_minus_t = P::constant(big, ring->field.one()) - t;
  std::vector<P> gens;
  for (const auto& f : a.generators()) gens.push_back(t * lift_front(f, big, 1));
  for (const auto& g : b.generators())
    gens.push_back(one_minus_t * lift_front(g, big, 1));
  Ideal<F> mixed(big, std::move(gens));
  Ideal<F> small = eliminate(mixed, 1);
  // rebuild over the original ring pointer so contexts stay identical
  std::vector<P> back;
  for (const auto& g : small.generators())
    back.push_back(Polynomial<F>::collect(ring, g.terms()));
  return Ideal<F>(ring, std::move(back));
}

/// I : g^∞ via adjoining t and eliminating from I + (1 − t·g).
template <class F>
Ideal<F> saturate_element(const Ideal<F>& ideal, const Polynomial<F>& g) {
  require_same_ring(ideal.ring(), g.ring());
  if (g.is_zero()) throw InputError("saturation by the zero element");
  using namespace gbdetail;
  const RingPtr<F>& ring = ideal.ring();
  RingPtr<F> big = ring_with_aux_front(ring, fresh_aux_name(ring));
  using P = Polynomial<F>;
  std::vector<P> gens;
  for (const auto& f : ideal.generators()) gens.push_back(lift_front(f, big, 1));
  P witness = P::constant(big, ring->field.one()) -
              P::variable(big, 0) * lift_front(g, big, 1);
  gens.push_back(std::move(witness));
  Ideal<F> mixed(big, std::move(gens));
  Ideal<F> small = eliminate(mixed, 1);
  std::vector<P> back;
  for (const auto& h : small.generators())
    back.push_back(Polynomial<F>::collect(ring, h.terms()));
  return Ideal<F>(ring, std::move(back));
}

/// I : J^∞ = ∩_g (I : g^∞) over a generating set of J, combined by pairwise
/// intersections (iterated element-saturation would be wrong in general).
/// The reduced basis of J is used as its generating set.
template <class F>
Ideal<F> saturate_ideal(const Ideal<F>& ideal, const Ideal<F>& by) {
  require_same_ring(ideal.ring(), by.ring());
  if (!by.has_generators()) throw InputError("saturation by the zero ideal");
  const auto& gens = by.groebner_basis();
  bool first = true;
  Ideal<F> acc;
  for (const auto& g : gens) {
    Ideal<F> sat = saturate_element(ideal, g);
    if (first) {
      acc = std::move(sat);
      first = false;
    } else {
      acc = ideal_intersection(acc, sat);
    }
  }
  return acc;
}

}  // namespace polarmac

#endif
