#ifndef POLARMAC_POLYNOMIAL_HPP
#define POLARMAC_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "polarmac/field.hpp"
#include "polarmac/monomial.hpp"

namespace polarmac {

/// Shared ring context: the coefficient field plus the ambient variable names.
template <class F>
struct Ring {
  F field;
  std::vector<std::string> vars;

  std::size_t nvars() const { return vars.size(); }

  int index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> vars) {
  return std::make_shared<const Ring<F>>(Ring<F>{std::move(field), std::move(vars)});
}

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->field == b->field && a->vars == b->vars;
}

template <class F>
void require_same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  if (!same_ring(a, b)) throw RingMismatchError("mismatched ring contexts");
}

template <class F>
struct Term {
  Monomial mono;
  typename F::Value coef;
};

template <class F>
bool operator==(const Term<F>& a, const Term<F>& b) {
  return a.mono == b.mono && a.coef == b.coef;
}

// ---------------------------------------------------------------------------
// Sparse exact multivariate polynomial in canonical form: terms are kept
// sorted descending in the structural monomial order and never carry a zero
// coefficient, so equality is structural.
// ---------------------------------------------------------------------------
template <class F>
class Polynomial {
 public:
  using V = typename F::Value;

  Polynomial() = default;  // placeholder; only containers should hold these

  static Polynomial zero(RingPtr<F> ring) { return Polynomial(std::move(ring), {}); }

  static Polynomial constant(RingPtr<F> ring, V c) {
    std::vector<Term<F>> t;
    if (!ring->field.is_zero(c)) t.push_back({Monomial(ring->nvars()), std::move(c)});
    return Polynomial(std::move(ring), std::move(t));
  }

  static Polynomial variable(RingPtr<F> ring, std::size_t i) {
    if (i >= ring->nvars()) throw EngineError("variable index out of range");
    Monomial m(ring->nvars());
    m.at(i) = 1;
    std::vector<Term<F>> t{{std::move(m), ring->field.one()}};
    return Polynomial(std::move(ring), std::move(t));
  }

  static Polynomial from_term(RingPtr<F> ring, Monomial m, V c) {
    std::vector<Term<F>> t;
    if (!ring->field.is_zero(c)) t.push_back({std::move(m), std::move(c)});
    return Polynomial(std::move(ring), std::move(t));
  }

  /// Builds canonical form from arbitrary (unsorted, duplicated) terms.
  static Polynomial collect(RingPtr<F> ring, std::vector<Term<F>> terms) {
    std::map<Monomial, V> acc;
    const F& k = ring->field;
    for (auto& t : terms) {
      auto it = acc.find(t.mono);
      if (it == acc.end())
        acc.emplace(std::move(t.mono), std::move(t.coef));
      else
        it->second = k.add(it->second, t.coef);
    }
    std::vector<Term<F>> out;
    out.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
      if (!k.is_zero(it->second)) out.push_back({it->first, it->second});
    return Polynomial(std::move(ring), std::move(out));
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Term<F>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nterms() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  std::int64_t total_degree() const {  // -1 for the zero polynomial
    std::int64_t d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_) || terms_.size() != o.terms_.size())
      return false;
    const F& k = ring_->field;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].mono != o.terms_[i].mono ||
          !k.equal(terms_[i].coef, o.terms_[i].coef))
        return false;
    }
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator-() const {
    std::vector<Term<F>> t = terms_;
    for (auto& x : t) x.coef = ring_->field.neg(x.coef);
    return Polynomial(ring_, std::move(t));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    const F& k = a.ring_->field;
    std::vector<Term<F>> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = Monomial::cmp_struct(a.terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        out.push_back(a.terms_[i++]);
      } else if (c < 0) {
        out.push_back(b.terms_[j++]);
      } else {
        V s = k.add(a.terms_[i].coef, b.terms_[j].coef);
        if (!k.is_zero(s)) out.push_back({a.terms_[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
    return Polynomial(a.ring_, std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    const F& k = a.ring_->field;
    std::map<Monomial, V> acc;
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        Monomial m = ta.mono.times(tb.mono);
        V c = k.mul(ta.coef, tb.coef);
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(std::move(m), std::move(c));
        else
          it->second = k.add(it->second, c);
      }
    }
    std::vector<Term<F>> out;
    out.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
      if (!k.is_zero(it->second)) out.push_back({it->first, it->second});
    return Polynomial(a.ring_, std::move(out));
  }

  Polynomial scaled(const V& c) const {
    const F& k = ring_->field;
    if (k.is_zero(c)) return zero(ring_);
    std::vector<Term<F>> t = terms_;
    for (auto& x : t) x.coef = k.mul(x.coef, c);
    return Polynomial(ring_, std::move(t));
  }

  /// Multiply by the single term c * x^m.
  Polynomial times_term(const Monomial& m, const V& c) const {
    const F& k = ring_->field;
    if (k.is_zero(c)) return zero(ring_);
    std::vector<Term<F>> t;
    t.reserve(terms_.size());
    for (const auto& x : terms_) t.push_back({x.mono.times(m), k.mul(x.coef, c)});
    return Polynomial(ring_, std::move(t));
  }

  Polynomial pow(long long e) const {
    if (e < 0) throw EngineError("negative polynomial power");
    Polynomial r = constant(ring_, ring_->field.one());
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = (e >>= 1) ? base * base : base;
    }
    return r;
  }

  /// Formal partial derivative with respect to variable i.
  Polynomial derivative(std::size_t i) const {
    if (i >= ring_->nvars()) throw InputError("derivative index out of range");
    const F& k = ring_->field;
    std::vector<Term<F>> out;
    for (const auto& t : terms_) {
      std::int32_t e = t.mono[i];
      if (e == 0) continue;
      V c = k.mul(t.coef, k.from_long(e));
      if (k.is_zero(c)) continue;  // characteristic divides the exponent
      Monomial m = t.mono;
      m.at(i) = e - 1;
      out.push_back({std::move(m), std::move(c)});
    }
    // structural order is preserved termwise except for dropped terms
    std::sort(out.begin(), out.end(), [](const Term<F>& a, const Term<F>& b) {
      return Monomial::cmp_struct(a.mono, b.mono) > 0;
    });
    return Polynomial(ring_, std::move(out));
  }

  /// The order-maximal term; throws on the zero polynomial.
  const Term<F>& leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw EngineError("leading term of zero polynomial");
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
      if (order.compare(terms_[i].mono, terms_[best].mono) > 0) best = i;
    return terms_[best];
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    // print in grevlex-descending order with the sign pulled out front
    std::vector<const Term<F>*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    MonomialOrder g = MonomialOrder::grevlex();
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](const Term<F>* a, const Term<F>* b) {
                       return g.compare(a->mono, b->mono) > 0;
                     });
    const F& k = ring_->field;
    std::ostringstream os;
    bool first = true;
    for (const Term<F>* t : sorted) {
      V c = t->coef;
      bool negative = F::is_negative(c);
      if (negative) c = k.neg(c);
      if (first) {
        if (negative) os << "-";
        first = false;
      } else {
        os << (negative ? " - " : " + ");
      }
      std::string mono = mono_str(t->mono);
      if (mono.empty()) {
        os << k.str(c);
      } else if (k.is_one(c)) {
        os << mono;
      } else {
        os << k.str(c) << "*" << mono;
      }
    }
    return os.str();
  }

 private:
  Polynomial(RingPtr<F> ring, std::vector<Term<F>> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  std::string mono_str(const Monomial& m) const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (any) os << "*";
      os << ring_->vars[i];
      if (m[i] > 1) os << "^" << m[i];
      any = true;
    }
    return os.str();
  }

  RingPtr<F> ring_;
  std::vector<Term<F>> terms_;
};

/// Lift into a ring extended by k fresh leading variables.
template <class F>
Polynomial<F> lift_front(const Polynomial<F>& f, const RingPtr<F>& big,
                         std::size_t k) {
  std::vector<Term<F>> t;
  t.reserve(f.nterms());
  for (const auto& x : f.terms())
    t.push_back({x.mono.prepended_front(k), x.coef});
  return Polynomial<F>::collect(big, std::move(t));
}

/// Project a polynomial free of the first k variables into the smaller ring.
template <class F>
Polynomial<F> drop_front(const Polynomial<F>& f, const RingPtr<F>& small,
                         std::size_t k) {
  std::vector<Term<F>> t;
  t.reserve(f.nterms());
  for (const auto& x : f.terms()) {
    if (x.mono.uses_front(k))
      throw EngineError("polynomial still involves eliminated variables");
    t.push_back({x.mono.dropped_front(k), x.coef});
  }
  return Polynomial<F>::collect(small, std::move(t));
}

}  // namespace polarmac

#endif
