#ifndef POLARMAC_MONOMIAL_HPP
#define POLARMAC_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "polarmac/errors.hpp"

namespace polarmac {

/// Exponent vector of fixed length = ambient variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::int32_t> exps) : e_(std::move(exps)) {
    for (auto x : e_)
      if (x < 0) throw EngineError("negative exponent in monomial");
  }

  std::size_t size() const { return e_.size(); }
  std::int32_t operator[](std::size_t i) const { return e_[i]; }
  std::int32_t& at(std::size_t i) { return e_[i]; }
  const std::vector<std::int32_t>& exponents() const { return e_; }

  std::int64_t degree() const {
    std::int64_t d = 0;
    for (auto x : e_) d += x;
    return d;
  }

  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
  }

  Monomial times(const Monomial& o) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      std::int64_t s = std::int64_t(e_[i]) + o.e_[i];
      if (s > std::numeric_limits<std::int32_t>::max())
        throw EngineError("monomial exponent overflow");
      r.e_[i] = static_cast<std::int32_t>(s);
    }
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// this / d, requires d | this.
  Monomial divided_by(const Monomial& d) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (d.e_[i] > e_[i]) throw EngineError("monomial division underflow");
      r.e_[i] = e_[i] - d.e_[i];
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.e_.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.e_.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      r.e_[i] = std::min(a.e_[i], b.e_[i]);
    return r;
  }

  /// Drops the first k variables (for elimination into the smaller ring).
  Monomial dropped_front(std::size_t k) const {
    return Monomial(std::vector<std::int32_t>(e_.begin() + k, e_.end()));
  }

  /// Prepends k zero exponents (lift into an extended ring).
  Monomial prepended_front(std::size_t k) const {
    std::vector<std::int32_t> v(k, 0);
    v.insert(v.end(), e_.begin(), e_.end());
    return Monomial(std::move(v));
  }

  bool uses_front(std::size_t k) const {
    for (std::size_t i = 0; i < k; ++i)
      if (e_[i] != 0) return true;
    return false;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  /// Structural (exponent-lexicographic) compare: storage/canonical order,
  /// independent of any term order. Returns <0, 0, >0.
  static int cmp_struct(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
      if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
    }
    return 0;
  }
  bool operator<(const Monomial& o) const { return cmp_struct(*this, o) < 0; }

 private:
  std::vector<std::int32_t> e_;
};

/// Total multiplicative monomial order with 1 minimal.
struct MonomialOrder {
  enum class Kind { kGrevlex, kLex, kBlock };

  Kind kind = Kind::kGrevlex;
  int block = 0;  // block(k): grevlex on the first k vars, tie-break grevlex on the rest

  static MonomialOrder grevlex() { return {Kind::kGrevlex, 0}; }
  static MonomialOrder lex() { return {Kind::kLex, 0}; }
  static MonomialOrder block_elim(int k) {
    if (k < 1) throw EngineError("block order needs k >= 1");
    return {Kind::kBlock, k};
  }

  /// >0 iff a > b in the order.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::kGrevlex:
        return grevlex_range(a, b, 0, a.size());
      case Kind::kLex:
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::kBlock: {
        const std::size_t k = static_cast<std::size_t>(block);
        int c = grevlex_range(a, b, 0, k);
        if (c != 0) return c;
        return grevlex_range(a, b, k, a.size());
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && (kind != Kind::kBlock || block == o.block);
  }
  bool operator<(const MonomialOrder& o) const {  // cache-map key
    if (kind != o.kind) return kind < o.kind;
    return kind == Kind::kBlock && block < o.block;
  }

 private:
  // Graded reverse lexicographic on the exponent window [lo, hi):
  // higher total degree wins; on ties the smaller exponent in the last
  // differing variable wins.
  static int grevlex_range(const Monomial& a, const Monomial& b,
                           std::size_t lo, std::size_t hi) {
    std::int64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
};

}  // namespace polarmac

#endif
