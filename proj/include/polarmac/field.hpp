#ifndef POLARMAC_FIELD_HPP
#define POLARMAC_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "polarmac/errors.hpp"
#include "polarmac/rng.hpp"

namespace polarmac {

/// Runtime description of a coefficient field.
struct FieldSpec {
  enum class Kind { kRational, kPrime };

  // Default working prime 2^31 - 19 and the cross-check prime 2^31 - 1.
  static constexpr std::uint64_t kDefaultPrime = 2147483629ULL;
  static constexpr std::uint64_t kAlternatePrime = 2147483647ULL;

  Kind kind = Kind::kPrime;
  std::uint64_t p = kDefaultPrime;

  static FieldSpec rational() { return {Kind::kRational, 0}; }
  static FieldSpec prime(std::uint64_t p) { return {Kind::kPrime, p}; }

  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && (kind == Kind::kRational || p == o.p);
  }

  std::string name() const {
    return kind == Kind::kRational ? "rational" : "gfp:" + std::to_string(p);
  }

  /// The prime used for the bad-prime / agreement cross-check.
  std::uint64_t alternate_prime() const {
    return p == kAlternatePrime ? kDefaultPrime : kAlternatePrime;
  }
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// ---------------------------------------------------------------------------
// GF(p), p an odd prime with p < 2^32 so products fit in a 64-bit word.
// Elements are canonical residues in [0, p).
// ---------------------------------------------------------------------------
class GfpField {
 public:
  using Value = std::uint64_t;

  // The arithmetic works for any prime below 2^32; problem/CLI validation
  // additionally requires p > 2^20 so squarefree computations stay safe.
  explicit GfpField(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (1ULL << 32) || !is_prime_u64(p))
      throw InputError("field modulus must be a prime below 2^32: " +
                       std::to_string(p));
  }

  std::uint64_t modulus() const { return p_; }
  FieldSpec spec() const { return FieldSpec::prime(p_); }
  bool operator==(const GfpField& o) const { return p_ == o.p_; }

  Value zero() const { return 0; }
  Value one() const { return 1; }
  bool is_zero(Value a) const { return a == 0; }
  bool is_one(Value a) const { return a == 1; }
  bool equal(Value a, Value b) const { return a == b; }
  static bool is_negative(Value) { return false; }

  Value add(Value a, Value b) const {
    Value s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Value sub(Value a, Value b) const { return a >= b ? a - b : a + p_ - b; }
  Value neg(Value a) const { return a == 0 ? 0 : p_ - a; }
  Value mul(Value a, Value b) const { return (a * b) % p_; }

  Value inv(Value a) const {
    if (a == 0) throw EngineError("inverse of zero in GF(p)");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_);
    std::int64_t new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Value>(t);
  }
  Value div(Value a, Value b) const { return mul(a, inv(b)); }

  Value from_long(long long x) const {
    long long m = static_cast<long long>(p_);
    long long r = x % m;
    if (r < 0) r += m;
    return static_cast<Value>(r);
  }

  /// Reduce a (possibly huge) decimal digit string mod p.
  Value from_decimal(std::string_view digits) const {
    Value r = 0;
    for (char c : digits) r = add(mul(r, 10), static_cast<Value>(c - '0'));
    return r;
  }

  Value from_fraction(std::string_view num, std::string_view den) const {
    Value d = from_decimal(den);
    if (d == 0)
      throw InputError("coefficient denominator is zero modulo " +
                       std::to_string(p_));
    return div(from_decimal(num), d);
  }

  std::string str(Value a) const { return std::to_string(a); }

  Value random_value(Rng& rng) const { return rng.below(p_); }
  Value random_nonzero(Rng& rng) const { return rng.below(p_ - 1) + 1; }

 private:
  std::uint64_t p_;
};

// ---------------------------------------------------------------------------
// Exact rationals, always in lowest terms with positive denominator
// (GMP keeps mpq_class canonical under arithmetic).
// ---------------------------------------------------------------------------
class RationalField {
 public:
  using Value = mpq_class;

  // Range for random coefficient draws. Small on purpose: rational Groebner
  // runs blow up quickly with large inputs, and the catalog only needs
  // enough entropy to dodge the proper closed bad loci.
  static constexpr unsigned long kSampleRange = 4096;

  FieldSpec spec() const { return FieldSpec::rational(); }
  bool operator==(const RationalField&) const { return true; }

  Value zero() const { return Value(0); }
  Value one() const { return Value(1); }
  bool is_zero(const Value& a) const { return sgn(a) == 0; }
  bool is_one(const Value& a) const { return a == 1; }
  bool equal(const Value& a, const Value& b) const { return a == b; }
  static bool is_negative(const Value& a) { return sgn(a) < 0; }

  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value inv(const Value& a) const {
    if (sgn(a) == 0) throw EngineError("inverse of zero rational");
    return 1 / a;
  }
  Value div(const Value& a, const Value& b) const { return a / inv_guard(b); }

  Value from_long(long long x) const { return Value(static_cast<long>(x)); }

  Value from_decimal(std::string_view digits) const {
    return Value(mpz_class(std::string(digits)));
  }

  Value from_fraction(std::string_view num, std::string_view den) const {
    mpz_class d{std::string(den)};
    if (d == 0) throw InputError("coefficient denominator is zero");
    Value q(mpz_class(std::string(num)), d);
    q.canonicalize();
    return q;
  }

  std::string str(const Value& a) const { return a.get_str(); }

  Value random_value(Rng& rng) const {
    return Value(static_cast<unsigned long>(rng.below(kSampleRange + 1)));
  }
  Value random_nonzero(Rng& rng) const {
    return Value(static_cast<unsigned long>(rng.below(kSampleRange) + 1));
  }

 private:
  const Value& inv_guard(const Value& b) const {
    if (sgn(b) == 0) throw EngineError("division by zero rational");
    return b;
  }
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                          19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set decides primality for every n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                          19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace polarmac

#endif
