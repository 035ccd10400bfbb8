#include "polarmac/hilbert.hpp"

#include <map>
#include <mutex>
#include <string>

namespace polarmac {
namespace {

// Drop generators divisible by another generator; sort structurally.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return Monomial::cmp_struct(a, b) < 0;
  });
  std::vector<Monomial> kept;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : kept) {
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(m);
  }
  return kept;
}

std::string memo_key(const std::vector<Monomial>& gens, std::size_t nvars) {
  std::string key = std::to_string(nvars);
  for (const auto& m : gens) {
    key.push_back('|');
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) key.push_back(',');
      key += std::to_string(m[i]);
    }
  }
  return key;
}

void strip_zeros(std::vector<long long>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<long long> sub_shifted(const std::vector<long long>& a,
                                   const std::vector<long long>& b,
                                   std::size_t shift) {
  std::vector<long long> out(std::max(a.size(), b.size() + shift), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + shift] -= b[i];
  strip_zeros(out);
  return out;
}

std::map<std::string, std::vector<long long>>& memo() {
  static std::map<std::string, std::vector<long long>> m;
  return m;
}
std::mutex& memo_mutex() {
  static std::mutex mu;
  return mu;
}

std::vector<long long> numerator_rec(std::vector<Monomial> gens,
                                     std::size_t nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};  // unit ideal: zero numerator
  if (gens.size() == 1) {
    // 1 - t^deg
    std::vector<long long> out(gens[0].degree() + 1, 0);
    out[0] = 1;
    out.back() = -1;
    return out;
  }

  const std::string key = memo_key(gens, nvars);
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }

  // Split off the last (highest-degree) generator m:
  //   N(I + (m)) = N(I) - t^deg(m) * N(I : m)
  Monomial pivot = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g.divided_by(Monomial::gcd(g, pivot)));
  std::vector<long long> rest = numerator_rec(gens, nvars);
  std::vector<long long> quot = numerator_rec(std::move(colon), nvars);
  std::vector<long long> out =
      sub_shifted(rest, quot, static_cast<std::size_t>(pivot.degree()));

  std::lock_guard<std::mutex> lock(memo_mutex());
  memo().emplace(key, out);
  return out;
}

}  // namespace

std::vector<long long> hilbert_numerator(std::vector<Monomial> gens,
                                         std::size_t nvars) {
  return numerator_rec(std::move(gens), nvars);
}

}  // namespace polarmac
