#pragma once

#include <cstdlib>
#include <random>
#include <vector>

#include "hap/family.hpp"
#include "hap/norms.hpp"
#include "hap/vectors.hpp"

namespace hap::testing {

/// Seed for randomized property tests; override with HAP_TEST_SEED.
inline std::uint64_t test_seed(std::uint64_t fallback = 0x5eed2026) {
  if (const char* env = std::getenv("HAP_TEST_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return fallback;
}

/// Sparse rational vector with random support inside {1..max_index}.
inline RatVec random_vector(std::mt19937_64& rng, int max_index, int max_support,
                            bool allow_zero = false) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9), idx(1, max_index);
  RatVec v;
  int support = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_support));
  for (int k = 0; k < support; ++k) {
    int n = num(rng);
    if (n == 0 && !allow_zero) n = 1;
    v.set(idx(rng), Rational(n) / den(rng));
  }
  if (v.is_zero() && !allow_zero) v.set(idx(rng), 1);
  return v;
}

/// Brute-force norm over every subset of the support (2^k bitmasks), fully
/// independent of the library's member enumeration.
inline Rational brute_force_norm1(const RatVec& x, const Family& family) {
  auto supp = x.support().elements();
  int k = static_cast<int>(supp.size());
  Rational best = 0;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> elems;
    for (int b = 0; b < k; ++b)
      if (mask & (1 << b)) elems.push_back(supp[static_cast<size_t>(b)]);
    FiniteSet a = FiniteSet::of(std::move(elems));
    if (!family.contains(a)) continue;
    Rational sum = 0;
    for (int i : a) {
      Rational v = x.at(i);
      sum += v < 0 ? Rational(-v) : v;
    }
    best = std::max(best, sum);
  }
  return best;
}

inline std::vector<Family> all_builtins() {
  return {Family::singletons(),
          Family::all_subsets(),
          Family::schreier(1),
          Family::schreier(2),
          Family::evens_odds(),
          Family::dyadic_branches(4),
          Family::dyadic_branches(std::nullopt),
          Family::spread_hereditary_closure({FiniteSet{2, 3}})};
}

}  // namespace hap::testing
