#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "hap/errors.hpp"
#include "hap/norms.hpp"

using namespace hap;
using hap::testing::all_builtins;
using hap::testing::brute_force_norm1;
using hap::testing::random_vector;
using hap::testing::test_seed;

namespace {

FSVector make(std::initializer_list<std::pair<int, Rational>> entries) {
  FSVector v;
  for (const auto& [i, r] : entries) v.set(i, r);
  return v;
}

}  // namespace

TEST_CASE("norm spot values") {
  FSVector ones = make({{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}});
  auto r = norm(ones, Family::schreier(1));
  CHECK(r.value == 3);
  CHECK(r.achieving_sets == std::vector<FiniteSet>{FiniteSet{3, 4, 5}});

  FSVector mixed = make({{1, 1}, {2, -2}, {3, Rational(1) / 2}});
  CHECK(norm(mixed, Family::singletons()).value == 2);

  FSVector triangle = make({{1, Rational(3) / 5}, {2, Rational(4) / 5}});
  auto euclid = norm(triangle, Family::all_subsets(), PNorm(2));
  CHECK(!euclid.exact);
  CHECK(euclid.approx == doctest::Approx(1.0).epsilon(1e-12));

  FSVector schreier_x = make({{1, 1}, {2, Rational(1) / 2}, {3, Rational(1) / 2},
                              {4, Rational(1) / 2}});
  CHECK(norm(schreier_x, Family::schreier(1)).value == 1);
}

TEST_CASE("norm equals the subset brute force on every builtin") {
  std::mt19937_64 rng(test_seed());
  for (const auto& fam : all_builtins()) {
    for (int trial = 0; trial < 40; ++trial) {
      RatVec x = random_vector(rng, 8, 6);
      CAPTURE(fam.name());
      CHECK(norm(x, fam).value == brute_force_norm1(x, fam));
    }
  }
}

TEST_CASE("projection") {
  FSVector x = make({{1, 1}, {2, 2}, {3, 3}});
  CHECK(project(x, FiniteSet{1, 3}) == make({{1, 1}, {3, 3}}));
  CHECK(project(x, FiniteSet()).is_zero());
  CHECK(project(x, FiniteSet{1, 2, 3, 9}) == x);
  // contractivity on every family
  std::mt19937_64 rng(test_seed());
  for (const auto& fam : all_builtins()) {
    RatVec y = random_vector(rng, 7, 5);
    CHECK(norm(project(y, FiniteSet{2, 4, 6}), fam).value <= norm(y, fam).value);
  }
}

TEST_CASE("one-unconditionality under sign flips") {
  std::mt19937_64 rng(test_seed());
  for (const auto& fam : all_builtins()) {
    RatVec x = random_vector(rng, 6, 6);
    auto supp = x.support().elements();
    Rational base = norm(x, fam).value;
    for (int mask = 0; mask < (1 << supp.size()); ++mask) {
      RatVec flipped;
      for (size_t b = 0; b < supp.size(); ++b) {
        Rational v = x.at(supp[b]);
        flipped.set(supp[b], (mask & (1 << b)) ? Rational(-v) : v);
      }
      CHECK(norm(flipped, fam).value == base);
    }
  }
}

TEST_CASE("coordinate monotonicity") {
  std::mt19937_64 rng(test_seed() + 1);
  std::uniform_int_distribution<int> den(1, 5);
  for (const auto& fam : all_builtins()) {
    for (int trial = 0; trial < 20; ++trial) {
      RatVec big = random_vector(rng, 7, 5);
      RatVec small;
      for (const auto& [i, v] : big) {
        // shrink each coordinate by a random factor in [0, 1]
        Rational f = Rational(static_cast<int>(rng() % 4)) / 3;
        small.set(i, v * f);
      }
      CHECK(norm(small, fam).value <= norm(big, fam).value);
    }
  }
}

TEST_CASE("triangle inequality and homogeneity") {
  std::mt19937_64 rng(test_seed() + 2);
  for (const auto& fam : all_builtins()) {
    for (int trial = 0; trial < 15; ++trial) {
      RatVec a = random_vector(rng, 6, 4);
      RatVec b = random_vector(rng, 6, 4);
      CHECK(norm(a + b, fam).value <= norm(a, fam).value + norm(b, fam).value);
      Rational scale = Rational(-7) / 3;
      CHECK(norm(a.scaled(scale), fam).value == Rational(7) / 3 * norm(a, fam).value);
    }
  }
}

TEST_CASE("all_subsets gives the lp norm, singletons the max norm") {
  std::mt19937_64 rng(test_seed() + 3);
  for (int trial = 0; trial < 25; ++trial) {
    RatVec x = random_vector(rng, 8, 6);
    Rational l1 = 0, linf = 0;
    for (const auto& [i, v] : x) {
      Rational a = v < 0 ? Rational(-v) : v;
      l1 += a;
      linf = std::max(linf, a);
    }
    CHECK(norm(x, Family::all_subsets()).value == l1);
    CHECK(norm(x, Family::singletons()).value == linf);
    double l2 = 0;
    for (const auto& [i, v] : x) l2 += to_double(v) * to_double(v);
    CHECK(norm(x, Family::all_subsets(), PNorm(2)).approx ==
          doctest::Approx(std::sqrt(l2)).epsilon(1e-10));
  }
}

TEST_CASE("norming sets spot values") {
  CHECK(norming_sets(make({{1, 1}, {2, 1}}), Family::singletons()) ==
        std::vector<FiniteSet>{FiniteSet{1}, FiniteSet{2}});
  FSVector x = make({{1, 1}, {2, Rational(1) / 2}, {3, Rational(1) / 2},
                     {4, Rational(1) / 2}});
  CHECK(norming_sets(x, Family::schreier(1)) ==
        std::vector<FiniteSet>{FiniteSet{1}, FiniteSet{2, 3}, FiniteSet{2, 4},
                               FiniteSet{3, 4}});
  FSVector blocks = make({{1, Rational(1) / 2}, {3, Rational(1) / 2},
                          {2, Rational(1) / 2}, {4, Rational(1) / 2}});
  CHECK(norming_sets(blocks, Family::evens_odds()) ==
        std::vector<FiniteSet>{FiniteSet{1, 3}, FiniteSet{2, 4}});
  CHECK_THROWS_AS(norming_sets(FSVector(), Family::singletons()), Error);
}

TEST_CASE("norming sets are family members inside the support") {
  std::mt19937_64 rng(test_seed() + 4);
  for (const auto& fam : all_builtins()) {
    for (int trial = 0; trial < 20; ++trial) {
      RatVec x = random_vector(rng, 8, 5);
      for (const auto& a : norming_sets(x, fam)) {
        CHECK(fam.contains(a));
        CHECK(a.subset_of(x.support()));
      }
    }
  }
}

TEST_CASE("strictly monotone norm has a unique norming set") {
  std::mt19937_64 rng(test_seed() + 5);
  for (int trial = 0; trial < 25; ++trial) {
    RatVec x = random_vector(rng, 8, 6);
    auto m = norming_sets(x, Family::all_subsets());
    REQUIRE(m.size() == 1);
    CHECK(m[0] == x.support());
  }
}

TEST_CASE("evens odds norming sets never exceed two") {
  std::mt19937_64 rng(test_seed() + 6);
  for (int trial = 0; trial < 40; ++trial) {
    RatVec x = random_vector(rng, 8, 6);
    CHECK(norming_sets(x, Family::evens_odds()).size() <= 2);
  }
}

TEST_CASE("prefix collection") {
  FSVector x = make({{1, 1}, {2, Rational(1) / 2}, {3, Rational(1) / 2},
                     {4, Rational(1) / 2}});
  Family s1 = Family::schreier(1);
  CHECK(prefix_collection(x, s1, PNorm(), 1) ==
        std::vector<FiniteSet>{FiniteSet{1}, FiniteSet{2}, FiniteSet{3}});
  CHECK(prefix_collection(x, s1, PNorm(), 2) ==
        std::vector<FiniteSet>{FiniteSet{2, 3}, FiniteSet{2, 4}, FiniteSet{3, 4}});
  // a single short norming set leaves nothing of length two
  CHECK(prefix_collection(make({{2, 5}}), Family::singletons(), PNorm(), 2).empty());
}
