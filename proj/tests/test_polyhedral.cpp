#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "hap/errors.hpp"
#include "hap/polyhedral.hpp"

using namespace hap;
using hap::testing::all_builtins;

TEST_CASE("classification golden values") {
  auto c0 = classify(Family::singletons());
  CHECK(c0.polyhedral.value == true);
  CHECK(c0.v_polyhedral.value == true);
  CHECK(c0.iv_polyhedral.value == true);
  CHECK(c0.i_polyhedral.value == true);
  CHECK(c0.shrinking_basis.value == true);

  auto schreier = classify(Family::schreier(1));
  CHECK(schreier.finite_sets_only.value == true);
  CHECK(schreier.polyhedral.value == true);
  CHECK(schreier.v_polyhedral.value == true);
  CHECK(schreier.iv_polyhedral.value == false);
  CHECK(schreier.i_polyhedral.value == false);

  auto l1 = classify(Family::all_subsets());
  CHECK(l1.finite_sets_only.value == false);
  CHECK(l1.polyhedral.value == false);
  CHECK(l1.shrinking_basis.value == false);

  // the pointwise closure of the parity family holds the two infinite
  // blocks, so the generated space contains an isometric ell_1 copy
  auto eo = classify(Family::evens_odds());
  CHECK(eo.finite_sets_only.value == false);
  CHECK(eo.polyhedral.value == false);
  CHECK(eo.iv_polyhedral.value == false);

  CHECK(classify(Family::dyadic_branches(std::nullopt)).polyhedral.value == false);
  CHECK(classify(Family::dyadic_branches(3)).i_polyhedral.value == true);
  CHECK(classify(Family::explicit_family({FiniteSet{1, 2}})).i_polyhedral.value == true);
}

TEST_CASE("classification provenance tags") {
  auto report = classify(Family::schreier(1));
  CHECK(report.finite_sets_only.provenance == Provenance::by_computation);
  CHECK(report.polyhedral.provenance == Provenance::by_theorem);
  CHECK(report.iv_polyhedral.provenance == Provenance::by_theorem);
}

TEST_CASE("reports respect the implication chain") {
  for (const auto& fam : all_builtins()) {
    auto r = classify(fam);
    REQUIRE(r.i_polyhedral.value.has_value());
    REQUIRE(r.iv_polyhedral.value.has_value());
    REQUIRE(r.v_polyhedral.value.has_value());
    if (*r.i_polyhedral.value) CHECK(*r.iv_polyhedral.value);
    if (*r.iv_polyhedral.value) CHECK(*r.v_polyhedral.value);
    CHECK(r.polyhedral.value == r.finite_sets_only.value);
    CHECK(r.shrinking_basis.value == r.finite_sets_only.value);
  }
}

TEST_CASE("spread closures mirror the regular-family corollary") {
  // a generator with two elements forces an infinite star, so (IV) fails
  auto wide = classify(Family::spread_hereditary_closure({FiniteSet{2, 3}}));
  CHECK(wide.iv_polyhedral.value == false);
  CHECK(wide.v_polyhedral.value == true);
  // singleton generators collapse to the singletons family
  auto narrow = classify(Family::spread_hereditary_closure({FiniteSet{4}}));
  CHECK(narrow.iv_polyhedral.value == true);
  CHECK(narrow.i_polyhedral.value == true);
}

TEST_CASE("c0 window probe") {
  auto c0 = classify(Family::singletons(), Window(6));
  REQUIRE(c0.c0_window_set.has_value());
  CHECK(*c0.c0_window_set == FiniteSet{1, 2, 3, 4, 5, 6});
  auto l1 = classify(Family::all_subsets(), Window(6));
  CHECK(!l1.c0_window_set.has_value());
}

TEST_CASE("iv violation witness for the schreier family") {
  Family s1 = Family::schreier(1);
  auto w = iv_violation_witness(s1, 2, Window(10));
  CHECK(w.core == FiniteSet{2});
  CHECK(w.x_star == DualVector::unit(2));
  CHECK(w.x == FSVector::unit(2));
  CHECK(pairing(w.x_star, w.x) == 1);
  // the sets are {2, n} with escaping tails
  REQUIRE(w.sets.size() == 8);
  CHECK(w.sets.front() == FiniteSet{2, 3});
  CHECK(w.sets.back() == FiniteSet{2, 10});
  for (const auto& a : w.sets) CHECK(s1.is_globally_maximal(a));

  // every x_n* is a window extreme point
  std::set<DualVector> atoms;
  for (const auto& f : extreme_points(s1, Window(10), Scope::window))
    atoms.insert(f.to_vector());
  for (const auto& xn : w.sequence) CHECK(atoms.count(xn) == 1);

  // dyadic probe gaps are 2^-n, strictly decreasing
  REQUIRE(w.pairing_gaps.size() == 1);
  const auto& gaps = w.pairing_gaps[0].gaps;
  CHECK(gaps.front() == Rational(1, 8));
  for (size_t k = 1; k < gaps.size(); ++k) CHECK(gaps[k] < gaps[k - 1]);
}

TEST_CASE("iv violation witness for spread closures and larger cores") {
  Family shc = Family::spread_hereditary_closure({FiniteSet{2, 3}});
  auto w = iv_violation_witness(shc, 4, Window(9));
  CHECK(w.core == FiniteSet{4});
  for (const auto& a : w.sets) {
    CHECK(a.contains(4));
    CHECK(shc.is_globally_maximal(a));
  }

  // schreier sets through 3 are triples, so the tails have two elements
  auto deep = iv_violation_witness(Family::schreier(1), 3, Window(12));
  CHECK(deep.sets.front() == FiniteSet{3, 4, 5});
  for (const auto& gaps : deep.pairing_gaps)
    for (size_t k = 1; k < gaps.gaps.size(); ++k)
      CHECK(gaps.gaps[k] <= gaps.gaps[k - 1]);
}

TEST_CASE("iv violation witness preconditions") {
  CHECK_THROWS_AS(iv_violation_witness(Family::schreier(1), 1, Window(8)), Error);
  CHECK_THROWS_AS(iv_violation_witness(Family::singletons(), 3, Window(8)), Error);
  CHECK_THROWS_AS(iv_violation_witness(Family::dyadic_branches(4), 2, Window(8)), Error);
  // infinite members put the witness outside the finite-set construction
  CHECK_THROWS_AS(iv_violation_witness(Family::all_subsets(), 1, Window(8)), Error);
  CHECK_THROWS_AS(iv_violation_witness(Family::dyadic_branches(std::nullopt), 1, Window(8)),
                  Error);
}
