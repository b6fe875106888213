#include <random>

#include "doctest.h"
#include "hap/simplex.hpp"

using namespace hap;
using namespace hap::lp;

namespace {

Problem knapsack_like() {
  // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18
  Problem p;
  p.num_vars = 2;
  p.objective = {3, 5};
  p.add_row(Rel::le, 4).coeffs = {1, 0};
  p.add_row(Rel::le, 12).coeffs = {0, 2};
  p.add_row(Rel::le, 18).coeffs = {3, 2};
  return p;
}

}  // namespace

TEST_CASE("textbook maximum") {
  auto s = solve(knapsack_like());
  REQUIRE(s.status == Status::optimal);
  CHECK(s.objective == 36);
  CHECK(s.x[0] == 2);
  CHECK(s.x[1] == 6);
  CHECK(check_optimal(knapsack_like(), s));
}

TEST_CASE("equality and ge rows with a phase-1 start") {
  // min x + y s.t. x + y >= 2, x - y = 1, x,y >= 0 -> x = 3/2, y = 1/2
  Problem p;
  p.num_vars = 2;
  p.objective = {-1, -1};  // maximize the negation
  p.add_row(Rel::ge, 2).coeffs = {1, 1};
  p.add_row(Rel::eq, 1).coeffs = {1, -1};
  auto s = solve(p);
  REQUIRE(s.status == Status::optimal);
  CHECK(s.objective == -2);
  CHECK(s.x[0] == Rational(3) / 2);
  CHECK(s.x[1] == Rational(1) / 2);
  CHECK(check_optimal(p, s));
}

TEST_CASE("free variables") {
  // max x s.t. x + y <= 1, y >= -3, x free, y free -> x = 4
  Problem p;
  p.num_vars = 2;
  p.objective = {1, 0};
  p.free_vars = {true, true};
  p.add_row(Rel::le, 1).coeffs = {1, 1};
  p.add_row(Rel::ge, -3).coeffs = {0, 1};
  auto s = solve(p);
  REQUIRE(s.status == Status::optimal);
  CHECK(s.objective == 4);
  CHECK(check_optimal(p, s));
}

TEST_CASE("infeasible and unbounded detection") {
  Problem p;
  p.num_vars = 1;
  p.objective = {1};
  p.add_row(Rel::le, 1).coeffs = {1};
  p.add_row(Rel::ge, 2).coeffs = {1};
  CHECK(solve(p).status == Status::infeasible);

  Problem q;
  q.num_vars = 1;
  q.objective = {1};
  q.add_row(Rel::ge, 0).coeffs = {1};
  CHECK(solve(q).status == Status::unbounded);
}

TEST_CASE("negative right-hand sides") {
  // max -x s.t. -x <= -2  ->  x = 2
  Problem p;
  p.num_vars = 1;
  p.objective = {-1};
  p.add_row(Rel::le, -2).coeffs = {-1};
  auto s = solve(p);
  REQUIRE(s.status == Status::optimal);
  CHECK(s.objective == -2);
  CHECK(check_optimal(p, s));
}

TEST_CASE("degenerate cycling guard") {
  // classic Beale example; Bland's rule must terminate at objective 1/20
  Problem p;
  p.num_vars = 4;
  p.objective = {Rational(3) / 4, -150, Rational(1) / 50, -6};
  p.add_row(Rel::le, 0).coeffs = {Rational(1) / 4, -60, Rational(-1) / 25, 9};
  p.add_row(Rel::le, 0).coeffs = {Rational(1) / 2, -90, Rational(-1) / 50, 3};
  p.add_row(Rel::le, 1).coeffs = {0, 0, 1, 0};
  auto s = solve(p);
  REQUIRE(s.status == Status::optimal);
  CHECK(s.objective == Rational(1) / 20);
  CHECK(check_optimal(p, s));
}

TEST_CASE("random LPs certify optimality exactly") {
  std::mt19937_64 rng(20260810);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    Problem p;
    p.num_vars = 1 + static_cast<int>(rng() % 5);
    p.objective.resize(static_cast<size_t>(p.num_vars));
    for (auto& c : p.objective) c = Rational(num(rng)) / den(rng);
    int rows = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < rows; ++i) {
      auto& row = p.add_row(Rel::le, Rational(1 + (num(rng) + 6)) / den(rng));
      for (auto& c : row.coeffs) c = Rational(num(rng)) / den(rng);
    }
    // keep the region bounded so optima exist
    for (int j = 0; j < p.num_vars; ++j) {
      auto& row = p.add_row(Rel::le, 10);
      row.coeffs[static_cast<size_t>(j)] = 1;
    }
    auto s = solve(p);
    REQUIRE(s.status == Status::optimal);
    CHECK(check_optimal(p, s));
  }
}
