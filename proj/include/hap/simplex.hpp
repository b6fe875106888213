#pragma once

#include <vector>

#include "hap/rational.hpp"

namespace hap::lp {

enum class Rel { le, ge, eq };
enum class Status { optimal, infeasible, unbounded };

struct Constraint {
  std::vector<Rational> coeffs;  // dense over the problem's variables
  Rel rel;
  Rational rhs;
};

/// maximize c.x subject to the rows; variables are >= 0 unless marked free.
struct Problem {
  int num_vars = 0;
  std::vector<Rational> objective;  // size num_vars
  std::vector<Constraint> rows;
  std::vector<bool> free_vars;  // empty means all nonnegative

  Constraint& add_row(Rel rel, Rational rhs);
};

struct Solution {
  Status status = Status::infeasible;
  Rational objective;
  std::vector<Rational> x;     // primal values, size num_vars
  std::vector<Rational> duals; // one multiplier per row (see check_optimal)
};

/// Exact-rational two-phase primal simplex with Bland's pivoting rule.
/// Guaranteed to terminate; every comparison is exact so the reported
/// status is never a tolerance artifact.
Solution solve(const Problem& problem);

/// Construction-independent optimality check: verifies primal feasibility,
/// dual feasibility (sign conditions per row relation and reduced costs for
/// nonnegative variables) and equality of the two objective values, all in
/// exact arithmetic on the original problem data. Returns false on any
/// violation, so a passing check certifies optimality by weak duality.
bool check_optimal(const Problem& problem, const Solution& solution);

}  // namespace hap::lp
