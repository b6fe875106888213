#pragma once

#include <vector>

#include "hap/family.hpp"
#include "hap/norms.hpp"
#include "hap/rational.hpp"
#include "hap/vectors.hpp"

namespace hap {

/// sum_{i in set} signs[i] e_i^*; the extreme points of the dual ball are
/// exactly these over inclusion-maximal family members.
struct SignedIndicator {
  FiniteSet set;
  std::vector<int> signs;  // +1 / -1, aligned with set.elements()

  DualVector to_vector() const;
  static SignedIndicator plus(const FiniteSet& s);  // all signs +1

  auto operator<=>(const SignedIndicator&) const = default;
};

/// All signed indicators over maximal sets in the requested scope,
/// in canonical order (sets lexicographic, then sign masks).
std::vector<SignedIndicator> extreme_points(const Family& family, Window w, Scope scope,
                                            const EnumBudget& budget = EnumBudget());

/// Norm of y in the dual of the p = 1 space: sup{ <y, x> : ||x|| <= 1 },
/// solved as an exact LP over the maximal family members inside supp(y).
Rational dual_norm(const DualVector& y, const Family& family,
                   const EnumBudget& budget = EnumBudget());

/// min{ sum lambda_A : lambda >= 0, sum lambda_A 1_A >= |y| pointwise }.
/// Equals dual_norm exactly; the pair is the strong-duality self check.
Rational covering_norm(const DualVector& y, const Family& family,
                       const EnumBudget& budget = EnumBudget());

struct Decomposition {
  struct Term {
    Rational weight;
    SignedIndicator atom;
  };
  std::vector<Term> terms;

  DualVector combine() const;
  Rational total_weight() const;
};

/// Writes y (dual norm <= 1) as a convex combination of globally maximal
/// signed indicators drawn from the window of supp(y) extended by `margin`
/// indices. Throws infeasible with a window hint when the pool is too small.
Decomposition convex_decomposition(const DualVector& y, const Family& family,
                                   int margin = 2,
                                   const EnumBudget& budget = EnumBudget());

/// The canonical unit vector x with <f, x> = 1 and ||x|| = 1: uniform
/// weights eps_i / |B| on B = f.set. Requires f.set globally maximal.
FSVector exposing_vector(const SignedIndicator& f, const Family& family, Window w);

/// True iff f is the only element of the window dual ball acting as 1 on x.
/// Preconditions: <f, x> = 1 and ||x|| = 1.
bool verify_exposed(const SignedIndicator& f, const FSVector& x, const Family& family,
                    Window w, const EnumBudget& budget = EnumBudget());

/// M(y) computed with the dual norm in place of the primal one. Exact for
/// p = 1; for p > 1 only the all_subsets family is supported (conjugate
/// exponent norm, tolerance 1e-9).
std::vector<FiniteSet> dual_norming_sets(const DualVector& y, const Family& family,
                                         const PNorm& p = PNorm(),
                                         const EnumBudget& budget = EnumBudget());

}  // namespace hap
