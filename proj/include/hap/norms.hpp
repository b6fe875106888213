#pragma once

#include <vector>

#include "hap/family.hpp"
#include "hap/rational.hpp"
#include "hap/vectors.hpp"

namespace hap {

/// Exponent of the norm. p = 1 runs fully exact; p > 1 evaluates the
/// coordinate powers in binary floating point with a relative comparison
/// tolerance of 1e-12.
struct PNorm {
  Rational p = 1;
  PNorm() = default;
  PNorm(Rational value);  // throws if p < 1
  bool is_one() const { return p == 1; }
  double value() const { return to_double(p); }
};

struct NormResult {
  bool exact = true;       // true exactly when p == 1
  Rational value;          // meaningful when exact
  double approx = 0.0;     // always filled
  std::vector<FiniteSet> achieving_sets;  // members attaining the supremum
};

/// sup over family members A of (sum_{i in A} |x_i|^p)^{1/p}. Heredity makes
/// the enumeration over members inside supp(x) lossless.
NormResult norm(const FSVector& x, const Family& family, const PNorm& p = PNorm(),
                const EnumBudget& budget = EnumBudget());

/// Coordinate projection; zeroes everything outside A.
FSVector project(const FSVector& x, const FiniteSet& A);

/// M(x): the family members A inside supp(x) attaining the norm such that
/// dropping any single coordinate strictly lowers it.
std::vector<FiniteSet> norming_sets(const FSVector& x, const Family& family,
                                    const PNorm& p = PNorm(),
                                    const EnumBudget& budget = EnumBudget());

/// {D(n) : D in M(x), |D| >= n}, deduplicated, in canonical order.
std::vector<FiniteSet> prefix_collection(const FSVector& x, const Family& family,
                                         const PNorm& p, int n,
                                         const EnumBudget& budget = EnumBudget());

}  // namespace hap
