#pragma once

#include <vector>

#include "hap/dual.hpp"
#include "hap/family.hpp"
#include "hap/norms.hpp"
#include "hap/vectors.hpp"

namespace hap {

enum class Side { primal, dual };

/// S(f, delta): the part of the unit ball where f exceeds 1 - delta.
/// On the dual side the functional is a primal vector acting by pairing.
/// LPs optimize over the closed slice; witness membership stays strict.
struct Slice {
  RatVec functional;
  Rational width;  // 0 < width <= 1
  Side side = Side::primal;
};

/// sup{ ||point - y|| : y in the closed slice } over the window, exact.
/// Primal side: one LP per signed indicator of a window-maximal set.
/// Dual side: vertex candidates of the sliced dual ball, then exact dual
/// norms of the differences.
Rational slice_sup_distance(const RatVec& point, const Slice& slice, const Family& family,
                            Window w, const EnumBudget& budget = EnumBudget());

/// sup{ ||u - v|| : u, v in the closed slice }, exact (p = 1).
Rational slice_diameter(const Slice& slice, const Family& family, Window w,
                        const EnumBudget& budget = EnumBudget());

struct NonDeltaCertificate {
  Slice slice;        // unit functional, adjusted width
  FSVector point;
  Rational sup_distance;   // LP-verified sup over the closed slice
  Rational bound_claimed;  // equals sup_distance; always < 2
  int prefix_length = 1;   // n that satisfied the hypothesis
  std::vector<FiniteSet> prefix_sets;
};

/// Builds the averaged prefix functional and certifies sup distance < 2.
/// Searches n upward, truncating every norming set to its first n elements
/// (shorter sets stay whole so that no norming direction is left uncovered).
NonDeltaCertificate non_delta_certificate(const FSVector& x, const Family& family,
                                          Window w,
                                          const EnumBudget& budget = EnumBudget());

struct VerifyResult {
  bool ok = false;
  Rational recomputed_sup;
};

/// Re-derives every certificate claim from scratch: unit functional, strict
/// slice membership, unit point, and the sup distance via freshly solved and
/// certificate-checked LPs.
VerifyResult verify_certificate(const NonDeltaCertificate& cert, const Family& family,
                                Window w, const EnumBudget& budget = EnumBudget());

struct HolderCertificate {
  Slice slice;   // functional coordinates are binary-float rationals
  FSVector point;  // sign-normalized input
  std::vector<int> first_elements;      // the distinct leading indices d_j
  double coordinate_floor = 0.0;        // verified: y_{d_j} >= x_{d_j}/2 on the slice
  double sup_distance = 0.0;            // derived distance bound
  double bound_claimed = 0.0;           // same value; < 2
};

/// Conjugate-exponent certificate for p > 1. The slice width is found by
/// halving until the coordinate bound y_{d_j} >= x_{d_j}/2 holds on the whole
/// closed slice, verified through an outer polyhedral approximation of the
/// ball (cutting planes), so a success is a sound claim at tolerance 1e-9.
HolderCertificate holder_certificate(const FSVector& x, const Family& family, Window w,
                                     const PNorm& p,
                                     const EnumBudget& budget = EnumBudget());

struct DeltaWitnesses {
  DualVector x_star;                  // sum of e_i^* over the window trace
  std::vector<DualVector> witnesses;  // the qualifying sign flips
  std::vector<int> flipped;           // flipped index per witness
  Rational fraction;                  // |witnesses| / |A|
};

/// Witness family x_a^* = x^* - 2 e_a^* for an infinite member of the
/// family's pointwise closure whose window trace is A. Each witness lies in
/// the open slice and satisfies dual_norm(x^* - x_a^*) = 2 exactly.
DeltaWitnesses delta_witness_sequence(const FiniteSet& trace, const Family& family,
                                      const Slice& slice, Window w,
                                      const EnumBudget& budget = EnumBudget());

struct DaugavetCertificate {
  Slice slice;    // dual-side slice around the heaviest atom
  DualVector point;
  Rational sup_distance;   // verified sup of ||y - z|| over the slice
  Rational bound_claimed;  // 2 - lambda
  Rational lambda;
  SignedIndicator atom;
  Decomposition decomposition;
  Rational diameter_bound;  // certified upper bound on the slice diameter (< 1)
};

/// Decomposes y, slices the dual ball around the heaviest atom thinly enough
/// that the slice diameter stays below 1, and certifies
/// sup ||y - z|| <= 2 - lambda by exact LPs.
DaugavetCertificate daugavet_exclusion(const DualVector& y, const Family& family,
                                       Window w, const EnumBudget& budget = EnumBudget());

VerifyResult verify_certificate(const DaugavetCertificate& cert, const Family& family,
                                Window w, const EnumBudget& budget = EnumBudget());

}  // namespace hap
