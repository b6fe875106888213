#pragma once

#include <optional>
#include <vector>

#include "hap/dual.hpp"
#include "hap/family.hpp"
#include "hap/vectors.hpp"

namespace hap {

enum class Provenance { by_computation, by_theorem };

struct Flag {
  std::optional<bool> value;
  Provenance provenance = Provenance::by_computation;
};

/// Polyhedrality flags for the p = 1 space of a family, with one provenance
/// tag per field. The theorem-backed entailments are
///   polyhedral == (V) == finite sets only == shrinking basis, and
///   (I) == (IV) == every index has a finite star,
/// so the combinatorial facts are computed and the rest is labeled
/// by_theorem.
struct PolyhedralityReport {
  Flag finite_sets_only;
  Flag polyhedral;
  Flag v_polyhedral;
  Flag iv_polyhedral;
  Flag i_polyhedral;
  Flag shrinking_basis;
  /// In-window set E with |A meet E| <= 1 for every member A inside the
  /// probe window; a sufficient sign of a c0 copy, informational only.
  std::optional<FiniteSet> c0_window_set;
};

PolyhedralityReport classify(const Family& family, Window c0_probe = Window(8),
                             const EnumBudget& budget = EnumBudget());

struct ProbeGaps {
  RatVec probe;
  std::vector<Rational> gaps;  // |x_n*(probe) - x*(probe)| along the sequence
};

struct IVWitness {
  DualVector x_star;               // limit functional, the indicator of core
  FSVector x;                      // uniform unit vector with <x*, x> = 1
  FiniteSet core;                  // stable intersection of the sequence
  std::vector<FiniteSet> sets;     // escaping globally maximal sets A_n
  std::vector<DualVector> sequence;  // x_n* = indicator of A_n
  std::vector<ProbeGaps> pairing_gaps;
};

/// Escaping sequence of globally maximal sets through index i witnessing the
/// failure of (IV)-polyhedrality. Requires an infinite star and a family of
/// finite sets (schreier or spread closures); bounded stars are precondition
/// errors, families with infinite members are capability errors.
IVWitness iv_violation_witness(const Family& family, int i, Window w,
                               const std::vector<RatVec>& probes = {},
                               const EnumBudget& budget = EnumBudget());

}  // namespace hap
