#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hap/finite_set.hpp"

namespace hap {

/// Computations are restricted to basis indices {1, ..., n}.
struct Window {
  int n;
  explicit Window(int n_) : n(n_) {}
};

enum class Scope { window, global };

enum class FamilyKind {
  explicit_sets,
  singletons,
  all_subsets,
  schreier,
  evens_odds,
  dyadic_branches,
  spread_hereditary_closure,
};

/// Cardinality of a star {A in the family : i in A}.
struct StarSize {
  bool finite = true;
  std::uint64_t count = 0;  // meaningful only when finite

  static StarSize infinite() { return {false, 0}; }
  static StarSize of(std::uint64_t c) { return {true, c}; }
  bool operator==(const StarSize&) const = default;
};

struct Violation {
  enum class Kind { missing_empty_set, missing_singleton, heredity_gap };
  Kind kind;
  FiniteSet set;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Cap on how many sets an enumeration may produce. Overridable per call
/// and through the HAP_ENUM_BUDGET environment variable.
struct EnumBudget {
  std::size_t max_sets;
  EnumBudget();  // reads the environment, defaults to 1'000'000
  explicit EnumBudget(std::size_t cap) : max_sets(cap) {}
};

/// A decidable representation of an adequate family of subsets of N:
/// contains the empty set and every singleton, hereditary, and closed under
/// pointwise limits. Explicit input is completed to satisfy heredity; the
/// raw input is kept so validate() can report what was missing.
///
/// Immutable and safe to share between threads.
class Family {
 public:
  static Family singletons();
  static Family all_subsets();
  static Family schreier(int order);  // order 1 is the primary case
  static Family evens_odds();
  /// Level-order coding of the rooted binary tree: root is 1, the children
  /// of node m are 2m and 2m+1. Members are subsets of root-to-node chains.
  static Family dyadic_branches(std::optional<int> depth);
  static Family spread_hereditary_closure(std::vector<FiniteSet> generators);
  /// declared_complete governs whether global maximality may be decided.
  static Family explicit_family(std::vector<FiniteSet> sets,
                                bool declared_complete = false);

  FamilyKind kind() const { return kind_; }
  /// CLI shorthand, e.g. "schreier:1".
  std::string name() const;

  /// Exact membership test; respects heredity.
  bool contains(const FiniteSet& s) const;

  /// All family members inside {1..w.n}, in lexicographic order with the
  /// empty set first. Throws budget error beyond the cap.
  std::vector<FiniteSet> restrict_to(Window w,
                                     const EnumBudget& budget = EnumBudget()) const;

  /// All family members that are subsets of an arbitrary finite ground set.
  std::vector<FiniteSet> members_within(const FiniteSet& ground,
                                        const EnumBudget& budget = EnumBudget()) const;

  /// Inclusion-maximal members among members_within(ground).
  std::vector<FiniteSet> maximal_within(const FiniteSet& ground,
                                        const EnumBudget& budget = EnumBudget()) const;

  std::vector<FiniteSet> maximal_sets(Window w, Scope scope,
                                      const EnumBudget& budget = EnumBudget()) const;

  /// Whether no member of the full family strictly contains s.
  /// Throws capability error for explicit families not declared complete.
  bool is_globally_maximal(const FiniteSet& s) const;

  StarSize star_size(int i) const;

  /// Exact for rule families; explicit families are checked inside the
  /// window only, giving nullopt when no in-window spread fails.
  std::optional<bool> is_spreading(Window w) const;

  ValidationReport validate(Window w) const;

  // introspection used by other modules
  bool has_infinite_member() const;
  bool finite_sets_only() const { return !has_infinite_member(); }
  const std::vector<FiniteSet>& generators() const { return generators_; }
  const std::vector<FiniteSet>& raw_sets() const { return raw_sets_; }
  std::optional<int> dyadic_depth() const { return depth_; }
  int schreier_order() const { return order_; }
  bool declared_complete() const { return declared_complete_; }

 private:
  Family(FamilyKind kind) : kind_(kind) {}

  bool schreier_member(int order, const FiniteSet& s) const;

  FamilyKind kind_;
  int order_ = 1;                     // schreier
  std::optional<int> depth_;          // dyadic_branches
  std::vector<FiniteSet> generators_; // explicit (closed antichain) / spread closure
  std::vector<FiniteSet> raw_sets_;   // explicit input as given, for validate()
  bool declared_complete_ = false;
};

}  // namespace hap
