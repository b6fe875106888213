#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace hap {

/// A finite subset of the positive integers, stored strictly increasing.
/// Immutable after construction; the empty set is a valid value.
class FiniteSet {
 public:
  FiniteSet() = default;
  FiniteSet(std::initializer_list<int> elems);

  /// Validates and sorts; throws hap::Error(precondition) on duplicates
  /// or elements < 1.
  static FiniteSet of(std::vector<int> elems);

  bool empty() const { return elems_.empty(); }
  int size() const { return static_cast<int>(elems_.size()); }
  int min() const;  // throws on empty
  int max() const;  // throws on empty
  int operator[](int i) const { return elems_[static_cast<size_t>(i)]; }

  bool contains(int i) const;
  bool subset_of(const FiniteSet& other) const;

  /// Copy with one element inserted (no-op if already present).
  FiniteSet with(int i) const;
  /// Copy with one element removed (no-op if absent).
  FiniteSet without(int i) const;
  /// First n elements (n >= size() returns the whole set).
  FiniteSet prefix(int n) const;

  FiniteSet intersect(const FiniteSet& other) const;
  FiniteSet unite(const FiniteSet& other) const;
  /// Elements of this set not in other.
  FiniteSet difference(const FiniteSet& other) const;

  const std::vector<int>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  /// Lexicographic on the element sequence; used for canonical ordering.
  auto operator<=>(const FiniteSet&) const = default;

  std::string to_string() const;  // "{2,3}" style, for messages

 private:
  std::vector<int> elems_;
};

}  // namespace hap
