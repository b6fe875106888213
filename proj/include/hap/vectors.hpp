#pragma once

#include <map>

#include "hap/finite_set.hpp"
#include "hap/rational.hpp"

namespace hap {

/// Finitely supported sequence with exact rational coordinates.
/// Zero coordinates are never stored, so support() is exactly the key set.
/// The same representation carries both primal vectors and dual functionals;
/// the aliases below mark the intended side in signatures.
class RatVec {
 public:
  RatVec() = default;

  const Rational& at(int i) const;  // 0 for absent coordinates
  void set(int i, Rational value);  // erases the entry when value == 0

  bool is_zero() const { return coords_.empty(); }
  int support_size() const { return static_cast<int>(coords_.size()); }
  FiniteSet support() const;

  RatVec operator+(const RatVec& other) const;
  RatVec operator-(const RatVec& other) const;
  RatVec scaled(const Rational& factor) const;
  RatVec abs() const;

  bool operator==(const RatVec& other) const { return coords_ == other.coords_; }
  bool operator<(const RatVec& other) const { return coords_ < other.coords_; }

  /// Iteration is in increasing index order.
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  static RatVec unit(int i) {
    RatVec v;
    v.set(i, 1);
    return v;
  }

 private:
  std::map<int, Rational> coords_;
};

using FSVector = RatVec;    // element of the primal space
using DualVector = RatVec;  // element of the dual space

/// Duality pairing sum_i a_i b_i (finite sum; exact).
Rational pairing(const RatVec& a, const RatVec& b);

}  // namespace hap
