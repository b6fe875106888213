#include "hap/finite_set.hpp"

#include <algorithm>

#include "hap/errors.hpp"

namespace hap {

FiniteSet::FiniteSet(std::initializer_list<int> elems) {
  *this = of(std::vector<int>(elems));
}

FiniteSet FiniteSet::of(std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  for (size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 1) throw_precondition("set elements must be >= 1");
    if (i > 0 && elems[i] == elems[i - 1])
      throw_precondition("duplicate set element " + std::to_string(elems[i]));
  }
  FiniteSet s;
  s.elems_ = std::move(elems);
  return s;
}

int FiniteSet::min() const {
  if (empty()) throw_precondition("min of empty set");
  return elems_.front();
}

int FiniteSet::max() const {
  if (empty()) throw_precondition("max of empty set");
  return elems_.back();
}

bool FiniteSet::contains(int i) const {
  return std::binary_search(elems_.begin(), elems_.end(), i);
}

bool FiniteSet::subset_of(const FiniteSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(),
                       elems_.begin(), elems_.end());
}

FiniteSet FiniteSet::with(int i) const {
  if (i < 1) throw_precondition("set elements must be >= 1");
  if (contains(i)) return *this;
  FiniteSet s;
  s.elems_.reserve(elems_.size() + 1);
  auto pos = std::lower_bound(elems_.begin(), elems_.end(), i);
  s.elems_.assign(elems_.begin(), pos);
  s.elems_.push_back(i);
  s.elems_.insert(s.elems_.end(), pos, elems_.end());
  return s;
}

FiniteSet FiniteSet::without(int i) const {
  FiniteSet s;
  s.elems_.reserve(elems_.size());
  for (int e : elems_)
    if (e != i) s.elems_.push_back(e);
  return s;
}

FiniteSet FiniteSet::prefix(int n) const {
  FiniteSet s;
  if (n <= 0) return s;
  size_t k = std::min<size_t>(static_cast<size_t>(n), elems_.size());
  s.elems_.assign(elems_.begin(), elems_.begin() + static_cast<long>(k));
  return s;
}

FiniteSet FiniteSet::intersect(const FiniteSet& other) const {
  FiniteSet s;
  std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(),
                        other.elems_.end(), std::back_inserter(s.elems_));
  return s;
}

FiniteSet FiniteSet::unite(const FiniteSet& other) const {
  FiniteSet s;
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                 other.elems_.end(), std::back_inserter(s.elems_));
  return s;
}

FiniteSet FiniteSet::difference(const FiniteSet& other) const {
  FiniteSet s;
  std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(),
                      other.elems_.end(), std::back_inserter(s.elems_));
  return s;
}

std::string FiniteSet::to_string() const {
  std::string out = "{";
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(elems_[i]);
  }
  return out + "}";
}

}  // namespace hap
