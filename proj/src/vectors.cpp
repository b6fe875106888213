#include "hap/vectors.hpp"

namespace hap {

namespace {
const Rational kZero = 0;
}

const Rational& RatVec::at(int i) const {
  auto it = coords_.find(i);
  return it == coords_.end() ? kZero : it->second;
}

void RatVec::set(int i, Rational value) {
  if (value == 0)
    coords_.erase(i);
  else
    coords_[i] = std::move(value);
}

FiniteSet RatVec::support() const {
  std::vector<int> idx;
  idx.reserve(coords_.size());
  for (const auto& [i, v] : coords_) idx.push_back(i);
  return FiniteSet::of(std::move(idx));
}

RatVec RatVec::operator+(const RatVec& other) const {
  RatVec out = *this;
  for (const auto& [i, v] : other.coords_) out.set(i, out.at(i) + v);
  return out;
}

RatVec RatVec::operator-(const RatVec& other) const {
  RatVec out = *this;
  for (const auto& [i, v] : other.coords_) out.set(i, out.at(i) - v);
  return out;
}

RatVec RatVec::scaled(const Rational& factor) const {
  RatVec out;
  if (factor == 0) return out;
  for (const auto& [i, v] : coords_) out.coords_[i] = v * factor;
  return out;
}

RatVec RatVec::abs() const {
  RatVec out;
  for (const auto& [i, v] : coords_) out.coords_[i] = v < 0 ? Rational(-v) : v;
  return out;
}

Rational pairing(const RatVec& a, const RatVec& b) {
  Rational sum = 0;
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first)
      ++ia;
    else if (ib->first < ia->first)
      ++ib;
    else {
      sum += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

}  // namespace hap
