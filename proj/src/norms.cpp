#include "hap/norms.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hap/errors.hpp"

namespace hap {

namespace {

constexpr double kRelTol = 1e-12;

double power_sum(const FSVector& x, const FiniteSet& a, double p) {
  double sum = 0.0;
  for (int i : a) sum += std::pow(std::abs(to_double(x.at(i))), p);
  return sum;
}

Rational abs_sum(const FSVector& x, const FiniteSet& a) {
  Rational sum = 0;
  for (int i : a) {
    const Rational& v = x.at(i);
    sum += v < 0 ? Rational(-v) : v;
  }
  return sum;
}

}  // namespace

PNorm::PNorm(Rational value) : p(std::move(value)) {
  if (p < 1) throw_precondition("p must be >= 1");
}

NormResult norm(const FSVector& x, const Family& family, const PNorm& p,
                const EnumBudget& budget) {
  NormResult result;
  if (x.is_zero()) {
    result.exact = true;
    result.value = 0;
    result.approx = 0.0;
    result.achieving_sets.push_back(FiniteSet());
    return result;
  }
  auto members = family.members_within(x.support(), budget);
  if (p.is_one()) {
    Rational best = 0;
    for (const auto& a : members) best = std::max(best, abs_sum(x, a));
    for (const auto& a : members)
      if (abs_sum(x, a) == best) result.achieving_sets.push_back(a);
    result.exact = true;
    result.value = best;
    result.approx = to_double(best);
    return result;
  }
  double pv = p.value();
  double best = 0.0;
  for (const auto& a : members) best = std::max(best, power_sum(x, a, pv));
  for (const auto& a : members)
    if (power_sum(x, a, pv) >= best * (1.0 - kRelTol) && !a.empty())
      result.achieving_sets.push_back(a);
  result.exact = false;
  result.approx = std::pow(best, 1.0 / pv);
  return result;
}

FSVector project(const FSVector& x, const FiniteSet& a) {
  FSVector out;
  for (const auto& [i, v] : x)
    if (a.contains(i)) out.set(i, v);
  return out;
}

std::vector<FiniteSet> norming_sets(const FSVector& x, const Family& family,
                                    const PNorm& p, const EnumBudget& budget) {
  if (x.is_zero()) throw_precondition("norming sets of the zero vector");
  auto members = family.members_within(x.support(), budget);
  std::vector<FiniteSet> out;
  if (p.is_one()) {
    Rational total = 0;
    for (const auto& a : members) total = std::max(total, abs_sum(x, a));
    for (const auto& a : members) {
      if (a.empty() || abs_sum(x, a) != total) continue;
      bool minimal = true;
      for (int i : a)
        if (abs_sum(x, a.without(i)) >= total) {
          minimal = false;
          break;
        }
      if (minimal) out.push_back(a);
    }
    return out;
  }
  double pv = p.value();
  double total = 0.0;
  for (const auto& a : members) total = std::max(total, power_sum(x, a, pv));
  for (const auto& a : members) {
    if (a.empty() || power_sum(x, a, pv) < total * (1.0 - kRelTol)) continue;
    bool minimal = true;
    for (int i : a)
      if (power_sum(x, a.without(i), pv) >= total * (1.0 - kRelTol)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

std::vector<FiniteSet> prefix_collection(const FSVector& x, const Family& family,
                                         const PNorm& p, int n,
                                         const EnumBudget& budget) {
  if (n < 1) throw_precondition("prefix length must be >= 1");
  std::set<FiniteSet> prefixes;
  for (const auto& d : norming_sets(x, family, p, budget))
    if (d.size() >= n) prefixes.insert(d.prefix(n));
  return {prefixes.begin(), prefixes.end()};
}

}  // namespace hap
