#include "hap/polyhedral.hpp"

#include <algorithm>

#include "hap/errors.hpp"

namespace hap {

namespace {

// finiteness of every star, decided per representation kind
bool stars_all_finite(const Family& family) {
  switch (family.kind()) {
    case FamilyKind::singletons:
    case FamilyKind::explicit_sets:
      return true;
    case FamilyKind::dyadic_branches:
      return family.dyadic_depth().has_value();
    case FamilyKind::schreier:
      return false;  // {2, j} for every j
    case FamilyKind::all_subsets:
    case FamilyKind::evens_odds:
      return false;
    case FamilyKind::spread_hereditary_closure: {
      for (const auto& g : family.generators())
        if (g.size() >= 2) return false;
      return true;
    }
  }
  return false;
}

}  // namespace

PolyhedralityReport classify(const Family& family, Window c0_probe,
                             const EnumBudget& budget) {
  PolyhedralityReport report;
  bool fso = family.finite_sets_only();
  report.finite_sets_only = {fso, Provenance::by_computation};
  report.polyhedral = {fso, Provenance::by_theorem};
  report.v_polyhedral = {fso, Provenance::by_theorem};
  report.shrinking_basis = {fso, Provenance::by_theorem};
  bool star_finite = fso && stars_all_finite(family);
  report.iv_polyhedral = {star_finite, Provenance::by_theorem};
  report.i_polyhedral = {star_finite, Provenance::by_theorem};

  // greedy in-window probe for a set met at most once by every member;
  // heredity reduces the test to pair membership
  FiniteSet e;
  for (int i = 1; i <= c0_probe.n; ++i) {
    bool clash = false;
    for (int prev : e)
      if (family.contains(FiniteSet{prev, i})) {
        clash = true;
        break;
      }
    if (!clash) e = e.with(i);
  }
  (void)budget;
  if (e.size() >= 2) report.c0_window_set = e;
  return report;
}

IVWitness iv_violation_witness(const Family& family, int i, Window w,
                               const std::vector<RatVec>& probes,
                               const EnumBudget& budget) {
  (void)budget;
  auto star = family.star_size(i);
  if (star.finite)
    throw_precondition("index " + std::to_string(i) + " has a finite star");
  if (family.has_infinite_member())
    throw_capability(
        "witness sequences need a family of finite sets; the extreme points "
        "of " +
        family.name() + " have infinite supports");

  IVWitness witness;
  witness.core = FiniteSet{i};
  witness.x_star = DualVector::unit(i);
  witness.x = FSVector::unit(i);

  // grow {i} to a globally maximal set using consecutive elements from an
  // escalating start; the tails escape, so the sets converge pointwise to {i}
  for (int start = i + 1; start <= w.n; ++start) {
    FiniteSet a{i};
    int next = start;
    while (!family.is_globally_maximal(a) && next <= w.n) {
      if (family.contains(a.with(next))) a = a.with(next);
      ++next;
    }
    if (!family.is_globally_maximal(a) || a.size() < 2) break;
    witness.sets.push_back(a);
    witness.sequence.push_back(SignedIndicator::plus(a).to_vector());
  }
  if (witness.sets.empty())
    throw_precondition("window " + std::to_string(w.n) +
                       " is too small to fit a maximal set through " +
                       std::to_string(i));

  std::vector<RatVec> all_probes = probes;
  if (all_probes.empty()) {
    RatVec dyadic;  // sum of 2^-k e_k, truncated to the window
    Rational pow(1, 2);
    for (int k = 1; k <= w.n; ++k) {
      dyadic.set(k, pow);
      pow /= 2;
    }
    all_probes.push_back(std::move(dyadic));
  }
  for (const auto& probe : all_probes) {
    ProbeGaps gaps{probe, {}};
    for (const auto& xn : witness.sequence) {
      Rational gap = pairing(xn - witness.x_star, probe);
      gaps.gaps.push_back(gap < 0 ? Rational(-gap) : gap);
    }
    witness.pairing_gaps.push_back(std::move(gaps));
  }
  return witness;
}

}  // namespace hap
