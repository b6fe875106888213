#include "hap/dual.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hap/errors.hpp"
#include "hap/simplex.hpp"

namespace hap {

DualVector SignedIndicator::to_vector() const {
  DualVector v;
  for (int j = 0; j < set.size(); ++j)
    v.set(set[j], signs[static_cast<size_t>(j)]);
  return v;
}

SignedIndicator SignedIndicator::plus(const FiniteSet& s) {
  return {s, std::vector<int>(static_cast<size_t>(s.size()), 1)};
}

std::vector<SignedIndicator> extreme_points(const Family& family, Window w, Scope scope,
                                            const EnumBudget& budget) {
  std::vector<SignedIndicator> out;
  for (const auto& a : family.maximal_sets(w, scope, budget)) {
    int k = a.size();
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::vector<int> signs(static_cast<size_t>(k), 1);
      for (int b = 0; b < k; ++b)
        if (mask & (1 << b)) signs[static_cast<size_t>(b)] = -1;
      out.push_back({a, std::move(signs)});
    }
  }
  return out;
}

Rational dual_norm(const DualVector& y, const Family& family, const EnumBudget& budget) {
  if (y.is_zero()) return 0;
  // by sign symmetry of the ball it suffices to price |y| over x >= 0
  FiniteSet supp = y.support();
  auto maximal = family.maximal_within(supp, budget);
  std::map<int, int> var_of;
  int nv = 0;
  for (int i : supp) var_of[i] = nv++;

  lp::Problem p;
  p.num_vars = nv;
  p.objective.resize(static_cast<size_t>(nv));
  for (const auto& [i, v] : y)
    p.objective[static_cast<size_t>(var_of[i])] = v < 0 ? Rational(-v) : v;
  for (const auto& a : maximal) {
    auto& row = p.add_row(lp::Rel::le, 1);
    for (int i : a) row.coeffs[static_cast<size_t>(var_of[i])] = 1;
  }
  auto s = lp::solve(p);
  if (s.status != lp::Status::optimal || !lp::check_optimal(p, s))
    throw_infeasible("dual norm LP failed to certify an optimum");
  return s.objective;
}

Rational covering_norm(const DualVector& y, const Family& family,
                       const EnumBudget& budget) {
  if (y.is_zero()) return 0;
  FiniteSet supp = y.support();
  auto maximal = family.maximal_within(supp, budget);

  // min sum lambda == -max sum(-lambda)
  lp::Problem p;
  p.num_vars = static_cast<int>(maximal.size());
  p.objective.assign(maximal.size(), Rational(-1));
  std::map<int, int> row_of;
  for (int i : supp) {
    Rational v = y.at(i);
    auto& row = p.add_row(lp::Rel::ge, v < 0 ? Rational(-v) : v);
    row_of[i] = static_cast<int>(p.rows.size()) - 1;
    (void)row;
  }
  for (size_t t = 0; t < maximal.size(); ++t)
    for (int i : maximal[t])
      p.rows[static_cast<size_t>(row_of[i])].coeffs[t] = 1;
  auto s = lp::solve(p);
  if (s.status != lp::Status::optimal || !lp::check_optimal(p, s))
    throw_infeasible("covering norm LP failed to certify an optimum");
  return -s.objective;
}

DualVector Decomposition::combine() const {
  DualVector sum;
  for (const auto& term : terms) sum = sum + term.atom.to_vector().scaled(term.weight);
  return sum;
}

Rational Decomposition::total_weight() const {
  Rational sum = 0;
  for (const auto& term : terms) sum += term.weight;
  return sum;
}

Decomposition convex_decomposition(const DualVector& y, const Family& family,
                                   int margin, const EnumBudget& budget) {
  if (dual_norm(y, family, budget) > 1)
    throw_precondition("convex decomposition requires dual norm <= 1");
  int top = (y.is_zero() ? 1 : y.support().max()) + margin;
  Window w(top);
  auto atoms = extreme_points(family, w, Scope::global, budget);
  if (atoms.empty())
    throw_infeasible("no globally maximal sets inside window " + std::to_string(top) +
                     "; enlarge the window margin");

  lp::Problem p;
  p.num_vars = static_cast<int>(atoms.size());
  p.objective.assign(atoms.size(), Rational(0));
  std::map<int, int> row_of;
  for (int i = 1; i <= top; ++i) {
    p.add_row(lp::Rel::eq, y.at(i));
    row_of[i] = static_cast<int>(p.rows.size()) - 1;
  }
  for (size_t t = 0; t < atoms.size(); ++t) {
    const auto& a = atoms[t];
    for (int j = 0; j < a.set.size(); ++j)
      p.rows[static_cast<size_t>(row_of[a.set[j]])].coeffs[t] =
          a.signs[static_cast<size_t>(j)];
  }
  p.add_row(lp::Rel::eq, 1).coeffs.assign(atoms.size(), Rational(1));

  auto s = lp::solve(p);
  if (s.status != lp::Status::optimal)
    throw_infeasible(
        "no convex decomposition over globally maximal atoms inside window " +
        std::to_string(top) + "; enlarge the window margin");

  Decomposition d;
  for (size_t t = 0; t < atoms.size(); ++t)
    if (s.x[t] > 0) d.terms.push_back({s.x[t], atoms[t]});
  return d;
}

FSVector exposing_vector(const SignedIndicator& f, const Family& family, Window w) {
  if (f.set.empty()) throw_precondition("empty functional cannot expose");
  if (f.set.max() > w.n) throw_precondition("functional support exceeds the window");
  if (!family.is_globally_maximal(f.set))
    throw_precondition("exposing vector requires a globally maximal set");
  FSVector x;
  Rational weight = Rational(1) / f.set.size();
  for (int j = 0; j < f.set.size(); ++j)
    x.set(f.set[j], weight * f.signs[static_cast<size_t>(j)]);
  return x;
}

bool verify_exposed(const SignedIndicator& f, const FSVector& x, const Family& family,
                    Window w, const EnumBudget& budget) {
  DualVector fv = f.to_vector();
  if (pairing(fv, x) != 1) throw_precondition("functional does not act as 1 on x");
  if (norm(x, family).value != 1) throw_precondition("x must have norm 1");
  // the face {g in the window dual ball : g(x) = 1} is the convex hull of
  // the attaining extreme points, so uniqueness is a census over the atoms
  int attaining = 0;
  bool found_f = false;
  for (const auto& g : extreme_points(family, w, Scope::window, budget)) {
    if (pairing(g.to_vector(), x) != 1) continue;
    ++attaining;
    if (g.to_vector() == fv) found_f = true;
  }
  return attaining == 1 && found_f;
}

std::vector<FiniteSet> dual_norming_sets(const DualVector& y, const Family& family,
                                         const PNorm& p, const EnumBudget& budget) {
  if (y.is_zero()) throw_precondition("dual norming sets of the zero functional");
  auto supp = y.support().elements();
  int k = static_cast<int>(supp.size());
  std::vector<FiniteSet> out;

  if (p.is_one()) {
    if (dual_norm(y, family, budget) != 1)
      throw_precondition("dual norming sets require dual norm exactly 1");
    std::map<FiniteSet, Rational> cache;
    auto dn = [&](const FiniteSet& a) {
      auto it = cache.find(a);
      if (it != cache.end()) return it->second;
      Rational v = a.empty() ? Rational(0) : dual_norm(project(y, a), family, budget);
      cache.emplace(a, v);
      return v;
    };
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::vector<int> elems;
      for (int b = 0; b < k; ++b)
        if (mask & (1 << b)) elems.push_back(supp[static_cast<size_t>(b)]);
      FiniteSet a = FiniteSet::of(std::move(elems));
      if (dn(a) != 1) continue;
      bool minimal = true;
      for (int i : a)
        if (dn(a.without(i)) >= 1) {
          minimal = false;
          break;
        }
      if (minimal) out.push_back(a);
    }
    return out;
  }

  if (family.kind() != FamilyKind::all_subsets)
    throw_unsupported("dual norming sets with p > 1 are available for all_subsets only");
  constexpr double tol = 1e-9;
  double q = p.value() / (p.value() - 1.0);
  auto lq = [&](const FiniteSet& a) {
    double sum = 0.0;
    for (int i : a) sum += std::pow(std::abs(to_double(y.at(i))), q);
    return std::pow(sum, 1.0 / q);
  };
  if (std::abs(lq(y.support()) - 1.0) > tol)
    throw_precondition("dual norming sets require dual norm 1 (tolerance 1e-9)");
  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<int> elems;
    for (int b = 0; b < k; ++b)
      if (mask & (1 << b)) elems.push_back(supp[static_cast<size_t>(b)]);
    FiniteSet a = FiniteSet::of(std::move(elems));
    if (lq(a) < 1.0 - tol) continue;
    bool minimal = true;
    for (int i : a)
      if (lq(a.without(i)) >= 1.0 - tol) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

}  // namespace hap
