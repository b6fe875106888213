#include "hap/points.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hap/errors.hpp"
#include "hap/simplex.hpp"

namespace hap {

namespace {

void check_width(const Rational& width) {
  if (width <= 0 || width > 1)
    throw_precondition("slice width must lie in (0, 1]");
}

// Split-variable encoding of the window ball: y_i = y+_i - y-_i with one
// row per window-maximal set, sum over the set of (y+ + y-) <= 1. A point
// is feasible iff its canonical split is, so the polytope is the ball.
struct BallLp {
  int n = 0;  // window size; variable 2(i-1) is y+_i, 2(i-1)+1 is y-_i
  std::vector<FiniteSet> maximal;

  lp::Problem base(const RatVec& slice_functional, const Rational& width) const {
    lp::Problem p;
    p.num_vars = 2 * n;
    p.objective.assign(static_cast<size_t>(p.num_vars), Rational(0));
    for (const auto& a : maximal) {
      auto& row = p.add_row(lp::Rel::le, 1);
      for (int i : a) {
        row.coeffs[static_cast<size_t>(2 * (i - 1))] = 1;
        row.coeffs[static_cast<size_t>(2 * (i - 1) + 1)] = 1;
      }
    }
    auto& slice_row = p.add_row(lp::Rel::ge, 1 - width);
    for (const auto& [i, v] : slice_functional) {
      slice_row.coeffs[static_cast<size_t>(2 * (i - 1))] = v;
      slice_row.coeffs[static_cast<size_t>(2 * (i - 1) + 1)] = -v;
    }
    return p;
  }
};

Rational certified_max(lp::Problem& p) {
  auto s = lp::solve(p);
  if (s.status == lp::Status::infeasible)
    throw_infeasible("slice LP infeasible; the slice should contain ball points");
  if (s.status != lp::Status::optimal || !lp::check_optimal(p, s))
    throw_infeasible("slice LP failed to certify an optimum");
  return s.objective;
}

// max over the closed slice of <c, y> for a direction c supported in the window
Rational max_pairing_over_slice(const BallLp& ball, const RatVec& functional,
                                const Rational& width, const DualVector& c) {
  lp::Problem p = ball.base(functional, width);
  for (const auto& [i, v] : c) {
    p.objective[static_cast<size_t>(2 * (i - 1))] = v;
    p.objective[static_cast<size_t>(2 * (i - 1) + 1)] = -v;
  }
  return certified_max(p);
}

void check_in_window(const RatVec& v, Window w, const char* what) {
  if (!v.is_zero() && v.support().max() > w.n)
    throw_precondition(std::string(what) + " exceeds the window");
}

Rational slice_sup_primal(const RatVec& point, const Slice& slice, const Family& family,
                          Window w, const EnumBudget& budget) {
  if (dual_norm(slice.functional, family, budget) != 1)
    throw_precondition("slice functional must have dual norm 1");
  BallLp ball{w.n, family.maximal_sets(w, Scope::window, budget)};
  Rational best = 0;
  for (const auto& c : extreme_points(family, w, Scope::window, budget)) {
    DualVector cv = c.to_vector();
    // sup <c, point - y> = <c, point> + max <-c, y>
    DualVector neg;
    for (const auto& [i, v] : cv) neg.set(i, -v);
    Rational value = pairing(cv, point) +
                     max_pairing_over_slice(ball, slice.functional, slice.width, neg);
    best = std::max(best, value);
  }
  return best;
}

// Vertex candidates of conv(atoms) cut by the slice half-space: atoms inside
// the slice plus every boundary crossing between an inside and an outside
// atom. Candidates are feasible points and include all vertices, which is
// all a convex maximization needs.
std::vector<DualVector> dual_slice_candidates(const Family& family, Window w,
                                              const RatVec& primal_functional,
                                              const Rational& width,
                                              const EnumBudget& budget) {
  auto atoms = extreme_points(family, w, Scope::window, budget);
  const Rational threshold = 1 - width;
  std::vector<DualVector> vecs(atoms.size());
  std::vector<Rational> score(atoms.size());
  for (size_t t = 0; t < atoms.size(); ++t) {
    vecs[t] = atoms[t].to_vector();
    score[t] = pairing(vecs[t], primal_functional);
  }
  std::vector<DualVector> out;
  for (size_t t = 0; t < atoms.size(); ++t)
    if (score[t] >= threshold) out.push_back(vecs[t]);
  for (size_t t = 0; t < atoms.size(); ++t) {
    if (score[t] <= threshold) continue;
    for (size_t r = 0; r < atoms.size(); ++r) {
      if (score[r] >= threshold) continue;
      Rational alpha = (threshold - score[r]) / (score[t] - score[r]);
      out.push_back(vecs[t].scaled(alpha) + vecs[r].scaled(1 - alpha));
      if (out.size() > budget.max_sets)
        throw_budget("dual slice candidate enumeration exceeds the budget");
    }
  }
  if (out.empty()) throw_precondition("empty dual slice");
  return out;
}

void check_dual_slice_functional(const Slice& slice, const Family& family,
                                 const EnumBudget& budget) {
  if (norm(slice.functional, family, PNorm(), budget).value != 1)
    throw_precondition("dual-side slice functional must be a unit primal vector");
}

}  // namespace

Rational slice_sup_distance(const RatVec& point, const Slice& slice, const Family& family,
                            Window w, const EnumBudget& budget) {
  check_width(slice.width);
  check_in_window(point, w, "point support");
  check_in_window(slice.functional, w, "slice functional support");
  if (slice.side == Side::primal)
    return slice_sup_primal(point, slice, family, w, budget);
  check_dual_slice_functional(slice, family, budget);
  Rational best = 0;
  for (const auto& z :
       dual_slice_candidates(family, w, slice.functional, slice.width, budget))
    best = std::max(best, dual_norm(point - z, family, budget));
  return best;
}

Rational slice_diameter(const Slice& slice, const Family& family, Window w,
                        const EnumBudget& budget) {
  check_width(slice.width);
  check_in_window(slice.functional, w, "slice functional support");
  if (slice.side == Side::primal) {
    if (dual_norm(slice.functional, family, budget) != 1)
      throw_precondition("slice functional must have dual norm 1");
    BallLp ball{w.n, family.maximal_sets(w, Scope::window, budget)};
    auto atoms = extreme_points(family, w, Scope::window, budget);
    std::map<RatVec, Rational> sup_of;
    for (const auto& c : atoms) {
      DualVector cv = c.to_vector();
      sup_of[cv] = max_pairing_over_slice(ball, slice.functional, slice.width, cv);
    }
    Rational best = 0;
    for (const auto& [cv, sup] : sup_of) {
      DualVector neg;
      for (const auto& [i, v] : cv) neg.set(i, -v);
      best = std::max(best, Rational(sup + sup_of.at(neg)));  // sign flips are atoms too
    }
    return best;
  }
  check_dual_slice_functional(slice, family, budget);
  auto candidates =
      dual_slice_candidates(family, w, slice.functional, slice.width, budget);
  Rational best = 0;
  for (size_t i = 0; i < candidates.size(); ++i)
    for (size_t j = i + 1; j < candidates.size(); ++j)
      best = std::max(best,
                      dual_norm(candidates[i] - candidates[j], family, budget));
  return best;
}

NonDeltaCertificate non_delta_certificate(const FSVector& x, const Family& family,
                                          Window w, const EnumBudget& budget) {
  check_in_window(x, w, "point support");
  if (norm(x, family, PNorm(), budget).value != 1)
    throw_precondition("non-delta certificates require a unit vector");

  auto minimal_norming = norming_sets(x, family, PNorm(), budget);
  int longest = 0;
  for (const auto& d : minimal_norming) longest = std::max(longest, d.size());

  for (int n = 1; n <= longest; ++n) {
    // truncate every norming set; shorter sets stay whole so that each
    // norming direction keeps a guarded coordinate in the functional
    std::set<FiniteSet> prefix_set;
    for (const auto& d : minimal_norming) prefix_set.insert(d.prefix(n));
    std::vector<FiniteSet> prefixes(prefix_set.begin(), prefix_set.end());
    int s = static_cast<int>(prefixes.size());
    Rational slack = Rational(1) - Rational(1) / (2 * s);

    bool hypothesis = true;
    for (const auto& e : prefixes) {
      Rational sum = 0;
      for (int i : e) {
        Rational v = x.at(i);
        sum += v < 0 ? Rational(-v) : v;
      }
      if (sum <= slack) {
        hypothesis = false;
        break;
      }
    }
    if (!hypothesis) continue;

    DualVector functional;
    for (const auto& e : prefixes)
      for (int i : e)
        functional.set(i, functional.at(i) + Rational(x.at(i) < 0 ? -1 : 1) /
                                                 Rational(s));
    Rational width = Rational(1) / (2 * s);
    Rational fnorm = dual_norm(functional, family, budget);
    // rescale to the unit sphere; the slice stays the same point set
    Rational adjusted = 1 - (1 - width) / fnorm;
    Slice slice{functional.scaled(1 / fnorm), adjusted, Side::primal};

    Rational sup = slice_sup_distance(x, slice, family, w, budget);
    if (sup < 2)
      return {slice, x, sup, sup, n, std::move(prefixes)};
  }
  throw_infeasible(
      "no prefix length yields a certified slice; the averaged-prefix "
      "hypothesis failed for every n");
}

VerifyResult verify_certificate(const NonDeltaCertificate& cert, const Family& family,
                                Window w, const EnumBudget& budget) {
  VerifyResult result;
  if (dual_norm(cert.slice.functional, family, budget) != 1) return result;
  if (norm(cert.point, family, PNorm(), budget).value != 1) return result;
  if (pairing(cert.slice.functional, cert.point) <= 1 - cert.slice.width)
    return result;  // the point must lie strictly inside the open slice
  result.recomputed_sup = slice_sup_distance(cert.point, cert.slice, family, w, budget);
  result.ok = result.recomputed_sup == cert.sup_distance &&
              result.recomputed_sup <= cert.bound_claimed && cert.bound_claimed < 2;
  return result;
}

namespace {

double family_power_norm(const std::vector<FiniteSet>& members,
                         const std::vector<double>& y, double p) {
  double best = 0.0;
  for (const auto& a : members) {
    double sum = 0.0;
    for (int i : a) sum += std::pow(std::abs(y[static_cast<size_t>(i - 1)]), p);
    best = std::max(best, sum);
  }
  return best;
}

// Certified lower bound on min{ y_d : y in ball, <f, y> >= 1 - delta } via an
// outer polyhedral approximation sharpened with tangent cuts. Returning true
// means the minimum is provably >= floor_value (up to the float tolerance of
// the cut coefficients); false means a near-feasible point beats the floor.
bool slice_coordinate_floor_holds(int d, double floor_value, const RatVec& functional,
                                  const Rational& width,
                                  const std::vector<FiniteSet>& members, Window w,
                                  double p) {
  lp::Problem base;
  base.num_vars = 2 * w.n;
  base.objective.assign(static_cast<size_t>(base.num_vars), Rational(0));
  for (int i = 1; i <= w.n; ++i) {
    auto& row = base.add_row(lp::Rel::le, 1);  // |y_i| <= 1 from the singletons
    row.coeffs[static_cast<size_t>(2 * (i - 1))] = 1;
    row.coeffs[static_cast<size_t>(2 * (i - 1) + 1)] = 1;
  }
  auto& slice_row = base.add_row(lp::Rel::ge, 1 - width);
  for (const auto& [i, v] : functional) {
    slice_row.coeffs[static_cast<size_t>(2 * (i - 1))] = v;
    slice_row.coeffs[static_cast<size_t>(2 * (i - 1) + 1)] = -v;
  }
  // minimize y_d == maximize -y_d
  base.objective[static_cast<size_t>(2 * (d - 1))] = -1;
  base.objective[static_cast<size_t>(2 * (d - 1) + 1)] = 1;

  constexpr double tol = 1e-9;
  for (int round = 0; round < 200; ++round) {
    auto s = lp::solve(base);
    if (s.status == lp::Status::infeasible) return true;  // empty slice region
    if (s.status != lp::Status::optimal)
      throw_infeasible("coordinate bound LP failed");
    double lp_min = -to_double(s.objective);
    if (lp_min >= floor_value - tol) return true;  // outer min already clears

    std::vector<double> y(static_cast<size_t>(w.n), 0.0);
    for (int i = 1; i <= w.n; ++i)
      y[static_cast<size_t>(i - 1)] =
          to_double(s.x[static_cast<size_t>(2 * (i - 1))] -
                    s.x[static_cast<size_t>(2 * (i - 1) + 1)]);
    // find the most violated member constraint
    double worst = 0.0;
    const FiniteSet* worst_set = nullptr;
    for (const auto& a : members) {
      double sum = 0.0;
      for (int i : a) sum += std::pow(std::abs(y[static_cast<size_t>(i - 1)]), p);
      if (sum > worst) {
        worst = sum;
        worst_set = &a;
      }
    }
    if (worst <= 1.0 + tol) return false;  // feasible point below the floor

    // tangent cut of sum_{i in A} |y_i|^p at the violating point
    auto& cut = base.add_row(lp::Rel::le, Rational(0));
    double rhs = 1.0 - worst;
    for (int i : *worst_set) {
      double yi = y[static_cast<size_t>(i - 1)];
      double g = p * std::pow(std::abs(yi), p - 1.0) * (yi >= 0 ? 1.0 : -1.0);
      cut.coeffs[static_cast<size_t>(2 * (i - 1))] = Rational(g);
      cut.coeffs[static_cast<size_t>(2 * (i - 1) + 1)] = Rational(-g);
      rhs += g * yi;
    }
    cut.rhs = Rational(rhs);
  }
  throw_infeasible("coordinate bound verification did not converge");
}

}  // namespace

HolderCertificate holder_certificate(const FSVector& x, const Family& family, Window w,
                                     const PNorm& p, const EnumBudget& budget) {
  if (p.is_one()) throw_precondition("holder certificates require p > 1");
  FSVector positive = x.abs();  // sign flips are isometries
  check_in_window(positive, w, "point support");
  auto nr = norm(positive, family, p, budget);
  if (std::abs(nr.approx - 1.0) > 1e-9)
    throw_precondition("holder certificates require a unit vector (tolerance 1e-9)");

  auto minimal_norming = norming_sets(positive, family, p, budget);
  // one representative per distinct leading index
  std::map<int, FiniteSet> by_first;
  for (const auto& d : minimal_norming)
    if (!by_first.count(d.min())) by_first.emplace(d.min(), d);
  if (by_first.empty()) throw_infeasible("no norming sets found");

  const double pv = p.value();
  DualVector functional;
  std::vector<int> firsts;
  for (const auto& [first, dset] : by_first) {
    firsts.push_back(first);
    for (int i : dset) {
      double xi = to_double(positive.at(i));
      functional.set(i, functional.at(i) +
                            Rational(std::pow(xi, pv - 1.0) / by_first.size()));
    }
  }

  double floor_min = 1.0;
  for (int d : firsts)
    floor_min = std::min(floor_min, to_double(positive.at(d)));

  auto members = family.restrict_to(w, budget);
  Rational delta(1, 4);
  const Rational delta_floor(1, 1099511627776LL);  // 2^-40
  while (true) {
    bool all_hold = true;
    for (int d : firsts) {
      double target = to_double(positive.at(d)) / 2.0;
      if (!slice_coordinate_floor_holds(d, target, functional, delta, members, w, pv)) {
        all_hold = false;
        break;
      }
    }
    if (all_hold) break;
    delta /= 2;
    if (delta < delta_floor)
      throw_infeasible("no slice width above 2^-40 pins the leading coordinates");
  }

  // distance bound: members meeting a leading index save (x_d)^p of the
  // worst-case 2^p; members avoiding all of them cannot norm x
  double off_mass = 0.0;
  for (const auto& a : family.members_within(positive.support(), budget)) {
    bool hits = false;
    for (int d : firsts)
      if (a.contains(d)) {
        hits = true;
        break;
      }
    if (hits || a.empty()) continue;
    double sum = 0.0;
    for (int i : a) sum += std::pow(to_double(positive.at(i)), pv);
    off_mass = std::max(off_mass, sum);
  }
  double gamma = 1.0 - off_mass;
  if (gamma <= 0)
    throw_infeasible("degenerate norming structure: no distance gap");
  double avoid_bound = std::pow(std::pow(1.0 - gamma, 1.0 / pv) + 1.0, pv);
  double hit_bound = std::pow(2.0, pv) - std::pow(floor_min, pv);
  double bound = std::pow(std::max(avoid_bound, hit_bound), 1.0 / pv);

  HolderCertificate cert;
  cert.slice = {functional, delta, Side::primal};
  cert.point = positive;
  cert.first_elements = firsts;
  cert.coordinate_floor = floor_min / 2.0;
  cert.sup_distance = bound;
  cert.bound_claimed = bound;
  return cert;
}

DeltaWitnesses delta_witness_sequence(const FiniteSet& trace, const Family& family,
                                      const Slice& slice, Window w,
                                      const EnumBudget& budget) {
  check_width(slice.width);
  if (slice.side != Side::dual)
    throw_precondition("delta witnesses live in a dual-side slice");
  if (trace.empty() || trace.max() > w.n)
    throw_precondition("trace must be a nonempty subset of the window");
  check_dual_slice_functional(slice, family, budget);

  // the trace must extend to an infinite member of the pointwise closure
  // without picking up new window elements
  switch (family.kind()) {
    case FamilyKind::all_subsets:
      break;
    case FamilyKind::evens_odds: {
      if (!family.contains(trace))
        throw_precondition("trace must stay inside one parity block");
      break;
    }
    case FamilyKind::dyadic_branches: {
      if (family.dyadic_depth() || !family.contains(trace))
        throw_precondition(
            "trace must be a chain of the unbounded tree to extend infinitely");
      break;
    }
    default:
      throw_precondition("family " + family.name() + " has no infinite members");
  }

  DualVector x_star = SignedIndicator::plus(trace).to_vector();
  const Rational threshold = 1 - slice.width;
  if (pairing(x_star, slice.functional) <= threshold)
    throw_precondition("the trace functional does not lie in the open slice");

  DeltaWitnesses result;
  result.x_star = x_star;
  for (int a : trace) {
    DualVector witness = x_star;
    witness.set(a, x_star.at(a) - 2);
    if (pairing(witness, slice.functional) > threshold) {
      if (dual_norm(x_star - witness, family, budget) != 2)
        throw_infeasible("witness distance is not exactly 2");
      result.witnesses.push_back(std::move(witness));
      result.flipped.push_back(a);
    }
  }
  result.fraction =
      Rational(static_cast<int>(result.witnesses.size())) / trace.size();
  return result;
}

DaugavetCertificate daugavet_exclusion(const DualVector& y, const Family& family,
                                       Window w, const EnumBudget& budget) {
  if (dual_norm(y, family, budget) != 1)
    throw_precondition("daugavet exclusion requires a unit dual vector");

  Decomposition decomposition;
  bool decomposed = false;
  for (int margin : {2, 4, 8}) {
    try {
      decomposition = convex_decomposition(y, family, margin, budget);
      decomposed = true;
      break;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::infeasible || margin == 8) throw;
    }
  }
  if (!decomposed) throw_infeasible("convex decomposition unavailable");

  size_t heaviest = 0;
  for (size_t t = 1; t < decomposition.terms.size(); ++t)
    if (decomposition.terms[t].weight > decomposition.terms[heaviest].weight)
      heaviest = t;
  const Rational lambda = decomposition.terms[heaviest].weight;
  const SignedIndicator atom = decomposition.terms[heaviest].atom;

  int eff_n = std::max(w.n, atom.set.max());
  if (!y.is_zero()) eff_n = std::max(eff_n, y.support().max());
  Window eff(eff_n);

  FSVector exposing = exposing_vector(atom, family, eff);
  DualVector atom_vec = atom.to_vector();

  // pick the slice width so the only atom inside is the heaviest one and the
  // crossing candidates stay within distance 1/4 of it
  Rational second_best = -1;
  Rational steepest = 0;
  for (const auto& g : extreme_points(family, eff, Scope::window, budget)) {
    DualVector gv = g.to_vector();
    if (gv == atom_vec) continue;
    Rational s = pairing(gv, exposing);
    if (s >= 1) throw_infeasible("exposing vector is not uniquely norming");
    second_best = std::max(second_best, s);
    steepest = std::max(steepest, dual_norm(atom_vec - gv, family, budget) / (1 - s));
  }
  Rational width(1, 4);
  if (second_best >= 0) width = std::min(width, Rational((1 - second_best) / 2));
  if (steepest > 0) width = std::min(width, Rational(1 / (4 * steepest)));

  Slice slice{exposing, width, Side::dual};
  Rational diameter_bound = 2 * width * steepest;  // twice the candidate radius
  Rational sup = slice_sup_distance(y, slice, family, eff, budget);
  if (sup > 2 - lambda)
    throw_infeasible("verified sup exceeds the claimed exclusion bound");

  DaugavetCertificate cert;
  cert.slice = std::move(slice);
  cert.point = y;
  cert.sup_distance = sup;
  cert.bound_claimed = 2 - lambda;
  cert.lambda = lambda;
  cert.atom = atom;
  cert.decomposition = std::move(decomposition);
  cert.diameter_bound = diameter_bound;
  return cert;
}

VerifyResult verify_certificate(const DaugavetCertificate& cert, const Family& family,
                                Window w, const EnumBudget& budget) {
  VerifyResult result;
  if (dual_norm(cert.point, family, budget) != 1) return result;
  if (cert.decomposition.total_weight() != 1) return result;
  if (!(cert.decomposition.combine() == cert.point)) return result;
  int eff_n = std::max(w.n, cert.atom.set.max());
  if (!cert.point.is_zero()) eff_n = std::max(eff_n, cert.point.support().max());
  result.recomputed_sup =
      slice_sup_distance(cert.point, cert.slice, family, Window(eff_n), budget);
  result.ok = result.recomputed_sup == cert.sup_distance &&
              result.recomputed_sup <= cert.bound_claimed &&
              cert.bound_claimed == 2 - cert.lambda;
  return result;
}

}  // namespace hap
