#include "hap/simplex.hpp"

#include <limits>

#include "hap/errors.hpp"

namespace hap::lp {

Constraint& Problem::add_row(Rel rel, Rational rhs) {
  rows.push_back({std::vector<Rational>(static_cast<size_t>(num_vars), Rational(0)),
                  rel, std::move(rhs)});
  return rows.back();
}

namespace {

// Internal standard form: minimize ct.x over equality rows with b >= 0 and
// all variables nonnegative. User variables may occupy one column (x >= 0)
// or two (free x = u - v).
struct Tableau {
  int m = 0, n = 0;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<int> basis;

  void pivot(int r, int c) {
    Rational inv = 1 / a[static_cast<size_t>(r)][static_cast<size_t>(c)];
    auto& row = a[static_cast<size_t>(r)];
    for (auto& v : row) v *= inv;
    b[static_cast<size_t>(r)] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      Rational f = a[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (f == 0) continue;
      auto& other = a[static_cast<size_t>(i)];
      for (int j = 0; j < n; ++j)
        other[static_cast<size_t>(j)] -= f * row[static_cast<size_t>(j)];
      b[static_cast<size_t>(i)] -= f * b[static_cast<size_t>(r)];
    }
    basis[static_cast<size_t>(r)] = c;
  }
};

// reduced cost row for the current basis (basis columns are identity)
std::vector<Rational> reduced_costs(const Tableau& t, const std::vector<Rational>& cost) {
  std::vector<Rational> r = cost;
  for (int i = 0; i < t.m; ++i) {
    const Rational& cb = cost[static_cast<size_t>(t.basis[static_cast<size_t>(i)])];
    if (cb == 0) continue;
    for (int j = 0; j < t.n; ++j)
      r[static_cast<size_t>(j)] -= cb * t.a[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return r;
}

// Bland's rule: entering = lowest-index negative reduced cost, leaving =
// lowest basis index among minimal ratios. Returns false on unboundedness.
bool run_simplex(Tableau& t, std::vector<Rational>& r,
                 const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
  for (;;) {
    int enter = -1;
    for (int j = 0; j < t.n; ++j)
      if (allowed[static_cast<size_t>(j)] && r[static_cast<size_t>(j)] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) return true;
    int leave = -1;
    Rational best;
    for (int i = 0; i < t.m; ++i) {
      const Rational& aie = t.a[static_cast<size_t>(i)][static_cast<size_t>(enter)];
      if (aie <= 0) continue;
      Rational ratio = t.b[static_cast<size_t>(i)] / aie;
      if (leave < 0 || ratio < best ||
          (ratio == best && t.basis[static_cast<size_t>(i)] < t.basis[static_cast<size_t>(leave)])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return false;
    t.pivot(leave, enter);
    r = reduced_costs(t, cost);
  }
}

}  // namespace

Solution solve(const Problem& problem) {
  const int nv = problem.num_vars;
  for (const auto& row : problem.rows)
    if (static_cast<int>(row.coeffs.size()) != nv)
      throw_precondition("constraint width does not match num_vars");
  if (static_cast<int>(problem.objective.size()) != nv)
    throw_precondition("objective width does not match num_vars");

  // column layout: positive part per variable, negative part for free
  // variables, then one slack/surplus per inequality row, then artificials
  std::vector<int> pos_col(static_cast<size_t>(nv)), neg_col(static_cast<size_t>(nv), -1);
  int n = 0;
  for (int j = 0; j < nv; ++j) {
    pos_col[static_cast<size_t>(j)] = n++;
    if (!problem.free_vars.empty() && problem.free_vars[static_cast<size_t>(j)])
      neg_col[static_cast<size_t>(j)] = n++;
  }

  const int m = static_cast<int>(problem.rows.size());
  std::vector<int> sigma(static_cast<size_t>(m), 1);
  std::vector<Rel> rel(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    rel[static_cast<size_t>(i)] = problem.rows[static_cast<size_t>(i)].rel;
    if (problem.rows[static_cast<size_t>(i)].rhs < 0) {
      sigma[static_cast<size_t>(i)] = -1;
      if (rel[static_cast<size_t>(i)] == Rel::le)
        rel[static_cast<size_t>(i)] = Rel::ge;
      else if (rel[static_cast<size_t>(i)] == Rel::ge)
        rel[static_cast<size_t>(i)] = Rel::le;
    }
  }

  std::vector<int> aux_col(static_cast<size_t>(m), -1);   // slack or surplus
  std::vector<int> art_col(static_cast<size_t>(m), -1);
  for (int i = 0; i < m; ++i)
    if (rel[static_cast<size_t>(i)] != Rel::eq) aux_col[static_cast<size_t>(i)] = n++;
  int first_artificial = n;
  for (int i = 0; i < m; ++i)
    if (rel[static_cast<size_t>(i)] != Rel::le) art_col[static_cast<size_t>(i)] = n++;

  Tableau t;
  t.m = m;
  t.n = n;
  t.a.assign(static_cast<size_t>(m), std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
  t.b.resize(static_cast<size_t>(m));
  t.basis.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto& row = problem.rows[static_cast<size_t>(i)];
    for (int j = 0; j < nv; ++j) {
      Rational v = row.coeffs[static_cast<size_t>(j)] * sigma[static_cast<size_t>(i)];
      t.a[static_cast<size_t>(i)][static_cast<size_t>(pos_col[static_cast<size_t>(j)])] = v;
      if (neg_col[static_cast<size_t>(j)] >= 0)
        t.a[static_cast<size_t>(i)][static_cast<size_t>(neg_col[static_cast<size_t>(j)])] = -v;
    }
    t.b[static_cast<size_t>(i)] = row.rhs * sigma[static_cast<size_t>(i)];
    if (aux_col[static_cast<size_t>(i)] >= 0)
      t.a[static_cast<size_t>(i)][static_cast<size_t>(aux_col[static_cast<size_t>(i)])] =
          rel[static_cast<size_t>(i)] == Rel::le ? 1 : -1;
    if (art_col[static_cast<size_t>(i)] >= 0) {
      t.a[static_cast<size_t>(i)][static_cast<size_t>(art_col[static_cast<size_t>(i)])] = 1;
      t.basis[static_cast<size_t>(i)] = art_col[static_cast<size_t>(i)];
    } else {
      t.basis[static_cast<size_t>(i)] = aux_col[static_cast<size_t>(i)];
    }
  }

  std::vector<bool> all_allowed(static_cast<size_t>(n), true);

  // phase 1: minimize the sum of artificial variables
  bool have_artificials = first_artificial < n;
  if (have_artificials) {
    std::vector<Rational> cost1(static_cast<size_t>(n), Rational(0));
    for (int j = first_artificial; j < n; ++j) cost1[static_cast<size_t>(j)] = 1;
    auto r1 = reduced_costs(t, cost1);
    run_simplex(t, r1, cost1, all_allowed);  // bounded below by zero
    Rational infeas = 0;
    for (int i = 0; i < m; ++i)
      if (t.basis[static_cast<size_t>(i)] >= first_artificial)
        infeas += t.b[static_cast<size_t>(i)];
    if (infeas > 0) {
      Solution s;
      s.status = Status::infeasible;
      return s;
    }
    // remove artificials from the basis; rows that cannot pivot are redundant
    for (int i = 0; i < m; ++i) {
      if (t.basis[static_cast<size_t>(i)] < first_artificial) continue;
      int enter = -1;
      for (int j = 0; j < first_artificial; ++j)
        if (t.a[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
          enter = j;
          break;
        }
      if (enter >= 0) t.pivot(i, enter);
    }
  }

  // phase 2: minimize the negated user objective; artificial columns frozen
  std::vector<Rational> cost(static_cast<size_t>(n), Rational(0));
  for (int j = 0; j < nv; ++j) {
    cost[static_cast<size_t>(pos_col[static_cast<size_t>(j)])] = -problem.objective[static_cast<size_t>(j)];
    if (neg_col[static_cast<size_t>(j)] >= 0)
      cost[static_cast<size_t>(neg_col[static_cast<size_t>(j)])] = problem.objective[static_cast<size_t>(j)];
  }
  std::vector<bool> allowed(static_cast<size_t>(n), true);
  for (int j = first_artificial; j < n; ++j) allowed[static_cast<size_t>(j)] = false;
  // a redundant row may still hold a zero-valued artificial; freeze it there
  auto r = reduced_costs(t, cost);
  if (!run_simplex(t, r, cost, allowed)) {
    Solution s;
    s.status = Status::unbounded;
    return s;
  }

  Solution s;
  s.status = Status::optimal;
  std::vector<Rational> xt(static_cast<size_t>(n), Rational(0));
  for (int i = 0; i < m; ++i)
    xt[static_cast<size_t>(t.basis[static_cast<size_t>(i)])] = t.b[static_cast<size_t>(i)];
  s.x.resize(static_cast<size_t>(nv));
  for (int j = 0; j < nv; ++j) {
    s.x[static_cast<size_t>(j)] = xt[static_cast<size_t>(pos_col[static_cast<size_t>(j)])];
    if (neg_col[static_cast<size_t>(j)] >= 0)
      s.x[static_cast<size_t>(j)] -= xt[static_cast<size_t>(neg_col[static_cast<size_t>(j)])];
  }
  s.objective = 0;
  for (int j = 0; j < nv; ++j)
    s.objective += problem.objective[static_cast<size_t>(j)] * s.x[static_cast<size_t>(j)];

  // duals for the user's maximization problem, read off the reduced costs of
  // each row's auxiliary column: y_user = -sigma * y_internal
  s.duals.assign(static_cast<size_t>(m), Rational(0));
  for (int i = 0; i < m; ++i) {
    Rational y_int;
    if (aux_col[static_cast<size_t>(i)] >= 0) {
      const Rational& rc = r[static_cast<size_t>(aux_col[static_cast<size_t>(i)])];
      y_int = rel[static_cast<size_t>(i)] == Rel::le ? Rational(-rc) : rc;
    } else {
      y_int = -r[static_cast<size_t>(art_col[static_cast<size_t>(i)])];
    }
    s.duals[static_cast<size_t>(i)] = -sigma[static_cast<size_t>(i)] * y_int;
  }
  return s;
}

bool check_optimal(const Problem& problem, const Solution& solution) {
  if (solution.status != Status::optimal) return false;
  const int nv = problem.num_vars;
  if (static_cast<int>(solution.x.size()) != nv) return false;
  if (solution.duals.size() != problem.rows.size()) return false;

  for (int j = 0; j < nv; ++j) {
    bool is_free = !problem.free_vars.empty() && problem.free_vars[static_cast<size_t>(j)];
    if (!is_free && solution.x[static_cast<size_t>(j)] < 0) return false;
  }

  Rational primal_obj = 0;
  for (int j = 0; j < nv; ++j)
    primal_obj += problem.objective[static_cast<size_t>(j)] * solution.x[static_cast<size_t>(j)];
  if (primal_obj != solution.objective) return false;

  Rational dual_obj = 0;
  for (size_t i = 0; i < problem.rows.size(); ++i) {
    const auto& row = problem.rows[i];
    Rational lhs = 0;
    for (int j = 0; j < nv; ++j)
      lhs += row.coeffs[static_cast<size_t>(j)] * solution.x[static_cast<size_t>(j)];
    const Rational& y = solution.duals[i];
    switch (row.rel) {
      case Rel::le:
        if (lhs > row.rhs || y < 0) return false;
        break;
      case Rel::ge:
        if (lhs < row.rhs || y > 0) return false;
        break;
      case Rel::eq:
        if (lhs != row.rhs) return false;
        break;
    }
    dual_obj += y * row.rhs;
  }

  for (int j = 0; j < nv; ++j) {
    Rational slack = problem.objective[static_cast<size_t>(j)];
    for (size_t i = 0; i < problem.rows.size(); ++i)
      slack -= solution.duals[i] * problem.rows[i].coeffs[static_cast<size_t>(j)];
    bool is_free = !problem.free_vars.empty() && problem.free_vars[static_cast<size_t>(j)];
    if (is_free ? slack != 0 : slack > 0) return false;
  }

  return dual_obj == primal_obj;
}

}  // namespace hap::lp
