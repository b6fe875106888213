#include "hap/family.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

#include "hap/errors.hpp"

namespace hap {

namespace {

// level of a tree node in the level-order coding (root 1 has level 1)
int node_level(int m) {
  int level = 0;
  while (m > 0) {
    ++level;
    m >>= 1;
  }
  return level;
}

// a is an ancestor of b, or a == b
bool ancestor_or_self(int a, int b) {
  while (b > a) b >>= 1;
  return b == a;
}

// sorted elements pairwise comparable in the tree order; consecutive checks
// suffice because ancestors of a common node form a chain
bool is_chain_subset(const FiniteSet& s) {
  for (int i = 0; i + 1 < s.size(); ++i)
    if (!ancestor_or_self(s[i], s[i + 1])) return false;
  return true;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r < a ? UINT64_MAX : r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

}  // namespace

EnumBudget::EnumBudget() : max_sets(1'000'000) {
  if (const char* env = std::getenv("HAP_ENUM_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) max_sets = static_cast<std::size_t>(v);
  }
}

Family Family::singletons() { return Family(FamilyKind::singletons); }

Family Family::all_subsets() { return Family(FamilyKind::all_subsets); }

Family Family::schreier(int order) {
  if (order < 1) throw_precondition("schreier order must be >= 1");
  Family f(FamilyKind::schreier);
  f.order_ = order;
  return f;
}

Family Family::evens_odds() { return Family(FamilyKind::evens_odds); }

Family Family::dyadic_branches(std::optional<int> depth) {
  if (depth && *depth < 1) throw_precondition("dyadic depth must be >= 1");
  Family f(FamilyKind::dyadic_branches);
  f.depth_ = depth;
  return f;
}

Family Family::spread_hereditary_closure(std::vector<FiniteSet> generators) {
  Family f(FamilyKind::spread_hereditary_closure);
  f.generators_ = std::move(generators);
  return f;
}

Family Family::explicit_family(std::vector<FiniteSet> sets, bool declared_complete) {
  Family f(FamilyKind::explicit_sets);
  f.raw_sets_ = sets;
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  // keep only the inclusion-maximal input sets; together with the implicit
  // empty set and singletons they generate the hereditary closure
  for (const auto& s : sets) {
    bool dominated = false;
    for (const auto& t : sets)
      if (s != t && s.subset_of(t)) {
        dominated = true;
        break;
      }
    if (!dominated && s.size() >= 2) f.generators_.push_back(s);
  }
  f.declared_complete_ = declared_complete;
  return f;
}

std::string Family::name() const {
  switch (kind_) {
    case FamilyKind::singletons: return "singletons";
    case FamilyKind::all_subsets: return "all_subsets";
    case FamilyKind::schreier: return "schreier:" + std::to_string(order_);
    case FamilyKind::evens_odds: return "evens_odds";
    case FamilyKind::dyadic_branches:
      return depth_ ? "dyadic:" + std::to_string(*depth_) : "dyadic";
    case FamilyKind::spread_hereditary_closure: return "spread_hereditary_closure";
    case FamilyKind::explicit_sets: return "explicit";
  }
  return "?";
}

bool Family::schreier_member(int order, const FiniteSet& s) const {
  if (s.empty()) return true;
  if (order == 1) return s.size() <= s.min();
  // greedy block decomposition: repeatedly take the longest prefix that is a
  // member of the previous order; valid because prefixes of members are
  // members (heredity)
  int blocks = 0;
  int pos = 0;
  const int n = s.size();
  while (pos < n) {
    int len = 1;
    while (pos + len < n) {
      std::vector<int> prefix(s.elements().begin() + pos,
                              s.elements().begin() + pos + len + 1);
      if (!schreier_member(order - 1, FiniteSet::of(std::move(prefix)))) break;
      ++len;
    }
    {
      std::vector<int> block(s.elements().begin() + pos,
                             s.elements().begin() + pos + len);
      if (!schreier_member(order - 1, FiniteSet::of(std::move(block)))) return false;
    }
    ++blocks;
    pos += len;
  }
  return blocks <= s.min();
}

bool Family::contains(const FiniteSet& s) const {
  switch (kind_) {
    case FamilyKind::singletons:
      return s.size() <= 1;
    case FamilyKind::all_subsets:
      return true;
    case FamilyKind::schreier:
      return schreier_member(order_, s);
    case FamilyKind::evens_odds: {
      bool all_even = true, all_odd = true;
      for (int e : s) (e % 2 == 0 ? all_odd : all_even) = false;
      return all_even || all_odd;
    }
    case FamilyKind::dyadic_branches: {
      // singletons belong for every index, also beyond the coded tree
      if (s.size() <= 1) return true;
      if (depth_ && s.max() >= (1 << *depth_)) return false;
      return is_chain_subset(s);
    }
    case FamilyKind::spread_hereditary_closure: {
      if (s.size() <= 1) return true;
      for (const auto& g : generators_) {
        if (g.size() < s.size()) continue;
        bool dominates = true;
        for (int j = 0; j < s.size(); ++j)
          if (s[j] < g[j]) {
            dominates = false;
            break;
          }
        if (dominates) return true;
      }
      return false;
    }
    case FamilyKind::explicit_sets: {
      if (s.size() <= 1) return true;
      for (const auto& g : generators_)
        if (s.subset_of(g)) return true;
      return false;
    }
  }
  return false;
}

std::vector<FiniteSet> Family::members_within(const FiniteSet& ground,
                                              const EnumBudget& budget) const {
  std::vector<FiniteSet> out;
  out.push_back(FiniteSet());  // the empty set belongs to every adequate family
  // depth-first search over increasing element insertions; heredity ensures
  // every member is reached through member prefixes only
  std::function<void(const FiniteSet&, int)> dfs = [&](const FiniteSet& prefix,
                                                       int start) {
    for (int idx = start; idx < ground.size(); ++idx) {
      FiniteSet cand = prefix.with(ground[idx]);
      if (!contains(cand)) continue;
      if (out.size() >= budget.max_sets)
        throw_budget("family enumeration exceeds budget of " +
                     std::to_string(budget.max_sets) + " sets");
      out.push_back(cand);
      dfs(cand, idx + 1);
    }
  };
  dfs(FiniteSet(), 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FiniteSet> Family::restrict_to(Window w, const EnumBudget& budget) const {
  if (w.n < 1) throw_precondition("window must be >= 1");
  std::vector<int> ground(static_cast<size_t>(w.n));
  for (int i = 0; i < w.n; ++i) ground[static_cast<size_t>(i)] = i + 1;
  return members_within(FiniteSet::of(std::move(ground)), budget);
}

std::vector<FiniteSet> Family::maximal_within(const FiniteSet& ground,
                                              const EnumBudget& budget) const {
  std::vector<FiniteSet> out;
  for (const auto& s : members_within(ground, budget)) {
    bool extendable = false;
    for (int e : ground) {
      if (s.contains(e)) continue;
      if (contains(s.with(e))) {
        extendable = true;
        break;
      }
    }
    if (!extendable && !s.empty()) out.push_back(s);
  }
  return out;
}

bool Family::is_globally_maximal(const FiniteSet& s) const {
  if (s.empty() || !contains(s)) return false;
  switch (kind_) {
    case FamilyKind::singletons:
      return s.size() == 1;
    case FamilyKind::all_subsets:
    case FamilyKind::evens_odds:
      return false;  // every finite member extends
    case FamilyKind::schreier: {
      // extensions by elements beyond max+1 reduce to the max+1 test because
      // membership survives lowering the top element while order is kept
      for (int j = 1; j <= s.max() + 1; ++j)
        if (!s.contains(j) && contains(s.with(j))) return false;
      return true;
    }
    case FamilyKind::dyadic_branches: {
      if (!depth_) return false;  // chains always extend to deeper nodes
      int leaf = s.max();
      return node_level(leaf) == *depth_ && s.size() == node_level(leaf) &&
             is_chain_subset(s) && s.min() == 1;
    }
    case FamilyKind::spread_hereditary_closure: {
      for (const auto& g : generators_) {
        if (g.size() <= s.size()) continue;
        bool dominates = true;
        for (int j = 0; j < s.size(); ++j)
          if (s[j] < g[j]) {
            dominates = false;
            break;
          }
        if (dominates) return false;  // append a large element, stay inside
      }
      return true;
    }
    case FamilyKind::explicit_sets: {
      if (!declared_complete_)
        throw_capability(
            "global maximality is undecidable for an explicit family not "
            "declared complete");
      for (const auto& g : generators_)
        if (s != g && s.subset_of(g)) return false;
      return true;
    }
  }
  return false;
}

std::vector<FiniteSet> Family::maximal_sets(Window w, Scope scope,
                                            const EnumBudget& budget) const {
  if (scope == Scope::window) {
    std::vector<int> ground(static_cast<size_t>(w.n));
    for (int i = 0; i < w.n; ++i) ground[static_cast<size_t>(i)] = i + 1;
    return maximal_within(FiniteSet::of(std::move(ground)), budget);
  }
  std::vector<FiniteSet> out;
  for (const auto& s : restrict_to(w, budget))
    if (!s.empty() && is_globally_maximal(s)) out.push_back(s);
  return out;
}

StarSize Family::star_size(int i) const {
  if (i < 1) throw_precondition("index must be >= 1");
  switch (kind_) {
    case FamilyKind::singletons:
      return StarSize::of(1);
    case FamilyKind::all_subsets:
    case FamilyKind::evens_odds:
      return StarSize::infinite();
    case FamilyKind::schreier:
      // {i, j} is a member for every j > i once i >= 2; sets containing 1
      // must be singletons at every order
      return i == 1 ? StarSize::of(1) : StarSize::infinite();
    case FamilyKind::dyadic_branches: {
      if (!depth_) return StarSize::infinite();
      int d = *depth_;
      if (i >= (1 << d)) return StarSize::of(1);  // only the singleton
      // closed form over the subtree below i: m(r) counts nonempty chains
      // with a prescribed top node at remaining depth r, T(r) sums m over a
      // full subtree
      int level = node_level(i);
      int r = d - level;
      std::uint64_t T_prev = 0;  // T(r-1), starting from r = 0
      std::uint64_t D = 1;
      for (int rr = 0; rr < r; ++rr) {
        std::uint64_t m = sat_add(1, sat_mul(2, T_prev));
        T_prev = sat_add(m, sat_mul(2, T_prev));
        D = sat_add(1, sat_mul(2, T_prev));
      }
      std::uint64_t anc = 1;
      for (int k = 0; k < level - 1; ++k) anc = sat_mul(anc, 2);
      return StarSize::of(sat_mul(anc, D));
    }
    case FamilyKind::spread_hereditary_closure: {
      for (const auto& g : generators_)
        if (g.size() >= 2 && g.min() <= i) return StarSize::infinite();
      return StarSize::of(1);
    }
    case FamilyKind::explicit_sets: {
      FiniteSet universe;
      for (const auto& g : generators_) universe = universe.unite(g);
      if (!universe.contains(i)) return StarSize::of(1);
      std::uint64_t count = 0;
      for (const auto& s : members_within(universe))
        if (s.contains(i)) ++count;
      return StarSize::of(count);
    }
  }
  return StarSize::of(0);
}

std::optional<bool> Family::is_spreading(Window w) const {
  switch (kind_) {
    case FamilyKind::singletons:
    case FamilyKind::all_subsets:
    case FamilyKind::schreier:
    case FamilyKind::spread_hereditary_closure:
      return true;
    case FamilyKind::evens_odds:
      return false;  // {1,3} is a member, its spread {2,3} is not
    case FamilyKind::dyadic_branches:
      // with a single level the family degenerates to singletons
      return depth_ && *depth_ == 1 ? std::optional<bool>(true) : std::optional<bool>(false);
    case FamilyKind::explicit_sets: {
      // look for an in-window violation; absence proves nothing
      for (const auto& s : restrict_to(w)) {
        if (s.empty()) continue;
        std::vector<int> spread(static_cast<size_t>(s.size()));
        std::function<bool(int, int)> check = [&](int pos, int lo) -> bool {
          if (pos == s.size())
            return contains(FiniteSet::of(std::vector<int>(spread)));
          for (int l = std::max(s[pos], lo); l <= w.n - (s.size() - 1 - pos); ++l) {
            spread[static_cast<size_t>(pos)] = l;
            if (!check(pos + 1, l + 1)) return false;
          }
          return true;
        };
        if (!check(0, 1)) return false;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

ValidationReport Family::validate(Window w) const {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, FiniteSet s) {
    report.valid = false;
    report.violations.push_back({kind, std::move(s)});
  };

  if (kind_ == FamilyKind::explicit_sets) {
    // check the input as given; construction closed it silently
    std::set<FiniteSet> raw(raw_sets_.begin(), raw_sets_.end());
    if (!raw.count(FiniteSet())) add(Violation::Kind::missing_empty_set, FiniteSet());
    for (int i = 1; i <= w.n; ++i)
      if (!raw.count(FiniteSet{i})) add(Violation::Kind::missing_singleton, FiniteSet{i});
    std::set<FiniteSet> reported;
    for (const auto& a : raw_sets_) {
      if (a.empty() || a.max() > w.n) continue;
      // enumerate subsets of a
      int m = a.size();
      for (int mask = 1; mask < (1 << m) - 1; ++mask) {
        std::vector<int> elems;
        for (int b = 0; b < m; ++b)
          if (mask & (1 << b)) elems.push_back(a[b]);
        FiniteSet sub = FiniteSet::of(std::move(elems));
        if (sub.size() <= 1) continue;  // covered above
        if (!raw.count(sub) && !reported.count(sub)) {
          reported.insert(sub);
          add(Violation::Kind::heredity_gap, sub);
        }
      }
    }
    return report;
  }

  // rule families: verify the construction guarantees on the window
  auto members = restrict_to(w);
  std::set<FiniteSet> present(members.begin(), members.end());
  if (!present.count(FiniteSet())) add(Violation::Kind::missing_empty_set, FiniteSet());
  for (int i = 1; i <= w.n; ++i)
    if (!present.count(FiniteSet{i}))
      add(Violation::Kind::missing_singleton, FiniteSet{i});
  for (const auto& a : members) {
    for (int e : a) {
      FiniteSet sub = a.without(e);
      if (!present.count(sub)) add(Violation::Kind::heredity_gap, sub);
    }
  }
  return report;
}

bool Family::has_infinite_member() const {
  switch (kind_) {
    case FamilyKind::all_subsets:
      return true;
    case FamilyKind::evens_odds:
      return true;  // pointwise closure holds the two parity blocks
    case FamilyKind::dyadic_branches:
      return !depth_;  // infinite branches of the unbounded tree
    case FamilyKind::singletons:
    case FamilyKind::schreier:
    case FamilyKind::spread_hereditary_closure:
    case FamilyKind::explicit_sets:
      return false;
  }
  return false;
}

}  // namespace hap
