#pragma once

// Test-side polytope utilities, kept independent of the library's simplex:
// rational Gaussian elimination plus exhaustive vertex enumeration. Only
// suitable for tiny dimensions, which is the point - the production path is
// checked against an implementation that shares no code with it.

#include <optional>
#include <vector>

#include "hap/rational.hpp"

namespace hap::testing {

using Row = std::vector<Rational>;

/// Solves a square system by Gauss-Jordan; nullopt when singular.
inline std::optional<Row> gauss_solve(std::vector<Row> a, Row b) {
  const size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rational inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    b[col] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (size_t c = 0; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  return b;
}

struct HalfSpace {
  Row normal;   // normal . x <= offset
  Rational offset;
};

/// All vertices of the polytope cut out by the half-spaces: every d-subset
/// of constraints solved as equalities, kept when feasible.
inline std::vector<Row> enumerate_vertices(const std::vector<HalfSpace>& hs, size_t dim) {
  std::vector<Row> vertices;
  std::vector<size_t> pick(dim);
  std::function<void(size_t, size_t)> choose = [&](size_t start, size_t depth) {
    if (depth == dim) {
      std::vector<Row> a(dim);
      Row b(dim);
      for (size_t k = 0; k < dim; ++k) {
        a[k] = hs[pick[k]].normal;
        b[k] = hs[pick[k]].offset;
      }
      auto x = gauss_solve(std::move(a), std::move(b));
      if (!x) return;
      for (const auto& h : hs) {
        Rational lhs = 0;
        for (size_t c = 0; c < dim; ++c) lhs += h.normal[c] * (*x)[c];
        if (lhs > h.offset) return;
      }
      vertices.push_back(*x);
      return;
    }
    for (size_t i = start; i < hs.size(); ++i) {
      pick[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
  return vertices;
}

}  // namespace hap::testing
