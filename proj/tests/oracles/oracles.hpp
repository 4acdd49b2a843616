#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the elimination, network or cross-ratio code under test.

#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "octa/algebra.hpp"
#include "octa/matrix.hpp"
#include "octa/network.hpp"

namespace octa::oracle {

// Cofactor expansion along the first row.
inline Value laplace_det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Value(Rational(1));
  if (n == 1) return m[0][0];
  Value sum = Value::constant(m[0][0].kind(), 0);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Value> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    Value t = m[0][c] * laplace_det(minor);
    sum = c % 2 == 0 ? sum + t : sum - t;
  }
  return sum;
}

inline Matrix drop(const Matrix& m, std::size_t row, std::size_t col) {
  Matrix out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r == row) continue;
    std::vector<Value> v;
    for (std::size_t c = 0; c < m.size(); ++c)
      if (c != col) v.push_back(m[r][c]);
    out.push_back(std::move(v));
  }
  return out;
}

// Weighted sum over all vertex-disjoint path families source_a -> sink_{sigma(a)},
// signed by sigma, enumerated path by path.
inline Value lgv_bruteforce(const NetworkDiamond& d) {
  const std::size_t n = d.left_ports.size();
  std::vector<std::vector<const NetworkEdge*>> out(d.nodes.size());
  for (const auto& e : d.edges) out[e.from].push_back(&e);

  struct Path {
    std::vector<int> nodes;
    Value weight;
  };
  // All paths from each source to each sink.
  std::vector<std::vector<std::vector<Path>>> paths(n, std::vector<std::vector<Path>>(n));
  for (std::size_t a = 0; a < n; ++a) {
    std::function<void(int, std::vector<int>&, Value)> walk = [&](int u, std::vector<int>& trail,
                                                                  Value w) {
      for (std::size_t b = 0; b < n; ++b)
        if (d.right_ports[b] == u) paths[a][b].push_back({trail, w});
      for (const auto* e : out[u]) {
        trail.push_back(e->to);
        walk(e->to, trail, w * e->weight);
        trail.pop_back();
      }
    };
    std::vector<int> trail{d.left_ports[a]};
    walk(d.left_ports[a], trail, Value::constant(d.kind, 1));
  }

  Value total = Value::constant(d.kind, 0);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) inversions += sigma[a] > sigma[b];
    std::vector<int> used(d.nodes.size(), 0);
    std::function<void(std::size_t, Value)> pick = [&](std::size_t a, Value w) {
      if (a == n) {
        total = inversions % 2 == 0 ? total + w : total - w;
        return;
      }
      for (const auto& p : paths[a][sigma[a]]) {
        bool clash = false;
        for (int v : p.nodes) clash = clash || used[v];
        if (clash) continue;
        for (int v : p.nodes) used[v] = 1;
        pick(a + 1, w * p.weight);
        for (int v : p.nodes) used[v] = 0;
      }
    };
    pick(0, Value::constant(d.kind, 1));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

// Cross-ratio of four points on a line given by scalar positions.
inline double cross_ratio_scalar(double a, double b, double c, double d) {
  return ((a - b) * (c - d)) / ((a - c) * (b - d));
}

// Direct octahedron evolution on a flat odd surface (values at k = (i+j+1) mod 2
// for |i|,|j| <= R), level by level, without memoization by point.
inline std::map<std::pair<int, int>, Value> flat_levels(
    int R, int kmax, const std::function<Value(int, int)>& x,
    std::vector<std::map<std::pair<int, int>, Value>>* all = nullptr) {
  std::vector<std::map<std::pair<int, int>, Value>> lv(kmax + 1);
  for (int i = -R; i <= R; ++i)
    for (int j = -R; j <= R; ++j) lv[((i + j) % 2 + 2) % 2 == 0 ? 1 : 0][{i, j}] = x(i, j);
  for (int k = 2; k <= kmax; ++k)
    for (const auto& [s, v] : lv[k - 2]) {
      auto [i, j] = s;
      auto get = [&](int a, int b) { return lv[k - 1].find({a, b}); };
      auto n1 = get(i + 1, j), n2 = get(i - 1, j), n3 = get(i, j + 1), n4 = get(i, j - 1);
      if (n1 == lv[k - 1].end() || n2 == lv[k - 1].end() || n3 == lv[k - 1].end() ||
          n4 == lv[k - 1].end())
        continue;
      lv[k][s] = (n3->second * n4->second + n1->second * n2->second) / v;
    }
  if (all) *all = lv;
  return lv[kmax];
}

}  // namespace octa::oracle
