#include "octa/network.hpp"

#include <algorithm>
#include <string>

namespace octa {

Value NetworkDiamond::face(int X, int Y) const {
  auto it = faces.find({X, Y});
  return it == faces.end() ? Value::constant(kind, 1) : it->second;
}

NetworkDiamond build_diamond(const InitialSurface& s, int i, int j, int k) {
  if (k < 1) throw LatticeError("diamond size must be positive");
  const int R = k - 1;
  if (!s.contains(i, j)) throw LatticeError("diamond exceeds surface");
  const int lower = s.height(i, j) - (k % 2 == 1 ? 1 : 0);

  NetworkDiamond d;
  d.center = {i, j};
  d.size = k;
  d.level = lower + k;
  d.kind = s.kind();

  for (int X = -R; X <= R; ++X)
    for (int Y = -R; Y <= R; ++Y) {
      if (std::abs(X) + std::abs(Y) > R) continue;
      if (!s.contains(i + X, j + Y)) throw LatticeError("diamond exceeds surface");
      const auto& cell = s.at(i + X, j + Y);
      if (cell.k != lower && cell.k != lower + 1)
        throw LatticeError("surface is not two-level on the diamond");
      if (cell.value.is_zero()) throw LatticeError("degenerate initial data: zero face");
      d.faces.emplace(Site{X, Y}, cell.value);
    }

  for (int x = -R; x <= R; ++x)
    for (int y = -R; y <= R; ++y)
      if (std::abs(x) + std::abs(y) <= R && mod2(long(x) + y - R) == 0) d.nodes.push_back({x, y});
  std::sort(d.nodes.begin(), d.nodes.end());
  auto index = [&](int x, int y) -> int {
    auto it = std::lower_bound(d.nodes.begin(), d.nodes.end(), NetworkNode{x, y});
    return (it != d.nodes.end() && it->x == x && it->y == y) ? int(it - d.nodes.begin()) : -1;
  };

  auto f = [&](int X, int Y) { return d.face(X, Y); };
  for (int u = 0; u < int(d.nodes.size()); ++u) {
    const auto [x, y] = d.nodes[u];
    if (int v = index(x + 1, y + 1); v >= 0) {
      int X = x + 1, Y = y;
      d.edges.push_back({u, v, f(X - 1, Y - 1) / f(X, Y)});
    }
    if (int v = index(x + 1, y - 1); v >= 0) {
      int X = x, Y = y - 1;
      d.edges.push_back({u, v, f(X, Y + 1) / f(X + 1, Y)});
    }
    if (int v = index(x + 2, y); v >= 0) {
      int X = x + 1, Y = y;
      d.edges.push_back({u, v, f(X - 1, Y - 1) * f(X - 1, Y) / (f(X, Y - 1) * f(X, Y))});
    }
  }

  for (int s1 = 1; s1 <= k; ++s1) {
    d.left_ports.push_back(index(-(s1 - 1), -(k - s1)));
    d.right_ports.push_back(index(s1 - 1, -(k - s1)));
  }
  for (int t = 0; t < k; ++t) d.black_dots.push_back(f(t, t - R));
  return d;
}

Matrix path_matrix(const NetworkDiamond& d) {
  const Value zero = Value::constant(d.kind, 0);
  std::vector<std::vector<const NetworkEdge*>> out(d.nodes.size());
  for (const auto& e : d.edges) out[e.from].push_back(&e);

  Matrix m;
  for (int src : d.left_ports) {
    std::vector<Value> z(d.nodes.size(), zero);
    z[src] = Value::constant(d.kind, 1);
    for (std::size_t u = 0; u < d.nodes.size(); ++u) {
      if (z[u].is_zero()) continue;
      for (const auto* e : out[u]) z[e->to] += z[u] * e->weight;
    }
    std::vector<Value> row;
    for (int dst : d.right_ports) row.push_back(z[dst]);
    m.push_back(std::move(row));
  }
  return m;
}

NetworkEvaluation evaluate_network(const NetworkDiamond& d) {
  NetworkEvaluation ev;
  ev.det = bareiss_determinant(path_matrix(d));
  ev.black_dots = d.black_dots;
  ev.t = ev.det;
  for (const auto& b : d.black_dots) ev.t *= b;
  return ev;
}

Value t_via_network(const NetworkDiamond& d) { return evaluate_network(d).t; }

}  // namespace octa
