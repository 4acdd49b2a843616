#pragma once

// Weighted diamond networks whose path-partition determinants solve the
// octahedron relation (Lindstrom-Gessel-Viennot).
//
// Calibrated convention. Relative to the target center (i,j), face (X,Y) is
// the surface cell (i+X, j+Y); faces with |X|+|Y| > k-1 read as 1. Nodes are
// (x,y) with |x|+|y| <= k-1 and x+y = k-1 (mod 2); edges step (1,1), (1,-1)
// or (2,0). Every edge lies on exactly one up-triangle with face f=(X,Y) and
// neighbours a=(X-1,Y-1), b=(X-1,Y), c=(X,Y+1), d=(X+1,Y), e=(X,Y-1):
//   rising edge (x,y)->(x+1,y+1):  f=(x+1,y), weight a/f
//   falling edge (x,y)->(x+1,y-1): f=(x,y-1), weight c/d
//   flat edge (x,y)->(x+2,y):      f=(x+1,y), weight ab/(ef)
// Sources (-(s-1), -(k-s)), sinks (s-1, -(k-s)), s = 1..k. Black dots are the
// faces (t, t-(k-1)), t = 0..k-1, along the southeast edge.

#include <vector>

#include "octa/algebra.hpp"
#include "octa/lattice.hpp"
#include "octa/matrix.hpp"

namespace octa {

struct NetworkNode {
  int x, y;
  friend auto operator<=>(const NetworkNode&, const NetworkNode&) = default;
};

struct NetworkEdge {
  int from, to;  // indices into NetworkDiamond::nodes
  Value weight;
};

struct NetworkDiamond {
  Site center;
  int size = 1;   // k
  int level = 0;  // the lattice level reached: T_{i,j,level}
  Kind kind = Kind::Rational;
  std::map<Site, Value> faces;  // relative offsets inside the diamond
  std::vector<NetworkNode> nodes;  // sorted by (x, y): a topological order
  std::vector<NetworkEdge> edges;
  std::vector<int> left_ports, right_ports;
  std::vector<Value> black_dots;

  Value face(int X, int Y) const;
};

// Diamond of side k over (i,j). The surface must be two-level on the
// diamond: heights L and L+1 with the center on L+1 iff k is odd.
NetworkDiamond build_diamond(const InitialSurface& surface, int i, int j, int k);

Matrix path_matrix(const NetworkDiamond& d);

struct NetworkEvaluation {
  Value det;
  std::vector<Value> black_dots;
  Value t;
};

NetworkEvaluation evaluate_network(const NetworkDiamond& d);
Value t_via_network(const NetworkDiamond& d);

}  // namespace octa
