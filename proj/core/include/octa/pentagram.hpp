#pragma once

// Twisted polygons in RP^2, cross-ratios, corner and (p,q) invariants, the
// pentagram map and its higher analogues on (p,q), and the Glick quiver.

#include <array>
#include <stdexcept>
#include <vector>

#include "octa/algebra.hpp"

namespace octa {

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Vec3 = std::array<Rational, 3>;
using Mat3 = std::array<Vec3, 3>;  // row-major

Vec3 cross(const Vec3& a, const Vec3& b);
Rational dot(const Vec3& a, const Vec3& b);
Rational det3(const Vec3& a, const Vec3& b, const Vec3& c);
Vec3 mat_vec(const Mat3& m, const Vec3& v);
Mat3 multiply(const Mat3& a, const Mat3& b);
Mat3 inverse(const Mat3& m);
Mat3 identity3();
bool is_zero(const Vec3& v);

// Homogeneous point; canonical form has its first nonzero coordinate = 1.
struct ProjectivePoint {
  Vec3 c;
  ProjectivePoint() = default;
  explicit ProjectivePoint(const Vec3& v);
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

// Line through two points, and the intersection of two lines.
Vec3 join(const Vec3& a, const Vec3& b);
Vec3 meet(const Vec3& l, const Vec3& m);

// chi(a,b,c,d) = ((a-b)(c-d)) / ((a-c)(b-d)) for four collinear points.
// With c = u_c a + w_c b, d = u_d a + w_d b this is
// (w_c u_d - w_d u_c) / (w_c u_d).
Rational cross_ratio(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

class TwistedPolygon {
 public:
  TwistedPolygon(std::vector<Vec3> vertices, const Mat3& monodromy);

  int n() const { return int(v_.size()); }
  const std::vector<Vec3>& vertices() const { return v_; }
  const Mat3& monodromy() const { return m_; }
  // v_{i+n} = M v_i for every integer i.
  Vec3 v(long i) const;

 private:
  std::vector<Vec3> v_;
  Mat3 m_, minv_;
};

struct KappaParams {
  int r, rprime;
};
KappaParams kappa_params(int kappa);

struct PQCoordinates {
  int kappa = 3;
  std::vector<Rational> p, q;
  int n() const { return int(p.size()); }
  friend bool operator==(const PQCoordinates&, const PQCoordinates&) = default;
};

struct CornerInvariants {
  std::vector<Rational> X, Y;
};

CornerInvariants corner_invariants(const TwistedPolygon& a);
PQCoordinates pq_invariants(const TwistedPolygon& a, int kappa);
// kappa = 3 only: p_i = -1/(X_i Y_i), q_i = -Y_i X_{i+1}.
PQCoordinates pq_from_corners(const CornerInvariants& xy);

// T(v_i) = (v_{i-1} v_{i+1}) meet (v_i v_{i+2}); same monodromy.
TwistedPolygon pentagram_map_geometric(const TwistedPolygon& a);

enum class MapDirection { Forward, Inverse };

// Forward: q_i' = 1/p_{i+r'-r},
//   p_i' = q_i (1+p_{i-r})(1+p_{i+r'}) / ((1+1/p_{i-r-1})(1+1/p_{i+r'+1})).
// Inverse: S o G o S with S the p<->q interchange and G = footnote_map.
PQCoordinates higher_map(const PQCoordinates& pq, MapDirection dir = MapDirection::Forward);

// G: q_i* = 1/p_{i+r-r'},
//   p_i* = q_i (1+p_{i-r'-1})(1+p_{i+r+1}) / ((1+1/p_{i-r'})(1+1/p_{i+r})).
PQCoordinates footnote_map(const PQCoordinates& pq);
PQCoordinates swap_pq(const PQCoordinates& pq);

struct Conserved {
  Rational O, E;
};
Conserved conserved_quantities(const PQCoordinates& pq);

// y[0..n) are p_0..p_{n-1}, y[n..2n) are q_0..q_{n-1}.
struct YSeed {
  std::vector<Value> y;
  std::vector<std::vector<int>> B;
  friend bool operator==(const YSeed&, const YSeed&) = default;
};

// C_{ij} = d(i,j-r-1) - d(i,j-r) - d(i,j+r') + d(i,j+r'+1) (mod n), rows p,
// columns q; B = [[0, C], [-C^T, 0]] with b_{uv} > 0 an arrow u -> v.
std::vector<std::vector<int>> glick_quiver(int kappa, int n);

YSeed seed_from_pq(const PQCoordinates& pq);
PQCoordinates pq_from_seed(const YSeed& seed, int kappa);

YSeed mutate_y_seed(const YSeed& seed, int vertex);

// Mutate every p-vertex (in the given order, default 0..n-1), then relabel:
// new p_i = q_i, new q_i = p_{i+r'-r}.
YSeed pentagram_via_mutations(const YSeed& seed, int kappa, std::vector<int> order = {});

}  // namespace octa
