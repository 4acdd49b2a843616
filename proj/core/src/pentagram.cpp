#include "octa/pentagram.hpp"

#include <numeric>
#include <string>

namespace octa {

// ---- projective geometry ----------------------------------------------------

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {Rational(a[1] * b[2] - a[2] * b[1]), Rational(a[2] * b[0] - a[0] * b[2]),
          Rational(a[0] * b[1] - a[1] * b[0])};
}

Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Rational det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

Vec3 mat_vec(const Mat3& m, const Vec3& v) { return {dot(m[0], v), dot(m[1], v), dot(m[2], v)}; }

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return r;
}

Mat3 identity3() {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = i == j ? 1 : 0;
  return m;
}

Mat3 inverse(const Mat3& m) {
  // Rows of the inverse are cross products of the columns of m over det.
  Vec3 c0{m[0][0], m[1][0], m[2][0]}, c1{m[0][1], m[1][1], m[2][1]}, c2{m[0][2], m[1][2], m[2][2]};
  Rational d = det3(c0, c1, c2);
  if (d == 0) throw GeometryError("singular monodromy");
  Mat3 r{cross(c1, c2), cross(c2, c0), cross(c0, c1)};
  for (auto& row : r)
    for (auto& x : row) x /= d;
  return r;
}

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

ProjectivePoint::ProjectivePoint(const Vec3& v) : c(v) {
  int lead = 0;
  while (lead < 3 && c[lead] == 0) ++lead;
  if (lead == 3) throw GeometryError("zero homogeneous vector");
  Rational s = c[lead];
  for (auto& x : c) x /= s;
}

Vec3 join(const Vec3& a, const Vec3& b) {
  Vec3 l = cross(a, b);
  if (is_zero(l)) throw GeometryError("non-generic polygon: coincident points");
  return l;
}

Vec3 meet(const Vec3& l, const Vec3& m) {
  Vec3 p = cross(l, m);
  if (is_zero(p)) throw GeometryError("non-generic polygon: coincident lines");
  return p;
}

namespace {

bool proportional(const Vec3& a, const Vec3& b) { return is_zero(cross(a, b)); }

// Coordinates (u, w) of p in the basis (a, b) of their common line.
std::pair<Rational, Rational> coords(const Vec3& a, const Vec3& b, const Vec3& p) {
  static constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto [r, s] : pairs) {
    Rational D = a[r] * b[s] - a[s] * b[r];
    if (D != 0)
      return {Rational((p[r] * b[s] - p[s] * b[r]) / D), Rational((a[r] * p[s] - a[s] * p[r]) / D)};
  }
  throw GeometryError("degenerate quadruple");
}

}  // namespace

Rational cross_ratio(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  if (is_zero(a) || is_zero(b) || is_zero(c) || is_zero(d) || proportional(a, b))
    throw GeometryError("degenerate quadruple");
  if (det3(a, b, c) != 0 || det3(a, b, d) != 0) throw GeometryError("non-collinear input");
  auto [uc, wc] = coords(a, b, c);
  auto [ud, wd] = coords(a, b, d);
  Rational den = wc * ud;
  if (den == 0) throw GeometryError("degenerate quadruple");
  return (wc * ud - wd * uc) / den;
}

// ---- polygons ---------------------------------------------------------------

TwistedPolygon::TwistedPolygon(std::vector<Vec3> vertices, const Mat3& monodromy)
    : v_(std::move(vertices)), m_(monodromy), minv_(inverse(monodromy)) {
  if (v_.empty()) throw GeometryError("polygon needs vertices");
  for (const auto& x : v_)
    if (is_zero(x)) throw GeometryError("zero homogeneous vector");
}

Vec3 TwistedPolygon::v(long i) const {
  const long n = long(v_.size());
  long q = i / n, r = i % n;
  if (r < 0) {
    r += n;
    --q;
  }
  Vec3 p = v_[r];
  for (; q > 0; --q) p = mat_vec(m_, p);
  for (; q < 0; ++q) p = mat_vec(minv_, p);
  return p;
}

KappaParams kappa_params(int kappa) {
  if (kappa < 3) throw GeometryError("kappa must be at least 3");
  return {(kappa - 2) / 2, (kappa - 1) / 2};
}

CornerInvariants corner_invariants(const TwistedPolygon& a) {
  CornerInvariants out;
  for (long i = 0; i < a.n(); ++i) {
    Vec3 l1 = join(a.v(i - 2), a.v(i - 1));
    Vec3 l2 = join(a.v(i + 1), a.v(i + 2));
    out.X.push_back(cross_ratio(a.v(i - 2), a.v(i - 1), meet(l1, join(a.v(i), a.v(i + 1))),
                                meet(l1, l2)));
    out.Y.push_back(cross_ratio(meet(l1, l2), meet(join(a.v(i - 1), a.v(i)), l2), a.v(i + 1),
                                a.v(i + 2)));
  }
  return out;
}

PQCoordinates pq_invariants(const TwistedPolygon& a, int kappa) {
  const auto [r, rp] = kappa_params(kappa);
  PQCoordinates out;
  out.kappa = kappa;
  auto v = [&a](long i) { return a.v(i); };
  for (long i = 0; i < a.n(); ++i) {
    Vec3 L = join(v(i - rp), v(i + r + 1));
    Rational chi_p = cross_ratio(v(i - rp), meet(join(v(i - rp - 1), v(i + r)), L),
                                 meet(L, join(v(i - rp + 1), v(i + r + 2))), v(i + r + 1));
    if (chi_p == 0) throw GeometryError("degenerate configuration");
    out.p.push_back(-1 / chi_p);
    Vec3 side = join(v(i), v(i + 1));
    Rational chi_q = cross_ratio(meet(join(v(i - kappa + 1), v(i - kappa + 2)), side), v(i),
                                 v(i + 1), meet(side, join(v(i + kappa - 1), v(i + kappa))));
    out.q.push_back(-chi_q);
  }
  return out;
}

PQCoordinates pq_from_corners(const CornerInvariants& xy) {
  PQCoordinates out;
  const int n = int(xy.X.size());
  for (int i = 0; i < n; ++i) {
    Rational xy_i = xy.X[i] * xy.Y[i];
    if (xy_i == 0) throw GeometryError("degenerate configuration");
    out.p.push_back(-1 / xy_i);
    out.q.push_back(-xy.Y[i] * xy.X[(i + 1) % n]);
  }
  return out;
}

TwistedPolygon pentagram_map_geometric(const TwistedPolygon& a) {
  std::vector<Vec3> out;
  for (long i = 0; i < a.n(); ++i) {
    Vec3 d1 = cross(a.v(i - 1), a.v(i + 1)), d2 = cross(a.v(i), a.v(i + 2));
    if (is_zero(d1) || is_zero(d2)) throw GeometryError("degenerate diagonals");
    Vec3 p = cross(d1, d2);
    if (is_zero(p)) throw GeometryError("parallel diagonals");
    out.push_back(p);
  }
  return TwistedPolygon(std::move(out), a.monodromy());
}

// ---- (p,q) dynamics ---------------------------------------------------------

namespace {

const Rational& at(const std::vector<Rational>& v, long i) {
  const long n = long(v.size());
  return v[((i % n) + n) % n];
}

Rational one_plus(const Rational& x) {
  Rational r = 1 + x;
  if (r == 0) throw GeometryError("singular configuration");
  return r;
}

Rational one_plus_inv(const Rational& x) {
  if (x == 0) throw GeometryError("singular configuration");
  return one_plus(1 / x);
}

Rational inv(const Rational& x) {
  if (x == 0) throw GeometryError("singular configuration");
  return 1 / x;
}

}  // namespace

PQCoordinates swap_pq(const PQCoordinates& pq) { return {pq.kappa, pq.q, pq.p}; }

PQCoordinates footnote_map(const PQCoordinates& pq) {
  const auto [r, rp] = kappa_params(pq.kappa);
  PQCoordinates out{pq.kappa, {}, {}};
  const auto& P = pq.p;
  for (long i = 0; i < pq.n(); ++i) {
    out.q.push_back(inv(at(P, i + r - rp)));
    out.p.push_back(at(pq.q, i) * one_plus(at(P, i - rp - 1)) * one_plus(at(P, i + r + 1)) /
                    (one_plus_inv(at(P, i - rp)) * one_plus_inv(at(P, i + r))));
  }
  return out;
}

PQCoordinates higher_map(const PQCoordinates& pq, MapDirection dir) {
  if (pq.p.size() != pq.q.size() || pq.p.empty())
    throw GeometryError("p and q must have equal, nonzero length");
  if (dir == MapDirection::Inverse) return swap_pq(footnote_map(swap_pq(pq)));
  const auto [r, rp] = kappa_params(pq.kappa);
  PQCoordinates out{pq.kappa, {}, {}};
  const auto& P = pq.p;
  for (long i = 0; i < pq.n(); ++i) {
    out.q.push_back(inv(at(P, i + rp - r)));
    out.p.push_back(at(pq.q, i) * one_plus(at(P, i - r)) * one_plus(at(P, i + rp)) /
                    (one_plus_inv(at(P, i - r - 1)) * one_plus_inv(at(P, i + rp + 1))));
  }
  return out;
}

Conserved conserved_quantities(const PQCoordinates& pq) {
  Conserved c{1, 1};
  for (const auto& x : pq.p) c.O *= x;
  for (const auto& x : pq.q) c.E *= x;
  return c;
}

// ---- quiver -----------------------------------------------------------------

std::vector<std::vector<int>> glick_quiver(int kappa, int n) {
  const auto [r, rp] = kappa_params(kappa);
  if (n <= kappa) throw GeometryError("glick quiver needs n > kappa");
  auto md = [n](long x) { return int(((x % n) + n) % n); };
  std::vector<std::vector<int>> B(2 * n, std::vector<int>(2 * n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int c = (i == md(j - r - 1)) - (i == md(j - r)) - (i == md(j + rp)) + (i == md(j + rp + 1));
      B[i][n + j] = c;
      B[n + j][i] = -c;
    }
  return B;
}

YSeed seed_from_pq(const PQCoordinates& pq) {
  YSeed s;
  for (const auto& x : pq.p) s.y.emplace_back(x);
  for (const auto& x : pq.q) s.y.emplace_back(x);
  s.B = glick_quiver(pq.kappa, pq.n());
  return s;
}

PQCoordinates pq_from_seed(const YSeed& seed, int kappa) {
  PQCoordinates pq{kappa, {}, {}};
  const std::size_t n = seed.y.size() / 2;
  for (std::size_t i = 0; i < n; ++i) pq.p.push_back(seed.y[i].rational());
  for (std::size_t i = 0; i < n; ++i) pq.q.push_back(seed.y[n + i].rational());
  return pq;
}

namespace {

Value ipow(const Value& base, int e) {
  Value r = Value::constant(base.kind(), 1);
  if (e < 0) return r / ipow(base, -e);
  for (int t = 0; t < e; ++t) r *= base;
  return r;
}

}  // namespace

YSeed mutate_y_seed(const YSeed& seed, int k) {
  const int N = int(seed.y.size());
  if (k < 0 || k >= N) throw GeometryError("mutation vertex out of range");
  const Value& yk = seed.y[k];
  const Value one = Value::constant(yk.kind(), 1);
  if (yk.is_zero() || (one + yk).is_zero()) throw GeometryError("singular y value");

  YSeed out = seed;
  out.y[k] = one / yk;
  for (int j = 0; j < N; ++j) {
    if (j == k) continue;
    const int b = seed.B[k][j];
    if (b == 0) continue;
    out.y[j] = seed.y[j] * ipow(yk, std::max(b, 0)) * ipow(one + yk, -b);
  }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == k || j == k) {
        out.B[i][j] = -seed.B[i][j];
        continue;
      }
      const int bik = seed.B[i][k], bkj = seed.B[k][j];
      const int sgn = (bik > 0) - (bik < 0);
      out.B[i][j] = seed.B[i][j] + sgn * std::max(bik * bkj, 0);
    }
  return out;
}

YSeed pentagram_via_mutations(const YSeed& seed, int kappa, std::vector<int> order) {
  const auto [r, rp] = kappa_params(kappa);
  const int n = int(seed.y.size()) / 2;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  YSeed m = seed;
  for (int v : order) {
    if (v < 0 || v >= n) throw GeometryError("only p-vertices are mutated");
    m = mutate_y_seed(m, v);
  }
  // New vertex a comes from old vertex src[a].
  std::vector<int> src(2 * n);
  for (int i = 0; i < n; ++i) {
    src[i] = n + i;
    src[n + i] = (((i + rp - r) % n) + n) % n;
  }
  YSeed out;
  out.y.resize(2 * n);
  out.B.assign(2 * n, std::vector<int>(2 * n));
  for (int a = 0; a < 2 * n; ++a) {
    out.y[a] = m.y[src[a]];
    for (int b = 0; b < 2 * n; ++b) out.B[a][b] = m.B[src[a]][src[b]];
  }
  return out;
}

}  // namespace octa
