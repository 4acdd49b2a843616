#include "doctest.h"

#include <cmath>

#include "octa/pentagram.hpp"
#include "octa/random.hpp"
#include "oracles/oracles.hpp"

using namespace octa;

namespace {

Rational r(long p, long q = 1) { return make_rational(p, q); }

Vec3 on_line(long t) { return {Rational(t), Rational(1), Rational(1)}; }

Vec3 random_vec(Rng& rng, long m) {
  return {Rational(rng.uniform(-m, m)), Rational(rng.uniform(-m, m)), Rational(rng.uniform(1, m))};
}

Mat3 random_mat(Rng& rng) {
  for (;;) {
    Mat3 M;
    for (auto& row : M)
      for (auto& e : row) e = Rational(rng.uniform(-3, 3));
    if (det3(M[0], M[1], M[2]) != 0) return M;
  }
}

// A generic random twisted polygon, or nothing after too many attempts.
std::optional<TwistedPolygon> random_polygon(Rng& rng, int n) {
  for (int a = 0; a < 100; ++a) {
    std::vector<Vec3> vs;
    for (int i = 0; i < n; ++i) vs.push_back(random_vec(rng, 6));
    TwistedPolygon A(vs, random_mat(rng));
    try {
      corner_invariants(A);
      TwistedPolygon T = pentagram_map_geometric(A);
      pq_invariants(T, 3);
      higher_map(pq_invariants(A, 3));
      bool distinct = true;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) distinct = distinct && !is_zero(cross(T.v(i), T.v(j)));
      if (distinct) return A;
    } catch (const GeometryError&) {
    }
  }
  return std::nullopt;
}

PQCoordinates constant_pq(int kappa, int n, const Rational& p, const Rational& q) {
  return {kappa, std::vector<Rational>(n, p), std::vector<Rational>(n, q)};
}

PQCoordinates random_pq(Rng& rng, int kappa, int n) {
  PQCoordinates pq;
  pq.kappa = kappa;
  for (int i = 0; i < n; ++i) pq.p.push_back(rng.positive_rational(9));
  for (int i = 0; i < n; ++i) pq.q.push_back(rng.positive_rational(9));
  return pq;
}

bool projectively_equal(const Vec3& a, const Vec3& b) { return is_zero(cross(a, b)); }

// Floating-point oracle in homogeneous coordinates.
using V = std::array<double, 3>;
V dcross(const V& a, const V& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
V to_d(const Vec3& v) { return {v[0].get_d(), v[1].get_d(), v[2].get_d()}; }
double ddet(const V& a, const V& b, const V& c) {
  const V bc = dcross(b, c);
  return a[0] * bc[0] + a[1] * bc[1] + a[2] * bc[2];
}
// Bracket form with an auxiliary point o off the line:
// chi = [oab][ocd] / ([oac][obd]).
double dchi(const V& a, const V& b, const V& c, const V& d) {
  const V o = dcross(a, b);
  return ddet(o, a, b) * ddet(o, c, d) / (ddet(o, a, c) * ddet(o, b, d));
}

}  // namespace

TEST_CASE("kappa parameters") {
  CHECK(kappa_params(3).r == 0);
  CHECK(kappa_params(3).rprime == 1);
  CHECK(kappa_params(4).r == 1);
  CHECK(kappa_params(4).rprime == 1);
  CHECK(kappa_params(5).r == 1);
  CHECK(kappa_params(5).rprime == 2);
  CHECK_THROWS_AS(kappa_params(2), GeometryError);
}

TEST_CASE("cross-ratio") {
  CHECK(cross_ratio(on_line(0), on_line(1), on_line(2), on_line(3)) == r(1, 4));
  const Vec3 inf{Rational(1), Rational(0), Rational(0)};
  CHECK(cross_ratio(on_line(0), inf, on_line(1), on_line(2)) == r(-1));
  CHECK_THROWS_WITH_AS(cross_ratio(on_line(0), on_line(1), on_line(0), on_line(3)),
                       "degenerate quadruple", GeometryError);
  const Vec3 off{Rational(0), Rational(0), Rational(1)};
  CHECK_THROWS_WITH_AS(cross_ratio(on_line(0), on_line(1), off, on_line(3)), "non-collinear input",
                       GeometryError);

  Rng rng(61);
  for (int t = 0; t < 100; ++t) {
    Vec3 pts[4];
    long pos[4] = {rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(-9, 9)};
    if (pos[0] == pos[1] || pos[0] == pos[2] || pos[1] == pos[3] || pos[2] == pos[3]) continue;
    for (int a = 0; a < 4; ++a) pts[a] = on_line(pos[a]);
    const Rational chi = cross_ratio(pts[0], pts[1], pts[2], pts[3]);
    CHECK(chi.get_d() == doctest::Approx(oracle::cross_ratio_scalar(pos[0], pos[1], pos[2], pos[3])));
    // Projective and scale invariance.
    Mat3 g = random_mat(rng);
    Vec3 img[4];
    for (int a = 0; a < 4; ++a) {
      img[a] = mat_vec(g, pts[a]);
      for (auto& c : img[a]) c *= Rational(a + 2);
    }
    CHECK(cross_ratio(img[0], img[1], img[2], img[3]) == chi);
  }
}

TEST_CASE("corner invariants") {
  Rng rng(62);
  for (int t = 0; t < 10; ++t) {
    auto A = random_polygon(rng, 5);
    REQUIRE(A);
    CornerInvariants xy = corner_invariants(*A);
    // Independent floating-point evaluation.
    for (long i = 0; i < A->n(); ++i) {
      V a = to_d(A->v(i - 2)), b = to_d(A->v(i - 1)), c = to_d(A->v(i)), d = to_d(A->v(i + 1)),
        e = to_d(A->v(i + 2));
      V l1 = dcross(a, b), l2 = dcross(d, e);
      const double X = dchi(a, b, dcross(l1, dcross(c, d)), dcross(l1, l2));
      const double Y = dchi(dcross(l1, l2), dcross(dcross(b, c), l2), d, e);
      CHECK(xy.X[i].get_d() == doctest::Approx(X).epsilon(1e-9));
      CHECK(xy.Y[i].get_d() == doctest::Approx(Y).epsilon(1e-9));
    }
    // Projective transformation and rescaling leave X, Y unchanged.
    Mat3 g = random_mat(rng);
    std::vector<Vec3> moved;
    for (int i = 0; i < A->n(); ++i) {
      Vec3 v = mat_vec(g, A->vertices()[i]);
      for (auto& c : v) c *= Rational(i + 1);
      moved.push_back(v);
    }
    TwistedPolygon B(moved, multiply(multiply(g, A->monodromy()), inverse(g)));
    CornerInvariants xy2 = corner_invariants(B);
    CHECK(xy2.X == xy.X);
    CHECK(xy2.Y == xy.Y);

    PQCoordinates pq = pq_invariants(*A, 3);
    CHECK(pq_from_corners(xy) == pq);
    for (int i = 0; i < A->n(); ++i) {
      CHECK(pq.p[i] == -1 / (xy.X[i] * xy.Y[i]));
      CHECK(pq.q[i] == -xy.Y[i] * xy.X[(i + 1) % A->n()]);
    }
    // Relabelling the vertices from v_1 rotates the invariants.
    std::vector<Vec3> shifted;
    for (int i = 1; i <= A->n(); ++i) shifted.push_back(A->v(i));
    PQCoordinates rot = pq_invariants(TwistedPolygon(shifted, A->monodromy()), 3);
    for (int i = 0; i < A->n(); ++i) {
      CHECK(rot.p[i] == pq.p[(i + 1) % A->n()]);
      CHECK(rot.q[i] == pq.q[(i + 1) % A->n()]);
    }
  }
}

TEST_CASE("geometric pentagram map") {
  Rng rng(63);
  for (int t = 0; t < 10; ++t) {
    auto A = random_polygon(rng, 6);
    REQUIRE(A);
    TwistedPolygon T = pentagram_map_geometric(*A);
    CHECK(T.n() == A->n());
    for (int i = 0; i < T.n(); ++i)
      for (int j = i + 1; j < T.n(); ++j) CHECK_FALSE(projectively_equal(T.v(i), T.v(j)));
    for (int i = -2; i < 2 * T.n(); ++i)
      CHECK(projectively_equal(T.v(i + T.n()), mat_vec(A->monodromy(), T.v(i))));

    Mat3 g = random_mat(rng);
    std::vector<Vec3> moved;
    for (const auto& v : A->vertices()) moved.push_back(mat_vec(g, v));
    TwistedPolygon gA(moved, multiply(multiply(g, A->monodromy()), inverse(g)));
    TwistedPolygon TgA = pentagram_map_geometric(gA);
    for (int i = 0; i < T.n(); ++i) CHECK(projectively_equal(TgA.v(i), mat_vec(g, T.v(i))));

    CHECK(pq_invariants(T, 3) == higher_map(pq_invariants(*A, 3)));
  }
}

TEST_CASE("higher pentagram map") {
  PQCoordinates pq = constant_pq(3, 5, r(2), r(3));
  PQCoordinates img = higher_map(pq);
  for (int i = 0; i < 5; ++i) {
    CHECK(img.q[i] == r(1, 2));
    CHECK(img.p[i] == r(12));
  }
  CHECK_THROWS_WITH_AS(higher_map(constant_pq(3, 5, r(-1), r(1))), "singular configuration",
                       GeometryError);
  CHECK_THROWS_AS(higher_map(PQCoordinates{3, {r(1)}, {}}), GeometryError);

  Rng rng(64);
  for (int kappa = 3; kappa <= 6; ++kappa)
    for (int n = kappa + 1; n <= kappa + 4; ++n) {
      PQCoordinates a = random_pq(rng, kappa, n);
      PQCoordinates b = higher_map(a);
      CHECK(higher_map(b, MapDirection::Inverse) == a);
      CHECK(higher_map(higher_map(a, MapDirection::Inverse)) == a);
      CHECK(swap_pq(swap_pq(a)) == a);
      // kappa = 3: q_i' = 1/p_{i+1}.
      if (kappa == 3)
        for (int i = 0; i < n; ++i) CHECK(b.q[i] == 1 / a.p[(i + 1) % n]);
    }
}

TEST_CASE("conserved quantities") {
  auto ones = conserved_quantities(constant_pq(3, 5, r(1), r(1)));
  CHECK(ones.O == 1);
  CHECK(ones.E == 1);
  PQCoordinates pq{3, {r(1), r(2), r(3), r(4), r(5)}, std::vector<Rational>(5, r(1))};
  CHECK(conserved_quantities(pq).O == 120);

  Rng rng(65);
  for (int t = 0; t < 20; ++t) {
    const int kappa = int(rng.uniform(3, 5)), n = int(rng.uniform(kappa + 2, 10));
    PQCoordinates a = random_pq(rng, kappa, n);
    const Conserved raw = conserved_quantities(a);
    // Along the map O' = E O^2 and E' = 1/O ...
    const Conserved step = conserved_quantities(higher_map(a));
    CHECK(step.O == raw.E * raw.O * raw.O);
    CHECK(step.E == 1 / raw.O);
    // ... so O and E are constant on the locus O E = 1, where twisted polygons live.
    a.q[0] /= raw.O * raw.E;
    const Conserved c0 = conserved_quantities(a);
    for (int it = 0; it < 5; ++it) {
      a = higher_map(a);
      const Conserved c = conserved_quantities(a);
      CHECK(c.O == c0.O);
      CHECK(c.E == c0.E);
    }
  }
  for (int t = 0; t < 5; ++t) {
    auto A = random_polygon(rng, 7);
    REQUIRE(A);
    const Conserved c = conserved_quantities(pq_invariants(*A, 3));
    CHECK(c.O * c.E == 1);
  }
}

TEST_CASE("Glick quiver") {
  auto B = glick_quiver(3, 8);
  const int n = 8;
  REQUIRE(B.size() == 16);
  for (int u = 0; u < 2 * n; ++u)
    for (int v = 0; v < 2 * n; ++v) CHECK(B[u][v] == -B[v][u]);
  for (int i = 0; i < n; ++i) {
    const int qi = n + i;
    CHECK(B[qi][i] > 0);
    CHECK(B[qi][(i + 1) % n] > 0);
    CHECK(B[(i - 1 + n) % n][qi] > 0);
    CHECK(B[(i + 2) % n][qi] > 0);
    int arrows = 0;
    for (int v = 0; v < 2 * n; ++v) arrows += B[qi][v] != 0;
    CHECK(arrows == 4);
    for (int j = 0; j < n; ++j) CHECK(B[i][j] == 0);
  }
  CHECK(B[1][n + 2] == 1);
  CHECK_THROWS_AS(glick_quiver(3, 3), GeometryError);
  CHECK_THROWS_AS(glick_quiver(5, 4), GeometryError);
}

TEST_CASE("y-seed mutation") {
  YSeed s{{Value(r(2)), Value(r(3))}, {{0, 1}, {-1, 0}}};
  YSeed m = mutate_y_seed(s, 0);
  CHECK(m.y[0] == Value(r(1, 2)));
  CHECK(m.y[1] == Value(r(2)));
  CHECK(m.B[0][1] == -1);
  CHECK(m.B[1][0] == 1);
  CHECK(mutate_y_seed(m, 0) == s);

  Rng rng(66);
  PQCoordinates pq = random_pq(rng, 4, 7);
  YSeed g = seed_from_pq(pq);
  CHECK(pq_from_seed(g, 4) == pq);
  CHECK(mutate_y_seed(mutate_y_seed(g, 0), 2) == mutate_y_seed(mutate_y_seed(g, 2), 0));
  CHECK(mutate_y_seed(mutate_y_seed(g, 3), 3) == g);
}

TEST_CASE("map via mutations") {
  PQCoordinates c = constant_pq(3, 6, r(2), r(3));
  PQCoordinates img = pq_from_seed(pentagram_via_mutations(seed_from_pq(c), 3), 3);
  CHECK(img == higher_map(c));
  CHECK(img.p[0] == 12);
  CHECK(img.q[0] == r(1, 2));

  Rng rng(67);
  for (int kappa = 3; kappa <= 5; ++kappa) {
    PQCoordinates pq = random_pq(rng, kappa, kappa + 3);
    YSeed out = pentagram_via_mutations(seed_from_pq(pq), kappa);
    CHECK(out.B == glick_quiver(kappa, kappa + 3));
    CHECK(pq_from_seed(out, kappa) == higher_map(pq));
  }
}
