#include "doctest.h"

#include "io.hpp"
#include "octa/random.hpp"

using namespace octa;
using io::json;

TEST_CASE("rational and Laurent round trips") {
  CHECK(io::rational_from(json("-4/6")) == make_rational(-2, 3));
  CHECK(io::rational_from(json(7)) == 7);
  CHECK(io::to_json(make_rational(5, 6)) == json("5/6"));
  CHECK_THROWS_AS(io::rational_from(json(1.5)), io::InputError);

  Value p = Value::symbol(0, 1) * Value::symbol(0, -1) / Value::symbol(0, 0) + Value::symbol(1, 0);
  CHECK(io::value_from(io::to_json(p)) == p);
  CHECK(io::value_from(io::to_json(Value(make_rational(3, 7)))) == Value(make_rational(3, 7)));
}

TEST_CASE("surface round trip") {
  Rng rng(81);
  InitialSurface s = InitialSurface::flat(Parity::Odd, -2, 2, -2, 2,
                                          [&](int, int) { return Value(rng.positive_rational(9)); });
  InitialSurface back = io::surface_from(io::to_json(s));
  CHECK(back.parity() == s.parity());
  REQUIRE(back.cells().size() == s.cells().size());
  for (const auto& [site, cell] : s.cells()) {
    CHECK(back.height(site.first, site.second) == cell.k);
    CHECK(back.value(site.first, site.second) == cell.value);
  }

  json sym = {{"parity", "even"}, {"entries", {{{"i", 0}, {"j", 0}, {"k", 0}, {"value", "sym"}}}}};
  CHECK(io::surface_from(sym).value(0, 0) == Value::symbol(0, 0));

  json bad = {{"entries", {{{"i", 0}, {"j", 0}, {"k", 0}, {"value", "1"}}}}};
  CHECK_THROWS(io::surface_from(bad));  // parity violation on the odd sublattice
  CHECK_THROWS_AS(io::surface_from(json{{"parity", "odd"}}), io::InputError);
}

TEST_CASE("tube, pq, polygon and matrix round trips") {
  io::TubeInput t{2, 2, {{Value(Rational(1)), Value(Rational(2))}, {Value(Rational(3)), Value(make_rational(1, 2))}}};
  io::TubeInput tb = io::tube_from(io::to_json(t));
  CHECK(tb.d == 2);
  CHECK(tb.grid == t.grid);
  CHECK_THROWS_AS(io::tube_from(json{{"d", 2}, {"ell", 1}, {"grid", {{"1"}}}}), io::InputError);

  PQCoordinates pq{4, {1, make_rational(2, 3)}, {5, 7}};
  CHECK(io::pq_from(io::to_json(pq)) == pq);
  CHECK_THROWS_AS(io::pq_from(json{{"p", {"1"}}, {"q", json::array()}}), io::InputError);

  std::vector<Vec3> vs = {{0, 0, 1}, {4, 0, 1}, {5, 3, 1}, {2, 5, 1}, {-1, 3, 1}};
  TwistedPolygon A(vs, identity3());
  TwistedPolygon B = io::polygon_from(io::to_json(A));
  CHECK(B.vertices() == A.vertices());
  CHECK(B.monodromy() == A.monodromy());

  Matrix m = {{Value(Rational(1)), Value(Rational(2))}, {Value(Rational(3)), Value(Rational(4))}};
  CHECK(io::matrix_from(io::to_json(m)) == m);
}

TEST_CASE("quasi-periodic input") {
  json j = {{"kappa", 3}, {"n", 5}, {"lambda", "2"}, {"mu", "3"},
            {"fundamental", {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10"}}};
  QuasiPeriodicSurface q = io::quasi_from(j);
  CHECK(q.fundamental.size() == 10);
  CHECK(q.mu == 3);
  j["fundamental"].erase(0);
  CHECK_THROWS_AS(io::quasi_from(j), io::InputError);
}

TEST_CASE("report encoding") {
  Report r;
  r.title = "t";
  auto& c = r.add("claim", "ref");
  c.status = Status::Fail;
  c.counterexample = "(0,0,0)";
  json j = io::to_json(r);
  CHECK(j.dump().find("claim") != std::string::npos);
  CHECK(j.dump().find("(0,0,0)") != std::string::npos);
}
