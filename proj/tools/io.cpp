#include "io.hpp"

#include <fstream>

namespace octa::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  } catch (const AlgebraError& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational as \"p/q\" or an integer");
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Laurent& p) {
  json arr = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::array();
    for (const auto& [v, e] : m.exponents()) exps.push_back({v.first, v.second, e});
    arr.push_back({{"coeff", c.get_str()}, {"exps", exps}});
  }
  return arr;
}

json to_json(const Value& v) {
  return v.kind() == Kind::Rational ? to_json(v.rational()) : to_json(v.laurent());
}

Value value_from(const json& j) {
  if (!j.is_array()) return Value(rational_from(j));
  Laurent p;
  for (const auto& t : j) {
    Monomial m;
    for (const auto& e : t.at("exps")) m *= Monomial::var(e.at(0), e.at(1), e.at(2));
    p += Laurent::term(m, Integer(t.at("coeff").get<std::string>()));
  }
  return Value(p);
}

InitialSurface surface_from(const json& j) {
  return guarded("surface", [&] {
    std::string par = j.value("parity", std::string("odd"));
    if (par != "odd" && par != "even") throw InputError("surface: parity must be odd or even");
    InitialSurface s(par == "odd" ? Parity::Odd : Parity::Even);
    for (const auto& e : j.at("entries")) {
      int i = e.at("i"), jj = e.at("j"), k = e.at("k");
      const auto& v = e.at("value");
      s.set(i, jj, k, v.is_string() && v.get<std::string>() == "sym" ? Value::symbol(i, jj) : value_from(v));
    }
    s.validate();
    return s;
  });
}

json to_json(const InitialSurface& s) {
  json entries = json::array();
  for (const auto& [site, c] : s.cells())
    entries.push_back({{"i", site.first}, {"j", site.second}, {"k", c.k}, {"value", to_json(c.value)}});
  return {{"parity", s.parity() == Parity::Odd ? "odd" : "even"}, {"entries", entries}};
}

TubeInput tube_from(const json& j) {
  return guarded("tube", [&] {
    TubeInput t;
    t.d = j.at("d");
    t.ell = j.at("ell");
    for (const auto& row : j.at("grid")) {
      std::vector<Value> r;
      for (const auto& v : row) r.push_back(value_from(v));
      t.grid.push_back(std::move(r));
    }
    if (int(t.grid.size()) != t.d) throw InputError("tube: grid must have d rows");
    for (const auto& r : t.grid)
      if (int(r.size()) != t.ell) throw InputError("tube: each grid row must have ell entries");
    return t;
  });
}

json to_json(const TubeInput& t) {
  json grid = json::array();
  for (const auto& r : t.grid) {
    json row = json::array();
    for (const auto& v : r) row.push_back(to_json(v));
    grid.push_back(row);
  }
  return {{"d", t.d}, {"ell", t.ell}, {"grid", grid}};
}

namespace {

Vec3 vec_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw InputError("expected three homogeneous coordinates");
  return {rational_from(j[0]), rational_from(j[1]), rational_from(j[2])};
}

json vec_json(const Vec3& v) { return {to_json(v[0]), to_json(v[1]), to_json(v[2])}; }

}  // namespace

TwistedPolygon polygon_from(const json& j) {
  return guarded("polygon", [&] {
    std::vector<Vec3> vs;
    for (const auto& v : j.at("vertices")) vs.push_back(vec_from(v));
    if (j.contains("n") && j.at("n").get<int>() != int(vs.size()))
      throw InputError("polygon: n does not match the vertex count");
    Mat3 m = identity3();
    if (j.contains("monodromy")) {
      const auto& rows = j.at("monodromy");
      if (rows.size() != 3) throw InputError("polygon: monodromy must be 3x3");
      for (int r = 0; r < 3; ++r) m[r] = vec_from(rows[r]);
    }
    try {
      return TwistedPolygon(std::move(vs), m);
    } catch (const GeometryError& e) {
      throw InputError(std::string("polygon: ") + e.what());
    }
  });
}

json to_json(const TwistedPolygon& p) {
  json vs = json::array(), m = json::array();
  for (const auto& v : p.vertices()) vs.push_back(vec_json(v));
  for (const auto& r : p.monodromy()) m.push_back(vec_json(r));
  return {{"n", p.n()}, {"vertices", vs}, {"monodromy", m}};
}

PQCoordinates pq_from(const json& j) {
  return guarded("pq", [&] {
    PQCoordinates pq;
    pq.kappa = j.value("kappa", 3);
    for (const auto& v : j.at("p")) pq.p.push_back(rational_from(v));
    for (const auto& v : j.at("q")) pq.q.push_back(rational_from(v));
    if (pq.p.size() != pq.q.size() || pq.p.empty())
      throw InputError("pq: p and q must have equal, nonzero length");
    if (pq.kappa < 3) throw InputError("pq: kappa must be at least 3");
    return pq;
  });
}

json to_json(const PQCoordinates& pq) {
  json p = json::array(), q = json::array();
  for (const auto& x : pq.p) p.push_back(to_json(x));
  for (const auto& x : pq.q) q.push_back(to_json(x));
  return {{"kappa", pq.kappa}, {"p", p}, {"q", q}};
}

QuasiPeriodicSurface quasi_from(const json& j) {
  return guarded("unfold input", [&] {
    QuasiPeriodicSurface q;
    q.kappa = j.at("kappa");
    q.n = j.at("n");
    q.lambda = rational_from(j.at("lambda"));
    q.mu = rational_from(j.at("mu"));
    auto dom = fundamental_domain(q.kappa, q.n);
    const auto& f = j.at("fundamental");
    if (f.size() != dom.size())
      throw InputError("unfold input: fundamental must list " + std::to_string(dom.size()) +
                       " values (2n)");
    for (std::size_t t = 0; t < dom.size(); ++t) {
      if (f[t].is_object()) {
        Site s{f[t].at("i"), f[t].at("j")};
        if (std::find(dom.begin(), dom.end(), s) == dom.end())
          throw InputError("unfold input: site outside the fundamental domain");
        q.fundamental[s] = rational_from(f[t].at("value"));
      } else {
        q.fundamental[dom[t]] = rational_from(f[t]);
      }
    }
    if (q.fundamental.size() != dom.size()) throw InputError("unfold input: repeated sites");
    return q;
  });
}

Matrix matrix_from(const json& j) {
  return guarded("matrix", [&] {
    const json& rows = j.is_object() ? j.at("matrix") : j;
    Matrix m;
    for (const auto& r : rows) {
      std::vector<Value> row;
      for (const auto& v : r) row.push_back(value_from(v));
      m.push_back(std::move(row));
    }
    for (const auto& r : m)
      if (r.size() != m.size()) throw InputError("matrix must be square");
    return m;
  });
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& v : r) row.push_back(to_json(v));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const RecursionCoefficients& rc) {
  json a = json::array();
  for (const auto& v : rc.coeffs) a.push_back(to_json(v));
  return {{"direction", rc.direction == Direction::Sum ? "sum" : "difference"},
          {"anchor", rc.anchor},
          {"coeffs", a}};
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json o = {{"claim", c.claim},
              {"reference", c.reference},
              {"status", to_string(c.status)},
              {"cases", c.cases}};
    if (!c.counterexample.empty()) o["counterexample"] = c.counterexample;
    if (!c.note.empty()) o["note"] = c.note;
    checks.push_back(o);
  }
  return {{"title", r.title}, {"ok", r.ok()}, {"checks", checks}};
}

}  // namespace octa::io
