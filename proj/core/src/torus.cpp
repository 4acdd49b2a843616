#include "octa/torus.hpp"

#include <string>

namespace octa {

namespace {

std::string pt(int i, int j, int k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

long half(long v) {
  if (mod2(v) != 0) throw LatticeError("parity violation: index not integral");
  return v / 2;
}

long exponent(int kappa, long i, long j) { return long(kappa - 2) * i + long(kappa) * j; }

const Rational& cyc(const std::vector<Rational>& v, long i) {
  const long n = long(v.size());
  return v[((i % n) + n) % n];
}

}  // namespace

long torus_p_index(int kappa, int i, int j) { return half(exponent(kappa, i, j)); }

long torus_q_index(int kappa, int i, int j) {
  const auto [r, rp] = kappa_params(kappa);
  return half(exponent(kappa, i, j) + r - rp);
}

YField pq_to_torus_y(const PQCoordinates& pq) {
  if (pq.p.empty() || pq.p.size() != pq.q.size())
    throw GeometryError("p and q must have equal, nonzero length");
  for (const auto& x : pq.q)
    if (x == 0) throw GeometryError("singular configuration");
  return YField(Parity::Even, -1, [pq](const Point& p) -> std::optional<Value> {
    if (p.k == 0) return Value(cyc(pq.p, torus_p_index(pq.kappa, p.i, p.j)));
    if (p.k == -1) return Value(Rational(1 / cyc(pq.q, torus_q_index(pq.kappa, p.i, p.j))));
    return std::nullopt;
  });
}

Report check_double_periodicity(YField& y, const TorusWrap& wrap, int kmax, const TorusWindow& w) {
  Report rep;
  rep.title = "torus double periodicity (kappa=" + std::to_string(wrap.kappa) +
              ", n=" + std::to_string(wrap.n) + ")";
  CheckBuilder p1("Y_{i,j,k} = Y_{i+kappa,j+2-kappa,k}", "double periodicity");
  CheckBuilder p2("Y_{i,j,k} = Y_{i+n,j-n,k}", "double periodicity");
  CheckBuilder mix("Y_{i,j,k} = Y_{(i,j,k) + a(kappa,2-kappa,0) + b(n,-n,0)}, a,b = +-1",
                   "double periodicity");
  const Point P1 = wrap.period1(), P2 = wrap.period2();
  for (int k = -1; k <= kmax; ++k)
    for (int i = w.imin; i <= w.imax; ++i)
      for (int j = w.jmin; j <= w.jmax; ++j) {
        if (parity_of({i, j, k}) != int(y.parity())) continue;
        const Value v = y(i, j, k);
        p1.expect(v == y(i + P1.i, j + P1.j, k), pt(i, j, k));
        p2.expect(v == y(i + P2.i, j + P2.j, k), pt(i, j, k));
        for (int a : {-1, 1})
          for (int b : {-1, 1})
            mix.expect(v == y(i + a * P1.i + b * P2.i, j + a * P1.j + b * P2.j, k), pt(i, j, k));
      }
  rep.checks.push_back(p1.finish());
  rep.checks.push_back(p2.finish());
  rep.checks.push_back(mix.finish());
  return rep;
}

Report check_readoff(const PQCoordinates& pq, YField& y, int levels, const TorusWindow& w) {
  Report rep;
  rep.title = "torus read-off (kappa=" + std::to_string(pq.kappa) + ")";
  const auto [r, rp] = kappa_params(pq.kappa);
  CheckBuilder cp("p(T^k A) read off Y_{i,j,k}", "torus read-off");
  CheckBuilder cq("q(T^k A) read off 1/Y_{i,j,k-1}", "torus read-off");
  PQCoordinates cur = pq;
  for (int k = 1; k <= levels; ++k) {
    cur = higher_map(cur);
    for (int i = w.imin; i <= w.imax; ++i)
      for (int j = w.jmin; j <= w.jmax; ++j) {
        const long e = exponent(pq.kappa, i, j);
        if (mod2(long(i) + j + k) == 0) {
          cp.expect(y(i, j, k).rational() == cyc(cur.p, half(e + long(k) * (r - rp))), pt(i, j, k));
        } else {
          const Rational& yv = y(i, j, k - 1).rational();
          cq.expect(yv != 0 && 1 / yv == cyc(cur.q, half(e + long(k + 1) * (r - rp))), pt(i, j, k));
        }
      }
  }
  rep.checks.push_back(cp.finish());
  rep.checks.push_back(cq.finish());
  return rep;
}

// ---- unfolding --------------------------------------------------------------

std::vector<Site> fundamental_domain(int kappa, int n) {
  std::vector<Site> out;
  // i + j = s in {0,1}: j = s - i, exponent = (kappa-2)i + kappa(s-i) = kappa s - 2i.
  for (int s = 0; s <= 1; ++s)
    for (long i = -4L * n - 4; i <= 4L * n + 4; ++i) {
      long e = long(kappa) * s - 2 * i;
      if (e > -2L * n && e <= 0) out.push_back({int(i), int(s - i)});
    }
  return out;
}

Rational quasi_value(const QuasiPeriodicSurface& q, int i, int j) {
  const long alpha = floor_div(long(i) + j, 2);
  const long beta = floor_div(-exponent(q.kappa, i, j), 2L * q.n);
  const int i0 = int(i - alpha * q.kappa - beta * q.n);
  const int j0 = int(j - alpha * (2 - q.kappa) + beta * q.n);
  auto it = q.fundamental.find({i0, j0});
  if (it == q.fundamental.end())
    throw LatticeError("fundamental domain value missing at (" + std::to_string(i0) + "," +
                       std::to_string(j0) + ")");
  const long e0 = exponent(q.kappa, i0, j0);
  long E = 0;
  if (beta > 0)
    for (long t = 0; t < beta; ++t) E += e0 - 2L * q.n * t;
  else
    for (long t = 1; t <= -beta; ++t) E -= e0 + 2L * q.n * t;
  const Rational& c = mod2(long(i) + j) == 1 ? q.lambda : q.mu;
  return it->second * pow(c, E);
}

InitialSurface build_quasi_surface(const QuasiPeriodicSurface& q, int imin, int imax, int jmin,
                                   int jmax) {
  if (q.lambda == 0 || q.mu == 0) throw LatticeError("degenerate initial data");
  for (const auto& [s, v] : q.fundamental)
    if (v == 0) throw LatticeError("degenerate initial data");
  return InitialSurface::flat(Parity::Odd, imin, imax, jmin, jmax,
                              [&q](int i, int j) { return Value(quasi_value(q, i, j)); });
}

Report verify_unfolding(const QuasiPeriodicSurface& q, int kmax, const TorusWindow& w) {
  Report rep;
  rep.title = "unfolding (kappa=" + std::to_string(q.kappa) + ", n=" + std::to_string(q.n) + ")";
  const int kap = q.kappa, n = q.n;
  const int reach = kmax + n + kap + 2;
  TField T(build_quasi_surface(q, std::min(w.imin, -n) - reach, w.imax + reach,
                               std::min(w.jmin, -n) - reach, w.jmax + reach));

  CheckBuilder tp1("T_{i+kappa,j+2-kappa,k} = T_{i,j,k}", "quasi-periodicity of T");
  CheckBuilder tp2("T_{i+n,j-n,k} = T_{i,j,k} lambda^e (k even), mu^e (k odd)",
                   "quasi-periodicity of T");
  // The multiplier consistent with the octahedron relation: the exponent
  // pattern of the initial data extended linearly in k.
  CheckBuilder gauge("T_{i+n,j-n,k} = T_{i,j,k} lambda^{(1-k)e} mu^{ke}",
                     "quasi-periodicity of T, level-linear multiplier");
  CheckBuilder yp("induced Y doubly periodic", "double periodicity");
  for (int k = 0; k <= kmax; ++k)
    for (int i = w.imin; i <= w.imax; ++i)
      for (int j = w.jmin; j <= w.jmax; ++j) {
        if (mod2(long(i) + j + k) == 1) {
          const Rational& t = T(i, j, k).rational();
          tp1.expect(T(i + kap, j + 2 - kap, k).rational() == t, pt(i, j, k));
          const Rational& c = mod2(k) == 0 ? q.lambda : q.mu;
          const long e = exponent(kap, i, j);
          const Rational& shifted = T(i + n, j - n, k).rational();
          tp2.expect(shifted == t * pow(c, e), pt(i, j, k));
          gauge.expect(shifted == t * pow(q.lambda, (1L - k) * e) * pow(q.mu, long(k) * e),
                       pt(i, j, k));
        } else if (k < kmax) {
          const Value y = y_from_t(T, {i, j, k});
          yp.expect(y == y_from_t(T, {i + kap, j + 2 - kap, k}) &&
                        y == y_from_t(T, {i + n, j - n, k}),
                    pt(i, j, k));
        }
      }
  rep.checks.push_back(tp1.finish());
  rep.checks.push_back(tp2.finish());
  rep.checks.push_back(gauge.finish());
  rep.checks.push_back(yp.finish());

  Rational O = 1, E = 1;
  for (int i = 0; i < n; ++i) {
    O *= y_from_t(T, {i, -i, 0}).rational();
    E /= y_from_t(T, {i + 1, -i, 1}).rational();
  }
  auto& co = rep.add("O_n = prod Y_{i,-i,0} = lambda^{2kappa-2}", "conserved quantity values");
  co.cases = 1;
  co.status = O == pow(q.lambda, 2L * kap - 2) ? Status::Pass : Status::Fail;
  co.note = "O_n = " + to_string(O);
  if (co.status == Status::Fail) co.counterexample = "expected " + to_string(pow(q.lambda, 2L * kap - 2));
  auto& ce = rep.add("E_n = prod Y_{i+1,-i,1}^{-1} = mu^{2-2kappa}", "conserved quantity values");
  ce.cases = 1;
  ce.status = E == pow(q.mu, 2L - 2 * kap) ? Status::Pass : Status::Fail;
  ce.note = "E_n = " + to_string(E);
  if (ce.status == Status::Fail) ce.counterexample = "expected " + to_string(pow(q.mu, 2L - 2 * kap));
  return rep;
}

}  // namespace octa
