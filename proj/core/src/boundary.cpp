#include "octa/boundary.hpp"

#include <string>

#include "octa/condensation.hpp"

namespace octa {

namespace {

std::string pt(int i, int j, int k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

bool on(Parity parity, int i, int j, int k) {
  return parity_of({i, j, k}) == static_cast<int>(parity);
}

}  // namespace

std::optional<Value> StripBoundary::synthesize(const Point& p, Kind kind) const {
  const int d = spec_.d;
  if (p.i == 0 || p.i == d + 1) return Value::constant(kind, 1);
  if (p.i < 0 || p.i > d + 1) return Value::constant(kind, 0);
  if (spec_.zero_beyond_wall && p.j == -1) return Value::constant(kind, 0);
  if (spec_.wall_at_zero && p.j == 0) return Value::constant(kind, 1);
  if (spec_.second_wall && p.j == *spec_.second_wall + 1) return Value::constant(kind, 1);
  return std::nullopt;
}

TField make_strip_field(const StripSpec& spec, Parity parity, const std::map<Site, Value>& data) {
  InitialSurface s(parity);
  for (const auto& [site, v] : data) {
    if (site.first < 1 || site.first > spec.d)
      throw LatticeError("strip data outside 1 <= i <= d");
    s.set(site.first, site.second, mod2(long(site.first) + site.second + int(parity)), v);
  }
  return TField(std::move(s), std::make_shared<StripBoundary>(spec));
}

Value evolve_strip(int d, const InitialSurface& data, const Point& p) {
  StripSpec spec;
  spec.d = d;
  TField f(data, std::make_shared<StripBoundary>(spec));
  return f.evolve_to(p);
}

// ---- walls ------------------------------------------------------------------

std::optional<Value> LeftwardEvolution::at(int i, int j, int k) {
  const Kind kind = field_.kind();
  if (i == 0 || i == d_ + 1) return Value::constant(kind, 1);
  if (i < 0 || i > d_ + 1) return Value::constant(kind, 0);
  if (j >= 0) return field_(i, j, k);
  if (auto it = memo_.find({i, j, k}); it != memo_.end()) return it->second;
  std::optional<Value> out;
  auto up = at(i, j + 1, k + 1), down = at(i, j + 1, k - 1);
  auto right = at(i + 1, j + 1, k), left = at(i - 1, j + 1, k);
  auto den = at(i, j + 2, k);
  if (up && down && right && left && den && !den->is_zero())
    out = (*up * *down - *right * *left) / *den;
  memo_.emplace(Point{i, j, k}, out);
  return out;
}

Report verify_wall_zeros(int d, TField& field, const WallWindow& w) {
  Report rep;
  rep.title = "wall zeros (d=" + std::to_string(d) + ")";
  WallExtension ext(d, field);
  LeftwardEvolution left(d, field);
  CheckBuilder ones("T_{i,0,k} = 1", "wall row");
  CheckBuilder zeros("T_{i,-j,k} = 0 for 1 <= j <= d", "zero window");
  CheckBuilder direct("T_{i,-j,k} = 0 for 1 <= j <= d (direct leftward evolution)",
                      "zero window, leftward evolution");
  const Parity par = field.parity();
  for (int k = w.kmin; k <= w.kmax; ++k)
    for (int i = 1; i <= d; ++i) {
      if (on(par, i, 0, k)) ones.expect(ext.t(i, 0, k).is_one(), pt(i, 0, k));
      for (int j = 1; j <= d; ++j) {
        if (!on(par, i, -j, k)) continue;
        zeros.expect(ext.t(i, -j, k).is_zero(), pt(i, -j, k));
        if (auto v = left.at(i, -j, k)) direct.expect(v->is_zero(), pt(i, -j, k));
        else direct.skip("zero denominator in leftward evolution");
      }
    }
  rep.checks.push_back(ones.finish());
  rep.checks.push_back(zeros.finish());
  rep.checks.push_back(direct.finish());
  return rep;
}

Report verify_mirror(int d, TField& field, const WallWindow& w) {
  Report rep;
  rep.title = "mirror (d=" + std::to_string(d) + ")";
  WallExtension ext(d, field);
  LeftwardEvolution left(d, field);
  CheckBuilder det("T_{i,j,k} = det M^{(i)}_{j,k} on the extended sequence",
                   "window determinant");
  CheckBuilder mir("T_{i,j,k} = (-1)^{di} T_{d+1-i,-j-d-1,k}", "mirror");
  CheckBuilder direct("mirror via direct leftward evolution", "mirror, leftward evolution");
  const Parity par = field.parity();
  for (int k = w.kmin; k <= w.kmax; ++k)
    for (int i = 1; i <= d; ++i)
      for (int j = 0; j <= w.jmax; ++j) {
        if (!on(par, i, j, k)) continue;
        const Value& t = field(i, j, k);
        const int sign = mod2(long(d) * i) == 0 ? 1 : -1;
        const int ii = d + 1 - i, jj = -j - d - 1;
        if (j >= 1) det.expect(ext.t(i, j, k) == t, pt(i, j, k));
        Value img = ext.t(ii, jj, k);
        mir.expect(t == (sign == 1 ? img : -img), pt(i, j, k));
        if (auto v = left.at(ii, jj, k)) direct.expect(t == (sign == 1 ? *v : -*v), pt(i, j, k));
        else direct.skip("zero denominator in leftward evolution");
      }
  rep.checks.push_back(det.finish());
  rep.checks.push_back(mir.finish());
  rep.checks.push_back(direct.finish());
  return rep;
}

Report check_wall_compatibility(int d, const std::map<Site, Value>& data, int kmax) {
  Report rep;
  rep.title = "wall compatibility (d=" + std::to_string(d) + ")";
  std::map<Site, Value> full = data;
  const Kind kind = data.empty() ? Kind::Rational : data.begin()->second.kind();
  for (int i = 1; i <= d; ++i) full[{i, 0}] = Value::constant(kind, 1);
  StripSpec spec;
  spec.d = d;
  spec.zero_beyond_wall = true;
  TField f = make_strip_field(spec, Parity::Even, full);
  CheckBuilder cb("ones at j=0 on the initial surface persist: T_{i,0,k} = 1", "wall compatibility");
  for (int i = 1; i <= d; ++i)
    for (int k = mod2(i); k <= kmax; k += 2) cb.expect(f(i, 0, k).is_one(), pt(i, 0, k));
  rep.checks.push_back(cb.finish());
  return rep;
}

// ---- tube -------------------------------------------------------------------

TField evolve_tube(int d, int ell, const std::vector<std::vector<Value>>& init, int kmin,
                   int kmax) {
  if (d < 1 || ell < 1) throw LatticeError("tube needs d >= 1 and ell >= 1");
  if (int(init.size()) != d) throw LatticeError("tube grid must have d rows");
  std::map<Site, Value> data;
  for (int i = 1; i <= d; ++i) {
    if (int(init[i - 1].size()) != ell) throw LatticeError("tube grid rows must have ell entries");
    for (int j = 1; j <= ell; ++j) {
      const Value& v = init[i - 1][j - 1];
      if (v.is_zero()) throw LatticeError("degenerate initial data");
      data.emplace(Site{i, j}, v);
    }
  }
  StripSpec spec;
  spec.d = d;
  spec.wall_at_zero = true;
  spec.second_wall = ell;
  TField f = make_strip_field(spec, Parity::Even, data);
  for (int k = kmin; k <= kmax; ++k)
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= ell; ++j)
        if (on(Parity::Even, i, j, k)) f(i, j, k);
  return f;
}

namespace {

int default_levels(int d, int ell, const ZamolodchikovOptions& opt) {
  return opt.levels > 0 ? opt.levels : 2 * zamolodchikov_period(d, ell) + 2;
}

}  // namespace

Report check_zamolodchikov(int d, int ell, TField& f, const ZamolodchikovOptions& opt) {
  Report rep;
  const int p = zamolodchikov_period(d, ell);
  rep.title = "Zamolodchikov periodicity (d=" + std::to_string(d) + ", ell=" +
              std::to_string(ell) + ", p=" + std::to_string(p) + ")";
  CheckBuilder half("T_{i,j,k+p} = T_{d+1-i,ell+1-j,k}", "half-period involution");
  CheckBuilder full("T_{i,j,k+2p} = T_{i,j,k}", "full period");
  CheckBuilder pos("tube values are positive", "positivity");
  const int levels = default_levels(d, ell, opt);
  for (int k = opt.k0; k < opt.k0 + levels; ++k)
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= ell; ++j) {
        if (on(Parity::Even, i, j, k + p))
          half.expect(f(i, j, k + p) == f(d + 1 - i, ell + 1 - j, k), pt(i, j, k));
        if (on(Parity::Even, i, j, k)) {
          full.expect(f(i, j, k + 2 * p) == f(i, j, k), pt(i, j, k));
          const Value& v = f(i, j, k);
          pos.expect(v.kind() == Kind::Rational && v.rational() > 0, pt(i, j, k));
        }
      }
  rep.checks.push_back(half.finish());
  rep.checks.push_back(full.finish());
  if (f.kind() == Kind::Rational) rep.checks.push_back(pos.finish());
  auto& per = rep.add("minimal observed period divides 2p", "full period");
  const int P = observed_period(d, ell, f, opt);
  per.cases = 1;
  per.status = (P > 0 && (2 * p) % P == 0) ? Status::Pass : Status::Fail;
  per.note = "observed " + std::to_string(P) + ", bound 2p=" + std::to_string(2 * p);
  return rep;
}

int observed_period(int d, int ell, TField& f, const ZamolodchikovOptions& opt) {
  const int p2 = 2 * zamolodchikov_period(d, ell);
  const int levels = default_levels(d, ell, opt);
  for (int P = 2; P <= p2; P += 2) {
    if (p2 % P) continue;
    bool ok = true;
    for (int k = opt.k0; ok && k < opt.k0 + levels; ++k)
      for (int i = 1; ok && i <= d; ++i)
        for (int j = 1; ok && j <= ell; ++j)
          if (on(Parity::Even, i, j, k)) ok = f(i, j, k + P) == f(i, j, k);
    if (ok) return P;
  }
  return 0;
}

}  // namespace octa
