#include "octa/lattice.hpp"

#include <sstream>
#include <string>

namespace octa {

namespace {

std::string fmt(const Point& p) {
  std::ostringstream os;
  os << "(" << p.i << "," << p.j << "," << p.k << ")";
  return os.str();
}

}  // namespace

// ---- InitialSurface ---------------------------------------------------------

InitialSurface InitialSurface::flat(Parity parity, int imin, int imax, int jmin, int jmax,
                                    const std::function<Value(int, int)>& value) {
  InitialSurface s(parity);
  for (int i = imin; i <= imax; ++i)
    for (int j = jmin; j <= jmax; ++j)
      s.set(i, j, mod2(long(i) + j + static_cast<int>(parity)), value(i, j));
  return s;
}

InitialSurface InitialSurface::flat_symbolic(Parity parity, int radius) {
  return flat(parity, -radius, radius, -radius, radius,
              [](int i, int j) { return Value::symbol(i, j); });
}

void InitialSurface::set(int i, int j, int k, const Value& v) {
  if (parity_of({i, j, k}) != static_cast<int>(parity_))
    throw LatticeError("parity violation at " + fmt({i, j, k}));
  if (!cells_.empty() && cells_.begin()->second.value.kind() != v.kind())
    throw AlgebraError("mixed coefficient kinds");
  cells_.insert_or_assign({i, j}, Cell{k, v});
}

const InitialSurface::Cell& InitialSurface::at(int i, int j) const {
  auto it = cells_.find({i, j});
  if (it == cells_.end())
    throw LatticeError("unresolved point: site (" + std::to_string(i) + "," + std::to_string(j) +
                       ") is not on the initial surface");
  return it->second;
}

Kind InitialSurface::kind() const {
  return cells_.empty() ? Kind::Rational : cells_.begin()->second.value.kind();
}

void InitialSurface::validate() const {
  for (const auto& [s, c] : cells_) {
    for (auto [di, dj] : {std::pair{1, 0}, std::pair{0, 1}}) {
      auto it = cells_.find({s.first + di, s.second + dj});
      if (it == cells_.end()) continue;
      if (std::abs(it->second.k - c.k) != 1)
        throw LatticeError("invalid surface: heights at (" + std::to_string(s.first) + "," +
                           std::to_string(s.second) + ") and a neighbour differ by " +
                           std::to_string(std::abs(it->second.k - c.k)));
    }
  }
}

// ---- TField -----------------------------------------------------------------

TField::TField(InitialSurface surface, std::shared_ptr<const Boundary> boundary, int max_span)
    : surface_(std::move(surface)),
      boundary_(std::move(boundary)),
      kind_(surface_.kind()),
      max_span_(max_span) {
  surface_.validate();
}

const Value& TField::evolve_to(const Point& p) {
  if (parity_of(p) != static_cast<int>(parity()))
    throw LatticeError("parity violation at " + fmt(p));
  if (boundary_) {
    if (auto it = synth_.find(p); it != synth_.end()) return it->second;
    if (auto v = boundary_->synthesize(p, kind_)) return synth_.emplace(p, *v).first->second;
  }
  if (auto it = memo_.find(p); it != memo_.end()) return it->second;
  return compute(p);
}

const Value& TField::compute(const Point& p) {
  if (!surface_.contains(p.i, p.j))
    throw LatticeError("unresolved point " + fmt(p) + ": column not on the initial surface");
  const auto& cell = surface_.at(p.i, p.j);
  if (p.k == cell.k) return cell.value;
  if (std::abs(p.k - cell.k) > max_span_) throw LatticeError("window exceeded at " + fmt(p));
  Value v = p.k > cell.k ? octahedron_step(*this, {p.i, p.j, p.k - 1})
                         : octahedron_step_down(*this, {p.i, p.j, p.k + 1});
  return memo_.emplace(p, std::move(v)).first->second;
}

Value octahedron_step(TField& f, const Point& p) {
  const auto [i, j, k] = p;
  Value rhs = f(i, j + 1, k) * f(i, j - 1, k) + f(i + 1, j, k) * f(i - 1, j, k);
  const Value& below = f(i, j, k - 1);
  if (below.is_zero()) throw LatticeError("degenerate initial data: T" + fmt({i, j, k - 1}) + " = 0");
  return rhs / below;
}

Value octahedron_step_down(TField& f, const Point& p) {
  const auto [i, j, k] = p;
  Value rhs = f(i, j + 1, k) * f(i, j - 1, k) + f(i + 1, j, k) * f(i - 1, j, k);
  const Value& above = f(i, j, k + 1);
  if (above.is_zero()) throw LatticeError("degenerate initial data: T" + fmt({i, j, k + 1}) + " = 0");
  return rhs / above;
}

InitialSurface cluster_mutation(const InitialSurface& s, Site site) {
  auto [i, j] = site;
  const Site nbrs[] = {{i, j + 1}, {i, j - 1}, {i + 1, j}, {i - 1, j}};
  for (const auto& n : nbrs)
    if (!s.contains(n.first, n.second))
      throw LatticeError("vertex not two-in-two-out: missing neighbour");
  int h = s.height(i, j);
  int up = 0, down = 0;
  for (const auto& n : nbrs) (s.height(n.first, n.second) > h ? up : down)++;
  if (up != 4 && down != 4) throw LatticeError("vertex not two-in-two-out");
  const Value& x = s.value(i, j);
  if (x.is_zero()) throw LatticeError("degenerate initial data");
  Value nv = (s.value(i, j + 1) * s.value(i, j - 1) + s.value(i + 1, j) * s.value(i - 1, j)) / x;
  InitialSurface out = s;
  out.set(i, j, up == 4 ? h + 2 : h - 2, nv);
  return out;
}

int b_matrix_entry(Site a, Site b) {
  auto [i, j] = a;
  auto [i2, j2] = b;
  int vertical = (i == i2 && std::abs(j - j2) == 1) ? 1 : 0;
  int horizontal = (j == j2 && std::abs(i - i2) == 1) ? 1 : 0;
  int sign = mod2(long(i) + j) == 0 ? 1 : -1;
  return sign * (vertical - horizontal);
}

// ---- Y ----------------------------------------------------------------------

YRatio y_ratio_from_t(TField& f, const Point& p) {
  const auto [i, j, k] = p;
  Value num = f(i + 1, j, k) * f(i - 1, j, k);
  Value den = f(i, j + 1, k) * f(i, j - 1, k);
  if (den.is_zero()) throw LatticeError("degenerate: zero denominator in Y" + fmt(p));
  if (den.kind() == Kind::Rational) return {num / den, Value::constant(Kind::Rational, 1)};
  try {
    return {num / den, Value::constant(Kind::Laurent, 1)};
  } catch (const AlgebraError&) {
    return {num, den};
  }
}

Value y_from_t(TField& f, const Point& p) {
  YRatio r = y_ratio_from_t(f, p);
  if (!r.den.is_one()) throw AlgebraError("non-Laurent quotient");
  return r.num;
}

Value y_system_rhs(const Value& y_ip, const Value& y_im, const Value& y_jp, const Value& y_jm) {
  Value one = Value::constant(y_ip.kind(), 1);
  // 1 + 1/y = (1+y)/y, so the quotient is (1+y_ip)(1+y_im) y_jp y_jm / ((1+y_jp)(1+y_jm)).
  Value den = (one + y_jp) * (one + y_jm);
  if (y_jp.is_zero() || y_jm.is_zero() || den.is_zero()) throw LatticeError("singular Y-step");
  return (one + y_ip) * (one + y_im) * y_jp * y_jm / den;
}

YField::YField(Parity parity, int k_lo, Source initial)
    : parity_(parity), k_lo_(k_lo), initial_(std::move(initial)) {}

const Value& YField::at(const Point& p) {
  if (parity_of(p) != static_cast<int>(parity_))
    throw LatticeError("parity violation at " + fmt(p));
  if (auto it = memo_.find(p); it != memo_.end()) return it->second;
  Value v;
  if (p.k == k_lo_ || p.k == k_lo_ + 1) {
    auto init = initial_(p);
    if (!init) throw LatticeError("unresolved point " + fmt(p));
    v = *init;
  } else if (p.k > k_lo_ + 1) {
    v = y_step(*this, {p.i, p.j, p.k - 1});
  } else {
    const auto [i, j, k] = p;
    Value rhs = y_system_rhs(at({i + 1, j, k + 1}), at({i - 1, j, k + 1}), at({i, j + 1, k + 1}),
                             at({i, j - 1, k + 1}));
    const Value& above = at({i, j, k + 2});
    if (above.is_zero()) throw LatticeError("singular Y-step");
    v = rhs / above;
  }
  return memo_.emplace(p, std::move(v)).first->second;
}

Value y_step(YField& y, const Point& p) {
  const auto [i, j, k] = p;
  Value rhs = y_system_rhs(y(i + 1, j, k), y(i - 1, j, k), y(i, j + 1, k), y(i, j - 1, k));
  const Value& below = y(i, j, k - 1);
  if (below.is_zero()) throw LatticeError("singular Y-step");
  return rhs / below;
}

}  // namespace octa
