#include "octa/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace octa {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw AlgebraError("division by zero");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw AlgebraError("empty rational literal");
  auto slash = s.find('/');
  Integer num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = Integer(s, 10);
    } else {
      num = Integer(s.substr(0, slash), 10);
      den = Integer(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw AlgebraError("malformed rational literal '" + s + "'");
  }
  return make_rational(num, den);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_canonical(const Rational& q) {
  if (q.get_den() <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw AlgebraError("division by zero");
    return pow(Rational(1) / base, -exponent);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return make_rational(n, d);
}

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::var(int i, int j, int e) {
  Monomial m;
  if (e != 0) m.e_[{i, j}] = e;
  return m;
}

int Monomial::degree(const Var& v) const {
  auto it = e_.find(v);
  return it == e_.end() ? 0 : it->second;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (auto& [v, e] : m.e_) e = -e;
  return m;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  for (const auto& [v, e] : o.e_) {
    int s = (e_[v] += e);
    if (s == 0) e_.erase(v);
  }
  return *this;
}

bool operator<(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end());
}

bool lex_greater(const Monomial& a, const Monomial& b) {
  auto ia = a.exponents().begin(), ea = a.exponents().end();
  auto ib = b.exponents().begin(), eb = b.exponents().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      if (ia->second != 0) return ia->second > 0;
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      if (ib->second != 0) return ib->second < 0;
      ++ib;
    } else {
      if (ia->second != ib->second) return ia->second > ib->second;
      ++ia;
      ++ib;
    }
  }
  return false;
}

// ---- Laurent ----------------------------------------------------------------

Laurent::Laurent(const Integer& c) {
  if (c != 0) t_[Monomial{}] = c;
}

Laurent Laurent::variable(int i, int j) { return term(Monomial::var(i, j)); }

Laurent Laurent::term(const Monomial& m, const Integer& c) {
  Laurent p;
  if (c != 0) p.t_[m] = c;
  return p;
}

void Laurent::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::times(const Monomial& m) const {
  Laurent r;
  for (const auto& [mm, c] : t_) r.t_.emplace(mm * m, c);
  return r;
}

Rational Laurent::evaluate(const std::function<Rational(int, int)>& x) const {
  Rational sum = 0;
  for (const auto& [m, c] : t_) {
    Rational t = c;
    for (const auto& [v, e] : m.exponents()) t *= pow(x(v.first, v.second), e);
    sum += t;
  }
  return sum;
}

namespace {

// Per-variable minimum exponent over all terms (absent variables count 0).
Monomial min_corner(const Laurent& p) {
  std::map<Var, int> lo;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.exponents()) lo.try_emplace(v, 0);
  for (auto& [v, e] : lo) {
    int best = 0;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
      int d = m.degree(v);
      if (first || d < best) best = d;
      first = false;
    }
    e = best;
  }
  Monomial r;
  for (const auto& [v, e] : lo) r *= Monomial::var(v.first, v.second, e);
  return r;
}

const std::pair<const Monomial, Integer>& leading(const Laurent& p) {
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (lex_greater(it->first, best->first)) best = it;
  return *best;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (const auto& [v, e] : a.exponents())
    if (b.degree(v) < e) return false;
  return true;
}

}  // namespace

Laurent div_exact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw AlgebraError("division by zero");
  if (a.is_zero()) return a;

  if (b.is_single_term()) {
    const auto& [m, c] = *b.terms().begin();
    Monomial inv = m.inverse();
    Laurent q;
    for (const auto& [ma, ca] : a.terms()) {
      if (!mpz_divisible_p(ca.get_mpz_t(), c.get_mpz_t()))
        throw AlgebraError("non-Laurent quotient");
      Integer t;
      mpz_divexact(t.get_mpz_t(), ca.get_mpz_t(), c.get_mpz_t());
      q += Laurent::term(ma * inv, t);
    }
    return q;
  }

  // Shift both operands into the polynomial ring with b not divisible by
  // any variable; then the quotient, if it exists, is a polynomial and the
  // single-divisor division algorithm decides exactness.
  Monomial sa = min_corner(a).inverse(), sb = min_corner(b).inverse();
  Laurent r = a.times(sa);
  Laurent bb = b.times(sb);
  const auto& [lm, lc] = leading(bb);
  Laurent q;
  while (!r.is_zero()) {
    const auto& [rm, rc] = leading(r);
    if (!divides(lm, rm) || !mpz_divisible_p(rc.get_mpz_t(), lc.get_mpz_t()))
      throw AlgebraError("non-Laurent quotient");
    Integer c;
    mpz_divexact(c.get_mpz_t(), rc.get_mpz_t(), lc.get_mpz_t());
    Laurent t = Laurent::term(rm * lm.inverse(), c);
    q += t;
    r -= t * bb;
  }
  return q.times(sa.inverse() * sb);
}

bool is_positive(const Laurent& a) {
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [](const auto& t) { return t.second > 0; });
}

std::string to_string(const Laurent& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    Integer mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool unit = m.is_unit();
    if (mag != 1 || unit) os << mag.get_str();
    bool lead = (mag == 1 && !unit);
    for (const auto& [v, e] : m.exponents()) {
      if (!lead) os << "*";
      lead = false;
      os << "x[" << v.first << "," << v.second << "]";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

// ---- Value ------------------------------------------------------------------

Value Value::constant(Kind kind, long c) {
  if (kind == Kind::Rational) return Value(Rational(c));
  return Value(Laurent(Integer(c)));
}

bool Value::is_zero() const {
  if (kind() == Kind::Rational) return rational() == 0;
  return laurent().is_zero();
}

bool Value::is_one() const {
  if (kind() == Kind::Rational) return rational() == 1;
  return laurent() == Laurent(Integer(1));
}

const Rational& Value::rational() const {
  if (auto p = std::get_if<Rational>(&v_)) return *p;
  throw AlgebraError("mixed coefficient kinds");
}

const Laurent& Value::laurent() const {
  if (auto p = std::get_if<Laurent>(&v_)) return *p;
  throw AlgebraError("mixed coefficient kinds");
}

namespace {
void same_kind(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) throw AlgebraError("mixed coefficient kinds");
}
}  // namespace

Value operator+(const Value& a, const Value& b) {
  same_kind(a, b);
  if (a.kind() == Kind::Rational) return Value(Rational(a.rational() + b.rational()));
  return Value(a.laurent() + b.laurent());
}

Value operator-(const Value& a, const Value& b) {
  same_kind(a, b);
  if (a.kind() == Kind::Rational) return Value(Rational(a.rational() - b.rational()));
  return Value(a.laurent() - b.laurent());
}

Value operator*(const Value& a, const Value& b) {
  same_kind(a, b);
  if (a.kind() == Kind::Rational) return Value(Rational(a.rational() * b.rational()));
  return Value(a.laurent() * b.laurent());
}

Value operator/(const Value& a, const Value& b) { return laurent_div_exact(a, b); }

Value Value::operator-() const {
  if (kind() == Kind::Rational) return Value(Rational(-rational()));
  return Value(-laurent());
}

Value ring_arith(ArithOp op, const Value& a, const Value& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
  }
  throw AlgebraError("unknown ring operation");
}

Value laurent_div_exact(const Value& a, const Value& b) {
  same_kind(a, b);
  if (b.is_zero()) throw AlgebraError("division by zero");
  if (a.kind() == Kind::Rational) return Value(Rational(a.rational() / b.rational()));
  return Value(div_exact(a.laurent(), b.laurent()));
}

bool laurent_is_positive(const Laurent& a) { return is_positive(a); }

std::string to_string(const Value& v) {
  return v.kind() == Kind::Rational ? to_string(v.rational()) : to_string(v.laurent());
}

}  // namespace octa
