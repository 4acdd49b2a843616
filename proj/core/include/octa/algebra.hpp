#pragma once

// Exact coefficient rings: GMP rationals and sparse integer Laurent
// polynomials in variables x_{i,j}, unified behind `Value`.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace octa {

using Integer = mpz_class;
using Rational = mpq_class;

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
bool is_canonical(const Rational& q);
Rational pow(const Rational& base, long exponent);

// Variable x_{i,j} is identified by (i,j); ordered by i, then j.
using Var = std::pair<int, int>;

class Monomial {
 public:
  using Exponents = std::map<Var, int>;

  Monomial() = default;
  static Monomial var(int i, int j, int e = 1);

  const Exponents& exponents() const { return e_; }
  int degree(const Var& v) const;
  bool is_unit() const { return e_.empty(); }

  Monomial inverse() const;
  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  // Canonical (serialization) order: lexicographic on the sorted
  // (i, j, e) sequence.
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  Exponents e_;
};

// Lex term order with x_{i,j} of smaller (i,j) ranked higher; a genuine
// monomial order on exponent vectors, used by exact division.
bool lex_greater(const Monomial& a, const Monomial& b);

class Laurent {
 public:
  using Terms = std::map<Monomial, Integer>;

  Laurent() = default;
  explicit Laurent(const Integer& c);
  static Laurent variable(int i, int j);
  static Laurent term(const Monomial& m, const Integer& c = 1);

  const Terms& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_single_term() const { return t_.size() == 1; }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  Laurent operator-() const;
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent&, const Laurent&) = default;

  Laurent times(const Monomial& m) const;
  Rational evaluate(const std::function<Rational(int, int)>& x) const;

 private:
  void add_term(const Monomial& m, const Integer& c);
  Terms t_;
};

// Quotient q with q*b == a in Z[x^{+-1}]; throws "division by zero" or
// "non-Laurent quotient".
Laurent div_exact(const Laurent& a, const Laurent& b);
bool is_positive(const Laurent& a);
std::string to_string(const Laurent& a);

enum class Kind { Rational, Laurent };

class Value {
 public:
  Value() : v_(Rational(0)) {}
  Value(const Rational& q) : v_(q) {}
  Value(const Laurent& p) : v_(p) {}

  static Value constant(Kind kind, long c);
  static Value symbol(int i, int j) { return Value(Laurent::variable(i, j)); }

  Kind kind() const { return v_.index() == 0 ? Kind::Rational : Kind::Laurent; }
  bool is_zero() const;
  bool is_one() const;
  const Rational& rational() const;
  const Laurent& laurent() const;

  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a, const Value& b);
  friend Value operator*(const Value& a, const Value& b);
  friend Value operator/(const Value& a, const Value& b);
  Value operator-() const;
  Value& operator+=(const Value& b) { return *this = *this + b; }
  Value& operator-=(const Value& b) { return *this = *this - b; }
  Value& operator*=(const Value& b) { return *this = *this * b; }
  friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }

 private:
  std::variant<Rational, Laurent> v_;
};

enum class ArithOp { Add, Sub, Mul };

Value ring_arith(ArithOp op, const Value& a, const Value& b);
Value laurent_div_exact(const Value& a, const Value& b);
bool laurent_is_positive(const Laurent& a);
std::string to_string(const Value& v);

}  // namespace octa
