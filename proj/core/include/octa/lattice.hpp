#pragma once

// Octahedron relation (T-system) and Y-system on Z^3 with sparse, memoized
// storage.
//
//   T_{i,j,k+1} T_{i,j,k-1} = T_{i,j+1,k} T_{i,j-1,k} + T_{i+1,j,k} T_{i-1,j,k}

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>

#include "octa/algebra.hpp"

namespace octa {

struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Point {
  int i = 0, j = 0, k = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

// Parity of the sublattice hosting the field: i+j+k mod 2.
enum class Parity { Even = 0, Odd = 1 };

inline int mod2(long v) { return static_cast<int>(((v % 2) + 2) % 2); }
inline int parity_of(const Point& p) { return mod2(long(p.i) + p.j + p.k); }
inline long floor_div(long a, long b) {
  long q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

using Site = std::pair<int, int>;

class InitialSurface {
 public:
  struct Cell {
    int k;
    Value value;
  };

  explicit InitialSurface(Parity parity = Parity::Odd) : parity_(parity) {}

  // Flat two-level surface: k(i,j) = (i+j+parity) mod 2 on the rectangle.
  static InitialSurface flat(Parity parity, int imin, int imax, int jmin, int jmax,
                             const std::function<Value(int, int)>& value);
  static InitialSurface flat_symbolic(Parity parity, int radius);

  void set(int i, int j, int k, const Value& v);
  bool contains(int i, int j) const { return cells_.count({i, j}) != 0; }
  const Cell& at(int i, int j) const;
  int height(int i, int j) const { return at(i, j).k; }
  const Value& value(int i, int j) const { return at(i, j).value; }
  const std::map<Site, Cell>& cells() const { return cells_; }
  Parity parity() const { return parity_; }
  Kind kind() const;

  // Throws if neighbouring heights differ by anything but 1.
  void validate() const;

 private:
  Parity parity_;
  std::map<Site, Cell> cells_;
};

// Supplies values the store must never hold (walls, unit rows, zeros).
class Boundary {
 public:
  virtual ~Boundary() = default;
  virtual std::optional<Value> synthesize(const Point& p, Kind kind) const = 0;
};

class TField {
 public:
  explicit TField(InitialSurface surface, std::shared_ptr<const Boundary> boundary = nullptr,
                  int max_span = 64);

  // T at p, evolving forward (k above the surface) or backward (below)
  // with memoization. Throws "window exceeded", "degenerate initial data".
  const Value& evolve_to(const Point& p);
  const Value& operator()(int i, int j, int k) { return evolve_to({i, j, k}); }

  const InitialSurface& surface() const { return surface_; }
  const Boundary* boundary() const { return boundary_.get(); }
  Parity parity() const { return surface_.parity(); }
  Kind kind() const { return kind_; }
  std::size_t cached() const { return memo_.size(); }
  bool is_cached(const Point& p) const { return memo_.count(p) != 0; }

 private:
  const Value& compute(const Point& p);

  InitialSurface surface_;
  std::shared_ptr<const Boundary> boundary_;
  Kind kind_;
  int max_span_;
  std::map<Point, Value> memo_;
  std::map<Point, Value> synth_;  // boundary values, kept apart from the store
};

// T_{i,j,k+1} from the five values around (i,j,k).
Value octahedron_step(TField& field, const Point& p);
// T_{i,j,k-1} from the five values around (i,j,k).
Value octahedron_step_down(TField& field, const Point& p);

InitialSurface cluster_mutation(const InitialSurface& surface, Site site);

int b_matrix_entry(Site a, Site b);

// Y = T_{i+1,j,k} T_{i-1,j,k} / (T_{i,j+1,k} T_{i,j-1,k}) at a point of the
// opposite parity. For Laurent fields the ratio is returned as a pair whose
// denominator is 1 whenever the division is exact.
struct YRatio {
  Value num, den;
};
YRatio y_ratio_from_t(TField& field, const Point& p);
Value y_from_t(TField& field, const Point& p);

class YField {
 public:
  using Source = std::function<std::optional<Value>(const Point&)>;

  // Initial data occupies levels k_lo and k_lo+1; other levels evolve.
  YField(Parity parity, int k_lo, Source initial);

  const Value& at(const Point& p);
  const Value& operator()(int i, int j, int k) { return at({i, j, k}); }
  Parity parity() const { return parity_; }
  int k_lo() const { return k_lo_; }

 private:
  Parity parity_;
  int k_lo_;
  Source initial_;
  std::map<Point, Value> memo_;
};

// Y_{i,j,k+1} from the Y-system at (i,j,k).
Value y_step(YField& y, const Point& p);

// Y-system right-hand side given the four level-k neighbours.
Value y_system_rhs(const Value& y_ip, const Value& y_im, const Value& y_jp, const Value& y_jm);

}  // namespace octa
