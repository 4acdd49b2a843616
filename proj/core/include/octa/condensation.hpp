#pragma once

// Dodgson condensation, the window matrices built from x_{j,k} = T_{1,j,k},
// linear-recursion coefficients from their kernels, and the lifted vectors
// V_a.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "octa/boundary.hpp"
#include "octa/lattice.hpp"
#include "octa/matrix.hpp"
#include "octa/report.hpp"

namespace octa {

struct CondensationTrace {
  std::vector<Matrix> stages;  // connected minors of size n, n-1, ..., 1
  bool used_fallback = false;  // a zero interior minor forced elimination
  Value det;
};

CondensationTrace dodgson_condense(const Matrix& m);
Value dodgson_determinant(const Matrix& m);

// x(j,k); callers guarantee the parity of the requested points.
using XSource = std::function<Value(int, int)>;

// Entry (r,c) = x_{j-r+c, k-s+1+r+c}: column c has index sum j+k-s+1+2c,
// row r has index difference j-k+s-1-2r.
Matrix build_window_matrix(const XSource& x, int s, int j, int k);

enum class Direction { Sum, Difference };

struct RecursionCoefficients {
  Direction direction = Direction::Sum;
  int anchor = 0;            // j+k (sum) or j-k (difference) of the first term
  std::vector<Value> coeffs; // a_0 = 1, ..., a_{d+1}
};

// Sum direction: right kernel of the (d+2)-window at (J, K) with
// K = anchor - J + d + 1; the relation reads
//   sum_c a_c x_{j+c,k+c} = 0 whenever j+k = anchor.
// Difference direction: left kernel of the window with
// K = J + d + 1 - anchor; the relation reads
//   sum_r a_r x_{j-r,k+r} = 0 whenever j-k = anchor.
// Coefficients are signed first-row (first-column) cofactors, normalized so
// a_0 = 1. Throws "non-generic window" unless the kernel is a line.
RecursionCoefficients recursion_coefficients(const XSource& x, int d, Direction dir, int anchor,
                                             int J);

// c_i = (-1)^i a_i.
std::vector<Value> signed_coefficients(const RecursionCoefficients& rc);

// Value of the relation sum a_c x(...) starting at (j,k); zero when it holds.
Value recursion_residual(const XSource& x, const RecursionCoefficients& rc, int j, int k);

// Comparison of c_i(s) with T_{d+1-i,1,(s-1)+d+i+shift} for shift 0 (the
// literal statement) and shift 2; the shift-2 identity is the asserted one.
struct CoefficientIdentity {
  Report report;
  bool shift0_holds = true;
  bool shift2_holds = true;
};
CoefficientIdentity verify_coefficient_identity(int d, TField& walled,
                                                const std::vector<int>& anchors);

// The same coefficients must appear at every window with the same anchor.
Report verify_direction_independence(const XSource& x, int d, Direction dir, int anchor,
                                     const std::vector<int>& Js);

// Every row (column) of the window is annihilated by the coefficients.
Report verify_row_independence(const XSource& x, int d, Direction dir, int anchor, int J);

// x on the half-strip j >= 1 of a walled strip, extended to all j by the
// (d+2)-term recursion with interior coefficients; T_{i,j,k} on the extension
// is the i x i window determinant.
class WallExtension {
 public:
  WallExtension(int d, TField& walled, int interior_J = -1);
  const Value& x(int j, int k);
  Value t(int i, int j, int k);
  const RecursionCoefficients& coefficients(int s);
  int d() const { return d_; }

 private:
  int d_, J_;
  TField& field_;
  std::map<int, RecursionCoefficients> coeffs_;
  std::map<std::pair<int, int>, Value> ext_;
};

// Two-wall version: tube values for 1 <= j <= ell, ones on both walls, zero
// windows of width d beyond each wall, the recursion elsewhere.
class TubeExtension {
 public:
  TubeExtension(int d, int ell, TField& tube);
  const Value& x(int j, int k);
  const RecursionCoefficients& coefficients(int s);
  int d() const { return d_; }
  int ell() const { return ell_; }

 private:
  std::optional<Value> base(int j, int k);
  int d_, ell_;
  TField& tube_;
  std::map<int, RecursionCoefficients> coeffs_;
  std::map<std::pair<int, int>, Value> ext_;
};

// V_a = (x_{a-r, c0+a+r})_{r=0..d}.
using LiftedVector = std::vector<Value>;
LiftedVector lifted_vector(const XSource& x, int d, int a, int c0);

struct LiftOptions {
  int a_min = -3, a_max = 3;
  int c0 = 1;                      // parity offset of the lift
  std::optional<int> ell;          // two walls: period checks with p = ell+d+2
};

// (1) the recursion 0 = V_a + sum (-1)^i alpha_{a,i} V_{a+i} - (-1)^d V_{a+d+1}
// holds with the extracted coefficients, (2) det(V_a..V_{a+d}) = 1, and with
// two walls (3) alpha periodic with period p and V_{a+p} = (-1)^d V_a,
// (4) p*d - d(d+2) = ell*d free coefficients.
Report verify_lift_recursion(const XSource& x, int d, const LiftOptions& opt,
                             const std::function<RecursionCoefficients(int)>& coeffs_at_sum);

}  // namespace octa
