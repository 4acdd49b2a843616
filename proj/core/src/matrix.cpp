#include "octa/matrix.hpp"

#include <algorithm>
#include <utility>

namespace octa {

Matrix identity_matrix(std::size_t n, Kind kind) {
  Matrix m(n, std::vector<Value>(n, Value::constant(kind, 0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Value::constant(kind, 1);
  return m;
}

Value bareiss_determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return Value(Rational(1));
  const Kind kind = m[0][0].kind();
  Value prev = Value::constant(kind, 1);
  bool negate = false;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    if (m[c][c].is_zero()) {
      std::size_t r = c + 1;
      while (r < n && m[r][c].is_zero()) ++r;
      if (r == n) return Value::constant(kind, 0);
      std::swap(m[c], m[r]);
      negate = !negate;
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      for (std::size_t cc = c + 1; cc < n; ++cc)
        m[r][cc] = (m[c][c] * m[r][cc] - m[r][c] * m[c][cc]) / prev;
      m[r][c] = Value::constant(kind, 0);
    }
    prev = m[c][c];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

std::size_t rank(Matrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  const Kind kind = m[0][0].kind();
  Value prev = Value::constant(kind, 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t cc = c + 1; cc < cols; ++cc)
        m[i][cc] = (m[r][c] * m[i][cc] - m[i][c] * m[r][cc]) / prev;
      m[i][c] = Value::constant(kind, 0);
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

Matrix submatrix_without(const Matrix& m, const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) {
  Matrix out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (std::binary_search(rows.begin(), rows.end(), i)) continue;
    std::vector<Value> row;
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (!std::binary_search(cols.begin(), cols.end(), j)) row.push_back(m[i][j]);
    out.push_back(std::move(row));
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  if (m.empty()) return m;
  Matrix t(m[0].size(), std::vector<Value>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

}  // namespace octa
