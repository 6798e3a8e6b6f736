#include "eqfix/qmatrix.hpp"

#include <utility>

namespace eqfix {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Rat QMat::trace() const {
  if (!is_square()) throw InputError("trace of a non-square matrix");
  Rat t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

QMat operator*(const QMat& a, const QMat& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
  QMat out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

QMat operator+(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sum shape mismatch");
  QMat out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

QMat operator-(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix difference shape mismatch");
  QMat out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
  return out;
}

QMat operator*(const Rat& s, const QMat& a) {
  QMat out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = s * a.at(i, j);
  return out;
}

Rat det(const QMat& a) {
  if (!a.is_square()) throw InputError("determinant of a non-square matrix");
  int n = a.rows();
  if (n == 0) return 1;

  // Scale each row to integers, remembering the factor pulled out.
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  Rat scale = 1;
  for (int i = 0; i < n; ++i) {
    Int common = 1;
    for (int j = 0; j < n; ++j) common = lcm(common, a.at(i, j).get_den());
    scale /= Rat(common);
    for (int j = 0; j < n; ++j) {
      Rat entry = Rat(common) * a.at(i, j);
      m[i][j] = entry.get_num();
    }
  }

  // Bareiss: every division below is exact.
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * scale * Rat(m[n - 1][n - 1]);
}

ColumnSpace column_space(const QMat& a) {
  // Column reduce: run Gauss-Jordan on the columns directly.
  int rows = a.rows(), cols = a.cols();
  std::vector<std::vector<Rat>> col(cols, std::vector<Rat>(rows));
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) col[j][i] = a.at(i, j);

  std::vector<int> pivot_rows;
  int next = 0;
  for (int r = 0; r < rows && next < cols; ++r) {
    int p = -1;
    for (int j = next; j < cols; ++j)
      if (col[j][r] != 0) {
        p = j;
        break;
      }
    if (p < 0) continue;
    std::swap(col[next], col[p]);
    Rat inv = 1 / col[next][r];
    for (int i = 0; i < rows; ++i) col[next][i] *= inv;
    for (int j = 0; j < cols; ++j) {
      if (j == next || col[j][r] == 0) continue;
      Rat f = col[j][r];
      for (int i = 0; i < rows; ++i) col[j][i] -= f * col[next][i];
    }
    pivot_rows.push_back(r);
    ++next;
  }

  ColumnSpace out;
  out.pivot_rows = pivot_rows;
  out.basis = QMat(rows, next);
  for (int j = 0; j < next; ++j)
    for (int i = 0; i < rows; ++i) out.basis.at(i, j) = col[j][i];
  return out;
}

std::vector<Rat> coords_in_basis(const ColumnSpace& space, const std::vector<Rat>& v) {
  int rows = space.basis.rows();
  if (static_cast<int>(v.size()) != rows) throw InputError("vector length does not match basis");
  int dim = space.basis.cols();
  std::vector<Rat> coords(dim);
  for (int j = 0; j < dim; ++j) coords[j] = v[space.pivot_rows[j]];
  for (int i = 0; i < rows; ++i) {
    Rat rebuilt = 0;
    for (int j = 0; j < dim; ++j) rebuilt += coords[j] * space.basis.at(i, j);
    if (rebuilt != v[i]) throw PreconditionError("vector is outside the spanned subspace");
  }
  return coords;
}

}  // namespace eqfix
