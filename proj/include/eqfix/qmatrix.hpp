#ifndef EQFIX_QMATRIX_HPP
#define EQFIX_QMATRIX_HPP

#include <vector>

#include "eqfix/rational.hpp"

namespace eqfix {

// Dense matrix over the rationals, row major. Small sizes only; everything is
// exact, nothing here ever rounds.
class QMat {
 public:
  QMat() : rows_(0), cols_(0) {}
  QMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw InputError("matrix with negative size");
  }

  static QMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_square() const { return rows_ == cols_; }
  Rat trace() const;

  friend bool operator==(const QMat& a, const QMat& b) = default;

 private:
  int rows_, cols_;
  std::vector<Rat> data_;
};

QMat operator*(const QMat& a, const QMat& b);
QMat operator+(const QMat& a, const QMat& b);
QMat operator-(const QMat& a, const QMat& b);
QMat operator*(const Rat& s, const QMat& a);

// Exact determinant: denominators are cleared row by row, then fraction free
// Bareiss elimination runs over the integers. The empty 0x0 matrix has
// determinant 1.
Rat det(const QMat& a);

// A basis of the column space in reduced column echelon form: column j of
// `basis` has a 1 in row pivot_rows[j] and zeros in every other pivot row.
struct ColumnSpace {
  QMat basis;
  std::vector<int> pivot_rows;

  int dimension() const { return basis.cols(); }
};

ColumnSpace column_space(const QMat& a);

// Coordinates of v in the echelon basis (read off the pivot rows); throws
// PreconditionError if v is outside the span.
std::vector<Rat> coords_in_basis(const ColumnSpace& space, const std::vector<Rat>& v);

}  // namespace eqfix

#endif
