#ifndef ISGAL_MATRIX_HPP
#define ISGAL_MATRIX_HPP

#include <optional>
#include <vector>

#include "isgal/scalar.hpp"

namespace isgal {

/// Dense matrix over an exact field. Sizes here are tiny (tens of rows),
/// so plain Gaussian elimination with exact arithmetic is enough.
class Matrix {
 public:
  Matrix(const Field& f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  void set(int r, int c, const Scalar& v) { at(r, c) = v; }

  int rank() const;

  /// One solution of A x = b, or nullopt if inconsistent.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;
  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;

 private:
  Field field_;
  int rows_, cols_;
  std::vector<Scalar> a_;
};

/// Dimension of the span of a set of coordinate vectors.
int span_rank(const Field& f, const std::vector<std::vector<Scalar>>& vectors);

}  // namespace isgal

#endif
