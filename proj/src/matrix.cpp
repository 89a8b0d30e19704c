#include "isgal/matrix.hpp"

namespace isgal {

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<int> eliminate(std::vector<std::vector<Scalar>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int r = row; r < rows; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[row], m[piv]);
    const Scalar lead = m[row][col];
    for (int c = col; c < cols; ++c) m[row][c] = m[row][c] / lead;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Scalar factor = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] = m[r][c] - factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int Matrix::rank() const {
  std::vector<std::vector<Scalar>> m(rows_, std::vector<Scalar>(cols_, Scalar::zero(field_)));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m[r][c] = at(r, c);
  return static_cast<int>(eliminate(m).size());
}

std::optional<std::vector<Scalar>> Matrix::solve(const std::vector<Scalar>& b) const {
  if (static_cast<int>(b.size()) != rows_) throw Error("Matrix::solve: size mismatch");
  std::vector<std::vector<Scalar>> m(rows_, std::vector<Scalar>(cols_ + 1, Scalar::zero(field_)));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) m[r][c] = at(r, c);
    m[r][cols_] = b[r];
  }
  const std::vector<int> pivots = eliminate(m);
  for (int c : pivots)
    if (c == cols_) return std::nullopt;  // pivot in augmented column: inconsistent
  std::vector<Scalar> x(cols_, Scalar::zero(field_));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols_];
  return x;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw Error("Matrix::apply: size mismatch");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero()) out[r] += at(r, c) * x[c];
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("Matrix::operator*: size mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (int c = 0; c < o.cols_; ++c) out.at(r, c) += at(r, k) * o.at(k, c);
    }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != o.at(r, c)) return false;
  return true;
}

int span_rank(const Field& f, const std::vector<std::vector<Scalar>>& vectors) {
  if (vectors.empty()) return 0;
  std::vector<std::vector<Scalar>> m = vectors;
  (void)f;
  return static_cast<int>(eliminate(m).size());
}

}  // namespace isgal
