#include "siltwb/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace siltwb {

Matrix::Matrix(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      data_((size_t)rows * cols, Scalar(f, 0)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(f, 1);
  return m;
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
  int r = (int)rows.size();
  int c = r == 0 ? 0 : (int)rows[0].size();
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if ((int)rows[i].size() != c) throw std::invalid_argument("ragged matrix literal");
    for (int j = 0; j < c; ++j) m.at(i, j) = Scalar(f, rows[i][j]);
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.at(i, j) = r.at(i, j) + a * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix r(field_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix r(field_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(field_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
  return true;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if ((int)v.size() != cols_) throw std::invalid_argument("apply: shape mismatch");
  std::vector<Scalar> r(rows_, Scalar(field_, 0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] = r[i] + at(i, j) * v[j];
  return r;
}

Matrix::Echelon Matrix::echelon() const {
  Echelon e{*this, {}};
  Matrix& m = e.rref;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int piv = -1;
    for (int i = row; i < rows_; ++i)
      if (!m.at(i, col).is_zero()) { piv = i; break; }  // first-nonzero pivoting
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(row, j));
    Scalar inv = m.at(row, col).inverse();
    for (int j = col; j < cols_; ++j) m.at(row, j) = m.at(row, j) * inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (int j = col; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

int Matrix::rank() const { return (int)echelon().pivots.size(); }

std::vector<std::vector<Scalar>> Matrix::kernel_basis() const {
  Echelon e = echelon();
  std::vector<bool> is_pivot(cols_, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_, Scalar(field_, 0));
    v[free] = Scalar(field_, 1);
    for (size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = -e.rref.at((int)r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix::Cokernel Matrix::cokernel_basis() const {
  // left null space of M = kernel of M^T
  auto left = transpose().kernel_basis();
  Matrix proj(field_, (int)left.size(), rows_);
  for (int i = 0; i < (int)left.size(); ++i)
    for (int j = 0; j < rows_; ++j) proj.at(i, j) = left[i][j];
  return Cokernel{proj, (int)left.size()};
}

std::optional<std::vector<Scalar>> Matrix::solve(const std::vector<Scalar>& b) const {
  if ((int)b.size() != rows_) throw std::invalid_argument("solve: shape mismatch");
  Matrix aug(field_, rows_, cols_ + 1);
  aug.set_block(0, 0, *this);
  for (int i = 0; i < rows_; ++i) aug.at(i, cols_) = b[i];
  Echelon e = aug.echelon();
  std::vector<Scalar> x(cols_, Scalar(field_, 0));
  for (size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == cols_) return std::nullopt;  // inconsistent
    x[e.pivots[r]] = e.rref.at((int)r, cols_);
  }
  return x;
}

std::optional<Matrix> Matrix::solve_matrix(const Matrix& B) const {
  if (B.rows_ != rows_) throw std::invalid_argument("solve_matrix: shape mismatch");
  Matrix X(field_, cols_, B.cols_);
  for (int j = 0; j < B.cols_; ++j) {
    auto x = solve(column_of(B, j));
    if (!x) return std::nullopt;
    for (int i = 0; i < cols_; ++i) X.at(i, j) = (*x)[i];
  }
  return X;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  auto inv = solve_matrix(identity(field_, rows_));
  if (!inv) return std::nullopt;
  if (!((*inv) * (*this)).is_identity()) return std::nullopt;  // rank deficient
  return inv;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hstack shape mismatch");
  Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
  r.set_block(0, 0, a);
  r.set_block(0, a.cols_, b);
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("vstack shape mismatch");
  Matrix r(a.field_, a.rows_ + b.rows_, a.cols_);
  r.set_block(0, 0, a);
  r.set_block(a.rows_, 0, b);
  return r;
}

void Matrix::set_block(int i0, int j0, const Matrix& b) {
  if (i0 + b.rows_ > rows_ || j0 + b.cols_ > cols_) throw std::invalid_argument("set_block out of range");
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

Matrix Matrix::block(int i0, int j0, int r, int c) const {
  if (i0 + r > rows_ || j0 + c > cols_) throw std::invalid_argument("block out of range");
  Matrix b(field_, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) b.at(i, j) = at(i0 + i, j0 + j);
  return b;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

std::vector<Scalar> column_of(const Matrix& m, int j) {
  std::vector<Scalar> v;
  v.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) v.push_back(m.at(i, j));
  return v;
}

Matrix columns_to_matrix(const Field& f, int rows, const std::vector<std::vector<Scalar>>& cols) {
  Matrix m(f, rows, (int)cols.size());
  for (int j = 0; j < (int)cols.size(); ++j)
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  return m;
}

}  // namespace siltwb
