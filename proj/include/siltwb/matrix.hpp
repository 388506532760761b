#pragma once

#include <optional>
#include <vector>

#include "siltwb/field.hpp"

namespace siltwb {

/// Dense matrix over the session field.  Zero-dimension matrices are
/// legal and behave as the corresponding zero maps.  All operations are
/// exact; there are no tolerances anywhere.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(const Field& f, int rows, int cols);  // zero-filled
  static Matrix identity(const Field& f, int n);
  static Matrix from_ints(const Field& f, const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(int i, int j) { return data_[(size_t)i * cols_ + j]; }
  const Scalar& at(int i, int j) const { return data_[(size_t)i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;
  bool is_identity() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // M v

  /// Row echelon data; rank is pivots.size().
  struct Echelon;
  Echelon echelon() const;
  int rank() const;

  /// Basis of {v : Mv = 0}, one column vector each.
  std::vector<std::vector<Scalar>> kernel_basis() const;

  /// Projection (dim x rows) onto the cokernel: full row rank,
  /// projection * M == 0, dim == rows - rank.
  struct Cokernel;
  Cokernel cokernel_basis() const;

  /// One solution x of Mx = b, or nullopt if b is not in the image.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;
  /// Columnwise solve of M X = B.
  std::optional<Matrix> solve_matrix(const Matrix& B) const;

  std::optional<Matrix> inverse() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

  // block assembly helpers
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  void set_block(int i0, int j0, const Matrix& b);
  Matrix block(int i0, int j0, int r, int c) const;

  std::string str() const;

private:
  Field field_;
  int rows_, cols_;
  std::vector<Scalar> data_;
};

struct Matrix::Echelon {
  Matrix rref;              // reduced row echelon form
  std::vector<int> pivots;  // pivot column per nonzero row
};

struct Matrix::Cokernel {
  Matrix projection;
  int dim;
};

/// Column vector of a matrix as a std::vector.
std::vector<Scalar> column_of(const Matrix& m, int j);
Matrix columns_to_matrix(const Field& f, int rows, const std::vector<std::vector<Scalar>>& cols);

}  // namespace siltwb
