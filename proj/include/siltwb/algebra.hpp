#pragma once

#include <optional>
#include <vector>

#include "siltwb/matrix.hpp"
#include "siltwb/poly.hpp"

namespace siltwb {

/// Finite-dimensional associative unital algebra given by structure
/// constants: left_mult[i] is the matrix of left multiplication by the
/// i-th basis element, unit holds the coordinates of 1.  Elements are
/// coordinate vectors in the chosen basis.
class FiniteDimAlgebra {
public:
  FiniteDimAlgebra(const Field& f, std::vector<Matrix> left_mult, std::vector<Scalar> unit);

  int dim() const { return (int)left_mult_.size(); }
  const Field& field() const { return field_; }
  const std::vector<Scalar>& unit() const { return unit_; }
  const std::vector<Matrix>& structure_constants() const { return left_mult_; }

  std::vector<Scalar> multiply(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const;
  /// Matrix of left multiplication by the element u.
  Matrix left_mult_matrix(const std::vector<Scalar>& u) const;
  poly::Poly element_min_poly(const std::vector<Scalar>& u) const;
  bool is_commutative() const;

  /// Basis of the Jacobson radical, computed as the kernel of the trace
  /// bilinear form of the left regular representation.  Valid in
  /// characteristic 0 or when p > dim (enforced); every returned element
  /// is verified nilpotent.
  std::vector<std::vector<Scalar>> radical_basis() const;

  /// An element whose minimal polynomial factors into two coprime parts,
  /// if one exists; nullopt certifies the algebra is local (complete over
  /// F_p; over Q exotic semisimple quotients may go undetected and throw
  /// or return nullopt conservatively).
  std::optional<std::vector<Scalar>> splitting_element(unsigned seed = 1) const;

  bool is_local(unsigned seed = 1) const { return !splitting_element(seed).has_value(); }
  /// Division ring test: local with zero radical.
  bool is_division(unsigned seed = 1) const;

private:
  Field field_;
  std::vector<Matrix> left_mult_;
  std::vector<Scalar> unit_;
};

}  // namespace siltwb
