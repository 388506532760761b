#include "siltwb/algebra.hpp"

#include <random>
#include <stdexcept>

namespace siltwb {

namespace {

std::vector<Scalar> basis_vector(const Field& f, int n, int i) {
  std::vector<Scalar> v(n, Scalar(f, 0));
  v[i] = Scalar(f, 1);
  return v;
}

Scalar trace(const Matrix& m) {
  Scalar t(m.field(), 0);
  for (int i = 0; i < m.rows(); ++i) t = t + m.at(i, i);
  return t;
}

// Quotient of an algebra by an ideal: cokernel projection pi, a section
// sigma with pi * sigma = id, and the induced algebra.
struct Quotient {
  FiniteDimAlgebra algebra;
  Matrix pi;     // (dim - r) x dim
  Matrix sigma;  // dim x (dim - r)
};

Quotient quotient_by_ideal(const FiniteDimAlgebra& a, const std::vector<std::vector<Scalar>>& ideal) {
  const Field& f = a.field();
  int n = a.dim();
  Matrix r = columns_to_matrix(f, n, ideal);
  auto ck = r.cokernel_basis();
  Matrix pi = ck.projection;
  auto sigma = pi.solve_matrix(Matrix::identity(f, ck.dim));
  if (!sigma) throw std::logic_error("quotient section not found");
  std::vector<Matrix> lm;
  for (int i = 0; i < ck.dim; ++i) {
    Matrix li(f, ck.dim, ck.dim);
    std::vector<Scalar> bi = column_of(*sigma, i);
    for (int j = 0; j < ck.dim; ++j) {
      std::vector<Scalar> prod = pi.apply(a.multiply(bi, column_of(*sigma, j)));
      for (int k = 0; k < ck.dim; ++k) li.at(k, j) = prod[k];
    }
    lm.push_back(li);
  }
  return {FiniteDimAlgebra(f, std::move(lm), pi.apply(a.unit())), pi, *sigma};
}

// Right multiplication matrix by basis element i.
Matrix right_mult_matrix(const FiniteDimAlgebra& a, int i) {
  const Field& f = a.field();
  int n = a.dim();
  Matrix r(f, n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<Scalar> prod = a.multiply(basis_vector(f, n, j), basis_vector(f, n, i));
    for (int k = 0; k < n; ++k) r.at(k, j) = prod[k];
  }
  return r;
}

std::vector<std::vector<Scalar>> center_basis(const FiniteDimAlgebra& a) {
  const Field& f = a.field();
  int n = a.dim();
  Matrix stacked(f, 0, n);
  for (int i = 0; i < n; ++i) {
    Matrix li = a.left_mult_matrix(basis_vector(f, n, i));
    stacked = Matrix::vstack(stacked, li - right_mult_matrix(a, i));
  }
  return stacked.kernel_basis();
}

// Fixed space of the Frobenius x -> x^p on a commutative F_p-algebra;
// its dimension counts the simple factors of a semisimple quotient.
std::vector<std::vector<Scalar>> frobenius_fixed_basis(const FiniteDimAlgebra& a) {
  const Field& f = a.field();
  int n = a.dim();
  Matrix fr(f, n, n);
  for (int j = 0; j < n; ++j) {
    Matrix lj = a.left_mult_matrix(basis_vector(f, n, j));
    Matrix power = Matrix::identity(f, n);
    for (std::uint64_t e = 0; e < f.characteristic(); ++e) power = lj * power;
    std::vector<Scalar> bp = power.apply(a.unit());  // b_j^p
    for (int k = 0; k < n; ++k) fr.at(k, j) = bp[k];
  }
  return (fr - Matrix::identity(f, n)).kernel_basis();
}

bool min_poly_splits(const FiniteDimAlgebra& a, const std::vector<Scalar>& u, unsigned seed) {
  poly::Poly m = a.element_min_poly(u);
  return poly::coprime_split(m, seed).has_value();
}

}  // namespace

FiniteDimAlgebra::FiniteDimAlgebra(const Field& f, std::vector<Matrix> left_mult,
                                   std::vector<Scalar> unit)
    : field_(f), left_mult_(std::move(left_mult)), unit_(std::move(unit)) {
  int n = dim();
  if ((int)unit_.size() != n) throw std::invalid_argument("algebra unit dimension mismatch");
  for (const Matrix& m : left_mult_)
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("algebra table shape mismatch");
}

std::vector<Scalar> FiniteDimAlgebra::multiply(const std::vector<Scalar>& u,
                                               const std::vector<Scalar>& v) const {
  return left_mult_matrix(u).apply(v);
}

Matrix FiniteDimAlgebra::left_mult_matrix(const std::vector<Scalar>& u) const {
  Matrix m(field_, dim(), dim());
  for (int i = 0; i < dim(); ++i) m = m + left_mult_[i].scaled(u[i]);
  return m;
}

poly::Poly FiniteDimAlgebra::element_min_poly(const std::vector<Scalar>& u) const {
  // min poly of u in the algebra = min poly of L_u restricted to the
  // unital subalgebra generated by u; computed on the cyclic subspace of 1
  Matrix lu = left_mult_matrix(u);
  int n = dim();
  std::vector<std::vector<Scalar>> powers{unit_};
  for (int d = 1;; ++d) {
    powers.push_back(lu.apply(powers.back()));
    Matrix sys = columns_to_matrix(field_, n, {powers.begin(), powers.end() - 1});
    if (auto c = sys.solve(powers.back())) {
      poly::Poly p(d + 1, Scalar(field_, 0));
      for (int k = 0; k < d; ++k) p[k] = -(*c)[k];
      p[d] = Scalar(field_, 1);
      return p;
    }
  }
}

bool FiniteDimAlgebra::is_commutative() const {
  for (int i = 0; i < dim(); ++i) {
    Matrix li = left_mult_matrix(basis_vector(field_, dim(), i));
    for (int j = i + 1; j < dim(); ++j) {
      Matrix lj = left_mult_matrix(basis_vector(field_, dim(), j));
      if (!(li * lj == lj * li)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Scalar>> FiniteDimAlgebra::radical_basis() const {
  if (!field_.is_rational() && field_.characteristic() <= (std::uint64_t)dim())
    throw std::logic_error("trace-form radical needs characteristic > algebra dimension");
  int n = dim();
  Matrix gram(field_, n, n);
  std::vector<Matrix> lm;
  for (int i = 0; i < n; ++i) lm.push_back(left_mult_matrix(basis_vector(field_, n, i)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram.at(i, j) = trace(lm[i] * lm[j]);
  auto rad = gram.kernel_basis();
  for (const auto& v : rad) {
    Matrix lv = left_mult_matrix(v), p = lv;
    for (int k = 1; k < n; ++k) p = p * lv;
    if (!p.is_zero()) throw std::logic_error("trace-form radical candidate is not nilpotent");
  }
  return rad;
}

std::optional<std::vector<Scalar>> FiniteDimAlgebra::splitting_element(unsigned seed) const {
  int n = dim();
  if (n == 1) return std::nullopt;

  // direct candidates: basis elements and pairwise sums
  std::vector<std::vector<Scalar>> cands;
  for (int i = 0; i < n; ++i) cands.push_back(basis_vector(field_, n, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<Scalar> s = basis_vector(field_, n, i);
      s[j] = Scalar(field_, 1);
      cands.push_back(std::move(s));
    }
  for (const auto& u : cands)
    if (min_poly_splits(*this, u, seed)) return u;

  // certificate path: pass to the semisimple quotient
  Quotient q = quotient_by_ideal(*this, radical_basis());
  const FiniteDimAlgebra& b = q.algebra;
  if (b.dim() == 1) return std::nullopt;  // local

  // any preimage of an element with coprime-splittable min poly in the
  // quotient has a coprime-splittable min poly in the algebra itself
  auto lift_if_splits = [&](const std::vector<Scalar>& ub) -> std::optional<std::vector<Scalar>> {
    if (!min_poly_splits(b, ub, seed)) return std::nullopt;
    std::vector<Scalar> u = q.sigma.apply(ub);
    if (!min_poly_splits(*this, u, seed))
      throw std::logic_error("splitting element failed to lift through the radical");
    return u;
  };

  std::vector<std::vector<Scalar>> probe;  // commutative subspace to scan
  if (b.is_commutative()) {
    if (field_.is_rational()) {
      for (int i = 0; i < b.dim(); ++i) probe.push_back(basis_vector(field_, b.dim(), i));
    } else {
      probe = frobenius_fixed_basis(b);
      if ((int)probe.size() == 1) return std::nullopt;  // single field factor: local
    }
  } else if (!field_.is_rational()) {
    // finite division rings are commutative, so a noncommutative
    // semisimple quotient always admits a split; with several simple
    // factors the center already contains a splitting element
    probe = center_basis(b);
  }

  for (const auto& ub : probe)
    if (auto u = lift_if_splits(ub)) return u;
  for (size_t i = 0; i < probe.size(); ++i)
    for (size_t j = i + 1; j < probe.size(); ++j) {
      std::vector<Scalar> s(probe[i]);
      for (int k = 0; k < b.dim(); ++k) s[k] = s[k] + probe[j][k];
      if (auto u = lift_if_splits(s)) return u;
    }

  if (b.is_commutative()) {
    if (field_.is_rational()) return std::nullopt;  // best effort over Q
    throw std::logic_error("commutative semisimple quotient resisted splitting");
  }

  // noncommutative simple quotient (a matrix algebra over F_p, or an
  // undecidable division algebra over Q): randomized scan
  std::mt19937 rng(seed * 2654435761u + 17);
  std::uniform_int_distribution<long long> dist(0, field_.is_rational() ? 5 : (long long)field_.characteristic() - 1);
  for (int tries = 0; tries < 500; ++tries) {
    std::vector<Scalar> ub;
    for (int k = 0; k < b.dim(); ++k) ub.push_back(Scalar(field_, dist(rng)));
    if (auto u = lift_if_splits(ub)) return u;
  }
  if (field_.is_rational())
    throw std::logic_error("cannot certify locality of a noncommutative algebra over Q");
  throw std::logic_error("matrix-algebra quotient resisted randomized splitting");
}

bool FiniteDimAlgebra::is_division(unsigned seed) const {
  return radical_basis().empty() && is_local(seed);
}

}  // namespace siltwb
